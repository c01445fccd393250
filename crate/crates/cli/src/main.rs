fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(lya_cli::run(&argv));
}
