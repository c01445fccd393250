#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        for (dim, value_dim) in [(1, 1), (2, 2), (3, 3), (2, 4)] {
            let _ = lya_core::io::parse_cochain(text, dim, value_dim);
        }
    }
});
