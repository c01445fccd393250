#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(r) = lya_core::exact::Rational::parse(text) {
            assert_eq!(lya_core::exact::Rational::parse(&r.to_string()).ok(), Some(r));
        }
    }
});
