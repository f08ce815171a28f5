#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = chromabound::bounds::parse_rational(text) {
        let back = chromabound::bounds::parse_rational(&r.to_string())
            .expect("canonical form parses");
        assert_eq!(r, back);
    }
});
