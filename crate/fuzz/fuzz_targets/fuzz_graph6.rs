#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = chromabound::graph6::parse_graph6(text) {
        let encoded = chromabound::graph6::encode_graph6(&g).expect("parsed graphs re-encode");
        let back = chromabound::graph6::parse_graph6(&encoded).expect("round trip parses");
        assert_eq!(g, back);
    }
});
