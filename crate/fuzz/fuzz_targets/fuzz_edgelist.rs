#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = chromabound::edgelist::parse_edge_list(text) {
        let written = chromabound::edgelist::write_edge_list(&g);
        let back = chromabound::edgelist::parse_edge_list(&written).expect("round trip parses");
        assert_eq!(g, back);
    }
});
