use chromabound::bounds::{parse_rational, rat};
use chromabound::edgelist::{parse_edge_list, write_edge_list};
use chromabound::graph::Graph;
use chromabound::graph6::{encode_graph6, parse_graph6};
use proptest::prelude::*;

fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arbitrary_graph(30)) {
        let encoded = encode_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&encoded).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arbitrary_graph(30)) {
        let text = write_edge_list(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn rational_round_trip(num in -10_000i64..10_000, den in 1i64..10_000) {
        let r = rat(num, den);
        prop_assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn rational_decimal_strings(int_part in 0u32..1000, frac in 0u32..1000) {
        let s = format!("{int_part}.{frac:03}");
        let parsed = parse_rational(&s).unwrap();
        let expect = rat(int_part as i64 * 1000 + frac as i64, 1000);
        prop_assert_eq!(parsed, expect);
    }
}
