use proptest::prelude::*;
use semilinear_ast::action::{GroupSpec, Variant};
use semilinear_ast::ast::TriplePartition;
use semilinear_ast_cli::artifact::{decode, encode};

fn specs() -> [GroupSpec; 3] {
    [
        GroupSpec::from_parameters(Variant::Asl, 2, 1, 1, 2).unwrap(),
        GroupSpec::from_parameters(Variant::Agl, 2, 1, 1, 3).unwrap(),
        GroupSpec::from_parameters(Variant::Asl, 3, 1, 1, 2).unwrap(),
    ]
}

/// Renumbers labels by first occurrence so the ids are contiguous.
fn compact(raw: Vec<u8>) -> Vec<u8> {
    let mut map = [u8::MAX; 256];
    let mut next = 0u8;
    raw.into_iter()
        .map(|l| {
            if map[l as usize] == u8::MAX {
                map[l as usize] = next;
                next += 1;
            }
            map[l as usize]
        })
        .collect()
}

fn arbitrary_partition() -> impl Strategy<Value = (usize, TriplePartition)> {
    (0usize..3, 1u8..=255).prop_flat_map(|(which, width)| {
        let size = specs()[which].omega_size();
        let len = (size as usize).pow(3);
        // Mix long runs with noise so both short and long runs occur.
        proptest::collection::vec((0..width, 1usize..40), 1..len).prop_map(move |chunks| {
            let mut raw = Vec::with_capacity(len);
            for (label, run) in chunks.iter().cycle() {
                if raw.len() == len {
                    break;
                }
                let take = (*run).min(len - raw.len());
                raw.extend(std::iter::repeat(*label).take(take));
            }
            let p = TriplePartition::from_labels(size, compact(raw)).unwrap();
            (which, p)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn encode_decode_round_trips((which, p) in arbitrary_partition()) {
        let spec = &specs()[which];
        let bytes = encode(spec, &p);
        let (back_spec, back) = decode(&bytes).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back_spec.variant(), spec.variant());
        prop_assert_eq!(back_spec.omega_size(), spec.omega_size());
        prop_assert_eq!(encode(&back_spec, &back), bytes);
    }

    #[test]
    fn truncation_is_rejected((which, p) in arbitrary_partition(), cut in 1usize..64) {
        let bytes = encode(&specs()[which], &p);
        let cut = cut.min(bytes.len());
        prop_assert!(decode(&bytes[..bytes.len() - cut]).is_err());
    }
}
