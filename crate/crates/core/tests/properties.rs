use floercone::cfk::{
    box_complex, complex_a, complex_b, direct_sum, h_map, mirror, staircase, tensor, unknot, v_map,
    v_prime_map, KnotComplex,
};
use floercone::cone::{build_cone, cone_homology, default_window, SurgerySlope};
use floercone::gf2::{
    homology, is_surjective_on_homology, is_zero_on_homology, ChainComplexF2, MatrixF2,
};
use floercone::invariants::invariants;
use proptest::prelude::*;

/// Rank by plain row reduction on dense boolean rows.
fn dense_rank(m: &MatrixF2) -> usize {
    let mut rows: Vec<Vec<bool>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c)).collect())
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col]) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r != rank && rows[r][col] {
                let src = rows[rank].clone();
                for (a, b) in rows[r].iter_mut().zip(src) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Homology of an ungraded complex: `n - 2 rank(d)`.
fn oracle_dim(c: &ChainComplexF2) -> usize {
    c.dim(0) - 2 * dense_rank(&c.boundary(0))
}

fn palindrome() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=3, 1..=3).prop_map(|half| {
        let mut steps = half.clone();
        steps.extend(half.iter().rev());
        steps
    })
}

/// Staircases, optionally with a centred square, optionally mirrored.
fn knot_complex() -> impl Strategy<Value = KnotComplex> {
    (palindrome(), prop::option::of(-2i32..=2), any::<bool>()).prop_map(|(steps, square, flip)| {
        let mut c = staircase(&steps).unwrap();
        if let Some(m) = square {
            c = direct_sum(&c, &box_complex(0, m)).unwrap();
        }
        if flip {
            c = mirror(&c).unwrap();
        }
        c
    })
}

fn random_matrix(rows: usize, cols: usize) -> impl Strategy<Value = MatrixF2> {
    prop::collection::vec(any::<bool>(), rows * cols).prop_map(move |bits| {
        let entries = bits
            .iter()
            .enumerate()
            .filter(|(_, b)| **b)
            .map(|(i, _)| (i / cols, i % cols));
        MatrixF2::from_entries(rows, cols, entries).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_and_kernel_agree_with_oracle(m in (1usize..12, 1usize..12).prop_flat_map(|(r, c)| random_matrix(r, c))) {
        prop_assert_eq!(m.rank(), dense_rank(&m));
        let kernel = m.kernel_basis();
        prop_assert_eq!(kernel.len(), m.cols() - m.rank());
        for v in &kernel {
            prop_assert!(m.apply(v).is_zero());
        }
    }

    #[test]
    fn two_term_homology(m in (1usize..10, 1usize..10).prop_flat_map(|(r, c)| random_matrix(r, c))) {
        let (r, c) = (m.rows(), m.cols());
        let mut d = MatrixF2::zeros(r + c, r + c);
        d.add_block(c, 0, &m);
        let labels = (0..r + c).map(|i| i.to_string()).collect();
        let complex = ChainComplexF2::ungraded(labels, d).unwrap();
        prop_assert_eq!(homology(&complex).unwrap().total_dim(), oracle_dim(&complex));
    }

    #[test]
    fn complexes_validate(c in knot_complex()) {
        prop_assert!(c.is_valid(), "{:?}", c.validate());
    }

    #[test]
    fn subquotient_homology_matches_oracle(c in knot_complex(), s in -4i32..=4) {
        let a = complex_a(&c, s).unwrap();
        prop_assert_eq!(homology(&a.base).unwrap().total_dim(), oracle_dim(&a.base));
    }

    #[test]
    fn stabilization(c in knot_complex()) {
        let w = c.width() as i32;
        let hb = homology(&complex_b(&c).unwrap().base).unwrap().total_dim();
        for s in [w, w + 1] {
            let v = v_map(&c, s).unwrap();
            prop_assert!(is_surjective_on_homology(&v).unwrap());
            prop_assert_eq!(homology(&complex_a(&c, s).unwrap().base).unwrap().total_dim(), hb);
        }
        for s in [-w, -w - 1] {
            prop_assert!(is_surjective_on_homology(&h_map(&c, s).unwrap()).unwrap());
        }
    }

    #[test]
    fn symmetric_a_homology(c in knot_complex(), s in 0i32..=4) {
        let dim = |s| homology(&complex_a(&c, s).unwrap().base).unwrap().total_dim();
        prop_assert_eq!(dim(s), dim(-s));
    }

    #[test]
    fn h_and_v_are_exchanged_by_symmetry(c in knot_complex(), s in -4i32..=4) {
        prop_assert_eq!(
            is_surjective_on_homology(&h_map(&c, s).unwrap()).unwrap(),
            is_surjective_on_homology(&v_map(&c, -s).unwrap()).unwrap()
        );
    }

    #[test]
    fn mirror_exchanges_v_and_v_prime(c in knot_complex(), s in -4i32..=4) {
        let m = mirror(&c).unwrap();
        prop_assert_eq!(
            is_surjective_on_homology(&v_map(&m, s).unwrap()).unwrap(),
            !is_zero_on_homology(&v_prime_map(&c, -s).unwrap()).unwrap()
        );
    }

    #[test]
    fn invariant_relations(c in knot_complex()) {
        let r = invariants(&c).unwrap();
        let rm = invariants(&mirror(&c).unwrap()).unwrap();
        prop_assert!(r.nu == r.tau || r.nu == r.tau + 1);
        prop_assert_eq!(rm.tau, -r.tau);
        prop_assert_eq!(rm.epsilon, -r.epsilon);
        if r.epsilon == 0 {
            prop_assert_eq!(r.tau, 0);
        }
        prop_assert_eq!(r.epsilon == 1, rm.nu == -r.tau + 1);
    }

    #[test]
    fn staircase_tau_is_top_grading(steps in palindrome()) {
        // a staircase has tau equal to its genus and epsilon 1
        let c = staircase(&steps).unwrap();
        let top: u32 = steps.iter().step_by(2).sum();
        let r = invariants(&c).unwrap();
        prop_assert_eq!(r.tau, top as i32);
        prop_assert_eq!(r.epsilon, 1);
        prop_assert_eq!(r.width, top);
    }

    #[test]
    fn tau_adds_under_tensor(a in palindrome(), b in palindrome(), flip in any::<bool>()) {
        let ca = staircase(&a).unwrap();
        let mut cb = staircase(&b).unwrap();
        if flip {
            cb = mirror(&cb).unwrap();
        }
        let t = tensor(&ca, &cb).unwrap();
        prop_assert!(t.is_valid());
        prop_assert_eq!(t.len(), ca.len() * cb.len());
        let tau = |c: &KnotComplex| invariants(c).unwrap().tau;
        prop_assert_eq!(tau(&t), tau(&ca) + tau(&cb));
    }

    #[test]
    fn cone_blocks_match_oracle(c in knot_complex(), p in -6i64..=6, q in 1i64..=3) {
        prop_assume!(SurgerySlope::new(p, q).is_ok());
        let slope = SurgerySlope::new(p, q).unwrap();
        let cone = build_cone(&c, slope, default_window(&c)).unwrap();
        let dims = cone.homology_by_residue().unwrap();
        for (r, dim) in dims {
            let block = cone.residue_block(r).unwrap();
            prop_assert_eq!(dim, oracle_dim(&block.complex));
        }
    }

    #[test]
    fn truncation_stability(c in knot_complex(), p in -8i64..=8, q in 1i64..=4) {
        prop_assume!(SurgerySlope::new(p, q).is_ok());
        let slope = SurgerySlope::new(p, q).unwrap();
        let b = default_window(&c);
        let base = build_cone(&c, slope, b).unwrap().homology_by_residue().unwrap();
        for w in [b + 1, b + 2] {
            let wider = build_cone(&c, slope, w).unwrap().homology_by_residue().unwrap();
            if p == 0 {
                // p = 0 residues are the indices themselves; compare totals
                prop_assert_eq!(base.values().sum::<usize>(), wider.values().sum::<usize>());
            } else {
                prop_assert_eq!(&base, &wider);
            }
        }
    }
}

#[test]
fn unknot_cone_is_a_lens_space() {
    for p in -12i64..=12 {
        for q in 1..=8 {
            let Ok(slope) = SurgerySlope::new(p, q) else {
                continue;
            };
            let dims = cone_homology(&unknot(), slope).unwrap();
            let total: usize = dims.values().sum();
            if p == 0 {
                assert_eq!(total, 2);
            } else {
                assert_eq!(total as i64, p.abs(), "{p}/{q}");
                assert!(dims.values().all(|&d| d == 1));
            }
        }
    }
}
