//! Reference complexes used throughout the tests and shipped as JSON under
//! `fixtures/` at the workspace root.

use crate::cfk::{box_complex, direct_sum, mirror, staircase, unknot, KnotComplex};

pub fn right_trefoil() -> KnotComplex {
    staircase(&[1, 1])
        .expect("valid steps")
        .with_name("right-trefoil")
}

pub fn left_trefoil() -> KnotComplex {
    mirror(&right_trefoil())
        .expect("valid")
        .with_name("left-trefoil")
}

pub fn torus_2_5() -> KnotComplex {
    staircase(&[1, 1, 1, 1])
        .expect("valid steps")
        .with_name("T(2,5)")
}

/// Unknot plus an acyclic square at Alexander grading 0.
pub fn figure_eight() -> KnotComplex {
    direct_sum(&unknot(), &box_complex(0, 0))
        .expect("disjoint labels")
        .with_name("figure-eight")
}

/// Stand-in for the (2,1)-cable of the trefoil: `T(2,5)` plus a square at
/// Alexander grading 0. Its `A_s` homology is `F, F^3, F^5, F^3, F` on
/// `s = -2..=2`, `v_s` is onto exactly for `s >= -1` after mirroring, and
/// `tau = 2`, `epsilon = 1`.
pub fn cable_surrogate() -> KnotComplex {
    direct_sum(&torus_2_5(), &box_complex(0, -1))
        .expect("disjoint labels")
        .with_name("cable-surrogate")
}

/// Every fixture with the file stem it is stored under.
pub fn all() -> Vec<(&'static str, KnotComplex)> {
    vec![
        ("unknot", unknot()),
        ("right_trefoil", right_trefoil()),
        ("left_trefoil", left_trefoil()),
        ("figure_eight", figure_eight()),
        ("torus_2_5", torus_2_5()),
        ("cable_surrogate", cable_surrogate()),
    ]
}
