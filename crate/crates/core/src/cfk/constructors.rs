use super::{Arrow, CfkError, Generator, KnotComplex};

pub fn unknot() -> KnotComplex {
    KnotComplex::from_indices(
        "unknot",
        vec![Generator::new("x", 0, 0)],
        Vec::new(),
        Some(vec![0]),
    )
    .expect("unknot is well formed")
}

/// Staircase complex with alternating horizontal and vertical step lengths.
///
/// Generators are `x0..x{2m}` with `x0` at the top; odd generators emit a
/// horizontal arrow to their left neighbour and a vertical arrow to their
/// right neighbour. Steps must form a palindrome so the filtration swap
/// `x_k <-> x_{2m-k}` is a symmetry of the complex.
pub fn staircase(steps: &[u32]) -> Result<KnotComplex, CfkError> {
    if steps.is_empty() {
        return Err(CfkError::EmptySteps);
    }
    if steps.len() % 2 == 1 {
        return Err(CfkError::OddSteps(steps.len()));
    }
    if steps.contains(&0) {
        return Err(CfkError::NonPositiveStep);
    }
    if steps.iter().ne(steps.iter().rev()) {
        return Err(CfkError::AsymmetricSteps);
    }
    let top: i32 = steps.iter().step_by(2).map(|&s| s as i32).sum();
    let count = steps.len() + 1;
    let mut generators = Vec::with_capacity(count);
    let mut arrows = Vec::with_capacity(steps.len());
    let (mut a, mut m) = (top, 0);
    generators.push(Generator::new("x0", a, m));
    for (i, pair) in steps.chunks(2).enumerate() {
        let (h, v) = (pair[0] as i32, pair[1] as i32);
        let odd = 2 * i + 1;
        a -= h;
        m += 1 - 2 * h;
        generators.push(Generator::new(format!("x{odd}"), a, m));
        a -= v;
        m -= 1;
        generators.push(Generator::new(format!("x{}", odd + 1), a, m));
        arrows.push(Arrow {
            from: odd,
            to: odd - 1,
            u_power: pair[0],
        });
        arrows.push(Arrow {
            from: odd,
            to: odd + 1,
            u_power: 0,
        });
    }
    let involution = (0..count).rev().collect();
    let name = format!(
        "staircase[{}]",
        steps
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",")
    );
    KnotComplex::from_indices(name, generators, arrows, Some(involution))
}

/// Acyclic square `e1 -> e2 + U e3`, `e2 -> U e4`, `e3 -> e4` centred at
/// Alexander grading `s` and Maslov grading `m`. Only the square centred at
/// `s = 0` is symmetric, and only then is the involution filled in.
pub fn box_complex(s: i32, m: i32) -> KnotComplex {
    let generators = vec![
        Generator::new("e1", s, m),
        Generator::new("e2", s - 1, m - 1),
        Generator::new("e3", s + 1, m + 1),
        Generator::new("e4", s, m),
    ];
    let arrow = |from, to, u_power| Arrow { from, to, u_power };
    let arrows = vec![
        arrow(0, 1, 0),
        arrow(0, 2, 1),
        arrow(1, 3, 1),
        arrow(2, 3, 0),
    ];
    let involution = (s == 0).then(|| vec![0, 2, 1, 3]);
    KnotComplex::from_indices(format!("box({s},{m})"), generators, arrows, involution)
        .expect("box is well formed")
}

/// Dual complex: gradings negate and every arrow reverses.
pub fn mirror(c: &KnotComplex) -> Result<KnotComplex, CfkError> {
    c.ensure_valid()?;
    let generators = c
        .generators()
        .iter()
        .map(|g| Generator::new(g.name.clone(), -g.alexander, -g.maslov))
        .collect();
    let arrows = c
        .arrows()
        .iter()
        .map(|a| Arrow {
            from: a.to,
            to: a.from,
            u_power: a.u_power,
        })
        .collect();
    KnotComplex::from_indices(
        format!("mirror({})", c.name()),
        generators,
        arrows,
        c.involution().map(<[usize]>::to_vec),
    )
}

/// Tensor product over the ground ring; labels are `a*b`.
pub fn tensor(c1: &KnotComplex, c2: &KnotComplex) -> Result<KnotComplex, CfkError> {
    c1.ensure_valid()?;
    c2.ensure_valid()?;
    let n2 = c2.len();
    let pair = |i: usize, j: usize| i * n2 + j;
    let mut generators = Vec::with_capacity(c1.len() * n2);
    for g in c1.generators() {
        for h in c2.generators() {
            generators.push(Generator::new(
                format!("{}*{}", g.name, h.name),
                g.alexander + h.alexander,
                g.maslov + h.maslov,
            ));
        }
    }
    let mut arrows = Vec::new();
    for a in c1.arrows() {
        for j in 0..n2 {
            arrows.push(Arrow {
                from: pair(a.from, j),
                to: pair(a.to, j),
                u_power: a.u_power,
            });
        }
    }
    for b in c2.arrows() {
        for i in 0..c1.len() {
            arrows.push(Arrow {
                from: pair(i, b.from),
                to: pair(i, b.to),
                u_power: b.u_power,
            });
        }
    }
    let involution = match (c1.involution(), c2.involution()) {
        (Some(p1), Some(p2)) => Some(
            (0..c1.len())
                .flat_map(|i| (0..n2).map(move |j| pair(p1[i], p2[j])))
                .collect(),
        ),
        _ => None,
    };
    KnotComplex::from_indices(
        format!("{}#{}", c1.name(), c2.name()),
        generators,
        arrows,
        involution,
    )
}

/// Direct sum. Labels must be disjoint; use [`KnotComplex::prefixed`] first
/// if they are not. The involution survives only if both summands have one.
pub fn direct_sum(c1: &KnotComplex, c2: &KnotComplex) -> Result<KnotComplex, CfkError> {
    let offset = c1.len();
    let generators = c1
        .generators()
        .iter()
        .chain(c2.generators())
        .cloned()
        .collect();
    let arrows = c1
        .arrows()
        .iter()
        .copied()
        .chain(c2.arrows().iter().map(|a| Arrow {
            from: a.from + offset,
            to: a.to + offset,
            u_power: a.u_power,
        }))
        .collect();
    let involution = match (c1.involution(), c2.involution()) {
        (Some(p1), Some(p2)) => Some(
            p1.iter()
                .copied()
                .chain(p2.iter().map(|&j| j + offset))
                .collect(),
        ),
        _ => None,
    };
    KnotComplex::from_indices(
        format!("{}+{}", c1.name(), c2.name()),
        generators,
        arrows,
        involution,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_staircase_shape() {
        let t = staircase(&[1, 1]).unwrap();
        let g: Vec<_> = t
            .generators()
            .iter()
            .map(|g| (g.name.as_str(), g.alexander, g.maslov))
            .collect();
        assert_eq!(g, vec![("x0", 1, 0), ("x1", 0, -1), ("x2", -1, -2)]);
        assert_eq!(
            t.arrows(),
            &[
                Arrow {
                    from: 1,
                    to: 0,
                    u_power: 1
                },
                Arrow {
                    from: 1,
                    to: 2,
                    u_power: 0
                }
            ]
        );
        assert!(t.is_valid(), "{:?}", t.validate());
        assert_eq!(t.width(), 1);
    }

    #[test]
    fn staircase_rejects_bad_steps() {
        assert_eq!(staircase(&[]), Err(CfkError::EmptySteps));
        assert_eq!(staircase(&[1, 1, 1]), Err(CfkError::OddSteps(3)));
        assert_eq!(staircase(&[1, 0]), Err(CfkError::NonPositiveStep));
        assert_eq!(staircase(&[1, 2]), Err(CfkError::AsymmetricSteps));
    }

    #[test]
    fn larger_staircases_validate() {
        for steps in [&[1, 1, 1, 1][..], &[2, 2], &[1, 2, 2, 1], &[3, 1, 1, 3]] {
            let c = staircase(steps).unwrap();
            assert!(c.is_valid(), "{steps:?}: {:?}", c.validate());
        }
        assert_eq!(staircase(&[1, 1, 1, 1]).unwrap().width(), 2);
    }

    #[test]
    fn boxes_validate() {
        for (s, m) in [(0, 0), (0, -1), (2, 5), (-3, 1)] {
            let b = box_complex(s, m);
            assert!(b.is_valid(), "box({s},{m}): {:?}", b.validate());
            assert_eq!(b.involution().is_some(), s == 0);
        }
    }

    #[test]
    fn mirror_is_an_involution_on_data() {
        let t = staircase(&[1, 1, 1, 1]).unwrap();
        let mm = mirror(&mirror(&t).unwrap()).unwrap();
        assert_eq!(mm.generators(), t.generators());
        assert_eq!(mm.arrows(), t.arrows());
        assert!(mirror(&t).unwrap().is_valid());
        assert!(mirror(&box_complex(0, 0)).unwrap().is_valid());
    }

    #[test]
    fn tensor_with_unknot_is_a_relabelling() {
        let t = staircase(&[1, 1]).unwrap();
        let p = tensor(&unknot(), &t).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.arrows(), t.arrows());
        assert!(p.is_valid());
        let tt = tensor(&t, &t).unwrap();
        assert_eq!(tt.len(), 9);
        assert!(tt.is_valid(), "{:?}", tt.validate());
    }

    #[test]
    fn direct_sum_requires_disjoint_labels() {
        let b = box_complex(0, 0);
        assert_eq!(
            direct_sum(&b, &b),
            Err(CfkError::DuplicateGenerator("e1".into()))
        );
        let s = direct_sum(&b, &b.prefixed("f")).unwrap();
        assert_eq!(s.len(), 8);
        assert!(s.is_valid());
        assert!(direct_sum(&unknot(), &box_complex(1, 0))
            .unwrap()
            .involution()
            .is_none());
    }

    #[test]
    fn validate_reports_decremented_power() {
        let t = staircase(&[1, 1]).unwrap();
        let mut arrows = t.arrows().to_vec();
        arrows[0].u_power = 0;
        let bad = KnotComplex::from_indices("bad", t.generators().to_vec(), arrows, None).unwrap();
        let d = bad.validate();
        assert!(
            d.iter().any(|d| matches!(d, super::super::Diagnostic::MaslovViolation { from, .. } if from == "x1")),
            "{d:?}"
        );
    }

    #[test]
    fn validate_reports_nonzero_square() {
        let g = vec![
            Generator::new("a", 0, 0),
            Generator::new("b", 0, -1),
            Generator::new("c", 0, -2),
        ];
        let c =
            KnotComplex::from_labels("chain", g, &[("a", "b", 0), ("b", "c", 0)], None).unwrap();
        assert!(c
            .validate()
            .iter()
            .any(|d| matches!(d, super::super::Diagnostic::BoundarySquareNonzero { .. })));
    }
}
