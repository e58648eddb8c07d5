//! Exact integer and rational arithmetic around rational surgeries:
//! continued fractions, the stabilization plan turning a contact `x/y`
//! surgery into `±1` surgeries, linking matrices, and lens space
//! correction terms.

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::contact::ContactCoefficient;

pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{num}/{den} is outside the accepted range: {why}")]
    OutOfRange {
        num: i64,
        den: i64,
        why: &'static str,
    },
    #[error("inconsistent input: {0}")]
    InconsistentInput(String),
    #[error("L({q},{r}) is not a lens space: need 0 <= r < q and gcd(q, r) = 1")]
    InvalidLensSpace { q: i64, r: i64 },
}

/// Exact rational in the `{num, den}` interchange form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RationalJson {
    pub num: i128,
    pub den: i128,
}

impl From<Rational> for RationalJson {
    fn from(r: Rational) -> Self {
        Self {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

/// `p = m q - r` with `0 <= r < q`.
pub fn decompose_mq_r(p: i64, q: i64) -> (i64, i64) {
    assert!(q >= 1, "q must be positive");
    let r = (-p).rem_euclid(q);
    ((p + r) / q, r)
}

/// Expansion `a1 - 1/(a2 - 1/(...))` with every `a_i <= -2` of a rational
/// below `-1`.
pub fn neg_cf(num: i64, den: i64) -> Result<Vec<i64>, ArithError> {
    let out_of_range = |why| ArithError::OutOfRange { num, den, why };
    if den == 0 {
        return Err(out_of_range("zero denominator"));
    }
    let (mut n, mut d) = if den < 0 { (-num, -den) } else { (num, den) };
    if n >= -d {
        return Err(out_of_range("value must be below -1"));
    }
    let mut coeffs = Vec::new();
    loop {
        let a = Integer::div_floor(&n, &d);
        coeffs.push(a);
        let rest = n - a * d;
        if rest == 0 {
            return Ok(coeffs);
        }
        (n, d) = (-d, rest);
    }
}

pub fn eval_neg_cf(coeffs: &[i64]) -> Option<Rational> {
    let (&last, init) = coeffs.split_last()?;
    let mut value = Rational::from_integer(i128::from(last));
    for &a in init.iter().rev() {
        value = Rational::from_integer(i128::from(a)) - value.recip();
    }
    Some(value)
}

/// Expansion `b1 - 1/(b2 - 1/(...))` with every `b_j >= 2` of a reduced
/// fraction `x0/x1 > 1`.
pub fn pos_cf(num: i64, den: i64) -> Result<Vec<i64>, ArithError> {
    let out_of_range = |why| ArithError::OutOfRange { num, den, why };
    if den < 1 || num <= den {
        return Err(out_of_range("need num > den >= 1"));
    }
    if num.gcd(&den) != 1 {
        return Err(out_of_range("fraction is not reduced"));
    }
    let (mut x0, mut x1) = (num, den);
    let mut coeffs = Vec::new();
    while x1 != 0 {
        let b = Integer::div_ceil(&x0, &x1);
        coeffs.push(b);
        (x0, x1) = (x1, b * x1 - x0);
    }
    Ok(coeffs)
}

pub fn eval_pos_cf(coeffs: &[i64]) -> Option<Rational> {
    eval_neg_cf(coeffs)
}

/// The expansion of `x/(y - x)` driving the stabilization plan; empty when
/// `x = y`.
pub fn dgs_continued_fraction(c: ContactCoefficient) -> Vec<i64> {
    if c.x() == c.y() {
        Vec::new()
    } else {
        neg_cf(-c.x(), c.x() - c.y()).expect("x > y gives a value below -1")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DgsComponent {
    pub index: usize,
    pub contact_coefficient: i8,
    pub stabilizations: u64,
    pub rotation: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DgsPlan {
    pub continued_fraction: Vec<i64>,
    pub surgery_link: Vec<DgsComponent>,
    pub linking_matrix: Vec<Vec<i64>>,
    pub chern_on_s: i64,
    /// Generator of the kernel with last entry 1; absent for `x = y`.
    pub kernel_vector: Option<Vec<i64>>,
    /// Chern class evaluated on the kernel vector; equals `-chern_on_s`.
    pub chern_on_kernel: Option<i64>,
}

pub fn dgs_plan(tb: i64, rot: i64, c: ContactCoefficient) -> Result<DgsPlan, ArithError> {
    let a = dgs_continued_fraction(c);
    let mut surgery_link = vec![DgsComponent {
        index: 0,
        contact_coefficient: 1,
        stabilizations: 0,
        rotation: rot,
    }];
    let mut partial = 0;
    for (j, &aj) in a.iter().enumerate() {
        let j1 = j as i64 + 1;
        partial += aj;
        let stabilizations = if j == 0 { aj + 1 } else { aj + 2 }.unsigned_abs();
        surgery_link.push(DgsComponent {
            index: j + 1,
            contact_coefficient: -1,
            stabilizations,
            rotation: rot + partial + 2 * j1 - 1,
        });
    }
    let chern_on_s = rot * c.y() + c.x() - 1;
    let (kernel_vector, chern_on_kernel) = if a.is_empty() {
        (None, None)
    } else {
        let y = kernel_vector(&a, c.x(), c.y())?;
        let pairing = chern_pairing(rot, &a, &y);
        if pairing != -chern_on_s {
            return Err(ArithError::InconsistentInput(format!(
                "Chern pairing {pairing} does not equal {}",
                -chern_on_s
            )));
        }
        (Some(y), Some(pairing))
    };
    Ok(DgsPlan {
        linking_matrix: linking_matrix(tb, &a),
        continued_fraction: a,
        surgery_link,
        chern_on_s,
        kernel_vector,
        chern_on_kernel,
    })
}

/// `<c, y> = rot y0 + (a1 + 1) y1 + sum_{j >= 2} (a_j + 2) y_j`.
fn chern_pairing(rot: i64, a: &[i64], y: &[i64]) -> i64 {
    rot * y[0]
        + a.iter()
            .enumerate()
            .map(|(j, &aj)| (if j == 0 { aj + 1 } else { aj + 2 }) * y[j + 1])
            .sum::<i64>()
}

/// Intersection form in the handle basis `l0, l1, ..., ln`.
pub fn linking_matrix(tb: i64, a: &[i64]) -> Vec<Vec<i64>> {
    let n = a.len() + 1;
    let mut m = vec![vec![0; n]; n];
    m[0][0] = tb + 1;
    for (j, &aj) in a.iter().enumerate() {
        let i = j + 1;
        m[i][i] = if j == 0 { aj + 1 } else { aj };
        let off = if j == 0 { -1 } else { 1 };
        m[i - 1][i] = off;
        m[i][i - 1] = off;
    }
    m
}

/// The linking matrix with the row of `l0` removed.
pub fn m_minus(a: &[i64]) -> Vec<Vec<i64>> {
    linking_matrix(0, a).split_off(1)
}

fn annihilates(m: &[Vec<i64>], v: &[i64]) -> bool {
    m.iter()
        .all(|row| row.iter().zip(v).map(|(a, b)| a * b).sum::<i64>() == 0)
}

/// Kernel generator `(y0, ..., yn)` with `yn = 1` of [`m_minus`], found by
/// back substitution. Checks `y0 = -y`, `y1 = x - y` and the product.
pub fn kernel_vector(a: &[i64], x: i64, y: i64) -> Result<Vec<i64>, ArithError> {
    let n = a.len();
    if n == 0 {
        return Err(ArithError::InconsistentInput(
            "empty continued fraction has no kernel vector".into(),
        ));
    }
    let mut v = vec![0; n + 2];
    v[n] = 1;
    for j in (2..=n).rev() {
        v[j - 1] = -a[j - 1] * v[j] - v[j + 1];
    }
    v[0] = (a[0] + 1) * v[1] + v[2];
    v.truncate(n + 1);
    if v[0] != -y || v[1] != x - y {
        return Err(ArithError::InconsistentInput(format!(
            "kernel vector starts ({}, {}), expected ({}, {})",
            v[0],
            v[1],
            -y,
            x - y
        )));
    }
    if !annihilates(&m_minus(a), &v) {
        return Err(ArithError::InconsistentInput(
            "vector is not in the kernel".into(),
        ));
    }
    Ok(v)
}

/// Both sides of `rot y + x - 1 = p + (rot - tb) q - 1` with `p = x + y tb`,
/// `q = y`.
pub fn chern_identity_check(tb: i64, rot: i64, c: ContactCoefficient) -> bool {
    let (x, y) = (c.x(), c.y());
    let p = x + y * tb;
    rot * y + x - 1 == p + (rot - tb) * y - 1
}

/// Lens space `L(q, r)`, `-q/r` surgery on the unknot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LensSpace {
    q: i64,
    r: i64,
}

impl LensSpace {
    pub fn new(q: i64, r: i64) -> Result<Self, ArithError> {
        let ok = q >= 1 && (0..q).contains(&r) && q.gcd(&r) == 1;
        if ok {
            Ok(Self { q, r })
        } else {
            Err(ArithError::InvalidLensSpace { q, r })
        }
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn r(&self) -> i64 {
        self.r
    }
}

/// `d(L(q, r), i)` for `i = 0..q` by the reciprocity recursion, with
/// `d(L(1, 0), 0) = 0`.
pub fn lens_d_invariants(l: LensSpace) -> Vec<Rational> {
    let (q, r) = (i128::from(l.q), i128::from(l.r));
    if q == 1 {
        return vec![Rational::from_integer(0)];
    }
    let inner = lens_d_invariants(LensSpace {
        q: l.r,
        r: l.q % l.r,
    });
    (0..q)
        .map(|i| {
            let t = 2 * i + 1 - q - r;
            Rational::new(q * r - t * t, 4 * q * r) - inner[(i % r) as usize]
        })
        .collect()
}

/// `d(L(q, r), r) - d(L(q, r), 0) = 1 - 1/q`. Needs `r >= 1`.
pub fn d_shift_check(l: LensSpace) -> Result<bool, ArithError> {
    if l.r < 1 {
        return Err(ArithError::InvalidLensSpace { q: l.q, r: l.r });
    }
    let d = lens_d_invariants(l);
    let q = i128::from(l.q);
    Ok(d[l.r as usize] - d[0] == Rational::new(q - 1, q))
}

/// Self-intersection `q (m q - c r)`.
pub fn generator_square(m: i64, q: i64, c: i64, r: i64) -> i64 {
    q * (m * q - c * r)
}
