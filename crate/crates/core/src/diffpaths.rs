//! Coordinate-difference invariants of tree paths, the mod-8
//! representability criterion for the even-coefficient norm form
//! x^2 - 8y^2, Lagrange's descent for representing primes, and
//! reconstruction of the root triple realizing a given difference.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::tree::{child, triple_from_params, ChildKind, ParamPair, PrimTriple};

/// The three coordinate differences of a triple from `(m, n)`:
/// `P = N - C = (m - n)^2`, `Q = N - S = 2n^2`,
/// `R = C - S = 2mn - m^2 + n^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiffForm {
    P,
    Q,
    R,
}

impl fmt::Display for DiffForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiffForm::P => write!(f, "P"),
            DiffForm::Q => write!(f, "Q"),
            DiffForm::R => write!(f, "R"),
        }
    }
}

/// All three differences `(P, Q, R)`; `P` and `Q` are always positive,
/// `R` can take either sign.
pub fn differences(t: &PrimTriple) -> (BigInt, BigInt, BigInt) {
    (t.n() - t.c(), t.n() - t.s(), t.c() - t.s())
}

/// The single difference selected by `form`.
pub fn form_value(t: &PrimTriple, form: DiffForm) -> BigInt {
    match form {
        DiffForm::P => t.n() - t.c(),
        DiffForm::Q => t.n() - t.s(),
        DiffForm::R => t.c() - t.s(),
    }
}

/// The unique child direction along which the chosen difference persists:
/// `P` and `Q` are preserved exactly by `U-` and `L+`; `R` flips sign at
/// every `U+` step.
pub fn invariant_child_kind(form: DiffForm) -> ChildKind {
    match form {
        DiffForm::P => ChildKind::UMinus,
        DiffForm::Q => ChildKind::LPlus,
        DiffForm::R => ChildKind::UPlus,
    }
}

/// `t0` followed by `k - 1` steps in the difference-invariant direction,
/// `k` triples in total.
pub fn difference_path(t0: &PrimTriple, form: DiffForm, k: usize) -> Vec<PrimTriple> {
    let kind = invariant_child_kind(form);
    let mut out = Vec::with_capacity(k);
    if k == 0 {
        return out;
    }
    out.push(t0.clone());
    for _ in 1..k {
        let next = child(out.last().expect("nonempty"), kind);
        out.push(next);
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the full u64 range.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Exact factorization by trial division, with a primality gate so the
/// remaining cofactor is never walked to its square root needlessly.
/// Desk scale: intended for inputs comfortably below 2^64.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize requires n >= 1");
    fn strip(n: &mut u64, p: u64) -> u32 {
        let mut e = 0;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        e
    }
    let mut out = Vec::new();
    for p in [2u64, 3, 5] {
        let e = strip(&mut n, p);
        if e > 0 {
            out.push((p, e));
        }
    }
    let mut p = 7u64;
    while n > 1 {
        if is_prime(n) {
            out.push((n, 1));
            break;
        }
        while !n.is_multiple_of(p) {
            p += 2;
        }
        let e = strip(&mut n, p);
        out.push((p, e));
    }
    out
}

/// An element `a + b*sqrt(2)` of the real quadratic ring Z[sqrt(2)],
/// with norm `a^2 - 2b^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl QuadInt {
    pub fn new(a: BigInt, b: BigInt) -> Self {
        QuadInt { a, b }
    }

    pub fn from_i64(a: i64, b: i64) -> Self {
        QuadInt::new(a.into(), b.into())
    }

    pub fn one() -> Self {
        QuadInt::from_i64(1, 0)
    }

    /// The fundamental unit 3 + 2*sqrt(2), of norm 1.
    pub fn fundamental_unit() -> Self {
        QuadInt::from_i64(3, 2)
    }

    /// Inverse of the fundamental unit, 3 - 2*sqrt(2).
    pub fn fundamental_unit_inv() -> Self {
        QuadInt::from_i64(3, -2)
    }

    /// The smallest positive unit of negative norm, -1 + sqrt(2).
    pub fn negative_norm_unit() -> Self {
        QuadInt::from_i64(-1, 1)
    }

    pub fn conj(&self) -> Self {
        QuadInt::new(self.a.clone(), -&self.b)
    }

    pub fn neg(&self) -> Self {
        QuadInt::new(-&self.a, -&self.b)
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - 2 * (&self.b * &self.b)
    }

    pub fn mul(&self, rhs: &QuadInt) -> QuadInt {
        QuadInt::new(
            &self.a * &rhs.a + 2 * (&self.b * &rhs.b),
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }

    pub fn pow(&self, e: u32) -> QuadInt {
        let mut acc = QuadInt::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient `self / rhs`, when it exists in the ring.
    pub fn divide_exact(&self, rhs: &QuadInt) -> Option<QuadInt> {
        let nd = rhs.norm();
        if nd.is_zero() {
            return None;
        }
        let num = self.mul(&rhs.conj());
        if (&num.a % &nd).is_zero() && (&num.b % &nd).is_zero() {
            Some(QuadInt::new(num.a / &nd, num.b / nd))
        } else {
            None
        }
    }

    /// ASCII rendering, `a+b*sqrt2`.
    pub fn to_ascii(&self) -> String {
        if self.b.is_negative() {
            format!("{}-{}*sqrt2", self.a, self.b.abs())
        } else {
            format!("{}+{}*sqrt2", self.a, self.b)
        }
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{}-{}√2", self.a, self.b.abs())
        } else {
            write!(f, "{}+{}√2", self.a, self.b)
        }
    }
}

/// True exactly when `x^2 - 8y^2 = D` has an integer solution: `D` must be
/// 1 (mod 8) and every prime congruent to ±3 (mod 8) must divide `|D|` to
/// an even power. Equivalently, `D` is a norm from Z[sqrt(2)] whose
/// sqrt(2)-coefficient is even. Only odd nonzero `D` are accepted.
pub fn is_representable_r(d: i64) -> Result<bool> {
    if d == 0 || d % 2 == 0 {
        return Err(Error::EvenDifference);
    }
    if d.rem_euclid(8) != 1 {
        return Ok(false);
    }
    for (p, e) in factorize(d.unsigned_abs()) {
        if (p % 8 == 3 || p % 8 == 5) && e % 2 == 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One step of the descent: at modulus `q_i`, `z` is the least residue with
/// `z^2 = 8 (mod q_i)` in the half range, and `q` is the next modulus
/// `(z^2 - 8) / q_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DescentStep {
    pub z: u64,
    pub q: i64,
}

/// The full descent record for one prime: a chain of shrinking moduli that
/// ends as soon as `|q| <= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentTrace {
    p: u64,
    steps: Vec<DescentStep>,
}

impl DescentTrace {
    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn steps(&self) -> &[DescentStep] {
        &self.steps
    }

    /// Combines the chain back into an element of norm ±p. Every step
    /// divides `z_i + 2*sqrt(2)` or its conjugate mate by an element built
    /// from the tail; both sign choices are kept alive wherever both divide
    /// exactly, since composite intermediate moduli can force the other
    /// conjugate class further up.
    pub fn reconstruct(&self) -> QuadInt {
        let last_q = self.steps.last().map(|s| s.q).unwrap_or(1);
        let seed = match last_q {
            1 => QuadInt::from_i64(1, 0),
            -1 => QuadInt::from_i64(1, 1),
            2 => QuadInt::from_i64(2, 1),
            -2 => QuadInt::from_i64(0, 1),
            other => unreachable!("descent ends with |q| <= 2, got {other}"),
        };
        let mut layer = vec![seed];
        for step in self.steps.iter().rev() {
            let z = BigInt::from(step.z);
            let alpha = QuadInt::new(z.clone(), 2.into());
            let alpha_bar = QuadInt::new(z, (-2).into());
            let mut next: Vec<QuadInt> = Vec::new();
            for u in &layer {
                for v in [alpha.divide_exact(u), alpha_bar.divide_exact(u)]
                    .into_iter()
                    .flatten()
                {
                    if !next.contains(&v) {
                        next.push(v);
                    }
                }
            }
            layer = next;
            if layer.is_empty() {
                break;
            }
        }
        if let Some(u) = layer.into_iter().next() {
            debug_assert_eq!(u.norm().abs(), BigInt::from(self.p));
            return u;
        }
        // Dead end: every division branch mismatched a conjugate class.
        // For a prime modulus the gcd with the first residue element pins
        // the answer outright.
        let z0 = BigInt::from(self.steps.first().expect("chain is nonempty").z);
        let g = quad_gcd(
            QuadInt::new(self.p.into(), BigInt::zero()),
            QuadInt::new(z0, 2.into()),
        );
        debug_assert_eq!(g.norm().abs(), BigInt::from(self.p));
        g
    }
}

fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if 2 * r.abs() > b.abs() {
        if r.is_negative() == b.is_negative() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Euclidean gcd in Z[sqrt(2)]: rounding each quotient coordinate to the
/// nearest integer keeps the remainder norm below half the divisor norm.
fn quad_gcd(mut a: QuadInt, mut b: QuadInt) -> QuadInt {
    while !b.norm().is_zero() {
        let nb = b.norm();
        let num = a.mul(&b.conj());
        let q = QuadInt::new(round_div(&num.a, &nb), round_div(&num.b, &nb));
        let r = QuadInt::new(
            &a.a - (&q.a * &b.a + 2 * (&q.b * &b.b)),
            &a.b - (&q.a * &b.b + &q.b * &b.a),
        );
        a = b;
        b = r;
    }
    a
}

/// The raw chain: works for any odd modulus admitting a square root of 8.
/// `z` is the smallest positive solution in the half range `1..=q/2`
/// (inclusive at the midpoint, which only matters for even moduli that
/// appear mid-chain). The next modulus can be negative only on the final
/// step, since `z^2 - 8 >= -7`.
fn descent_chain(p: u64) -> Result<Vec<DescentStep>> {
    let mut q = i64::try_from(p)
        .map_err(|_| Error::NotRepresentable(format!("{p} exceeds the supported descent range")))?;
    let mut steps = Vec::new();
    while q.abs() > 2 {
        let qa = q.unsigned_abs();
        let target = (8 % qa) as u128;
        let z = (1..=qa / 2)
            .find(|&z| (z as u128 * z as u128) % qa as u128 == target)
            .ok_or_else(|| Error::NotRepresentable(format!("8 has no square root modulo {qa}")))?;
        let q_next = ((z as i128 * z as i128 - 8) / q as i128) as i64;
        steps.push(DescentStep { z, q: q_next });
        q = q_next;
    }
    Ok(steps)
}

/// Lagrange's descent for `x^2 - 8y^2 = p`: starting from `q_0 = p`, pick
/// the least `z` below `q/2` with `z^2 = 8 (mod q)` and divide down until
/// the modulus drops below sqrt(8). Only primes `p = 1 (mod 8)` are
/// accepted here; for them the norm form is solvable and the reconstructed
/// element has norm ±p.
pub fn lagrange_descent(p: u64) -> Result<DescentTrace> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 8 != 1 {
        return Err(Error::BadResidue(p % 8, p));
    }
    Ok(DescentTrace {
        p,
        steps: descent_chain(p)?,
    })
}

/// Element of norm exactly `+p` for a split prime `p = ±1 (mod 8)`,
/// via the descent and a sign fix by the negative-norm unit.
fn split_prime_element(p: u64) -> Result<QuadInt> {
    let trace = DescentTrace {
        p,
        steps: descent_chain(p)?,
    };
    let mut u = trace.reconstruct();
    if u.norm().is_negative() {
        u = u.mul(&QuadInt::from_i64(1, 1)); // 1 + sqrt(2) has norm -1
    }
    debug_assert_eq!(u.norm(), BigInt::from(p));
    Ok(u)
}

/// Reduce to the associate with the smallest `|a|`; unimodal along the
/// unit orbit, so a greedy walk finds it.
fn unit_reduce(mut u: QuadInt) -> QuadInt {
    let eps = QuadInt::fundamental_unit();
    let inv = QuadInt::fundamental_unit_inv();
    loop {
        let down = u.mul(&inv);
        if down.a.abs() < u.a.abs() {
            u = down;
            continue;
        }
        let up = u.mul(&eps);
        if up.a.abs() < u.a.abs() {
            u = up;
            continue;
        }
        return u;
    }
}

/// Deterministic representative among all candidates and their sign and
/// conjugate variants: smallest `|a|`, then `a > 0`, then `b >= 0`.
fn canonical_pick(cands: Vec<QuadInt>) -> QuadInt {
    let eps = QuadInt::fundamental_unit();
    let inv = QuadInt::fundamental_unit_inv();
    let mut pool = Vec::new();
    for u in cands {
        let r = unit_reduce(u);
        for v in [r.mul(&inv), r.clone(), r.mul(&eps)] {
            pool.push(v.conj());
            pool.push(v.neg().conj());
            pool.push(v.neg());
            pool.push(v);
        }
    }
    pool.into_iter()
        .min_by_key(|u| (u.a.abs(), u.a.is_negative(), u.b.is_negative(), u.b.abs()))
        .expect("candidate pool is nonempty")
}

struct NormShape {
    split: Vec<(u64, u32)>,
    inert_root: BigInt,
}

/// Factor gate shared by the solvers: odd nonzero `D` whose primes
/// congruent to ±3 (mod 8) (inert in the ring) all carry even exponents.
fn norm_shape(d: i64) -> Result<NormShape> {
    if d == 0 || d % 2 == 0 {
        return Err(Error::EvenDifference);
    }
    let mut split = Vec::new();
    let mut inert_root = BigInt::one();
    for (p, e) in factorize(d.unsigned_abs()) {
        if p % 8 == 1 || p % 8 == 7 {
            split.push((p, e));
        } else if e % 2 == 0 {
            inert_root *= BigInt::from(p).pow(e / 2);
        } else {
            return Err(Error::NotRepresentable(format!(
                "prime {p} = {} (mod 8) divides {d} to an odd power; only primes = ±1 (mod 8) may carry odd exponents",
                p % 8
            )));
        }
    }
    Ok(NormShape { split, inert_root })
}

/// Canonical element of norm exactly `D`. Primes are solved by descent and
/// reconstruction, composites by multiplying prime solutions over every
/// conjugate split, negative norms by one factor of the negative-norm unit;
/// the result is the canonical representative of `canonical_pick`.
pub fn solve_norm(d: i64) -> Result<QuadInt> {
    let shape = norm_shape(d)?;
    let mut combos = vec![QuadInt::new(shape.inert_root.clone(), BigInt::zero())];
    for (p, e) in &shape.split {
        let pi = split_prime_element(*p)?;
        let bar = pi.conj();
        let mut next = Vec::with_capacity(combos.len() * (*e as usize + 1));
        for base in &combos {
            for j in 0..=*e {
                next.push(base.mul(&pi.pow(j)).mul(&bar.pow(*e - j)));
            }
        }
        combos = next;
    }
    if d < 0 {
        let flip = QuadInt::negative_norm_unit();
        combos = combos.iter().map(|u| u.mul(&flip)).collect();
    }
    let best = canonical_pick(combos);
    debug_assert_eq!(best.norm(), BigInt::from(d));
    Ok(best)
}

fn hyp_of(u: &QuadInt) -> BigInt {
    let x = u.a.abs();
    let y = u.b.abs();
    let m = &x + &y;
    &m * &m + &y * &y
}

/// Walk the unit orbit to the element minimizing the reconstructed
/// hypotenuse, returning it with its two neighbors (the minimizer itself
/// can be the degenerate `y = 0` point, in which case a neighbor wins).
fn min_hyp_window(mut u: QuadInt) -> [QuadInt; 3] {
    let eps = QuadInt::fundamental_unit();
    let inv = QuadInt::fundamental_unit_inv();
    loop {
        let down = u.mul(&inv);
        if hyp_of(&down) < hyp_of(&u) {
            u = down;
            continue;
        }
        let up = u.mul(&eps);
        if hyp_of(&up) < hyp_of(&u) {
            u = up;
            continue;
        }
        break;
    }
    [u.mul(&inv), u.clone(), u.mul(&eps)]
}

/// The root triple realizing difference `S - C = D`.
///
/// For `D > 0` the even-coefficient form applies: a solution `(x, y)` of
/// `x^2 - 2y^2 = D` with `y` even exists exactly when `D = 1 (mod 8)`, and
/// the positive triple comes from taking the `y < 0` branch, i.e. Euclid
/// parameters `(|x| + |y|, |y|)`. For `D < 0` the conjugate recipe solves
/// `(m - n)^2 - 2n^2 = D` with `n = |y|`, which lands on the same parameter
/// formula. In both cases the returned triple is the smallest-hypotenuse
/// primitive reconstruction over all solution classes and their unit
/// neighborhoods.
pub fn root_triple_for_difference(d: i64) -> Result<PrimTriple> {
    if d == 0 || d % 2 == 0 {
        return Err(Error::EvenDifference);
    }
    let facs = factorize(d.unsigned_abs());
    for &(p, _) in &facs {
        if p % 8 == 3 || p % 8 == 5 {
            return Err(Error::NotRepresentable(format!(
                "prime {p} = {} (mod 8) divides {d}; the form has no primitive solution",
                p % 8
            )));
        }
    }
    if d > 0 && d.rem_euclid(8) != 1 {
        return Err(Error::NotRepresentable(format!(
            "{d} = {} (mod 8); a positive difference must be 1 (mod 8) to be a norm with even sqrt(2)-coefficient",
            d.rem_euclid(8)
        )));
    }
    // Primitive combinations only: all of a prime's factors on the same
    // conjugate side, else a rational prime divides the element.
    let mut combos = vec![QuadInt::one()];
    for &(p, e) in &facs {
        let pi = split_prime_element(p)?.pow(e);
        let bar = pi.conj();
        let mut next = Vec::with_capacity(combos.len() * 2);
        for base in &combos {
            next.push(base.mul(&pi));
            next.push(base.mul(&bar));
        }
        combos = next;
    }
    if d < 0 {
        let flip = QuadInt::negative_norm_unit();
        combos = combos.iter().map(|u| u.mul(&flip)).collect();
    }
    let mut best: Option<PrimTriple> = None;
    for u in combos {
        for v in min_hyp_window(u) {
            if v.b.is_zero() {
                continue;
            }
            let x = v.a.abs();
            let y = v.b.abs();
            if x.gcd(&y) != BigInt::one() {
                continue;
            }
            if d > 0 {
                debug_assert!(y.is_even(), "positive targets always carry even y");
            }
            let pair = ParamPair::new(&x + &y, y).expect("reconstructed parameters are valid");
            let t = triple_from_params(&pair);
            debug_assert_eq!(t.s() - t.c(), BigInt::from(d));
            let better = match &best {
                None => true,
                Some(b) => (t.n(), t.s()) < (b.n(), b.s()),
            };
            if better {
                best = Some(t);
            }
        }
    }
    best.ok_or_else(|| {
        Error::NotRepresentable(format!(
            "{d} has no primitive representation with nonzero sqrt(2)-coefficient"
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::level_iter;
    use proptest::prelude::*;

    fn t(s: i64, c: i64, n: i64) -> PrimTriple {
        PrimTriple::from_i64(s, c, n).unwrap()
    }

    #[test]
    fn differences_examples() {
        assert_eq!(differences(&t(3, 4, 5)), (1.into(), 2.into(), 1.into()));
        assert_eq!(
            differences(&t(15, 8, 17)),
            (9.into(), 2.into(), (-7).into())
        );
        assert_eq!(
            differences(&t(33, 56, 65)),
            (9.into(), 32.into(), 23.into())
        );
    }

    #[test]
    fn invariant_directions() {
        assert_eq!(invariant_child_kind(DiffForm::P), ChildKind::UMinus);
        assert_eq!(invariant_child_kind(DiffForm::Q), ChildKind::LPlus);
        assert_eq!(invariant_child_kind(DiffForm::R), ChildKind::UPlus);
    }

    #[test]
    fn difference_paths_from_the_literature() {
        let path = difference_path(&t(3, 4, 5), DiffForm::P, 4);
        assert_eq!(
            path,
            vec![t(3, 4, 5), t(5, 12, 13), t(7, 24, 25), t(9, 40, 41)]
        );
        assert!(path.iter().all(|x| form_value(x, DiffForm::P).is_one()));

        let path = difference_path(&t(3, 4, 5), DiffForm::R, 4);
        assert_eq!(
            path,
            vec![
                t(3, 4, 5),
                t(21, 20, 29),
                t(119, 120, 169),
                t(697, 696, 985)
            ]
        );
        let rs: Vec<BigInt> = path.iter().map(|x| form_value(x, DiffForm::R)).collect();
        assert_eq!(rs, vec![1.into(), (-1).into(), 1.into(), (-1).into()]);

        assert_eq!(
            difference_path(&t(15, 8, 17), DiffForm::R, 3),
            vec![t(15, 8, 17), t(65, 72, 97), t(403, 396, 565)]
        );
        assert_eq!(
            difference_path(&t(3, 4, 5), DiffForm::Q, 1),
            vec![t(3, 4, 5)]
        );
        assert_eq!(
            form_value(&t(3, 4, 5), DiffForm::Q),
            form_value(&t(15, 8, 17), DiffForm::Q)
        );
    }

    #[test]
    fn differences_persist_from_every_node() {
        for triple in (0..=5).flat_map(level_iter) {
            for form in [DiffForm::P, DiffForm::Q, DiffForm::R] {
                let path = difference_path(&triple, form, 4);
                let v0 = form_value(&path[0], form);
                for (i, node) in path.iter().enumerate() {
                    let v = form_value(node, form);
                    match form {
                        DiffForm::P | DiffForm::Q => assert_eq!(v, v0),
                        DiffForm::R => {
                            assert_eq!(v, if i % 2 == 0 { v0.clone() } else { -&v0 })
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn against_params() {
        for triple in level_iter(4) {
            let p = crate::tree::params_from_triple(&triple);
            let (m, n) = (p.m().clone(), p.n().clone());
            let (pp, qq, _) = differences(&triple);
            let mn = &m - &n;
            assert_eq!(pp, &mn * &mn);
            assert_eq!(qq, 2 * (&n * &n));
        }
    }

    #[test]
    fn primality_and_factorization() {
        assert!(is_prime(2) && is_prime(89) && is_prime(1_000_000_007));
        assert!(!is_prime(1) && !is_prime(1513) && !is_prime(6));
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(89), vec![(89, 1)]);
        assert_eq!(factorize(1513), vec![(17, 1), (89, 1)]);
        assert_eq!(
            factorize(600_851_475_143),
            vec![(71, 1), (839, 1), (1471, 1), (6857, 1)]
        );
        assert_eq!(factorize(720), vec![(2, 4), (3, 2), (5, 1)]);
    }

    #[test]
    fn representability_examples() {
        assert_eq!(is_representable_r(17), Ok(true));
        assert_eq!(is_representable_r(89), Ok(true));
        assert_eq!(is_representable_r(3), Ok(false));
        assert_eq!(is_representable_r(-7), Ok(true)); // 1 - 8 = -7
        assert_eq!(is_representable_r(7), Ok(false)); // 7 = 7 (mod 8)
        assert_eq!(is_representable_r(-17), Ok(false)); // -17 = 7 (mod 8)
        assert_eq!(is_representable_r(9), Ok(true)); // 3^2 - 8*0^2
        assert_eq!(is_representable_r(4), Err(Error::EvenDifference));
        assert_eq!(is_representable_r(0), Err(Error::EvenDifference));
    }

    /// Ground-truth scan: all values x^2 - 8y^2 within [-bound, bound] for
    /// 0 <= x, y <= limit, swept per y over the narrow x window.
    fn representable_by_scan(bound: i64, limit: u64) -> std::collections::HashSet<i64> {
        let mut set = std::collections::HashSet::new();
        for y in 0..=limit {
            let base = 8i128 * (y as i128) * (y as i128);
            let lo = base - bound as i128;
            let hi = base + bound as i128;
            let x_min = if lo <= 0 {
                0
            } else {
                (lo as f64).sqrt() as i128 - 2
            };
            let x_max = (hi as f64).sqrt() as i128 + 2;
            for x in x_min.max(0)..=x_max.min(limit as i128) {
                let d = x * x - base;
                if d.abs() <= bound as i128 {
                    set.insert(d as i64);
                }
            }
        }
        set
    }

    #[test]
    fn representability_agrees_with_scan() {
        let representable = representable_by_scan(500, 10_000);
        for odd in (1..=499i64).step_by(2) {
            for d in [odd, -odd] {
                assert_eq!(
                    is_representable_r(d).unwrap(),
                    representable.contains(&d),
                    "mismatch at D = {d}"
                );
            }
        }
    }

    #[test]
    fn descent_trace_for_89() {
        let trace = lagrange_descent(89).unwrap();
        assert_eq!(
            trace.steps(),
            &[DescentStep { z: 39, q: 17 }, DescentStep { z: 5, q: 1 }]
        );
        let u = trace.reconstruct();
        assert_eq!(u.norm(), 89.into());
        assert_eq!(u.b.abs(), 4.into());
    }

    #[test]
    fn descent_trace_for_17_and_73() {
        let trace = lagrange_descent(17).unwrap();
        assert_eq!(trace.steps(), &[DescentStep { z: 5, q: 1 }]);
        assert_eq!(trace.reconstruct().norm(), 17.into());

        let trace = lagrange_descent(73).unwrap();
        assert_eq!(trace.steps().last().unwrap().q, 1);
        assert_eq!(trace.reconstruct().norm().abs(), 73.into());
    }

    #[test]
    fn descent_passes_through_even_moduli() {
        // 97 descends through q = 8, where the half-range midpoint z = 4
        // is the only admissible choice.
        let trace = lagrange_descent(97).unwrap();
        assert_eq!(
            trace.steps(),
            &[DescentStep { z: 28, q: 8 }, DescentStep { z: 4, q: 1 }]
        );
        assert_eq!(trace.reconstruct().norm().abs(), 97.into());
    }

    #[test]
    fn descent_rejects_bad_inputs() {
        assert_eq!(lagrange_descent(15), Err(Error::NotPrime(15)));
        assert_eq!(lagrange_descent(7), Err(Error::BadResidue(7, 7)));
        assert_eq!(lagrange_descent(11), Err(Error::BadResidue(3, 11)));
        assert_eq!(lagrange_descent(13), Err(Error::BadResidue(5, 13)));
    }

    #[test]
    fn descent_reconstructs_every_split_prime_below_ten_thousand() {
        for p in (17..10_000u64).step_by(8) {
            if !is_prime(p) {
                continue;
            }
            let trace = lagrange_descent(p).unwrap();
            let u = trace.reconstruct();
            assert_eq!(u.norm().abs(), p.into(), "descent failed at {p}");
            let fixed = split_prime_element(p).unwrap();
            assert_eq!(fixed.norm(), p.into());
            assert!(
                fixed.b.is_even(),
                "p = 1 (mod 8) forces an even coefficient"
            );
        }
    }

    #[test]
    fn solve_norm_examples() {
        assert_eq!(solve_norm(17).unwrap(), QuadInt::from_i64(5, 2));
        assert_eq!(solve_norm(89).unwrap(), QuadInt::from_i64(11, 4));
        // The raw unit product is -1 + 3*sqrt(2); the canonical pick is its
        // negated conjugate.
        assert_eq!(solve_norm(-17).unwrap(), QuadInt::from_i64(1, 3));
        assert_eq!(solve_norm(7).unwrap(), QuadInt::from_i64(3, 1));
        assert_eq!(solve_norm(-7).unwrap(), QuadInt::from_i64(1, 2));
        assert_eq!(solve_norm(9).unwrap(), QuadInt::from_i64(3, 0));
        assert_eq!(solve_norm(1).unwrap(), QuadInt::from_i64(1, 0));
        assert_eq!(solve_norm(-1).unwrap(), QuadInt::from_i64(1, 1));
        assert_eq!(solve_norm(1513).unwrap().norm(), 1513.into());
        assert!(matches!(solve_norm(45), Err(Error::NotRepresentable(_))));
        assert_eq!(solve_norm(6), Err(Error::EvenDifference));
    }

    #[test]
    fn solved_norms_match_request() {
        for d in (-499i64..=499).step_by(2) {
            match solve_norm(d) {
                Ok(u) => assert_eq!(u.norm(), d.into(), "wrong norm at {d}"),
                Err(Error::NotRepresentable(_)) => {}
                Err(e) => panic!("unexpected error at {d}: {e}"),
            }
        }
    }

    #[test]
    fn quadint_display() {
        assert_eq!(QuadInt::from_i64(11, 4).to_string(), "11+4√2");
        assert_eq!(QuadInt::from_i64(1, -3).to_string(), "1-3√2");
        assert_eq!(QuadInt::from_i64(3, 0).to_string(), "3+0√2");
        assert_eq!(QuadInt::from_i64(11, 4).to_ascii(), "11+4*sqrt2");
        assert_eq!(QuadInt::from_i64(1, -3).to_ascii(), "1-3*sqrt2");
    }

    #[test]
    fn root_triples_from_the_literature() {
        assert_eq!(root_triple_for_difference(17).unwrap(), t(45, 28, 53));
        assert_eq!(root_triple_for_difference(-17).unwrap(), t(7, 24, 25));
        assert_eq!(root_triple_for_difference(-89).unwrap(), t(51, 140, 149));
        assert_eq!(root_triple_for_difference(89).unwrap(), t(209, 120, 241));
    }

    #[test]
    fn root_triples_for_units_and_small_cases() {
        assert_eq!(root_triple_for_difference(1).unwrap(), t(21, 20, 29));
        assert_eq!(root_triple_for_difference(-1).unwrap(), t(3, 4, 5));
        assert_eq!(root_triple_for_difference(-7).unwrap(), t(5, 12, 13));
        assert_eq!(root_triple_for_difference(289).unwrap(), t(589, 300, 661));
    }

    #[test]
    fn root_triple_rejections() {
        assert_eq!(root_triple_for_difference(4), Err(Error::EvenDifference));
        assert!(matches!(
            root_triple_for_difference(7),
            Err(Error::NotRepresentable(_))
        ));
        assert!(matches!(
            root_triple_for_difference(9),
            Err(Error::NotRepresentable(_))
        ));
        assert!(matches!(
            root_triple_for_difference(-9),
            Err(Error::NotRepresentable(_))
        ));
        assert!(matches!(
            root_triple_for_difference(15),
            Err(Error::NotRepresentable(_))
        ));
    }

    #[test]
    fn roots_are_minimal_along_their_paths() {
        for odd in (1..=99i64).step_by(2) {
            for d in [odd, -odd] {
                let root = match root_triple_for_difference(d) {
                    Ok(t) => t,
                    Err(_) => continue,
                };
                assert_eq!(root.s() - root.c(), BigInt::from(d));
                // No ancestor repeats the same signed difference.
                let mut cur = root;
                while let Some((up, _)) = crate::tree::parent(&cur) {
                    assert_ne!(up.s() - up.c(), BigInt::from(d), "non-minimal root for {d}");
                    cur = up;
                }
            }
        }
    }

    fn arb_quadint() -> impl Strategy<Value = QuadInt> {
        ((-1000i64..=1000), (-1000i64..=1000)).prop_map(|(a, b)| QuadInt::from_i64(a, b))
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(u in arb_quadint(), v in arb_quadint()) {
            prop_assert_eq!(u.mul(&v).norm(), u.norm() * v.norm());
        }

        #[test]
        fn exact_division_inverts_multiplication(u in arb_quadint(), v in arb_quadint()) {
            if !v.norm().is_zero() {
                prop_assert_eq!(u.mul(&v).divide_exact(&v), Some(u));
            }
        }
    }
}
