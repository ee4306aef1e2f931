//! Exact integer characteristic polynomials, fraction-free determinants and
//! ranks, and Sturm-sequence root isolation over the rationals.
//!
//! Cospectrality decisions elsewhere in the crate compare [`CharPoly`] values
//! for exact equality; floating spectra are only ever a pre-filter.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Monic integer characteristic polynomial, coefficients stored from the
/// leading term down to the constant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    coeffs: Vec<BigInt>,
}

impl CharPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        match coeffs.first() {
            Some(c) if c.is_one() => Ok(CharPoly { coeffs }),
            Some(_) => Err(Error::Domain("characteristic polynomial must be monic".into())),
            None => Err(Error::Domain("empty coefficient list".into())),
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        CharPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Leading-to-constant coefficients.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients as decimal strings, for reports.
    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Horner evaluation at an integer.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in &self.coeffs {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in &self.coeffs {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }
}

impl std::fmt::Display for CharPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = n - i;
            if first {
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let show_coeff = !a.is_one() || p == 0;
            if first && c.is_negative() {
                write!(f, "-")?;
            }
            if show_coeff {
                write!(f, "{a}")?;
            }
            match p {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{p}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn to_bigint_matrix(m: &[Vec<i64>]) -> Result<Vec<Vec<BigInt>>> {
    let n = m.len();
    let mut out = Vec::with_capacity(n);
    for row in m {
        if row.len() != n {
            return Err(Error::Domain(format!(
                "matrix is not square: row of length {} in an {n}-row matrix",
                row.len()
            )));
        }
        out.push(row.iter().map(|&x| BigInt::from(x)).collect());
    }
    Ok(out)
}

fn trace(m: &[Vec<BigInt>]) -> BigInt {
    m.iter().enumerate().map(|(i, row)| row[i].clone()).sum()
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            let aik = &a[i][k];
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

/// Exact characteristic polynomial det(xI - M) by the Faddeev-LeVerrier
/// recurrence; every division by the step index is exact in the integers.
pub fn char_poly(m: &[Vec<i64>]) -> Result<CharPoly> {
    let a = to_bigint_matrix(m)?;
    char_poly_bigint(&a)
}

pub fn char_poly_bigint(a: &[Vec<BigInt>]) -> Result<CharPoly> {
    let n = a.len();
    for row in a {
        if row.len() != n {
            return Err(Error::Domain("matrix is not square".into()));
        }
    }
    let mut coeffs = vec![BigInt::one()];
    if n == 0 {
        return CharPoly::new(coeffs);
    }
    let mut mk = a.to_vec();
    for k in 1..=n {
        let ck = -trace(&mk) / BigInt::from(k);
        coeffs.push(ck.clone());
        if k == n {
            break;
        }
        for i in 0..n {
            mk[i][i] += &ck;
        }
        mk = mat_mul(a, &mk);
    }
    CharPoly::new(coeffs)
}

/// Fraction-free (Bareiss) determinant with row pivoting.
pub fn det_bigint(m: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = m.len();
    for row in m {
        if row.len() != n {
            return Err(Error::Domain("matrix is not square".into()));
        }
    }
    let mut a = m.to_vec();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                debug_assert!((&num % &prev).is_zero());
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign < 0 { -d } else { d })
}

/// det(xI - M), evaluated by fraction-free elimination. Serves as the
/// independent route against Horner evaluation of [`char_poly`].
pub fn det_shifted(m: &[Vec<i64>], x: &BigInt) -> Result<BigInt> {
    let n = m.len();
    let mut a = to_bigint_matrix(m)?;
    for (i, row) in a.iter_mut().enumerate().take(n) {
        for (j, e) in row.iter_mut().enumerate() {
            *e = -&*e;
            if i == j {
                *e += x;
            }
        }
    }
    det_bigint(&a)
}

/// Rank over the rationals by fraction-free elimination with full pivoting.
pub fn rank_bigint(m: &[Vec<BigInt>]) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a = m.to_vec();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for k in 0..rows.min(cols) {
        let pivot = (k..rows)
            .flat_map(|i| (k..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero());
        let (pi, pj) = match pivot {
            Some(p) => p,
            None => break,
        };
        a.swap(k, pi);
        if pj != k {
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
        }
        for i in (k + 1)..rows {
            for j in (k + 1)..cols {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                debug_assert!((&num % &prev).is_zero());
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
        rank += 1;
    }
    rank
}

/// Exact multiplicity of the integer `lambda` as an eigenvalue of `m`:
/// n - rank(m - lambda I) over the rationals.
pub fn exact_multiplicity(m: &[Vec<i64>], lambda: i64) -> Result<usize> {
    let n = m.len();
    let mut a = to_bigint_matrix(m)?;
    let l = BigInt::from(lambda);
    for (i, row) in a.iter_mut().enumerate() {
        row[i] -= &l;
    }
    Ok(n - rank_bigint(&a))
}

// ---------------------------------------------------------------------------
// Sturm sequences over exact rationals
// ---------------------------------------------------------------------------

fn rat_trim(p: &mut Vec<BigRational>) {
    while p.len() > 1 && p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn rat_is_zero(p: &[BigRational]) -> bool {
    p.iter().all(|c| c.is_zero())
}

/// Scales so the leading coefficient has absolute value 1, preserving sign.
fn rat_abs_monic(mut p: Vec<BigRational>) -> Vec<BigRational> {
    rat_trim(&mut p);
    if let Some(lc) = p.last().cloned() {
        if !lc.is_zero() {
            let scale = lc.abs();
            for c in &mut p {
                *c /= scale.clone();
            }
        }
    }
    p
}

fn rat_derivative(p: &[BigRational]) -> Vec<BigRational> {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect()
}

/// Remainder of a by b (b nonzero), coefficients constant-first.
fn rat_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    rat_trim(&mut r);
    let mut bb = b.to_vec();
    rat_trim(&mut bb);
    let db = bb.len() - 1;
    let lead = bb[db].clone();
    while r.len() > db && !rat_is_zero(&r) {
        let dr = r.len() - 1;
        let factor = r[dr].clone() / lead.clone();
        let shift = dr - db;
        for i in 0..=db {
            let t = &bb[i] * &factor;
            r[i + shift] -= t;
        }
        r.pop();
        rat_trim(&mut r);
        if dr == db {
            break;
        }
    }
    r
}

fn rat_eval(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Sturm chain of the square-free part of a polynomial. Counts distinct real
/// roots in half-open intervals (lo, hi].
pub(crate) struct SturmChain {
    chain: Vec<Vec<BigRational>>,
}

impl SturmChain {
    pub fn new(p: &CharPoly) -> Self {
        let coeffs: Vec<BigRational> = p
            .coeffs()
            .iter()
            .rev()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        // square-free part: p / gcd(p, p')
        let d = rat_derivative(&coeffs);
        let g = rat_gcd(&coeffs, &d);
        let sf = if g.len() > 1 {
            rat_div_exact(&coeffs, &g)
        } else {
            coeffs
        };
        let p0 = rat_abs_monic(sf);
        let p1 = rat_abs_monic(rat_derivative(&p0));
        let mut chain = vec![p0, p1];
        loop {
            let k = chain.len();
            if rat_is_zero(&chain[k - 1]) {
                chain.pop();
                break;
            }
            let mut r = rat_rem(&chain[k - 2], &chain[k - 1]);
            if rat_is_zero(&r) {
                break;
            }
            for c in &mut r {
                *c = -c.clone();
            }
            chain.push(rat_abs_monic(r));
        }
        SturmChain { chain }
    }

    /// Sign variations at x, zero values skipped.
    fn variations(&self, x: &BigRational) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|p| {
                let v = rat_eval(p, x);
                if v.is_zero() {
                    0
                } else if v.is_negative() {
                    -1
                } else {
                    1
                }
            })
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct real roots in (lo, hi].
    pub fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        let vl = self.variations(lo);
        let vh = self.variations(hi);
        vl.saturating_sub(vh)
    }
}

fn rat_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = rat_abs_monic(a.to_vec());
    let mut y = rat_abs_monic(b.to_vec());
    while !rat_is_zero(&y) && y.len() > 0 {
        let r = rat_rem(&x, &y);
        x = y;
        y = rat_abs_monic(r);
        if rat_is_zero(&y) {
            break;
        }
    }
    x
}

/// Exact division a / b (remainder known to vanish).
fn rat_div_exact(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    rat_trim(&mut r);
    let mut bb = b.to_vec();
    rat_trim(&mut bb);
    let db = bb.len() - 1;
    let lead = bb[db].clone();
    let dq = r.len().saturating_sub(bb.len());
    let mut q = vec![BigRational::zero(); dq + 1];
    while r.len() > db || (r.len() == db + 1 && !rat_is_zero(&r)) {
        if r.len() < bb.len() {
            break;
        }
        let dr = r.len() - 1;
        let factor = r[dr].clone() / lead.clone();
        let shift = dr - db;
        q[shift] = factor.clone();
        for i in 0..=db {
            let t = &bb[i] * &factor;
            r[i + shift] -= t;
        }
        r.pop();
        rat_trim(&mut r);
        if dr == db {
            break;
        }
    }
    q
}

/// Number of distinct real roots of `p` in the half-open interval (lo, hi].
pub fn sturm_count(p: &CharPoly, lo: &BigRational, hi: &BigRational) -> Result<usize> {
    if lo >= hi {
        return Err(Error::Domain("sturm_count needs lo < hi".into()));
    }
    Ok(SturmChain::new(p).count(lo, hi))
}

/// Convenience wrapper with integer endpoints.
pub fn sturm_count_i64(p: &CharPoly, lo: i64, hi: i64) -> Result<usize> {
    sturm_count(
        p,
        &BigRational::from_integer(BigInt::from(lo)),
        &BigRational::from_integer(BigInt::from(hi)),
    )
}

/// An isolating interval: `count` distinct roots of the polynomial lie in
/// (lo, hi].
#[derive(Debug, Clone)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub count: usize,
}

impl RootInterval {
    pub fn isolate(p: &CharPoly, lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo >= hi {
            return Err(Error::Domain("interval needs lo < hi".into()));
        }
        let count = SturmChain::new(p).count(&lo, &hi);
        Ok(RootInterval { lo, hi, count })
    }

    pub fn isolate_i64(p: &CharPoly, lo: i64, hi: i64) -> Result<Self> {
        RootInterval::isolate(
            p,
            BigRational::from_integer(BigInt::from(lo)),
            BigRational::from_integer(BigInt::from(hi)),
        )
    }
}

/// Bisects a count-1 bracket until its width is at most `tol` and returns the
/// midpoint. Bisection steps are decided by exact Sturm counts, so the result
/// is certified to lie within `tol` of the unique root.
pub fn refine_root(p: &CharPoly, bracket: &RootInterval, tol: f64) -> Result<f64> {
    if bracket.count != 1 {
        return Err(Error::Precondition(format!(
            "bracket holds {} roots, need exactly 1",
            bracket.count
        )));
    }
    if tol <= 0.0 {
        return Err(Error::Domain("tolerance must be positive".into()));
    }
    let chain = SturmChain::new(p);
    let two = BigRational::from_integer(BigInt::from(2));
    let mut lo = bracket.lo.clone();
    let mut hi = bracket.hi.clone();
    loop {
        let width = (&hi - &lo).to_f64().unwrap_or(f64::INFINITY);
        if width <= tol {
            break;
        }
        let mid = (&lo + &hi) / &two;
        if chain.count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mid = (&lo + &hi) / &two;
    mid.to_f64()
        .ok_or_else(|| Error::Numeric("midpoint not representable as f64".into()))
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers (constant-first), used by the structured
// family fingerprints in the search module.
// ---------------------------------------------------------------------------

pub(crate) fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

pub(crate) fn poly_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, ai) in a.iter().enumerate() {
        out[i] += ai;
    }
    for (i, bi) in b.iter().enumerate() {
        out[i] -= bi;
    }
    out
}

/// p(x) -> p(x - 1), constant-first coefficients.
pub(crate) fn poly_shift_down_one(p: &[BigInt]) -> Vec<BigInt> {
    // Horner over the leading coefficients: acc <- acc*(x-1) + c
    let mut acc: Vec<BigInt> = vec![BigInt::zero()];
    for c in p.iter().rev() {
        let mut next = vec![BigInt::zero(); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i + 1] += a; // * x
            next[i] -= a; // * (-1)
        }
        next[0] += c;
        while next.len() > 1 && next.last().map(|v| v.is_zero()).unwrap_or(false) {
            next.pop();
        }
        acc = next;
    }
    acc
}

/// CharPoly coefficients in constant-first order.
pub(crate) fn charpoly_to_ascending(p: &CharPoly) -> Vec<BigInt> {
    p.coeffs().iter().rev().cloned().collect()
}

pub(crate) fn ascending_to_charpoly(mut coeffs: Vec<BigInt>) -> Result<CharPoly> {
    while coeffs.len() > 1 && coeffs.last().map(|v| v.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    coeffs.reverse();
    CharPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::ApexFamily;
    use crate::graph::{apex_join, build_atom, disjoint_union, AtomKind, Multigraph};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    // test-only oracle: expand a product of monic linear/small factors
    fn poly_product(factors: &[Vec<i64>]) -> Vec<BigInt> {
        let mut acc = vec![BigInt::one()];
        for f in factors {
            let fb = big(f);
            let mut out = vec![BigInt::zero(); acc.len() + fb.len() - 1];
            for (i, a) in acc.iter().enumerate() {
                for (j, b) in fb.iter().enumerate() {
                    out[i + j] += a * b;
                }
            }
            acc = out;
        }
        acc
    }

    #[test]
    fn char_poly_small_graphs() {
        let k2 = build_atom(AtomKind::Path, 2).unwrap();
        let p = char_poly(&k2.q_matrix()).unwrap();
        assert_eq!(p.coeffs(), &big(&[1, -2, 0])[..]);

        let c3 = build_atom(AtomKind::Cycle, 3).unwrap();
        let p = char_poly(&c3.q_matrix()).unwrap();
        assert_eq!(p.coeffs(), &big(&[1, -6, 9, -4])[..]);
    }

    #[test]
    fn char_poly_apex_family_factors() {
        // Q(K1 v (C3 u K2)) factors as the cubic times (x-1)(x-2)^2,
        // leading-first factors expanded by the product oracle above
        let fam = ApexFamily::new(vec![3], vec![2]).unwrap();
        let p = char_poly(&fam.realize().q_matrix()).unwrap();
        let expected = poly_product(&[
            vec![1, -13, 50, -56],
            vec![1, -1],
            vec![1, -2],
            vec![1, -2],
        ]);
        assert_eq!(p.coeffs(), &expected[..]);
        // coefficient of x^(n-1) is -2m
        assert_eq!(p.coeffs()[1], BigInt::from(-(2 * 9i64)));
    }

    #[test]
    fn char_poly_rejects_non_square() {
        assert!(char_poly(&[vec![1, 2], vec![3, 4], vec![5, 6]]).is_err());
        assert!(char_poly(&[vec![1, 2, 3], vec![4, 5, 6]]).is_err());
    }

    fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Multigraph {
        let mut g = Multigraph::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v, 1).unwrap();
                }
            }
        }
        g
    }

    #[test]
    fn horner_matches_fraction_free_determinant() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..50 {
            let n = rng.gen_range(1..=8);
            let g = random_graph(&mut rng, n, 0.45);
            let q = g.q_matrix();
            let p = char_poly(&q).unwrap();
            for _ in 0..20 {
                let x = BigInt::from(rng.gen_range(-30i64..=30));
                assert_eq!(p.eval(&x), det_shifted(&q, &x).unwrap());
            }
        }
    }

    #[test]
    fn negative_evaluations_positive_for_psd_q() {
        // Q is positive semidefinite, so det(xI - Q) at x < 0 has sign (+1)^n * ... > 0
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..30 {
            let n = rng.gen_range(2..=9);
            let g = random_graph(&mut rng, n, 0.5);
            let p = char_poly(&g.q_matrix()).unwrap();
            for x in [-1i64, -3, -17] {
                let v = p.eval_i64(x);
                assert!(v.is_positive(), "p({x}) = {v} not positive for n = {n}");
            }
        }
    }

    #[test]
    fn zero_multiplicity_iff_bipartite_component() {
        // unions of paths and even cycles have 0 in the Q-spectrum; apex joins
        // of non-bipartite unions do not
        let p4 = build_atom(AtomKind::Path, 4).unwrap();
        let c6 = build_atom(AtomKind::Cycle, 6).unwrap();
        let u = disjoint_union(&p4, &c6);
        assert!(exact_multiplicity(&u.q_matrix(), 0).unwrap() >= 1);

        let fam = ApexFamily::new(vec![3], vec![2]).unwrap();
        assert_eq!(exact_multiplicity(&fam.realize().q_matrix(), 0).unwrap(), 0);

        let c5 = build_atom(AtomKind::Cycle, 5).unwrap();
        assert_eq!(exact_multiplicity(&c5.q_matrix(), 0).unwrap(), 0);
        let wheel = apex_join(&build_atom(AtomKind::Cycle, 4).unwrap());
        assert_eq!(exact_multiplicity(&wheel.q_matrix(), 0).unwrap(), 0);
    }

    #[test]
    fn exact_multiplicities_of_families() {
        let fam = ApexFamily::new(vec![4], vec![2]).unwrap();
        assert_eq!(exact_multiplicity(&fam.realize().q_matrix(), 1).unwrap(), 2);

        let fam = ApexFamily::new(vec![3, 3], vec![2]).unwrap();
        assert_eq!(exact_multiplicity(&fam.realize().q_matrix(), 5).unwrap(), 1);

        let c3 = build_atom(AtomKind::Cycle, 3).unwrap();
        assert_eq!(exact_multiplicity(&c3.q_matrix(), 1).unwrap(), 2);
    }

    #[test]
    fn sturm_counts_on_the_family_cubic() {
        let cubic = CharPoly::from_i64(&[1, -13, 50, -56]).unwrap();
        assert_eq!(sturm_count_i64(&cubic, 6, 8).unwrap(), 1);
        assert_eq!(sturm_count_i64(&cubic, 3, 5).unwrap(), 1);
        assert_eq!(sturm_count_i64(&cubic, 1, 3).unwrap(), 1);
        assert_eq!(sturm_count_i64(&cubic, -10, 0).unwrap(), 0);
        assert_eq!(sturm_count_i64(&cubic, 0, 100).unwrap(), 3);
    }

    #[test]
    fn sturm_counts_distinct_roots() {
        // (x-1)^2: one distinct root
        let p = CharPoly::from_i64(&[1, -2, 1]).unwrap();
        assert_eq!(sturm_count_i64(&p, 0, 2).unwrap(), 1);
        // root exactly at the right endpoint is included
        assert_eq!(sturm_count_i64(&p, 0, 1).unwrap(), 1);
        // root at the left endpoint is excluded
        assert_eq!(sturm_count_i64(&p, 1, 2).unwrap(), 0);
    }

    #[test]
    fn refine_root_values() {
        let p = CharPoly::from_i64(&[1, -5]).unwrap();
        let b = RootInterval::isolate_i64(&p, 4, 6).unwrap();
        assert_eq!(b.count, 1);
        let r = refine_root(&p, &b, 1e-12).unwrap();
        assert!((r - 5.0).abs() <= 1e-12);

        let p = CharPoly::from_i64(&[1, 0, -2]).unwrap();
        let b = RootInterval::isolate_i64(&p, 1, 2).unwrap();
        let r = refine_root(&p, &b, 1e-12).unwrap();
        assert!((r - std::f64::consts::SQRT_2).abs() <= 1e-11);

        let cubic = CharPoly::from_i64(&[1, -13, 50, -56]).unwrap();
        let wide = RootInterval::isolate_i64(&cubic, 0, 100).unwrap();
        assert!(matches!(
            refine_root(&cubic, &wide, 1e-9),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn poly_shift_and_product_helpers() {
        // p(x) = x^2 (constant-first [0,0,1]) -> p(x-1) = x^2 - 2x + 1
        let p = big(&[0, 0, 1]);
        assert_eq!(poly_shift_down_one(&p), big(&[1, -2, 1]));
        let a = big(&[1, 1]); // 1 + x
        let b = big(&[-1, 1]); // -1 + x
        assert_eq!(poly_mul(&a, &b), big(&[-1, 0, 1]));
        assert_eq!(poly_sub(&a, &b), big(&[2, 0]));
    }

    #[test]
    fn rank_of_singular_matrices() {
        let m: Vec<Vec<BigInt>> = vec![big(&[1, 2, 3]), big(&[2, 4, 6]), big(&[0, 0, 1])];
        assert_eq!(rank_bigint(&m), 2);
        let z: Vec<Vec<BigInt>> = vec![big(&[0, 0]), big(&[0, 0])];
        assert_eq!(rank_bigint(&z), 0);
    }
}
