//! Exact real-root certification over the rationals: square-free
//! decomposition, Sturm chains, root isolation and the interlacing decision.
//!
//! No floating point anywhere. Root comparisons are decided by interval
//! refinement plus gcd-based equality, so answers are exact for any input
//! degree the caller is willing to wait for.

use super::Polynomial;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type Rat = BigRational;

/// A dense univariate polynomial with exact rational coefficients.
/// Only used inside Sturm chains and root isolation; everything user-facing
/// stays in [`Polynomial`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPolynomial {
    coeffs: Vec<Rat>,
}

impl RatPolynomial {
    fn normalized(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RatPolynomial { coeffs: Vec::new() }
    }

    pub fn from_int(p: &Polynomial) -> Self {
        RatPolynomial {
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| Rat::from_integer(c.clone()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn leading(&self) -> &Rat {
        self.coeffs.last().expect("leading coeff of zero polynomial")
    }

    pub fn derivative(&self) -> RatPolynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
            .collect();
        RatPolynomial::normalized(coeffs)
    }

    /// Euclidean division: self = q * div + r with deg r < deg div.
    pub fn div_rem(&self, div: &RatPolynomial) -> (RatPolynomial, RatPolynomial) {
        assert!(!div.is_zero(), "division by the zero polynomial");
        let dd = div.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (RatPolynomial::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        while rem.len() >= dd + 1 {
            let c = rem.last().unwrap() / div.leading();
            let k = rem.len() - 1 - dd;
            if !c.is_zero() {
                for (i, dc) in div.coeffs.iter().enumerate() {
                    let v = &c * dc;
                    rem[k + i] -= v;
                }
                quot[k] = c;
            }
            // The leading entry is now exactly zero.
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
            if rem.len() < dd + 1 {
                break;
            }
        }
        (
            RatPolynomial::normalized(quot),
            RatPolynomial { coeffs: rem },
        )
    }

    pub fn rem(&self, div: &RatPolynomial) -> RatPolynomial {
        self.div_rem(div).1
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Scale by a positive rational to reach the primitive integer form.
    /// Signs of all coefficients are preserved, which is what the Sturm
    /// machinery needs.
    pub fn primitive_int(&self) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        Polynomial::from_coeffs(ints.into_iter().map(|c| c / &content).collect())
    }
}

/// Primitive part with the sign of the input preserved.
fn primitive_part(p: &Polynomial) -> Polynomial {
    RatPolynomial::from_int(p).primitive_int()
}

/// Polynomial gcd, returned primitive with positive leading coefficient.
pub fn poly_gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut x = RatPolynomial::from_int(a);
    let mut y = RatPolynomial::from_int(b);
    while !y.is_zero() {
        let r = x.rem(&y);
        x = y;
        y = r;
    }
    let mut g = x.primitive_int();
    if g.leading_coeff().map_or(false, |c| c.is_negative()) {
        g = -&g;
    }
    g
}

/// Exact division of integer polynomials; panics if the division is inexact
/// or the quotient is not integral.
fn div_exact(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let (q, r) = RatPolynomial::from_int(a).div_rem(&RatPolynomial::from_int(b));
    assert!(r.is_zero(), "inexact polynomial division");
    let coeffs = q
        .coeffs
        .iter()
        .map(|c| {
            assert!(c.is_integer(), "non-integral exact quotient");
            c.to_integer()
        })
        .collect();
    Polynomial::from_coeffs(coeffs)
}

// Gcd over the rationals; the representative is whatever Euclid leaves,
// which is enough because Yun tolerates unit factors.
fn rat_gcd(a: &RatPolynomial, b: &RatPolynomial) -> RatPolynomial {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let r = x.rem(&y);
        x = y;
        y = r;
    }
    x
}

fn rat_sub(a: &RatPolynomial, b: &RatPolynomial) -> RatPolynomial {
    let n = a.coeffs.len().max(b.coeffs.len());
    let get = |p: &RatPolynomial, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
    RatPolynomial::normalized((0..n).map(|i| get(a, i) - get(b, i)).collect())
}

/// Yun square-free decomposition: p = unit * prod f_i^i with the f_i
/// squarefree, pairwise coprime, primitive with positive leading
/// coefficient. Only factors of positive degree are returned, paired with
/// their multiplicity i. The running values stay exact rationals; any
/// per-step renormalization would corrupt the recurrence.
pub fn squarefree_decomposition(p: &Polynomial) -> Vec<(Polynomial, usize)> {
    let mut out = Vec::new();
    if p.degree().map_or(true, |d| d == 0) {
        return out;
    }
    let p = RatPolynomial::from_int(p);
    let dp = p.derivative();
    let g = rat_gcd(&p, &dp);
    let mut b = exact_quot(&p, &g);
    let c = exact_quot(&dp, &g);
    let mut d = rat_sub(&c, &b.derivative());
    let mut i = 1usize;
    loop {
        let a = rat_gcd(&b, &d);
        if a.degree().map_or(false, |deg| deg >= 1) {
            out.push((normalize_lead(&a.primitive_int()), i));
        }
        b = exact_quot(&b, &a);
        if b.degree().map_or(true, |deg| deg == 0) {
            break;
        }
        let c = exact_quot(&d, &a);
        d = rat_sub(&c, &b.derivative());
        i += 1;
    }
    out
}

fn normalize_lead(p: &Polynomial) -> Polynomial {
    let mut q = primitive_part(p);
    if q.leading_coeff().map_or(false, |c| c.is_negative()) {
        q = -&q;
    }
    q
}

fn exact_quot(a: &RatPolynomial, b: &RatPolynomial) -> RatPolynomial {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "inexact division in squarefree decomposition");
    q
}

/// Product of the distinct irreducible factors: the radical of p.
pub fn squarefree_part(p: &Polynomial) -> Polynomial {
    let mut acc = Polynomial::one();
    for (f, _) in squarefree_decomposition(p) {
        acc = &acc * &f;
    }
    acc
}

/// Sign of p at the rational point x, evaluated without leaving the
/// integers: sign(sum a_i num^i den^(d-i)).
pub fn sign_at(p: &Polynomial, x: &Rat) -> i8 {
    if p.is_zero() {
        return 0;
    }
    let num = x.numer();
    let den = x.denom();
    let d = p.degree().unwrap();
    let mut acc = p.coeff(d);
    let mut dpow = BigInt::one();
    for i in (0..d).rev() {
        dpow *= den;
        acc = acc * num + p.coeff(i) * &dpow;
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Strict upper bound on the absolute value of every real root (Cauchy).
pub fn root_bound(p: &Polynomial) -> Rat {
    let d = p.degree().expect("root bound of zero polynomial");
    let lead = p.coeff(d).abs();
    let mut m = BigInt::zero();
    for i in 0..d {
        let a = p.coeff(i).abs();
        if a > m {
            m = a;
        }
    }
    Rat::one() + Rat::new(m, lead)
}

/// Sturm chain stored as primitive integer polynomials; the positive-content
/// normalization keeps every sign identical to the rational chain.
pub struct SturmChain {
    polys: Vec<Polynomial>,
}

impl SturmChain {
    pub fn new(p: &Polynomial) -> SturmChain {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let mut polys = vec![primitive_part(p)];
        let dp = p.derivative();
        if !dp.is_zero() {
            polys.push(primitive_part(&dp));
        }
        while polys.len() >= 2 {
            let n = polys.len();
            let r = RatPolynomial::from_int(&polys[n - 2])
                .rem(&RatPolynomial::from_int(&polys[n - 1]));
            if r.is_zero() {
                break;
            }
            polys.push(-&r.primitive_int());
        }
        SturmChain { polys }
    }

    fn variations_at(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.polys {
            let s = sign_at(p, x);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in the open interval (lo, hi).
    /// Requires p(lo) != 0 and p(hi) != 0.
    pub fn count_in(&self, lo: &Rat, hi: &Rat) -> usize {
        debug_assert!(lo < hi);
        debug_assert!(sign_at(&self.polys[0], lo) != 0);
        debug_assert!(sign_at(&self.polys[0], hi) != 0);
        self.variations_at(lo) - self.variations_at(hi)
    }
}

/// Number of distinct real roots of a nonzero polynomial.
pub fn sturm_real_root_count(p: &Polynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::Domain(
            "root counting needs a nonzero polynomial".into(),
        ));
    }
    let sf = squarefree_part(p);
    if sf.degree().map_or(true, |d| d == 0) {
        return Ok(0);
    }
    let b = root_bound(&sf);
    let chain = SturmChain::new(&sf);
    Ok(chain.count_in(&-&b, &b))
}

/// True iff all roots of p are real (multiplicities counted).
pub fn is_real_rooted(p: &Polynomial) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::Domain(
            "real-rootedness of the zero polynomial is undefined".into(),
        ));
    }
    let mut total = 0usize;
    for (f, mult) in squarefree_decomposition(p) {
        total += mult * sturm_real_root_count(&f)?;
    }
    Ok(total == p.degree().unwrap())
}

/// The simplest rational strictly between lo and hi: minimal denominator,
/// and among those the one closest to zero. Found by walking the
/// Stern-Brocot tree, so repeated splitting at this point reaches any
/// rational root of desk-scale height exactly.
pub fn simplest_rational_between(lo: &Rat, hi: &Rat) -> Rat {
    assert!(lo < hi);
    if lo.is_negative() && hi.is_positive() {
        return Rat::zero();
    }
    if !hi.is_positive() {
        return -simplest_nonneg(&-hi, &-lo);
    }
    simplest_nonneg(lo, hi)
}

// Simplest rational in (lo, hi) for 0 <= lo < hi.
fn simplest_nonneg(lo: &Rat, hi: &Rat) -> Rat {
    let fl = lo.floor();
    let next_int = &fl + Rat::one();
    if next_int < *hi {
        return next_int;
    }
    if lo == &fl {
        // (n, hi) with hi <= n + 1: answer n + 1/k for the smallest valid k.
        let k = (Rat::one() / (hi - lo)).floor() + Rat::one();
        return lo + Rat::one() / k;
    }
    let inner = simplest_nonneg(&(Rat::one() / (hi - &fl)), &(Rat::one() / (lo - &fl)));
    fl + Rat::one() / inner
}

const EXACT_ROOT_POLISH_STEPS: usize = 64;

/// Isolating intervals for a squarefree polynomial of degree >= 1.
/// Each output is either an exact root (lo == hi) or an open interval with
/// non-root endpoints containing exactly one root.
fn isolate_squarefree(p: &Polynomial) -> Vec<(Rat, Rat)> {
    let chain = SturmChain::new(p);
    let b = root_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-&b, b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.count_in(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push(polish(p, lo, hi));
            continue;
        }
        let mid = simplest_rational_between(&lo, &hi);
        if sign_at(p, &mid) == 0 {
            // Exact root at the split point: carve out a punctured
            // neighbourhood with non-root endpoints around it.
            let mut h = (&hi - &lo) / Rat::from_integer(BigInt::from(4));
            loop {
                let l2 = (&mid - &h).max(lo.clone());
                let h2 = (&mid + &h).min(hi.clone());
                if sign_at(p, &l2) != 0
                    && sign_at(p, &h2) != 0
                    && chain.count_in(&l2, &h2) == 1
                {
                    out.push((mid.clone(), mid.clone()));
                    if lo < l2 {
                        stack.push((lo, l2));
                    }
                    if h2 < hi {
                        stack.push((h2, hi));
                    }
                    break;
                }
                h /= Rat::from_integer(BigInt::from(2));
            }
        } else {
            stack.push((lo, mid.clone()));
            stack.push((mid, hi));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

// Shrink a single-root interval by sign bisection, discovering rational
// roots exactly when the Stern-Brocot split lands on them.
fn polish(p: &Polynomial, mut lo: Rat, mut hi: Rat) -> (Rat, Rat) {
    let slo = sign_at(p, &lo);
    debug_assert!(slo != 0 && sign_at(p, &hi) != 0 && slo != sign_at(p, &hi));
    for _ in 0..EXACT_ROOT_POLISH_STEPS {
        let mid = simplest_rational_between(&lo, &hi);
        let s = sign_at(p, &mid);
        if s == 0 {
            return (mid.clone(), mid);
        }
        if s == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

// Halve a refinable (non-point) interval while keeping its root inside.
fn halve(p: &Polynomial, lo: &Rat, hi: &Rat) -> (Rat, Rat) {
    let mid = simplest_rational_between(lo, hi);
    let s = sign_at(p, &mid);
    if s == 0 {
        return (mid.clone(), mid);
    }
    if s == sign_at(p, lo) {
        (mid, hi.clone())
    } else {
        (lo.clone(), mid)
    }
}

/// One isolated real root: an exact rational point when `lo == hi`,
/// otherwise an open interval with non-root endpoints.
#[derive(Clone, Debug)]
pub struct RootInterval {
    pub lo: Rat,
    pub hi: Rat,
    pub multiplicity: usize,
}

impl RootInterval {
    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    fn disjoint_from(&self, other: &RootInterval) -> bool {
        match (self.is_point(), other.is_point()) {
            (true, true) => self.lo != other.lo,
            (true, false) => self.lo <= other.lo || self.lo >= other.hi,
            (false, true) => other.lo <= self.lo || other.lo >= self.hi,
            (false, false) => self.hi <= other.lo || other.hi <= self.lo,
        }
    }
}

/// All real roots of a real-rooted polynomial as pairwise disjoint
/// intervals with multiplicities, ordered from smallest to largest root.
#[derive(Clone, Debug)]
pub struct RootIsolation {
    entries: Vec<RootInterval>,
    // Squarefree factor of every entry, for on-demand refinement.
    factors: Vec<Polynomial>,
}

impl RootIsolation {
    pub fn entries(&self) -> &[RootInterval] {
        &self.entries
    }

    pub fn multiplicity_sum(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// Halve every interval `steps` times (points stay put). Values are
    /// immutable; refinement returns a new isolation.
    pub fn refined(&self, steps: usize) -> RootIsolation {
        let mut out = self.clone();
        for _ in 0..steps {
            for (e, f) in out.entries.iter_mut().zip(out.factors.iter()) {
                if !e.is_point() {
                    let (lo, hi) = halve(f, &e.lo, &e.hi);
                    e.lo = lo;
                    e.hi = hi;
                }
            }
        }
        out
    }
}

/// Isolate the real roots of a real-rooted polynomial.
pub fn isolate_roots(p: &Polynomial) -> Result<RootIsolation> {
    if !is_real_rooted(p)? {
        return Err(Error::Domain(
            "root isolation requires a real-rooted polynomial".into(),
        ));
    }
    let mut entries = Vec::new();
    let mut factors = Vec::new();
    for (f, mult) in squarefree_decomposition(p) {
        for (lo, hi) in isolate_squarefree(&f) {
            entries.push(RootInterval {
                lo,
                hi,
                multiplicity: mult,
            });
            factors.push(f.clone());
        }
    }
    make_disjoint(&mut entries, &factors);
    let mut order: Vec<usize> = (0..entries.len()).collect();
    order.sort_by(|&i, &j| entries[i].lo.cmp(&entries[j].lo));
    let entries = order.iter().map(|&i| entries[i].clone()).collect();
    let factors = order.iter().map(|&i| factors[i].clone()).collect();
    Ok(RootIsolation { entries, factors })
}

// Refine until all intervals are pairwise disjoint. Terminates because the
// underlying roots are pairwise distinct.
fn make_disjoint(entries: &mut [RootInterval], factors: &[Polynomial]) {
    loop {
        let mut clash = None;
        'outer: for i in 0..entries.len() {
            for j in (i + 1)..entries.len() {
                if !entries[i].disjoint_from(&entries[j]) {
                    clash = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = clash else { break };
        for k in [i, j] {
            if !entries[k].is_point() {
                let (lo, hi) = halve(&factors[k], &entries[k].lo, &entries[k].hi);
                entries[k].lo = lo;
                entries[k].hi = hi;
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum RootOwner {
    OnlyF,
    OnlyG,
    Common,
}

/// Decide whether g interlaces f (g "precedes" f): with roots of f being
/// a_1 >= a_2 >= ... and roots of g being b_1 >= b_2 >= ..., multiplicities
/// expanded, the merged sequence must satisfy
/// a_1 >= b_1 >= a_2 >= b_2 >= ... .
///
/// Both polynomials must be real-rooted (domain error otherwise). Degree
/// gaps larger than one make the relation false by definition; constants
/// interlace vacuously.
pub fn interlaces(g: &Polynomial, f: &Polynomial) -> Result<bool> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::Domain(
            "interlacing is undefined for the zero polynomial".into(),
        ));
    }
    if !is_real_rooted(f)? || !is_real_rooted(g)? {
        return Err(Error::Domain(
            "interlacing requires real-rooted polynomials".into(),
        ));
    }
    let n = f.degree().unwrap();
    let m = g.degree().unwrap();
    if n < m || n > m + 1 {
        return Ok(false);
    }
    if m == 0 {
        return Ok(true);
    }

    let sf_f = squarefree_part(f);
    let sf_g = squarefree_part(g);
    let common = poly_gcd(&sf_f, &sf_g);
    let only_f = div_exact(&sf_f, &common);
    let only_g = div_exact(&sf_g, &common);

    let f_factors = squarefree_decomposition(f);
    let g_factors = squarefree_decomposition(g);

    let mut entries: Vec<RootInterval> = Vec::new();
    let mut factors: Vec<Polynomial> = Vec::new();
    let mut owners: Vec<RootOwner> = Vec::new();
    for (poly, owner) in [
        (&only_f, RootOwner::OnlyF),
        (&only_g, RootOwner::OnlyG),
        (&common, RootOwner::Common),
    ] {
        if poly.degree().map_or(true, |d| d == 0) {
            continue;
        }
        for (lo, hi) in isolate_squarefree(poly) {
            entries.push(RootInterval {
                lo,
                hi,
                multiplicity: 0,
            });
            factors.push(poly.clone());
            owners.push(owner);
        }
    }
    make_disjoint(&mut entries, &factors);

    let mut order: Vec<usize> = (0..entries.len()).collect();
    order.sort_by(|&i, &j| entries[i].lo.cmp(&entries[j].lo));

    // Expand multiplicities into rank sequences, largest root first.
    let mut f_ranks: Vec<usize> = Vec::new();
    let mut g_ranks: Vec<usize> = Vec::new();
    for (rank, &idx) in order.iter().enumerate().rev() {
        let entry = &entries[idx];
        if owners[idx] != RootOwner::OnlyG {
            let mult = multiplicity_in(&f_factors, entry);
            f_ranks.extend(std::iter::repeat(rank).take(mult));
        }
        if owners[idx] != RootOwner::OnlyF {
            let mult = multiplicity_in(&g_factors, entry);
            g_ranks.extend(std::iter::repeat(rank).take(mult));
        }
    }
    debug_assert_eq!(f_ranks.len(), n);
    debug_assert_eq!(g_ranks.len(), m);

    // Ranks descend; equal rank means the exact same algebraic number.
    for i in 0..m {
        if f_ranks[i] < g_ranks[i] {
            return Ok(false);
        }
        if i + 1 < n && g_ranks[i] < f_ranks[i + 1] {
            return Ok(false);
        }
    }
    Ok(true)
}

// Multiplicity of the (pairwise isolated) root in the Yun decomposition.
// After global disjointness the interval contains no other root of any
// involved polynomial, so at most one factor can claim it.
fn multiplicity_in(factors: &[(Polynomial, usize)], entry: &RootInterval) -> usize {
    for (f, mult) in factors {
        if entry.is_point() {
            if sign_at(f, &entry.lo) == 0 {
                return *mult;
            }
        } else {
            let chain = SturmChain::new(f);
            if chain.count_in(&entry.lo, &entry.hi) > 0 {
                return *mult;
            }
        }
    }
    0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_i64s(cs)
    }

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        // t (1+t)^2: factors t (mult 1) and 1+t (mult 2).
        let q = &p(&[0, 1]) * &(&p(&[1, 1]) * &p(&[1, 1]));
        let dec = squarefree_decomposition(&q);
        assert_eq!(dec, vec![(p(&[0, 1]), 1), (p(&[1, 1]), 2)]);
        // (1+t)^3 alone.
        let cube = &(&p(&[1, 1]) * &p(&[1, 1])) * &p(&[1, 1]);
        assert_eq!(squarefree_decomposition(&cube), vec![(p(&[1, 1]), 3)]);
    }

    #[test]
    fn gcd_of_shifted_powers() {
        let a = &p(&[1, 1]) * &p(&[2, 1]);
        let b = &p(&[1, 1]) * &p(&[3, 1]);
        assert_eq!(poly_gcd(&a, &b), p(&[1, 1]));
    }

    #[test]
    fn sturm_counts_distinct_roots() {
        // 1 + 5t + 5t^2 + t^3 = (1+t)(t^2+4t+1): roots -1, -2 +- sqrt(3).
        assert_eq!(sturm_real_root_count(&p(&[1, 5, 5, 1])).unwrap(), 3);
        assert_eq!(sturm_real_root_count(&p(&[1, 0, 1])).unwrap(), 0);
        let cube = &(&p(&[1, 1]) * &p(&[1, 1])) * &p(&[1, 1]);
        assert_eq!(sturm_real_root_count(&cube).unwrap(), 1);
        assert!(is_real_rooted(&cube).unwrap());
        assert!(!is_real_rooted(&p(&[1, 0, 1])).unwrap());
        assert!(!is_real_rooted(&p(&[1, 0, 0, 1, 1])).unwrap());
    }

    #[test]
    fn sturm_count_respects_interval_bounds() {
        let chain = SturmChain::new(&p(&[1, 1]));
        assert_eq!(chain.count_in(&rat(-2, 1), &rat(0, 1)), 1);
        assert_eq!(chain.count_in(&rat(-1, 2), &rat(3, 1)), 0);
    }

    #[test]
    fn simplest_rational_finds_low_denominators() {
        assert_eq!(simplest_rational_between(&rat(-3, 1), &rat(3, 1)), rat(0, 1));
        assert_eq!(simplest_rational_between(&rat(1, 3), &rat(1, 2)), rat(2, 5));
        assert_eq!(simplest_rational_between(&rat(3, 1), &rat(9, 2)), rat(4, 1));
        assert_eq!(simplest_rational_between(&rat(-5, 2), &rat(-1, 1)), rat(-2, 1));
        assert_eq!(simplest_rational_between(&rat(2, 1), &rat(5, 2)), rat(7, 3));
        let v = simplest_rational_between(&rat(7, 9), &rat(8, 9));
        assert!(rat(7, 9) < v && v < rat(8, 9));
    }

    #[test]
    fn isolate_finds_exact_rational_roots() {
        // (1+t)^2: single point -1 with multiplicity 2.
        let sq = &p(&[1, 1]) * &p(&[1, 1]);
        let iso = isolate_roots(&sq).unwrap();
        assert_eq!(iso.entries().len(), 1);
        let e = &iso.entries()[0];
        assert!(e.is_point());
        assert_eq!(e.lo, rat(-1, 1));
        assert_eq!(e.multiplicity, 2);

        // t(t+1): points 0 and -1.
        let iso = isolate_roots(&p(&[0, 1, 1])).unwrap();
        let pts: Vec<_> = iso.entries().iter().map(|e| e.lo.clone()).collect();
        assert!(iso.entries().iter().all(|e| e.is_point()));
        assert_eq!(pts, vec![rat(-1, 1), rat(0, 1)]);
    }

    #[test]
    fn isolate_brackets_quadratic_surds() {
        // 1 + 4t + t^2: roots -2 -+ sqrt(3), approx -3.732 and -0.268.
        let iso = isolate_roots(&p(&[1, 4, 1])).unwrap();
        assert_eq!(iso.entries().len(), 2);
        assert_eq!(iso.multiplicity_sum(), 2);
        let e0 = &iso.entries()[0];
        let e1 = &iso.entries()[1];
        assert!(e0.lo < rat(-37, 10) && rat(-38, 10) < e0.hi);
        assert!(e1.lo < rat(-26, 100) && rat(-28, 100) < e1.hi);
        // Refinement shrinks the brackets and preserves containment.
        let fine = iso.refined(6);
        for (a, b) in iso.entries().iter().zip(fine.entries()) {
            assert!(a.lo <= b.lo && b.hi <= a.hi);
        }
    }

    #[test]
    fn isolate_rejects_non_real_rooted() {
        assert!(matches!(
            isolate_roots(&p(&[1, 0, 1])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn interlacing_examples() {
        // (1+t) interlaces (1+t)^2: -1 >= -1 >= -1.
        let lin = p(&[1, 1]);
        let sq = &lin * &lin;
        assert!(interlaces(&lin, &sq).unwrap());
        // t+2 does not interlace t(t+1): -2 < -1 < 0 breaks the start.
        assert!(!interlaces(&p(&[2, 1]), &p(&[0, 1, 1])).unwrap());
        // Degree gap of two is false by definition.
        let cube = &sq * &lin;
        assert!(!interlaces(&lin, &cube).unwrap());
        // Constants interlace vacuously.
        assert!(interlaces(&Polynomial::one(), &Polynomial::one()).unwrap());
        assert!(interlaces(&Polynomial::one(), &lin).unwrap());
        assert!(!interlaces(&lin, &Polynomial::one()).unwrap());
    }

    #[test]
    fn interlacing_rejects_non_real_rooted() {
        assert!(matches!(
            interlaces(&p(&[1, 0, 1]), &p(&[1, 1])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn derivative_interlaces_products_of_linear_factors() {
        // f = (t+1)(t+2)(t+4)(t+4): f' must interlace f.
        let f = &(&p(&[1, 1]) * &p(&[2, 1])) * &(&p(&[4, 1]) * &p(&[4, 1]));
        assert!(interlaces(&f.derivative(), &f).unwrap());
    }
}
