//! Per-root twist multipliers: given the L-polynomials of an abelian
//! variety and of one of its twists of order dividing t_order, find a
//! matching of normalized Weil numbers w_i = lambda_i z_i where every
//! lambda_i is a t_order-th root of unity, and report the multiplier
//! orders and their lcm.
//!
//! Both root multisets are recovered exactly: the multiset of root orders
//! is known from the supersingularity analysis, each order-o conjugate
//! pair is one of phi(o)/2 possible primitive pairs, and the unique
//! combination whose expanded product reproduces the characteristic
//! polynomial is found by exhaustive comparison in Z[x]/Phi_M(x).  Square
//! roots of the field size live in the same ring: rational for even r,
//! p^{(r-1)/2} times a Gauss sum for odd r.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::TwistError;
use crate::intpoly::{cyclotomic, reverse_poly, split_prime_power, weil_data_from_lpoly, IntPoly};

#[derive(Debug, Clone, Serialize)]
pub struct TwistRecord {
    /// Orders of the per-root multipliers, ascending.
    pub lambda_orders: Vec<u64>,
    /// lcm of the multiplier orders; divides the twist order.
    pub t: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

// --- arithmetic in Z[x]/Phi_M -------------------------------------------

struct CycRing {
    m: u64,
    /// Coefficients of the monic Phi_M, ascending.
    modulus: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq)]
struct CycElt {
    c: Vec<BigInt>,
}

impl CycRing {
    fn new(m: u64) -> Self {
        let phi = cyclotomic(m);
        let deg = phi.deg().unwrap();
        let modulus: Vec<BigInt> = (0..=deg).map(|k| phi.coeff(k)).collect();
        CycRing { m, modulus }
    }

    fn deg(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut v: Vec<BigInt>) -> CycElt {
        let d = self.deg();
        for k in (d..v.len()).rev() {
            let c = std::mem::take(&mut v[k]);
            if c.is_zero() {
                continue;
            }
            for (j, mj) in self.modulus[..d].iter().enumerate() {
                let adj = &v[k - d + j] - &c * mj;
                v[k - d + j] = adj;
            }
        }
        v.truncate(d);
        v.resize(d, BigInt::zero());
        CycElt { c: v }
    }

    fn zero(&self) -> CycElt {
        CycElt { c: vec![BigInt::zero(); self.deg()] }
    }

    fn from_int(&self, n: BigInt) -> CycElt {
        let mut z = self.zero();
        z.c[0] = n;
        z
    }

    fn zeta(&self, k: u64) -> CycElt {
        let k = (k % self.m) as usize;
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::one();
        self.reduce(v)
    }

    fn add(&self, a: &CycElt, b: &CycElt) -> CycElt {
        CycElt { c: a.c.iter().zip(&b.c).map(|(x, y)| x + y).collect() }
    }

    fn sub(&self, a: &CycElt, b: &CycElt) -> CycElt {
        CycElt { c: a.c.iter().zip(&b.c).map(|(x, y)| x - y).collect() }
    }

    fn mul(&self, a: &CycElt, b: &CycElt) -> CycElt {
        let mut v = vec![BigInt::zero(); 2 * self.deg()];
        for (i, x) in a.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.c.iter().enumerate() {
                v[i + j] += x * y;
            }
        }
        self.reduce(v)
    }

    /// sqrt(p^r): rational for even r, Gauss-sum expression for odd r.
    fn sqrt_q(&self, p: u64, r: u32) -> CycElt {
        let half = self.from_int(BigInt::from(p).pow(r / 2));
        if r % 2 == 0 {
            return half;
        }
        let root_p = if p == 2 {
            // sqrt(2) = zeta_8 + zeta_8^{-1}
            assert_eq!(self.m % 8, 0);
            self.add(&self.zeta(self.m / 8), &self.zeta(self.m - self.m / 8))
        } else {
            assert_eq!(self.m % p, 0);
            let mut g = self.zero();
            for a in 1..p {
                let term = self.zeta(a * self.m / p);
                if legendre(a, p) == 1 {
                    g = self.add(&g, &term);
                } else {
                    g = self.sub(&g, &term);
                }
            }
            if p % 4 == 1 {
                g
            } else {
                // the Gauss sum is i*sqrt(p); divide by i
                assert_eq!(self.m % 4, 0);
                self.mul(&g, &self.zeta(3 * self.m / 4))
            }
        };
        self.mul(&half, &root_p)
    }
}

fn legendre(a: u64, p: u64) -> i8 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    if result == 1 { 1 } else { -1 }
}

// --- exponent recovery ----------------------------------------------------

/// All multisets of given size drawn from options (nondecreasing picks).
fn multichoose(options: &[u64], size: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(options: &[u64], size: usize, start: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..options.len() {
            cur.push(options[i]);
            rec(options, size, i, cur, out);
            cur.pop();
        }
    }
    rec(options, size, 0, &mut cur, &mut out);
    out
}

/// Exponents mod m of the normalized roots of a supersingular monic
/// charpoly: the unique conjugation-closed multiset consistent with the
/// root orders whose expanded product matches the polynomial.
fn root_exponents(
    ring: &CycRing,
    charpoly: &IntPoly,
    orders: &[u64],
    p: u64,
    r: u32,
) -> Option<Vec<u64>> {
    let m = ring.m;
    let sq = ring.sqrt_q(p, r);
    // fixed exponents for real roots, pair-class options for the rest
    let mut fixed: Vec<u64> = Vec::new();
    let mut pair_groups: Vec<(u64, usize)> = Vec::new();
    let distinct: BTreeSet<u64> = orders.iter().copied().collect();
    for &o in &distinct {
        let count = orders.iter().filter(|&&x| x == o).count();
        match o {
            1 => fixed.extend(std::iter::repeat(0).take(count)),
            2 => fixed.extend(std::iter::repeat(m / 2).take(count)),
            _ => {
                assert_eq!(count % 2, 0, "complex roots pair up");
                pair_groups.push((o, count / 2));
            }
        }
    }
    let mut group_choices: Vec<Vec<Vec<u64>>> = Vec::new();
    for &(o, pairs) in &pair_groups {
        let options: Vec<u64> = (1..=o / 2).filter(|&u| gcd(u, o) == 1).collect();
        group_choices.push(multichoose(&options, pairs));
    }
    // walk the cartesian product of the per-order choices
    let mut idx = vec![0usize; group_choices.len()];
    loop {
        let mut exps = fixed.clone();
        for (gi, &(o, _)) in pair_groups.iter().enumerate() {
            for &u in &group_choices[gi][idx[gi]] {
                exps.push(u * (m / o));
                exps.push(m - u * (m / o));
            }
        }
        // expand prod (T - sqrt(q) zeta^e) and compare
        let mut coeffs = vec![ring.from_int(BigInt::one())];
        for &e in &exps {
            let root = ring.mul(&sq, &ring.zeta(e));
            let mut next = vec![ring.zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] = ring.add(&next[i + 1], c);
                next[i] = ring.sub(&next[i], &ring.mul(&root, c));
            }
            coeffs = next;
        }
        let matches = (0..coeffs.len()).all(|k| {
            let want = ring.from_int(charpoly.coeff(k));
            coeffs[k] == want
        });
        if matches {
            exps.sort_unstable();
            return Some(exps);
        }
        // advance the product index
        let mut gi = 0;
        loop {
            if gi == idx.len() {
                return None;
            }
            idx[gi] += 1;
            if idx[gi] < group_choices[gi].len() {
                break;
            }
            idx[gi] = 0;
            gi += 1;
        }
    }
}

/// Unique permutations of a sorted multiset, visited via recursion.
fn for_each_matching<F: FnMut(&[u64]) -> bool>(pool: &mut Vec<u64>, picked: &mut Vec<u64>, f: &mut F) -> bool {
    if pool.is_empty() {
        return f(picked);
    }
    let mut last: Option<u64> = None;
    for i in 0..pool.len() {
        if last == Some(pool[i]) {
            continue;
        }
        last = Some(pool[i]);
        let v = pool.remove(i);
        picked.push(v);
        let stop = for_each_matching(pool, picked, f);
        picked.pop();
        pool.insert(i, v);
        if stop {
            return true;
        }
    }
    false
}

/// Orders of the per-root multipliers lambda_i = w_i / z_i for the best
/// valid matching of twisted roots to base roots.
pub fn lambda_multiset(
    l: &IntPoly,
    l_twist: &IntPoly,
    q: u64,
    t_order: u64,
) -> Result<TwistRecord, TwistError> {
    assert!(t_order >= 1);
    let deg = l.deg().expect("nonzero L-polynomial");
    assert_eq!(Some(deg), l_twist.deg(), "a twist preserves the dimension");
    assert_eq!(deg % 2, 0);
    let g = (deg / 2) as u32;
    let (p, r) = split_prime_power(q);

    let wd = weil_data_from_lpoly(l, q, g, None);
    let wd_t = weil_data_from_lpoly(l_twist, q, g, None);
    let orders = wd.nwn_orders.expect("base variety is supersingular");
    let orders_t = wd_t.nwn_orders.expect("twist is supersingular");

    let mut m = t_order;
    for &o in orders.iter().chain(orders_t.iter()) {
        m = lcm(m, o);
    }
    if r % 2 == 1 {
        // make room for sqrt(p)
        m = match p {
            2 => lcm(m, 8),
            _ if p % 4 == 1 => lcm(m, p),
            _ => lcm(m, 4 * p),
        };
    }
    let ring = CycRing::new(m);

    let exps = root_exponents(&ring, &reverse_poly(l, deg), &orders, p, r)
        .expect("root orders determine a consistent exponent multiset");
    let exps_t = root_exponents(&ring, &reverse_poly(l_twist, deg), &orders_t, p, r)
        .expect("root orders determine a consistent exponent multiset");

    // search matchings for multipliers of order dividing t_order
    let mut best: Option<(Vec<u64>, u64)> = None;
    let mut pool = exps_t.clone();
    let mut picked = Vec::new();
    for_each_matching(&mut pool, &mut picked, &mut |w: &[u64]| {
        let mut lambda_orders: Vec<u64> = Vec::with_capacity(w.len());
        for (wi, zi) in w.iter().zip(&exps) {
            let diff = (wi + m - zi) % m;
            let o = m / gcd(m, diff);
            if t_order % o != 0 {
                return false;
            }
            lambda_orders.push(o);
        }
        lambda_orders.sort_unstable();
        let t = lambda_orders.iter().fold(1, |acc, &o| lcm(acc, o));
        let cand = (lambda_orders, t);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
        false
    });
    let (lambda_orders, t) = best.ok_or(TwistError::NoValidMatching)?;
    assert_eq!(t_order % t, 0, "multiplier lcm divides the twist order");
    Ok(TwistRecord { lambda_orders, t })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn trivial_twist() {
        // supersingular genus-2 example over F_2: (T^2+2)-shape L-polys
        let l = lp(&[1, 0, 2]);
        let rec = lambda_multiset(&l, &l, 2, 1).unwrap();
        assert_eq!(rec.lambda_orders, vec![1, 1]);
        assert_eq!(rec.t, 1);
        // larger allowed order still reports the trivial matching first
        let rec = lambda_multiset(&l, &l, 2, 4).unwrap();
        assert_eq!(rec.lambda_orders, vec![1, 1]);
        assert_eq!(rec.t, 1);
    }

    #[test]
    fn quadratic_twist_of_maximal() {
        // maximal vs minimal over F_9: roots -3 and 3, multiplier -1
        let max = lp(&[1, 6, 9]);
        let min = lp(&[1, -6, 9]);
        let rec = lambda_multiset(&max, &min, 9, 2).unwrap();
        assert_eq!(rec.lambda_orders, vec![2, 2]);
        assert_eq!(rec.t, 2);
    }

    #[test]
    fn no_matching_when_order_too_small() {
        let max = lp(&[1, 6, 9]);
        let min = lp(&[1, -6, 9]);
        assert!(matches!(
            lambda_multiset(&max, &min, 9, 3),
            Err(TwistError::NoValidMatching)
        ));
    }

    #[test]
    fn odd_field_quartic_multiplier() {
        // T^2 + 2 has roots sqrt(2) (+-i); its root-negated twin is itself,
        // but beta = 2 vs -2 over F_2 are order-4 twists of each other
        let plus = lp(&[1, -2, 2]);
        let minus = lp(&[1, 2, 2]);
        let rec = lambda_multiset(&plus, &minus, 2, 4).unwrap();
        assert_eq!(rec.t, 2);
        // zeta_8 to zeta_8^3 is multiplication by i or by -1 rootwise
        assert_eq!(rec.lambda_orders, vec![2, 2]);
    }

    #[test]
    fn gauss_sum_squares() {
        for p in [3u64, 5, 7, 11, 13] {
            let m = if p % 4 == 1 { 4 * p } else { 4 * p };
            let ring = CycRing::new(m);
            let s = ring.sqrt_q(p, 1);
            let sq = ring.mul(&s, &s);
            assert_eq!(sq, ring.from_int(BigInt::from(p)), "p = {p}");
        }
        let ring = CycRing::new(8);
        let s = ring.sqrt_q(2, 3);
        assert_eq!(ring.mul(&s, &s), ring.from_int(BigInt::from(8)));
    }
}
