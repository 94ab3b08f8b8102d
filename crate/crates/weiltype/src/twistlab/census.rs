//! Exhaustive census of supersingular elliptic curves over a small field:
//! every isomorphism class, grouped by trace, with the per-trace class
//! counts and parities.
//!
//! Models are deduplicated by exact canonicalization under the full
//! coordinate-change group.  In characteristic 2 the supersingular curves
//! are y^2 + a3 y = x^3 + a4 x + a6 with a3 != 0; the changes of variable
//! preserving that shape act by a3/u^3, then translate a4 by the image of
//! the additive map s -> a3 s + s^4, then a6 by the image of t -> a3 t +
//! t^2, so canonical representatives are coset minima and there are at
//! most a few dozen candidates regardless of q.  In characteristic 3 the
//! supersingular curves are y^2 = x^3 + a4 x + a6 with a4 != 0, acted on
//! by a4/u^4 and translation of a6 by the image of s -> s^3 + a4 s.  For
//! p >= 5 every model y^2 = x^3 + a4 x + a6 is scanned, the supersingular
//! ones kept, and (a4/u^4, a6/u^6) minimized directly.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::TwistError;
use crate::curves::{weil_data, CurveSpec, Family};
use crate::finitefield::{make_field, FieldDesc};
use crate::weilclass::elliptic_table;
use std::sync::Arc;

#[derive(Debug, Clone, Serialize)]
pub struct CensusGroup {
    pub beta: i64,
    pub class_count: usize,
    pub period: u64,
    pub parity: i8,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusRecord {
    pub p: u64,
    pub r: u32,
    pub q: u64,
    /// One entry per admissible trace, ascending.
    pub groups: Vec<CensusGroup>,
    pub total_classes: usize,
    pub plus_classes: usize,
    pub minus_classes: usize,
    /// plus_classes - minus_classes; for even r this equals the number of
    /// classes with trace 0, which is 1 - kronecker(-4, p).
    pub parity_excess: i64,
}

const MAX_Q: u64 = 1 << 10;

/// Coset representatives (the minimum of each coset) of an additive
/// subgroup given by its image list.
fn coset_minima(field: &FieldDesc, image: &[u64]) -> Vec<u64> {
    let mut covered = vec![false; field.q as usize];
    let mut reps = Vec::new();
    for v in field.elems() {
        if covered[v as usize] {
            continue;
        }
        reps.push(v);
        for &w in image {
            covered[field.add(v, w) as usize] = true;
        }
    }
    reps
}

fn sorted_dedup(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v.dedup();
    v
}

// --- characteristic 2 -------------------------------------------------

/// Canonical (a3, a4, a6) under x -> u^2 x + s^2, y -> u^3 y + u^2 s x + t.
fn canonicalize_p2(k: &FieldDesc, a3: u64, a4: u64, a6: u64) -> (u64, u64, u64) {
    let cube = |u: u64| k.mul(u, k.mul(u, u));
    let best_a3 = (1..k.q).map(|u| k.mul(a3, k.inv(cube(u)))).min().unwrap();
    let us: Vec<u64> = (1..k.q).filter(|&u| k.mul(a3, k.inv(cube(u))) == best_a3).collect();

    let mut best_a4 = u64::MAX;
    let mut pairs: Vec<(u64, u64)> = Vec::new();
    for &u in &us {
        let u4 = k.mul(cube(u), u);
        for s in k.elems() {
            let s2 = k.mul(s, s);
            let ls = k.add(k.mul(a3, s), k.mul(s2, s2));
            let cand = k.mul(k.add(a4, ls), k.inv(u4));
            if cand < best_a4 {
                best_a4 = cand;
                pairs.clear();
            }
            if cand == best_a4 {
                pairs.push((u, s));
            }
        }
    }

    let mut best_a6 = u64::MAX;
    for &(u, s) in &pairs {
        let u6 = k.mul(cube(u), cube(u));
        let s2 = k.mul(s, s);
        let s6 = k.mul(k.mul(s2, s2), s2);
        let shift = k.add(k.mul(s2, a4), s6);
        for t in k.elems() {
            let tt = k.add(k.mul(a3, t), k.mul(t, t));
            let cand = k.mul(k.add(k.add(a6, shift), tt), k.inv(u6));
            best_a6 = best_a6.min(cand);
        }
    }
    (best_a3, best_a4, best_a6)
}

fn classes_p2(k: &Arc<FieldDesc>) -> Vec<CurveSpec> {
    // enumerate candidate canonical triples: cube-class minima for a3,
    // then coset minima for a4 and a6 under the additive images
    let cube = |u: u64| k.mul(u, k.mul(u, u));
    let a3_reps = sorted_dedup(
        (1..k.q)
            .map(|a3| (1..k.q).map(|u| k.mul(a3, k.inv(cube(u)))).min().unwrap())
            .collect(),
    );
    let mut canon: Vec<(u64, u64, u64)> = Vec::new();
    for &a3 in &a3_reps {
        let im_l: Vec<u64> = sorted_dedup(
            k.elems().map(|s| {
                let s2 = k.mul(s, s);
                k.add(k.mul(a3, s), k.mul(s2, s2))
            }).collect(),
        );
        let im_t: Vec<u64> =
            sorted_dedup(k.elems().map(|t| k.add(k.mul(a3, t), k.mul(t, t))).collect());
        for a4 in coset_minima(k, &im_l) {
            for a6 in coset_minima(k, &im_t) {
                canon.push(canonicalize_p2(k, a3, a4, a6));
            }
        }
    }
    canon.sort_unstable();
    canon.dedup();
    canon
        .into_iter()
        .map(|(a3, a4, a6)| {
            CurveSpec::new(k.clone(), Family::WeierstrassE { a: [0, 0, a3, a4, a6] }).unwrap()
        })
        .collect()
}

// --- characteristic 3 -------------------------------------------------

/// Canonical (a4, a6) under x -> u^2 x + r, y -> u^3 y.
fn canonicalize_p3(k: &FieldDesc, a4: u64, a6: u64) -> (u64, u64) {
    let pow4 = |u: u64| {
        let u2 = k.mul(u, u);
        k.mul(u2, u2)
    };
    let best_a4 = (1..k.q).map(|u| k.mul(a4, k.inv(pow4(u)))).min().unwrap();
    let us: Vec<u64> = (1..k.q).filter(|&u| k.mul(a4, k.inv(pow4(u))) == best_a4).collect();
    let mut best_a6 = u64::MAX;
    for &u in &us {
        let u6 = k.mul(pow4(u), k.mul(u, u));
        for r in k.elems() {
            let m = k.add(k.mul(k.mul(r, r), r), k.mul(a4, r));
            let cand = k.mul(k.add(a6, m), k.inv(u6));
            best_a6 = best_a6.min(cand);
        }
    }
    (best_a4, best_a6)
}

fn classes_p3(k: &Arc<FieldDesc>) -> Vec<CurveSpec> {
    let pow4 = |u: u64| {
        let u2 = k.mul(u, u);
        k.mul(u2, u2)
    };
    let a4_reps = sorted_dedup(
        (1..k.q)
            .map(|a4| (1..k.q).map(|u| k.mul(a4, k.inv(pow4(u)))).min().unwrap())
            .collect(),
    );
    let mut canon: Vec<(u64, u64)> = Vec::new();
    for &a4 in &a4_reps {
        let im_m: Vec<u64> = sorted_dedup(
            k.elems()
                .map(|r| k.add(k.mul(k.mul(r, r), r), k.mul(a4, r)))
                .collect(),
        );
        for a6 in coset_minima(k, &im_m) {
            canon.push(canonicalize_p3(k, a4, a6));
        }
    }
    canon.sort_unstable();
    canon.dedup();
    canon
        .into_iter()
        .map(|(a4, a6)| {
            CurveSpec::new(k.clone(), Family::WeierstrassE { a: [0, 0, 0, a4, a6] }).unwrap()
        })
        .collect()
}

// --- p >= 5 -----------------------------------------------------------

fn classes_p5(k: &Arc<FieldDesc>) -> Vec<CurveSpec> {
    // quadratic-character table: chi[z] = #solutions of y^2 = z, minus 1
    let mut chi = vec![-1i64; k.q as usize];
    chi[0] = 0;
    for y in 1..k.q {
        chi[k.mul(y, y) as usize] = 1;
    }
    let p = k.p;
    let ss_models: Vec<(u64, u64)> = (0..k.q)
        .into_par_iter()
        .flat_map_iter(|a4| {
            let k = k.clone();
            let chi = &chi;
            (0..k.q).filter_map(move |a6| {
                // singular iff 4 a4^3 + 27 a6^2 = 0
                let disc = k.add(
                    k.mul(k.encode(&[4 % p]), k.mul(a4, k.mul(a4, a4))),
                    k.mul(k.encode(&[27 % p]), k.mul(a6, a6)),
                );
                if disc == 0 {
                    return None;
                }
                let mut sum = 0i64;
                for x in k.elems() {
                    let rhs = k.add(k.mul(x, k.mul(x, x)), k.add(k.mul(a4, x), a6));
                    sum += chi[rhs as usize];
                }
                // N = q + 1 + sum, beta = -sum; supersingular iff p | beta
                if (-sum).rem_euclid(p as i64) == 0 { Some((a4, a6)) } else { None }
            })
        })
        .collect();

    let mut canon: Vec<(u64, u64)> = ss_models
        .into_par_iter()
        .map(|(a4, a6)| {
            (1..k.q)
                .map(|u| {
                    let u2 = k.mul(u, u);
                    let u4 = k.mul(u2, u2);
                    let u6 = k.mul(u4, u2);
                    (k.mul(a4, k.inv(u4)), k.mul(a6, k.inv(u6)))
                })
                .min()
                .unwrap()
        })
        .collect();
    canon.sort_unstable();
    canon.dedup();
    canon
        .into_iter()
        .map(|(a4, a6)| {
            CurveSpec::new(k.clone(), Family::WeierstrassE { a: [0, 0, 0, a4, a6] }).unwrap()
        })
        .collect()
}

fn kronecker_minus4(p: u64) -> i64 {
    match p {
        2 => 0,
        _ if p % 4 == 1 => 1,
        _ => -1,
    }
}

/// Enumerates every supersingular elliptic curve over F_{p^r} up to
/// isomorphism and reports the per-trace class counts and parities.
pub fn census_elliptic(p: u64, r: u32) -> Result<CensusRecord, TwistError> {
    let q = (p as u128).pow(r);
    if q > MAX_Q as u128 {
        return Err(TwistError::FieldTooLarge { q: q.min(u64::MAX as u128) as u64 });
    }
    let field = make_field(p, r)?;
    let classes = match p {
        2 => classes_p2(&field),
        3 => classes_p3(&field),
        _ => classes_p5(&field),
    };

    let table = elliptic_table(p, r);
    let mut grouped: BTreeMap<i64, CensusGroup> = BTreeMap::new();
    for spec in &classes {
        let wd = weil_data(spec)?;
        assert!(wd.supersingular, "census keeps only supersingular classes");
        let counts = wd.counts.as_ref().unwrap();
        let beta = field.q as i64 + 1 - counts[0] as i64;
        let period = wd.period.unwrap();
        let parity = wd.parity.unwrap();
        let row = table
            .iter()
            .find(|c| c.beta == beta)
            .expect("every enumerated trace is an admissible supersingular trace");
        assert_eq!(period, row.period, "beta = {beta}");
        assert_eq!(parity, row.parity, "beta = {beta}");
        grouped
            .entry(beta)
            .and_modify(|g| g.class_count += 1)
            .or_insert(CensusGroup { beta, class_count: 1, period, parity });
    }
    // every admissible trace is realized by some curve
    for row in &table {
        assert!(grouped.contains_key(&row.beta), "missing classes for beta = {}", row.beta);
    }
    assert_eq!(grouped.len(), table.len());

    let groups: Vec<CensusGroup> = grouped.into_values().collect();
    let total: usize = groups.iter().map(|g| g.class_count).sum();
    let plus: usize =
        groups.iter().filter(|g| g.parity == 1).map(|g| g.class_count).sum();
    let minus = total - plus;
    let excess = plus as i64 - minus as i64;
    if r % 2 == 1 {
        assert_eq!(minus, 0, "odd-degree fields have parity +1 throughout");
    } else {
        let zero_classes =
            groups.iter().find(|g| g.beta == 0).map_or(0, |g| g.class_count) as i64;
        assert_eq!(excess, zero_classes, "parity excess counts the trace-0 classes");
        assert_eq!(excess, 1 - kronecker_minus4(p));
    }
    Ok(CensusRecord {
        p,
        r,
        q: field.q,
        groups,
        total_classes: total,
        plus_classes: plus,
        minus_classes: minus,
        parity_excess: excess,
    })
}
