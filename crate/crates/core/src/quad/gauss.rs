//! Gauss–Legendre nodes and weights at arbitrary precision.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::arith::BigFloat;

/// Nodes on `[-1, 1]` in increasing order with their weights.
#[derive(Debug)]
pub struct GaussRule {
    pub nodes: Vec<BigFloat>,
    pub weights: Vec<BigFloat>,
}

type Cache = Mutex<HashMap<(usize, u32), Arc<GaussRule>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `(P_m(x), P_m'(x))` by the three-term recurrence.
fn legendre(m: usize, x: &BigFloat) -> (BigFloat, BigFloat) {
    let wp = x.precision();
    let mut p0 = BigFloat::one(wp);
    let mut p1 = x.clone();
    for k in 1..m {
        let kf = BigFloat::from_i64(k as i64, wp);
        let a = BigFloat::from_i64(2 * k as i64 + 1, wp);
        let next = &(&(&(&a * x) * &p1) - &(&kf * &p0)) / &BigFloat::from_i64(k as i64 + 1, wp);
        p0 = p1;
        p1 = next;
    }
    // (1 - x²) P_m' = m (P_{m-1} - x P_m)
    let mf = BigFloat::from_i64(m as i64, wp);
    let dp = &(&mf * &(&p0 - &(x * &p1))) / &(&BigFloat::one(wp) - &x.square());
    (p1, dp)
}

fn compute(m: usize, prec: u32) -> GaussRule {
    let wp = prec + 32;
    let mut nodes = Vec::with_capacity(m);
    let mut weights = Vec::with_capacity(m);
    for i in 0..m {
        // i-th root from the largest down, then reversed below.
        let guess = (std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut x = BigFloat::from_f64(guess, wp);
        for _ in 0..64 {
            let (p, dp) = legendre(m, &x);
            let step = &p / &dp;
            x = &x - &step;
            let tiny = step.mag_exp().is_none_or(|e| e < -(wp as i64) + 8);
            if tiny {
                break;
            }
        }
        let (_, dp) = legendre(m, &x);
        let w = &BigFloat::from_i64(2, wp) / &(&(&BigFloat::one(wp) - &x.square()) * &dp.square());
        nodes.push(x.with_precision(prec));
        weights.push(w.with_precision(prec));
    }
    nodes.reverse();
    weights.reverse();
    GaussRule { nodes, weights }
}

/// The `m`-point rule at `prec` bits, computed once per `(m, prec)`.
pub fn gauss_legendre(m: usize, prec: u32) -> Arc<GaussRule> {
    assert!(m >= 1, "a Gauss rule needs at least one node");
    if let Some(r) = cache().lock().expect("cache lock").get(&(m, prec)) {
        return Arc::clone(r);
    }
    let rule = Arc::new(compute(m, prec));
    cache().lock().expect("cache lock").entry((m, prec)).or_insert(rule).clone()
}
