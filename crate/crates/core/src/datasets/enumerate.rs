//! Enumeration of spherical data sets of a fixed genus, one per class.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_integer::Integer;

use super::{DataSet, Pair};
use crate::arith_perm::{lcm_all, units_mod};
use crate::error::{Error, Result};

pub const MAX_ENUMERATION_GENUS: u64 = 30;

/// Canonical representatives of all `(n, 0; …)` data sets of genus `g`,
/// ordered by `(n, pairs)`.
pub fn enumerate_spherical(g: u64) -> Result<Vec<DataSet>> {
    enumerate_spherical_with_jobs(g, 1)
}

/// As [`enumerate_spherical`], spreading the degree scan over `jobs` threads.
/// The output does not depend on `jobs`.
pub fn enumerate_spherical_with_jobs(g: u64, jobs: usize) -> Result<Vec<DataSet>> {
    if !(2..=MAX_ENUMERATION_GENUS).contains(&g) {
        return Err(Error::GenusOutOfScope(g as i64));
    }
    let degrees: Vec<u64> = (2..=4 * g + 2).collect();
    let jobs = jobs.clamp(1, degrees.len());
    let slots: Vec<Mutex<Vec<DataSet>>> = degrees.iter().map(|_| Mutex::new(Vec::new())).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&n) = degrees.get(i) else { break };
                *slots[i].lock().expect("worker panicked") = classes_of_degree(n, g);
            });
        }
    });
    Ok(slots
        .into_iter()
        .flat_map(|s| s.into_inner().expect("worker panicked"))
        .collect())
}

/// All classes of degree `n` and genus `g`, sorted.
fn classes_of_degree(n: u64, g: u64) -> Vec<DataSet> {
    // Riemann-Hurwitz with g0 = 0: Σ (n − n/n_i) = 2n + 2g − 2
    let target = 2 * n + 2 * g - 2;
    let divisors: Vec<u64> = (2..=n).filter(|m| n.is_multiple_of(*m)).collect();
    let mut found = BTreeSet::new();
    let mut orders = Vec::new();
    order_multisets(n, &divisors, 0, target, &mut orders, &mut |orders| {
        if lcm_all(orders.iter().copied()) != n || !lcm_stable(orders) {
            return;
        }
        for pairs in rotation_choices(orders) {
            let total = pairs
                .iter()
                .fold(0u64, |acc, p| (acc + (n / p.n) * p.d) % n);
            if total == 0 {
                let d = DataSet::from_pairs(n, 0, pairs).canonical_form();
                found.insert(d.pairs);
            }
        }
    });
    found
        .into_iter()
        .map(|pairs| DataSet::from_pairs(n, 0, pairs))
        .collect()
}

/// Non-decreasing sequences of divisors whose weights `n − n/m` sum to `remaining`.
fn order_multisets(
    n: u64,
    divisors: &[u64],
    from: usize,
    remaining: u64,
    acc: &mut Vec<u64>,
    visit: &mut dyn FnMut(&[u64]),
) {
    if remaining == 0 {
        visit(acc);
        return;
    }
    for (i, &m) in divisors.iter().enumerate().skip(from) {
        let w = n - n / m;
        if w > remaining {
            break;
        }
        acc.push(m);
        order_multisets(n, divisors, i, remaining - w, acc, visit);
        acc.pop();
    }
}

fn lcm_stable(orders: &[u64]) -> bool {
    let full = lcm_all(orders.iter().copied());
    (0..orders.len()).all(|i| {
        let rest = orders
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(1u64, |acc, (_, &m)| acc.lcm(&m));
        rest == full
    })
}

/// Every assignment of rotation data to a sorted order list, as multisets
/// per distinct order.
fn rotation_choices(orders: &[u64]) -> Vec<Vec<Pair>> {
    let mut groups: Vec<(u64, usize)> = Vec::new();
    for &m in orders {
        match groups.last_mut() {
            Some((last, count)) if *last == m => *count += 1,
            _ => groups.push((m, 1)),
        }
    }
    let mut out = vec![Vec::new()];
    for (m, count) in groups {
        let units: Vec<u64> = units_mod(m).into_iter().map(|u| u.value()).collect();
        let mut choices = Vec::new();
        unit_multisets(&units, 0, count, &mut Vec::new(), &mut choices);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Pair>| {
                choices.iter().map(move |ds| {
                    let mut p = prefix.clone();
                    p.extend(ds.iter().map(|&d| Pair { d, n: m }));
                    p
                })
            })
            .collect();
    }
    out
}

fn unit_multisets(
    units: &[u64],
    from: usize,
    left: usize,
    acc: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if left == 0 {
        out.push(acc.clone());
        return;
    }
    for i in from..units.len() {
        acc.push(units[i]);
        unit_multisets(units, i, left - 1, acc, out);
        acc.pop();
    }
}
