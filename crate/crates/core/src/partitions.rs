//! Brute-force oracle for the double series: enumerate the signed,
//! decorated `(k, n)` representations each series counts, and (for F1) scan
//! raw partitions with a membership test. Nothing here touches series
//! arithmetic.
//!
//! A representation of `N` for series `id` is a pair `(k, n)` with base
//! weight `V(k, n) <= N`, a set of distinct even parts from the even window
//! and a multiset of odd parts from the odd window, with
//! `V + sum(evens) + sum(odds) = N`. Its sign is `(-1)^|evens|`.

use std::fmt;

use crate::doubleseries::SeriesId;

/// Signed total of a count.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightedCount(pub i64);

impl WeightedCount {
    pub fn value(self) -> i64 {
        self.0
    }
}

impl fmt::Display for WeightedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Field order gives the lexicographic `(n, k, evens, odds)` ordering.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Representation {
    pub n: u32,
    pub k: u32,
    /// Distinct, increasing.
    pub evens: Vec<u32>,
    /// Nondecreasing, repeats allowed.
    pub odds: Vec<u32>,
}

impl Representation {
    pub fn sign(&self) -> i64 {
        if self.evens.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[u32]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "{} (k={}, n={}, evens={{{}}}, odds={{{}}})",
            if self.sign() > 0 { "+1" } else { "-1" },
            self.k,
            self.n,
            list(&self.evens),
            list(&self.odds)
        )
    }
}

/// Part windows and base weight for one `(k, n)`.
#[derive(Clone, Copy, Debug)]
struct Windows {
    base: u64,
    even_lo: u64,
    even_hi: u64,
    odd_lo: u64,
    odd_hi: u64,
}

fn windows(id: SeriesId, k: u64, n: u64) -> Windows {
    let even_lo = 2 * n + 2;
    let even_hi = 2 * n + 2 * k;
    match id {
        SeriesId::F1 => Windows {
            base: 2 * k + 3 * n + 1,
            even_lo,
            even_hi,
            odd_lo: 2 * n + 3,
            odd_hi: 2 * n + 2 * k + 1,
        },
        SeriesId::F2 => Windows {
            base: 2 * k + n + 2,
            even_lo,
            even_hi,
            odd_lo: 2 * n + 5,
            odd_hi: 2 * n + 2 * k + 3,
        },
        SeriesId::G => Windows {
            base: 2 * k + 5 * n + 2,
            even_lo,
            even_hi,
            odd_lo: 2 * n + 1,
            odd_hi: (2 * n + 2 * k).saturating_sub(1),
        },
    }
}

/// Called with `(k, n, evens, odds)`.
type RepresentationVisitor<'a> = dyn FnMut(u64, u64, &[u32], &[u32]) + 'a;

/// All `(k, n)` with base weight at most `target`.
fn pairs(id: SeriesId, target: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for n in 0..=target {
        if windows(id, 0, n).base > target {
            break;
        }
        for k in 0..=target {
            if windows(id, k, n).base > target {
                break;
            }
            out.push((k, n));
        }
    }
    out
}

/// Walks every odd multiset with parts in `[lo, hi]` (step 2, parts at
/// least `min`) summing to `rest`.
fn walk_odds(min: u64, hi: u64, rest: u64, chosen: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if rest == 0 {
        visit(chosen);
        return;
    }
    let mut p = min;
    while p <= hi && p <= rest {
        chosen.push(p as u32);
        walk_odds(p, hi, rest - p, chosen, visit);
        chosen.pop();
        p += 2;
    }
}

/// Walks every set of distinct evens in `[next, hi]` with sum at most `rest`,
/// then completes with odd multisets.
fn walk_evens(
    next: u64,
    w: &Windows,
    rest: u64,
    evens: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32], &[u32]),
) {
    // stop choosing evens here; fill the remainder with odds
    let ev = evens.clone();
    walk_odds(w.odd_lo, w.odd_hi, rest, &mut Vec::new(), &mut |o| {
        visit(&ev, o)
    });
    let mut p = next;
    while p <= w.even_hi && p <= rest {
        evens.push(p as u32);
        walk_evens(p + 2, w, rest - p, evens, visit);
        evens.pop();
        p += 2;
    }
}

fn for_each_representation(id: SeriesId, target: u64, visit: &mut RepresentationVisitor) {
    for (k, n) in pairs(id, target) {
        let w = windows(id, k, n);
        let mut evens = Vec::new();
        walk_evens(w.even_lo, &w, target - w.base, &mut evens, &mut |e, o| {
            visit(k, n, e, o)
        });
    }
}

/// Signed number of representations of `target`.
pub fn representation_count(id: SeriesId, target: u64) -> WeightedCount {
    let mut total = 0i64;
    for_each_representation(id, target, &mut |_, _, evens, _| {
        total += if evens.len() % 2 == 0 { 1 } else { -1 };
    });
    WeightedCount(total)
}

/// Every signed representation of `target`, sorted by `(n, k, evens, odds)`.
pub fn enumerate_representations(id: SeriesId, target: u64) -> Vec<Representation> {
    let mut out = Vec::new();
    for_each_representation(id, target, &mut |k, n, evens, odds| {
        out.push(Representation {
            n: n as u32,
            k: k as u32,
            evens: evens.to_vec(),
            odds: odds.to_vec(),
        });
    });
    out.sort();
    out
}

/// Calls `visit` with every partition of `target` as a nonincreasing list.
pub fn for_each_partition(target: u32, visit: &mut dyn FnMut(&[u32])) {
    fn rec(rest: u32, max: u32, parts: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        if rest == 0 {
            visit(parts);
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            parts.push(p);
            rec(rest - p, p, parts, visit);
            parts.pop();
        }
    }
    rec(target, target, &mut Vec::new(), visit);
}

/// Membership test for the F1 partitions. `parts` is nonincreasing.
/// Returns the weight `(-1)^(#even parts)` when the partition is counted.
pub fn f1_weight(parts: &[u32]) -> Option<i64> {
    if parts == [1] {
        return Some(1);
    }
    let largest = *parts.first()? as i64;
    let ones = parts.iter().filter(|&&p| p == 1).count() as i64;
    if largest % 2 == 0 || largest < 2 * ones + 1 {
        return None;
    }
    // largest = 2n + 2k + 1 with n = #ones
    let mut evens = Vec::new();
    let mut mandatory_seen = false;
    for &p in parts.iter().filter(|&&p| p != 1) {
        let p = p as i64;
        if p % 2 == 0 {
            if p < 2 * ones + 2 || p > largest - 1 {
                return None;
            }
            evens.push(p);
        } else if p == largest && !mandatory_seen {
            mandatory_seen = true;
        } else if p < 2 * ones + 3 || p > largest {
            return None;
        }
    }
    let before = evens.len();
    evens.dedup();
    if evens.len() != before {
        return None;
    }
    Some(if evens.len() % 2 == 0 { 1 } else { -1 })
}

/// Signed count of F1 partitions of `target` found by scanning all
/// partitions.
pub fn f1_partition_scan(target: u32) -> WeightedCount {
    let mut total = 0;
    for_each_partition(target, &mut |p| {
        if let Some(w) = f1_weight(p) {
            total += w;
        }
    });
    WeightedCount(total)
}
