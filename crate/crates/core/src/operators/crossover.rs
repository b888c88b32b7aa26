use std::cmp::Ordering;

use crate::instance::Instance;
use crate::tour::{reverse, Tour};

use super::{BoxLabel, SplitIndex};

/// Keeps `p1[0..=s]` and appends the remaining cities in the order they occur
/// in `p2`.
pub fn one_point_crossover(p1: &Tour, p2: &Tour, s: SplitIndex) -> Tour {
    let n = p1.len();
    assert_eq!(n, p2.len(), "parents differ in size");
    let s = s.get();
    assert!(s < n, "split index {s} out of range for {n} cities");

    let mut taken = vec![false; n];
    let mut child = Vec::with_capacity(n);
    for &c in &p1.as_slice()[..=s] {
        taken[c] = true;
        child.push(c);
    }
    child.extend(p2.as_slice().iter().copied().filter(|&c| !taken[c]));
    Tour::from_vec_unchecked(child)
}

/// Davis' order crossover: `p1[a..=b]` stays in place, the other slots are
/// filled starting after `b` (wrapping) with `p2`'s cities read from after `b`.
pub fn ox_crossover(p1: &Tour, p2: &Tour, a: usize, b: usize) -> Tour {
    let n = p1.len();
    assert_eq!(n, p2.len(), "parents differ in size");
    assert!(a <= b && b < n, "invalid segment {a}..={b} for {n} cities");

    let mut taken = vec![false; n];
    let mut child = vec![usize::MAX; n];
    child[a..=b].copy_from_slice(&p1.as_slice()[a..=b]);
    for &c in &child[a..=b] {
        taken[c] = true;
    }
    let free = n - (b - a + 1);
    let mut slot = (b + 1) % n;
    let donors = (1..=n)
        .map(|off| p2.as_slice()[(b + off) % n])
        .filter(|&c| !taken[c]);
    for c in donors.take(free) {
        child[slot] = c;
        slot = (slot + 1) % n;
    }
    Tour::from_vec_unchecked(child)
}

/// Best-order crossover with explicit cut points and segment labels.
///
/// `p1` is cut before each index in `splits`. Segment `k` keeps the cities of
/// `p1` it contains but lists them in the order they occur in the individual
/// named by `labels[k]`.
pub fn box_crossover(
    p1: &Tour,
    p2: &Tour,
    best: &Tour,
    splits: &[usize],
    labels: &[BoxLabel],
) -> Tour {
    let n = p1.len();
    assert!(p2.len() == n && best.len() == n, "parents differ in size");
    assert_eq!(labels.len(), splits.len() + 1, "need one label per segment");
    assert!(
        splits.windows(2).all(|w| w[0] < w[1]) && splits.iter().all(|&s| s > 0 && s < n),
        "splits must be strictly increasing inside (0, n)"
    );

    let p2_pos = p2.positions();
    let best_pos = best.positions();
    let mut child = Vec::with_capacity(n);
    let bounds = std::iter::once(0)
        .chain(splits.iter().copied())
        .zip(splits.iter().copied().chain(std::iter::once(n)));
    for ((lo, hi), label) in bounds.zip(labels) {
        let segment = &p1.as_slice()[lo..hi];
        let start = child.len();
        child.extend_from_slice(segment);
        let rank = match label {
            BoxLabel::P1 => continue,
            BoxLabel::P2 => &p2_pos,
            BoxLabel::Best => &best_pos,
        };
        child[start..].sort_unstable_by_key(|&c| rank[c]);
    }
    Tour::from_vec_unchecked(child)
}

/// Shift that makes `p2` agree with `p1` at index `s`.
fn alignment_shift(p1: &Tour, p2: &Tour, s: usize) -> usize {
    let n = p1.len();
    let target = p1.as_slice()[s];
    let pos = p2
        .as_slice()
        .iter()
        .position(|&c| c == target)
        .expect("parents are permutations of the same set");
    (pos + n - s) % n
}

/// Circular-shift crossover: rotate `p2` so that `p2[s] == p1[s]`, then apply
/// the one-point crossover.
pub fn csx_crossover(p1: &Tour, p2: &Tour, s: SplitIndex) -> Tour {
    let n = p1.len();
    assert_eq!(n, p2.len(), "parents differ in size");
    assert!(s.get() < n, "split index out of range");
    let k = alignment_shift(p1, p2, s.get());
    let mut aligned = p2.as_slice().to_vec();
    aligned.rotate_left(k);
    one_point_crossover(p1, &Tour::from_vec_unchecked(aligned), s)
}

/// The shorter of the two candidates. Equal lengths go to the
/// lexicographically smaller order, which depends only on the pair and not on
/// which candidate came from the reversed parent.
fn fitter(instance: &Instance, a: Tour, b: Tour) -> Tour {
    let la = instance.tour_length(&a);
    let lb = instance.tour_length(&b);
    match la.total_cmp(&lb) {
        Ordering::Less => a,
        Ordering::Greater => b,
        Ordering::Equal => {
            if b < a {
                b
            } else {
                a
            }
        }
    }
}

/// Reversal crossover: one-point crossover against `p2` and reversed `p2`,
/// keeping the fitter child.
pub fn rx_crossover(instance: &Instance, p1: &Tour, p2: &Tour, s: SplitIndex) -> Tour {
    let forward = one_point_crossover(p1, p2, s);
    let backward = one_point_crossover(p1, &reverse(p2), s);
    fitter(instance, forward, backward)
}

/// Circular-shift reversal crossover: CSX against `p2` and reversed `p2`,
/// keeping the fitter child.
pub fn csrx_crossover(instance: &Instance, p1: &Tour, p2: &Tour, s: SplitIndex) -> Tour {
    let forward = csx_crossover(p1, p2, s);
    let backward = csx_crossover(p1, &reverse(p2), s);
    fitter(instance, forward, backward)
}
