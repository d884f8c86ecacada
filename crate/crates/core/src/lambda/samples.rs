//! Deterministic sample universes for the axiom checkers.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GroupRingElem, LineGroupRing};

/// A list of elements together with the pairs of them that binary checks
/// visit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Samples<E> {
    elems: Vec<E>,
    pairs: Vec<(usize, usize)>,
}

impl<E> Samples<E> {
    /// Every ordered pair.
    pub fn all_pairs(elems: Vec<E>) -> Samples<E> {
        let n = elems.len();
        let pairs = (0..n).cartesian_product(0..n).collect();
        Samples { elems, pairs }
    }

    /// Every ordered pair if there are at most `max_pairs` of them, otherwise
    /// `max_pairs` distinct pairs chosen by `seed`.
    pub fn seeded(elems: Vec<E>, max_pairs: usize, seed: u64) -> Samples<E> {
        let n = elems.len();
        if n * n <= max_pairs {
            return Samples::all_pairs(elems);
        }
        let pairs = pick_pairs(n, n, max_pairs, seed);
        Samples { elems, pairs }
    }

    pub fn elems(&self) -> &[E] {
        &self.elems
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&E, &E)> + '_ {
        self.pairs.iter().map(|&(i, j)| (&self.elems[i], &self.elems[j]))
    }

    pub fn pair_indices(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn map<F, T>(&self, f: F) -> Samples<T>
    where
        F: FnMut(&E) -> T,
    {
        Samples { elems: self.elems.iter().map(f).collect(), pairs: self.pairs.clone() }
    }
}

/// Up to `max_pairs` index pairs from `0..left × 0..right`: all of them if
/// they fit, otherwise a sorted seeded selection without repeats.
pub fn pick_pairs(left: usize, right: usize, max_pairs: usize, seed: u64) -> Vec<(usize, usize)> {
    let total = left * right;
    if total <= max_pairs {
        return (0..left).cartesian_product(0..right).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = index::sample(&mut rng, total, max_pairs).into_vec();
    chosen.sort_unstable();
    chosen.into_iter().map(|k| (k / right, k % right)).collect()
}

/// All integers in `lo..=hi`, all pairs.
pub fn binomial_samples(lo: i64, hi: i64) -> Samples<BigInt> {
    Samples::all_pairs((lo..=hi).map(BigInt::from).collect())
}

/// Elements of `Z[G]` with coefficients in `[−bound, bound]`.
///
/// The whole box is used when it has at most `max_elems` points. Otherwise
/// the sample holds `0`, `±1`, every `±g`, every `1 + g`, and seeded draws
/// from the box up to `max_elems`.
pub fn group_ring_samples(
    ring: &LineGroupRing,
    bound: i64,
    max_elems: usize,
    max_pairs: usize,
    seed: u64,
) -> Samples<GroupRingElem> {
    let order = ring.order();
    let side = (2 * bound + 1) as u64;
    let box_size = (order as u32).try_into().ok().and_then(|o| side.checked_pow(o));
    let coeff_vectors: Vec<Vec<i64>> = match box_size {
        Some(size) if size as usize <= max_elems => (0..order)
            .map(|_| -bound..=bound)
            .multi_cartesian_product()
            .collect(),
        _ => {
            let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
            let mut out = Vec::new();
            let mut push = |v: Vec<i64>, out: &mut Vec<Vec<i64>>| {
                if seen.insert(v.clone()) {
                    out.push(v);
                }
            };
            let unit = |g: usize, c: i64| (0..order).map(|h| if h == g { c } else { 0 }).collect::<Vec<_>>();
            push(vec![0; order], &mut out);
            for g in 0..order {
                push(unit(g, 1), &mut out);
                push(unit(g, -1), &mut out);
                if g > 0 && bound >= 1 {
                    let mut v = unit(g, 1);
                    v[0] = 1;
                    push(v, &mut out);
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            while out.len() < max_elems {
                let v = (0..order).map(|_| rng.gen_range(-bound..=bound)).collect();
                push(v, &mut out);
            }
            out
        }
    };
    let elems = coeff_vectors.into_iter().map(|v| ring.element(v)).collect();
    Samples::seeded(elems, max_pairs, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_is_deterministic() {
        let a = Samples::seeded((0..50).collect::<Vec<_>>(), 100, 7);
        let b = Samples::seeded((0..50).collect::<Vec<_>>(), 100, 7);
        let c = Samples::seeded((0..50).collect::<Vec<_>>(), 100, 8);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.pair_count(), 100);
        assert_eq!(Samples::seeded(vec![1, 2, 3], 100, 0).pair_count(), 9);
    }

    #[test]
    fn group_ring_box() {
        let z2 = LineGroupRing::cyclic(2);
        let s = group_ring_samples(&z2, 2, 400, 1000, 0);
        assert_eq!(s.len(), 25);
        assert_eq!(s.pair_count(), 625);

        let z6 = LineGroupRing::new(vec![2, 3]).unwrap();
        let s = group_ring_samples(&z6, 2, 120, 400, 0);
        assert_eq!(s.len(), 120);
        assert_eq!(s.pair_count(), 400);
        assert!(s.elems().contains(&z6.line(3)));
        for e in s.elems() {
            assert!(e.coeffs().iter().all(|c| c.magnitude() <= &2u32.into()));
        }
    }
}
