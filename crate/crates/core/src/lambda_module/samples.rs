use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GradedElem, GradedRing, LambdaModule, RingElem};
use crate::lambda::{LambdaRing, Samples};

/// Graded elements `(a; x_1, …, x_d)` with `a` from `base` and each `x_k`
/// from `parts`.
///
/// Every combination is used when there are at most `max_elems`; otherwise
/// `max_elems` distinct combinations are drawn with `seed`, always including
/// the ones whose positive parts all vanish or whose base vanishes.
pub fn graded_samples<M: LambdaModule>(
    graded: &GradedRing<M>,
    base: &[RingElem<M>],
    parts: &[M::Elem],
    max_elems: usize,
    max_pairs: usize,
    seed: u64,
) -> Samples<GradedElem<M>> {
    let d = graded.width();
    let total = (parts.len() as u64).checked_pow(d as u32).and_then(|p| p.checked_mul(base.len() as u64));
    let combos: Vec<Vec<usize>> = match total {
        Some(t) if t as usize <= max_elems => (0..t as usize)
            .map(|mut k| {
                let mut idx = vec![0; d + 1];
                for slot in idx.iter_mut().skip(1).rev() {
                    *slot = k % parts.len();
                    k /= parts.len();
                }
                idx[0] = k;
                idx
            })
            .collect(),
        _ => {
            let mut seen = BTreeSet::new();
            let mut out = Vec::new();
            let zero_base = base.iter().position(|a| *a == graded.base_ring().zero());
            let zero_part = parts.iter().position(|x| *x == graded.module().zero());
            let mut push = |v: Vec<usize>, out: &mut Vec<Vec<usize>>| {
                if out.len() < max_elems && seen.insert(v.clone()) {
                    out.push(v);
                }
            };
            if let Some(z) = zero_part {
                for a in 0..base.len() {
                    let mut v = vec![z; d + 1];
                    v[0] = a;
                    push(v, &mut out);
                }
            }
            if let Some(z) = zero_base {
                for x in 0..parts.len() {
                    let mut v = vec![x; d + 1];
                    v[0] = z;
                    push(v, &mut out);
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let available = total.map_or(usize::MAX, |t| t as usize);
            while out.len() < max_elems.min(available) {
                let mut v = vec![rng.gen_range(0..base.len())];
                v.extend((0..d).map(|_| rng.gen_range(0..parts.len())));
                push(v, &mut out);
            }
            out
        }
    };
    let elems = combos
        .into_iter()
        .map(|idx| graded.element(base[idx[0]].clone(), idx[1..].iter().map(|&k| parts[k].clone()).collect()))
        .collect();
    Samples::seeded(elems, max_pairs, seed)
}
