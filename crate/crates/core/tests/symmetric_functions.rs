use lamod_core::intpoly::{Monomial, Polynomial, Var};
use lamod_core::symfun::{elementary_assignment, power_sum, to_elementary_basis, VarSet};
use lamod_core::universal::newton_q_definition;
use num_bigint::BigInt;
use proptest::prelude::*;

/// A random polynomial in `s_1, …, s_n`.
fn in_elementary(n: u32) -> impl Strategy<Value = Polynomial> {
    let term = (-9i64..=9, proptest::collection::vec(0u32..=2, n as usize));
    proptest::collection::vec(term, 0..5).prop_map(move |terms| {
        let mut p = Polynomial::zero();
        for (c, exps) in terms {
            let pairs = exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (Var::s(i as u32 + 1), e));
            p.add_term(Monomial::from_pairs(pairs), BigInt::from(c));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// The elementary basis is unique: expanding an expression and
    /// decomposing it again gives the expression back.
    #[test]
    fn decomposition_inverts_expansion(f in in_elementary(3)) {
        let vs = VarSet::x(3);
        let expanded = f.substitute(&elementary_assignment(vs));
        let result = to_elementary_basis(&expanded, vs).unwrap();
        prop_assert!(result.checked);
        prop_assert_eq!(result.expression, f);
    }
}

/// Newton's identities evaluated numerically at integer points, against
/// direct power sums, the symbolic power sum, and `Q_r` at `s_k = e_k`.
#[test]
fn power_sums_match_numeric_newton_identities() {
    let points: [[i64; 4]; 3] = [[2, -1, 3, 0], [1, 1, 1, 1], [-2, 5, 4, -3]];
    for pt in points {
        let vs = VarSet::x(4);
        let value = |v: Var| BigInt::from(pt[v.index() as usize - 1]);
        let e: Vec<i128> = (0..=4)
            .map(|k| {
                let mut total = 0i128;
                for mask in 0u32..16 {
                    if mask.count_ones() == k {
                        total += (0..4).filter(|i| mask & (1 << i) != 0).map(|i| pt[i] as i128).product::<i128>();
                    }
                }
                total
            })
            .collect();
        let mut p = vec![0i128; 7];
        for r in 1..=6usize {
            let mut acc = 0i128;
            for i in 1..r.min(5) {
                let sign = if i % 2 == 1 { 1 } else { -1 };
                acc += sign * e[i] * p[r - i];
            }
            if r <= 4 {
                let sign = if r % 2 == 1 { 1 } else { -1 };
                acc += sign * r as i128 * e[r];
            }
            p[r] = acc;
            let symbolic = power_sum(r as u32, vs).unwrap().evaluate(value);
            assert_eq!(symbolic, BigInt::from(acc), "r={r} at {pt:?}");
            let direct: i128 = pt.iter().map(|&x| (x as i128).pow(r as u32)).sum();
            assert_eq!(acc, direct, "r={r} at {pt:?}");
            let q = newton_q_definition(r as u32).unwrap();
            let via_q = q.evaluate(|v| BigInt::from(e.get(v.index() as usize).copied().unwrap_or(0)));
            assert_eq!(via_q, BigInt::from(direct), "Q_{r} at {pt:?}");
        }
    }
}
