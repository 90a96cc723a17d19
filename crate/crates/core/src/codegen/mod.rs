//! Position sets, punctured codes, exact weight enumeration and dual
//! parameters.

mod code;
mod dual;
mod position;
mod weights;

pub use code::{
    all_one, build_code, evaluate_codeword, get_bit, popcount, puncture_full_code, set_bit, spanning_rows,
    words_for, xor_into, BinaryLinearCode,
};
pub use dual::{
    binomial, dual_min_distance, dual_prefix, krawtchouk, krawtchouk_column, macwilliams_dual, signed, DualCounts,
};
pub use position::{build_position_set, PositionSet, Recipe};
pub use weights::{enumerate_weights, pow2, Guards, WeightDistribution};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfunc::FunctionSpec;
    use crate::gf2m::{FieldCtx, FieldElement};
    use num_bigint::BigUint;

    fn code_for(m: u32, f: &str, recipe: Recipe) -> (FieldCtx, FunctionSpec, PositionSet, BinaryLinearCode) {
        let ctx = FieldCtx::new(m).unwrap();
        let f = FunctionSpec::parse(m, f).unwrap();
        let d = build_position_set(&ctx, &recipe).unwrap();
        let c = build_code(&ctx, &f, &d).unwrap();
        (ctx, f, d, c)
    }

    /// Weight distribution by evaluating every c(a, b) directly.
    fn definitional_distribution(ctx: &FieldCtx, f: &FunctionSpec, d: &PositionSet, k: usize) -> WeightDistribution {
        let mut counts = vec![0u64; d.len() + 1];
        for a in ctx.elements() {
            for b in ctx.elements() {
                counts[popcount(&evaluate_codeword(ctx, f, d, a, b).unwrap())] += 1;
            }
        }
        // each codeword arises 2^(2m - k) times
        let rep = 1u64 << (2 * ctx.m() as usize - k);
        WeightDistribution::from_counts(
            counts
                .into_iter()
                .map(|c| {
                    assert_eq!(c % rep, 0);
                    BigUint::from(c / rep)
                })
                .collect(),
        )
    }

    #[test]
    fn position_set_sizes() {
        for m in 4..=8 {
            let ctx = FieldCtx::new(m).unwrap();
            let d = build_position_set(&ctx, &Recipe::TraceSupport).unwrap();
            assert_eq!(d.len(), 1 << (m - 1));
        }
        let ctx = FieldCtx::new(6).unwrap();
        assert_eq!(build_position_set(&ctx, &Recipe::Cyclotomic { t: 3 }).unwrap().len(), 21);
        assert!(build_position_set(&ctx, &Recipe::Cyclotomic { t: 5 }).is_err());
        let f = FunctionSpec::parse(6, "gold(1)").unwrap();
        let bad = Recipe::TraceOfF { function: f, lambda: FieldElement::ZERO, nu: 0 };
        assert!(build_position_set(&ctx, &bad).is_err());
        // permutation AB map with nu = 0 gives 2^(m-1) - 1 positions
        let ctx7 = FieldCtx::new(7).unwrap();
        let f = FunctionSpec::parse(7, "gold(1)").unwrap();
        let r = Recipe::TraceOfF { function: f, lambda: FieldElement::ONE, nu: 0 };
        assert_eq!(build_position_set(&ctx7, &r).unwrap().len(), 63);
    }

    #[test]
    fn explicit_position_sets_are_validated() {
        let r = Recipe::Whole;
        assert!(PositionSet::from_elements(vec![], r.clone()).is_err());
        assert!(PositionSet::from_elements(vec![FieldElement(0), FieldElement(1)], r.clone()).is_err());
        assert!(PositionSet::from_elements(vec![FieldElement(2), FieldElement(2)], r.clone()).is_err());
        let d = PositionSet::from_elements(vec![FieldElement(5), FieldElement(2)], r).unwrap();
        assert_eq!(d.elements(), &[FieldElement(2), FieldElement(5)]);
    }

    #[test]
    fn echelon_basics() {
        let zero = BinaryLinearCode::from_spanning_rows(5, vec![vec![0u64]]);
        assert_eq!(zero.k(), 0);
        let wd = enumerate_weights(&zero, &Guards::default()).unwrap();
        assert_eq!(wd.support().into_iter().collect::<Vec<_>>(), vec![(0, BigUint::from(1u32))]);
        assert!(wd.min_distance().is_err());

        // repetition code of length 3 and its dual
        let rep = BinaryLinearCode::from_spanning_rows(3, vec![vec![0b111u64], vec![0b111]]);
        assert_eq!(rep.k(), 1);
        assert!(rep.is_self_complementary());
        let dual = rep.dual();
        assert_eq!(dual.k(), 2);
        for r in dual.rows() {
            assert_eq!(popcount(r) % 2, 0);
        }
    }

    #[test]
    fn spanning_rows_reproduce_codewords() {
        let (ctx, f, d, _) = code_for(6, "monomial(7)", Recipe::TraceSupport);
        let rows = spanning_rows(&ctx, &f, &d).unwrap();
        let m = ctx.m() as usize;
        for a in ctx.elements().step_by(5) {
            for b in ctx.elements().step_by(3) {
                let mut acc = vec![0u64; words_for(d.len())];
                for i in 0..m {
                    if a.0 >> i & 1 == 1 {
                        xor_into(&mut acc, &rows[i]);
                    }
                    if b.0 >> i & 1 == 1 {
                        xor_into(&mut acc, &rows[m + i]);
                    }
                }
                assert_eq!(acc, evaluate_codeword(&ctx, &f, &d, a, b).unwrap());
            }
        }
    }

    #[test]
    fn gray_enumeration_matches_definition() {
        let cases = [
            (5, "gold(1)", Recipe::TraceSupport),
            (6, "monomial(21)", Recipe::Cyclotomic { t: 3 }),
            (6, "reltrace(1)", Recipe::TraceSupport),
            (5, "monomial(7)", Recipe::Whole),
        ];
        for (m, f, r) in cases {
            let (ctx, f, d, c) = code_for(m, f, r);
            let gray = enumerate_weights(&c, &Guards::default()).unwrap();
            assert_eq!(gray, definitional_distribution(&ctx, &f, &d, c.k()));
            assert_eq!(gray.total(), pow2(c.k()));
        }
    }

    #[test]
    fn small_example_parameters() {
        let (_, _, _, c) = code_for(5, "gold(1)", Recipe::TraceSupport);
        assert_eq!((c.n(), c.k()), (16, 10));
        let wd = enumerate_weights(&c, &Guards::default()).unwrap();
        assert_eq!(wd.min_distance().unwrap(), 4);
        assert_eq!(dual_min_distance(&wd, c.k()).unwrap(), Some(6));
        assert!(c.is_self_complementary());
    }

    #[test]
    fn guards_refuse() {
        let (_, _, _, c) = code_for(5, "gold(1)", Recipe::TraceSupport);
        let g = Guards { max_k: 8, max_n: 4096 };
        assert!(matches!(enumerate_weights(&c, &g), Err(crate::Error::ResourceGuard(_))));
        let g = Guards { max_k: 26, max_n: 8 };
        assert!(enumerate_weights(&c, &g).is_err());
    }

    #[test]
    fn krawtchouk_recurrence_matches_definition() {
        for n in [1usize, 7, 16, 31] {
            for i in 0..=n {
                for (j, k) in krawtchouk_column(n, i).enumerate() {
                    assert_eq!(k, krawtchouk(n, j, i), "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn macwilliams_of_full_space_and_hamming() {
        // full space GF(2)^4: dual is {0}
        let full = WeightDistribution::from_counts((0..=4).map(|w| binomial(4, w)).collect());
        let dual = macwilliams_dual(&full, 4).unwrap();
        assert_eq!(dual.support().len(), 1);
        assert_eq!(dual_min_distance(&full, 4).unwrap(), None);

        // [7,4,3] Hamming code: dual is the [7,3,4] simplex code
        let ham = WeightDistribution::from_pairs(
            7,
            [(0, 1u32), (3, 7), (4, 7), (7, 1)].map(|(w, c)| (w, BigUint::from(c))),
        );
        let dual = macwilliams_dual(&ham, 4).unwrap();
        let expect = WeightDistribution::from_pairs(7, [(0, 1u32), (4, 7)].map(|(w, c)| (w, BigUint::from(c))));
        assert_eq!(dual, expect);
        assert_eq!(dual_min_distance(&expect, 3).unwrap(), Some(3));

        // inconsistent input is rejected
        let bad = WeightDistribution::from_pairs(7, [(0, 1u32), (3, 3)].map(|(w, c)| (w, BigUint::from(c))));
        assert!(macwilliams_dual(&bad, 2).is_err());
    }

    #[test]
    fn csv_output() {
        let wd = WeightDistribution::from_pairs(7, [(0, 1u32), (4, 7)].map(|(w, c)| (w, BigUint::from(c))));
        assert_eq!(wd.to_csv(), "weight,count\n0,1\n4,7\n");
    }
}
