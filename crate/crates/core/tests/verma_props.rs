use std::collections::BTreeSet;

use kostant_core::exactalg::MPoly;
use kostant_core::hccenter::InvariantBasis;
use kostant_core::liecore::{Bounds, Weight};
use kostant_core::sampling::Sampler;
use kostant_core::verma::{
    casimir_block_matrix, discriminant_sl2, linkage_decomposition, linkage_decomposition_sl2, operator_relation_check,
    tensor_characters,
};
use kostant_core::{q, qf, Poly, Rational};

fn a1() -> InvariantBasis {
    InvariantBasis::new(&"A1".parse().unwrap(), &Bounds::default()).unwrap()
}

fn generic_lambda(s: &mut Sampler) -> Rational {
    s.generic_rational()
}

#[test]
fn charpoly_matches_predicted_eigenvalues() {
    let mut s = Sampler::new(5);
    for k in 0..=5u32 {
        for t in 0..=k + 2 {
            let lambda = generic_lambda(&mut s);
            let block = casimir_block_matrix(&lambda, k, t);
            let x = MPoly::var(1, 0);
            let expected = block
                .predicted_eigenvalues()
                .into_iter()
                .fold(Poly::one(1), |acc, e| &acc * &(&x - &Poly::constant(1, e)));
            assert_eq!(block.matrix.charpoly(), expected, "k={k} t={t}");
            let distinct: BTreeSet<_> = block.predicted_eigenvalues().into_iter().collect();
            assert_eq!(distinct.len(), block.matrix.rows());
        }
    }
}

#[test]
fn explicit_three_by_three() {
    let block = casimir_block_matrix(&qf(1, 3), 3, 2);
    assert_eq!(block.matrix.rows(), 3);
    assert_eq!(block.predicted_eigenvalues(), vec![qf(160, 9), qf(40, 9), qf(-8, 9)]);
    let x = MPoly::var(1, 0);
    let expected = [qf(160, 9), qf(40, 9), qf(-8, 9)]
        .into_iter()
        .fold(Poly::one(1), |acc, e| &acc * &(&x - &Poly::constant(1, e)));
    assert_eq!(block.matrix.charpoly(), expected);
}

#[test]
fn block_counts_and_dimensions() {
    for k in 0..=6u32 {
        for lambda in [i64::from(k), i64::from(k) + 3, 11] {
            let d = linkage_decomposition_sl2(lambda, k).unwrap();
            assert_eq!(d.blocks.len(), k as usize + 1);
            assert!(d.blocks.iter().all(|b| b.label.as_ref().unwrap().to_string().starts_with("M:")));
        }
        for lambda in -1..=6 {
            let d = linkage_decomposition_sl2(lambda, k).unwrap();
            assert_eq!(d.blocks.iter().map(|b| b.mult).sum::<u64>(), u64::from(k) + 1);
            let chars: BTreeSet<_> = d.blocks.iter().map(|b| b.character.clone()).collect();
            assert_eq!(chars.len(), d.blocks.len());
        }
    }
}

#[test]
fn discriminant_matches_tensor_collisions() {
    let b = a1();
    for k in 0..=6u32 {
        let mut collisions = BTreeSet::new();
        for twice in -2 * (i64::from(k) + 2)..=2 * i64::from(k) {
            let lambda = Weight::new(vec![qf(twice, 2)]);
            let chars = tensor_characters(&b, &lambda, &Weight::from_ints(&[i64::from(k)]), &Bounds::default()).unwrap();
            if chars.iter().any(|(_, m)| *m >= 2) {
                collisions.insert(b.character_point(&lambda).0[0].clone());
            }
        }
        let disc: BTreeSet<_> = discriminant_sl2(k).into_iter().collect();
        assert_eq!(disc, collisions, "k={k}");
    }
}

#[test]
fn higher_rank_blocks() {
    let b = InvariantBasis::new(&"A2".parse().unwrap(), &Bounds::default()).unwrap();
    let mu = Weight::from_ints(&[1, 1]);
    let generic = Weight::new(vec![qf(1, 3), qf(2, 7)]);
    let d = linkage_decomposition(&b, &generic, &mu, &Bounds::default()).unwrap();
    assert_eq!(d.blocks.len(), 7);
    assert_eq!(d.blocks.iter().map(|x| x.mult).sum::<u64>(), 8);
    let d = linkage_decomposition(&b, &Weight::from_ints(&[-1, -1]), &mu, &Bounds::default()).unwrap();
    assert_eq!(d.blocks.iter().map(|x| x.mult).sum::<u64>(), 8);
    assert!(d.blocks.len() < 7);
    let trivial = tensor_characters(&b, &generic, &Weight::zero(2), &Bounds::default()).unwrap();
    assert_eq!(trivial, vec![(b.character_point(&generic), 1)]);
}

#[test]
fn operator_relations_small() {
    let mut s = Sampler::new(8);
    for k in 0..=4u32 {
        for _ in 0..3 {
            assert!(operator_relation_check(&s.rational(), k, k + 3).unwrap());
        }
    }
    assert!(operator_relation_check(&q(2), 5, 8).unwrap());
}
