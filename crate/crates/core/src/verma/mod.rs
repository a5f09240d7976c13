//! `M_λ ⊗ V^μ`: infinitesimal characters, linkage blocks, and exact
//! operator checks on weight spaces for `sl₂`.

mod casimir;
mod linkage;

pub use casimir::{casimir_block_matrix, operator_relation_check, WeightBlockMatrix};
pub use linkage::{
    discriminant_sl2, linkage_decomposition, linkage_decomposition_sl2, tensor_characters, BlockLabel,
    LinkageBlock, LinkageDecomposition,
};
