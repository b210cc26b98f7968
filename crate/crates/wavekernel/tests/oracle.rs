//! Cross-checks the fraction-free eliminator against the naive
//! Gauss-Jordan reference on a deterministic corpus.

mod common;

use common::{naive_det, naive_kernel, seeded_corpus};
use wavekernel::kernel::{det, rank_and_kernel, same_subspace};

#[test]
fn corpus_ranks_and_kernels_match_reference() {
    let corpus = seeded_corpus();
    assert_eq!(corpus.len(), 100);
    for (idx, m) in corpus.iter().enumerate() {
        let fast = rank_and_kernel(m);
        let slow = naive_kernel(m);
        assert_eq!(fast.rank, slow.rank, "rank mismatch on corpus matrix {idx}");
        assert_eq!(
            fast.pivot_columns, slow.pivot_columns,
            "pivot column mismatch on corpus matrix {idx}"
        );
        assert_eq!(fast.rank + fast.kernel_dim, m.cols(), "rank-nullity on {idx}");
        // Both sides produce the reduced normal form, so the bases agree
        // vector by vector, not merely as subspaces.
        assert_eq!(
            fast.kernel_basis, slow.kernel_basis,
            "kernel basis mismatch on corpus matrix {idx}"
        );
        for v in &slow.kernel_basis {
            assert!(m.mul(v).is_zero(), "reference kernel vector fails M·v=0 on {idx}");
        }
        assert!(
            same_subspace(&fast.kernel_basis, &slow.kernel_basis, m.cols()),
            "subspace disagreement on corpus matrix {idx}"
        );
    }
}

#[test]
fn corpus_determinants_match_cofactor_expansion() {
    for (idx, m) in seeded_corpus().iter().enumerate() {
        if !m.is_square() || m.rows() > 4 {
            continue;
        }
        assert_eq!(det(m), naive_det(m), "determinant mismatch on corpus matrix {idx}");
    }
}
