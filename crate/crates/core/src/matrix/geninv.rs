//! Generalized inverse over GF(2) from a full-rank factorization.

use super::bitmat::BitMatrix;
use super::linalg::GfMatrix;

/// Which of the four Penrose equations a candidate inverse `X` of `A` satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PenroseRelations {
    /// `A·X·A = A`
    pub axa: bool,
    /// `X·A·X = X`
    pub xax: bool,
    /// `(A·X)ᵀ = A·X`
    pub ax_symmetric: bool,
    /// `(X·A)ᵀ = X·A`
    pub xa_symmetric: bool,
}

impl PenroseRelations {
    pub fn check(a: &BitMatrix, x: &BitMatrix) -> PenroseRelations {
        let ax = a.mul(x);
        let xa = x.mul(a);
        PenroseRelations {
            axa: ax.mul(a) == *a,
            xax: xa.mul(x) == *x,
            ax_symmetric: ax.transpose() == ax,
            xa_symmetric: xa.transpose() == xa,
        }
    }

    pub fn all(&self) -> bool {
        self.axa && self.xax && self.ax_symmetric && self.xa_symmetric
    }
}

#[derive(Clone, Debug)]
pub struct GeneralizedInverse {
    pub matrix: BitMatrix,
    pub relations: PenroseRelations,
}

/// `A† = Cᵀ(C·Cᵀ)⁻¹(Bᵀ·B)⁻¹Bᵀ` for `A = B·C` of full rank.
///
/// Over GF(2) the conjugate transpose is the plain transpose. Returns `None`
/// when `C·Cᵀ` or `Bᵀ·B` is singular, which happens routinely in
/// characteristic two. The result does not depend on which full-rank
/// factorization is used.
pub fn generalized_inverse(a: &BitMatrix) -> Option<GeneralizedInverse> {
    let (b, c) = a.full_rank_factorize();
    let bt = b.transpose();
    let ct = c.transpose();
    let cct_inv = c.mul(&ct).invert()?;
    let btb_inv = bt.mul(&b).invert()?;
    let matrix = ct.mul(&cct_inv).mul(&btb_inv).mul(&bt);
    let relations = PenroseRelations::check(a, &matrix);
    Some(GeneralizedInverse { matrix, relations })
}
