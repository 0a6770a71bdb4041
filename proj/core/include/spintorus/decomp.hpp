#ifndef SPINTORUS_DECOMP_HPP
#define SPINTORUS_DECOMP_HPP

#include <utility>
#include <vector>

#include "spintorus/tensor.hpp"

namespace spintorus {

struct EigenPair {
    Complex value;
    Vector right;  // unit norm
};

/// Full dense non-symmetric eigendecomposition. Pairs are sorted by
/// (Re, Im) of the eigenvalue so repeated runs agree. Throws
/// std::runtime_error if the QR iteration does not converge.
std::vector<EigenPair> eigendecompose(const Matrix& a);
std::vector<EigenPair> eigendecompose(const TensorOperator& a);

/// Right eigenvectors as columns of V plus the matching left rows W = V^-1,
/// ordered like eigendecompose. Intended for simple spectra.
struct EigenBasis {
    std::vector<Complex> values;
    Matrix right;     // V
    Matrix left_inv;  // V^-1; row i pairs with column i
};
EigenBasis eigenbasis(const Matrix& a);

/// Number of singular values above rank_tolerance times the largest one.
int numerical_rank(const Matrix& a, double rank_tolerance);

/// Hermitian orthogonal projector onto the column space of `a`, with the
/// numerical rank decided by `rank_tolerance` relative to the largest
/// singular value.
Matrix column_space_projector(const Matrix& a, double rank_tolerance = 1e-10);
TensorOperator column_space_projector(const TensorOperator& a, double rank_tolerance = 1e-10);

/// Spectral-norm distance between the ranges of two operators (sine of the
/// largest principal angle between the column spaces).
double subspace_distance(const Matrix& a, const Matrix& b, double rank_tolerance = 1e-10);

}  // namespace spintorus

#endif
