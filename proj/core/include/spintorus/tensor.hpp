#ifndef SPINTORUS_TENSOR_HPP
#define SPINTORUS_TENSOR_HPP

#include <vector>

#include "spintorus/types.hpp"

namespace spintorus {

/// Dense operator on a tensor product of finite-dimensional sites.
///
/// Sites are ordered left to right; basis indices are row-major over the
/// site multi-index, so site 0 is the most significant digit. The matrix
/// side always equals the product of the site dimensions.
class TensorOperator {
public:
    TensorOperator() = default;
    TensorOperator(std::vector<int> site_dims, Matrix entries);

    static TensorOperator identity(const std::vector<int>& site_dims);
    static TensorOperator zero(const std::vector<int>& site_dims);
    /// Uniform site dimension d on `sites` sites, zero entries.
    static TensorOperator zero_uniform(int sites, int d);

    const std::vector<int>& site_dims() const { return dims_; }
    int sites() const { return static_cast<int>(dims_.size()); }
    Eigen::Index dim() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }
    Matrix& matrix() { return m_; }

    Complex trace() const { return m_.trace(); }

    TensorOperator operator*(const TensorOperator& rhs) const;
    TensorOperator operator+(const TensorOperator& rhs) const;
    TensorOperator operator-(const TensorOperator& rhs) const;
    TensorOperator operator*(Complex s) const { return {dims_, Matrix(m_ * s)}; }

private:
    std::vector<int> dims_;
    Matrix m_;
};

/// Kronecker product; site lists concatenate, a's sites leftmost.
TensorOperator kron(const TensorOperator& a, const TensorOperator& b);

/// Embed `a` into a `total_sites`-site space of uniform dimension
/// `site_dim`, acting as `a` on `target_sites` (0-based, in the given
/// order) and as identity elsewhere.
TensorOperator embed(const TensorOperator& a, const std::vector<int>& target_sites,
                     int total_sites, int site_dim);

/// Trace out one site; the remaining sites keep their order.
TensorOperator partial_trace(const TensorOperator& a, int site);

/// Transpose the row/column indices of one site.
TensorOperator partial_transpose(const TensorOperator& a, int site);

/// Permutation operator p on a uniform space: maps the digit at position k
/// to position perm[k]. Conjugating by it reorders sites accordingly.
TensorOperator site_permutation(const std::vector<int>& perm, int site_dim);

/// Two-site swap operator on dimension d (permutation {1,0}).
TensorOperator swap_operator(int d);

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace spintorus

#endif
