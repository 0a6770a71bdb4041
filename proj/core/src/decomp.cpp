#include "spintorus/decomp.hpp"

#include <algorithm>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace spintorus {

namespace {

std::vector<int> sorted_order(const Vector& vals) {
    std::vector<int> idx(vals.size());
    for (int i = 0; i < vals.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (vals[a].real() != vals[b].real()) return vals[a].real() < vals[b].real();
        return vals[a].imag() < vals[b].imag();
    });
    return idx;
}

}  // namespace

std::vector<EigenPair> eigendecompose(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("eigendecompose: matrix not square");
    Eigen::ComplexEigenSolver<Matrix> es(a, /*computeEigenvectors=*/true);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eigendecompose: QR iteration did not converge");
    const auto idx = sorted_order(es.eigenvalues());
    std::vector<EigenPair> out;
    out.reserve(idx.size());
    for (int i : idx) {
        Vector v = es.eigenvectors().col(i);
        v /= v.norm();
        out.push_back({es.eigenvalues()[i], std::move(v)});
    }
    return out;
}

std::vector<EigenPair> eigendecompose(const TensorOperator& a) {
    return eigendecompose(a.matrix());
}

EigenBasis eigenbasis(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("eigenbasis: matrix not square");
    Eigen::ComplexEigenSolver<Matrix> es(a, true);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("eigenbasis: QR iteration did not converge");
    const auto idx = sorted_order(es.eigenvalues());
    EigenBasis b;
    b.values.reserve(idx.size());
    b.right.resize(a.rows(), a.cols());
    for (int k = 0; k < static_cast<int>(idx.size()); ++k) {
        b.values.push_back(es.eigenvalues()[idx[k]]);
        b.right.col(k) = es.eigenvectors().col(idx[k]);
    }
    b.left_inv = b.right.inverse();
    return b;
}

int numerical_rank(const Matrix& a, double rank_tolerance) {
    Eigen::JacobiSVD<Matrix> svd(a);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    const double cut = rank_tolerance * s(0);
    int r = 0;
    while (r < s.size() && s(r) > cut) ++r;
    return r;
}

Matrix column_space_projector(const Matrix& a, double rank_tolerance) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("column_space_projector: matrix not square");
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return Matrix::Zero(a.rows(), a.cols());
    const double cut = rank_tolerance * s(0);
    int r = 0;
    while (r < s.size() && s(r) > cut) ++r;
    const Matrix u = svd.matrixU().leftCols(r);
    return u * u.adjoint();
}

TensorOperator column_space_projector(const TensorOperator& a, double rank_tolerance) {
    return {a.site_dims(), column_space_projector(a.matrix(), rank_tolerance)};
}

double subspace_distance(const Matrix& a, const Matrix& b, double rank_tolerance) {
    const Matrix pa = column_space_projector(a, rank_tolerance);
    const Matrix pb = column_space_projector(b, rank_tolerance);
    Eigen::JacobiSVD<Matrix> svd(pa - pb);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

}  // namespace spintorus
