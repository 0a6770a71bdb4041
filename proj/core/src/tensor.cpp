#include "spintorus/tensor.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace spintorus {

namespace {

long total_dim(const std::vector<int>& dims) {
    long d = 1;
    for (int x : dims) d *= x;
    return d;
}

// stride[k] = product of dimensions right of site k.
std::vector<long> strides(const std::vector<int>& dims) {
    std::vector<long> s(dims.size(), 1);
    for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k)
        s[k] = s[k + 1] * dims[k + 1];
    return s;
}

void check_site(const TensorOperator& a, int site) {
    if (site < 0 || site >= a.sites())
        throw std::invalid_argument("site index " + std::to_string(site) +
                                    " out of range for " + std::to_string(a.sites()) +
                                    " sites");
}

}  // namespace

TensorOperator::TensorOperator(std::vector<int> site_dims, Matrix entries)
    : dims_(std::move(site_dims)), m_(std::move(entries)) {
    for (int d : dims_)
        if (d < 1) throw std::invalid_argument("site dimension must be positive");
    const long dim = total_dim(dims_);
    if (m_.rows() != dim || m_.cols() != dim)
        throw std::invalid_argument("matrix side " + std::to_string(m_.rows()) +
                                    " does not match site dimensions product " +
                                    std::to_string(dim));
}

TensorOperator TensorOperator::identity(const std::vector<int>& site_dims) {
    const long d = total_dim(site_dims);
    return {site_dims, Matrix::Identity(d, d)};
}

TensorOperator TensorOperator::zero(const std::vector<int>& site_dims) {
    const long d = total_dim(site_dims);
    return {site_dims, Matrix::Zero(d, d)};
}

TensorOperator TensorOperator::zero_uniform(int sites, int d) {
    return zero(std::vector<int>(sites, d));
}

TensorOperator TensorOperator::operator*(const TensorOperator& rhs) const {
    if (dims_ != rhs.dims_) throw std::invalid_argument("site dimension mismatch in product");
    return {dims_, Matrix(m_ * rhs.m_)};
}

TensorOperator TensorOperator::operator+(const TensorOperator& rhs) const {
    if (dims_ != rhs.dims_) throw std::invalid_argument("site dimension mismatch in sum");
    return {dims_, Matrix(m_ + rhs.m_)};
}

TensorOperator TensorOperator::operator-(const TensorOperator& rhs) const {
    if (dims_ != rhs.dims_) throw std::invalid_argument("site dimension mismatch in difference");
    return {dims_, Matrix(m_ - rhs.m_)};
}

TensorOperator kron(const TensorOperator& a, const TensorOperator& b) {
    const auto& A = a.matrix();
    const auto& B = b.matrix();
    Matrix out(A.rows() * B.rows(), A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    std::vector<int> dims = a.site_dims();
    dims.insert(dims.end(), b.site_dims().begin(), b.site_dims().end());
    return {std::move(dims), std::move(out)};
}

TensorOperator embed(const TensorOperator& a, const std::vector<int>& target_sites,
                     int total_sites, int site_dim) {
    const int m = static_cast<int>(target_sites.size());
    if (a.sites() != m)
        throw std::invalid_argument("operator acts on " + std::to_string(a.sites()) +
                                    " sites but " + std::to_string(m) + " targets given");
    for (int d : a.site_dims())
        if (d != site_dim) throw std::invalid_argument("site dimension mismatch in embed");
    std::vector<bool> used(total_sites, false);
    for (int t : target_sites) {
        if (t < 0 || t >= total_sites)
            throw std::invalid_argument("embed target " + std::to_string(t) + " out of range");
        if (used[t]) throw std::invalid_argument("duplicate embed target " + std::to_string(t));
        used[t] = true;
    }

    std::vector<int> rest;
    for (int s = 0; s < total_sites; ++s)
        if (!used[s]) rest.push_back(s);

    const std::vector<int> full_dims(total_sites, site_dim);
    const auto st = strides(full_dims);
    const long adim = a.dim();
    const long rest_count = ipow(site_dim, static_cast<int>(rest.size()));

    Matrix out = Matrix::Zero(ipow(site_dim, total_sites), ipow(site_dim, total_sites));
    // Digits of a's row/col indices land on target sites, shared digits on the rest.
    std::vector<int> adig_r(m), adig_c(m);
    for (long r = 0; r < adim; ++r) {
        long tr = r;
        for (int k = m - 1; k >= 0; --k) { adig_r[k] = tr % site_dim; tr /= site_dim; }
        for (long c = 0; c < adim; ++c) {
            const Complex v = a.matrix()(r, c);
            if (v == Complex{0.0, 0.0}) continue;
            long tc = c;
            for (int k = m - 1; k >= 0; --k) { adig_c[k] = tc % site_dim; tc /= site_dim; }
            long base_r = 0, base_c = 0;
            for (int k = 0; k < m; ++k) {
                base_r += adig_r[k] * st[target_sites[k]];
                base_c += adig_c[k] * st[target_sites[k]];
            }
            for (long w = 0; w < rest_count; ++w) {
                long tw = w, shared = 0;
                for (int k = static_cast<int>(rest.size()) - 1; k >= 0; --k) {
                    shared += (tw % site_dim) * st[rest[k]];
                    tw /= site_dim;
                }
                out(base_r + shared, base_c + shared) = v;
            }
        }
    }
    return {full_dims, std::move(out)};
}

TensorOperator partial_trace(const TensorOperator& a, int site) {
    check_site(a, site);
    if (a.sites() < 2) throw std::invalid_argument("partial_trace needs at least 2 sites");
    const auto& dims = a.site_dims();
    const auto st = strides(dims);
    const int d = dims[site];

    std::vector<int> out_dims;
    for (int k = 0; k < a.sites(); ++k)
        if (k != site) out_dims.push_back(dims[k]);
    const long odim = total_dim(out_dims);
    const auto ost = strides(out_dims);

    // Map a reduced index back to a full index with 0 at the traced site.
    std::vector<int> keep;
    for (int k = 0; k < a.sites(); ++k)
        if (k != site) keep.push_back(k);

    auto lift = [&](long idx) {
        long full = 0;
        for (int k = static_cast<int>(keep.size()) - 1; k >= 0; --k) {
            full += (idx % out_dims[k]) * st[keep[k]];
            idx /= out_dims[k];
        }
        return full;
    };

    Matrix out = Matrix::Zero(odim, odim);
    for (long r = 0; r < odim; ++r) {
        const long fr = lift(r);
        for (long c = 0; c < odim; ++c) {
            const long fc = lift(c);
            Complex acc{0.0, 0.0};
            for (int s = 0; s < d; ++s) acc += a.matrix()(fr + s * st[site], fc + s * st[site]);
            out(r, c) = acc;
        }
    }
    return {std::move(out_dims), std::move(out)};
}

TensorOperator partial_transpose(const TensorOperator& a, int site) {
    check_site(a, site);
    const auto& dims = a.site_dims();
    const auto st = strides(dims);
    const int d = dims[site];
    const long dim = a.dim();

    Matrix out(dim, dim);
    for (long r = 0; r < dim; ++r) {
        const int rdig = static_cast<int>((r / st[site]) % d);
        const long rbase = r - rdig * st[site];
        for (long c = 0; c < dim; ++c) {
            const int cdig = static_cast<int>((c / st[site]) % d);
            const long cbase = c - cdig * st[site];
            out(rbase + cdig * st[site], cbase + rdig * st[site]) = a.matrix()(r, c);
        }
    }
    return {dims, std::move(out)};
}

TensorOperator site_permutation(const std::vector<int>& perm, int site_dim) {
    const int t = static_cast<int>(perm.size());
    std::vector<bool> seen(t, false);
    for (int p : perm) {
        if (p < 0 || p >= t || seen[p]) throw std::invalid_argument("invalid permutation");
        seen[p] = true;
    }
    const std::vector<int> dims(t, site_dim);
    const auto st = strides(dims);
    const long dim = total_dim(dims);
    Matrix out = Matrix::Zero(dim, dim);
    std::vector<int> dig(t);
    for (long c = 0; c < dim; ++c) {
        long tc = c;
        for (int k = t - 1; k >= 0; --k) { dig[k] = tc % site_dim; tc /= site_dim; }
        long r = 0;
        for (int k = 0; k < t; ++k) r += dig[k] * st[perm[k]];
        out(r, c) = 1.0;
    }
    return {dims, std::move(out)};
}

TensorOperator swap_operator(int d) { return site_permutation({1, 0}, d); }

}  // namespace spintorus
