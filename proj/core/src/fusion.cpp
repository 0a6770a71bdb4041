#include "spintorus/fusion.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spintorus/decomp.hpp"

namespace spintorus {

namespace {

using std::exp;
using std::sinh;

// Aux-space blocks of R(arg) on aux x site: block (s, t) is the n x n
// matrix R[(a, s), (b, t)] over the aux indices.
std::vector<Matrix> site_blocks(const Matrix& r, int n) {
    std::vector<Matrix> blocks(n * n, Matrix(n, n));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            Matrix& b = blocks[s * n + t];
            for (int a = 0; a < n; ++a)
                for (int c = 0; c < n; ++c) b(a, c) = r(a * n + s, c * n + t);
        }
    return blocks;
}

// W_j = R_{1j}(u - theta_j) R_{2j}(u - eta - theta_j) ... R_{mj}(...) as
// n x n site blocks over the fused aux space (dimension n^m), assembled
// by summing over the internal site indices of the chain of R factors.
std::vector<Matrix> site_chain_blocks(const ModelSpec& spec, int m, Complex u, Complex theta) {
    const int n = spec.n();
    std::vector<std::vector<Matrix>> factor(m);
    for (int i = 0; i < m; ++i)
        factor[i] = site_blocks(build_r(n, spec.eta(), u - double(i) * spec.eta() - theta).matrix(), n);

    // acc[s * n + t] is the running kron over aux spaces 0..i.
    std::vector<Matrix> acc = factor[0];
    for (int i = 1; i < m; ++i) {
        const long adim = acc[0].rows();
        std::vector<Matrix> next(n * n, Matrix::Zero(adim * n, adim * n));
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) {
                Matrix& out = next[s * n + t];
                for (int mid = 0; mid < n; ++mid) {
                    const Matrix& left = acc[s * n + mid];
                    const Matrix& right = factor[i][mid * n + t];
                    for (long r = 0; r < adim; ++r)
                        for (long c = 0; c < adim; ++c) {
                            if (left(r, c) == Complex{0, 0}) continue;
                            out.block(r * n, c * n, n, n) += left(r, c) * right;
                        }
                }
            }
        acc = std::move(next);
    }
    return acc;
}

Matrix kron_power(const Matrix& g, int m) {
    TensorOperator acc{{static_cast<int>(g.rows())}, g};
    TensorOperator unit = acc;
    for (int i = 1; i < m; ++i) acc = kron(acc, unit);
    return acc.matrix();
}

}  // namespace

TensorOperator degenerate_r_product(const ModelSpec& spec, int m, bool reversed) {
    const int n = spec.n();
    if (m < 2 || m > n) throw std::invalid_argument("projector order must lie in 2..n");
    TensorOperator prod = TensorOperator::identity(std::vector<int>(m, n));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Complex arg = -double(j - i) * spec.eta();
            const int a = reversed ? m - 1 - i : i;
            const int b = reversed ? m - 1 - j : j;
            prod = prod * embed(build_r(n, spec.eta(), arg), {a, b}, m, n);
        }
    return prod;
}

namespace {

FusedProjector projector_impl(const ModelSpec& spec, int m, bool reversed, double tol) {
    const auto prod = degenerate_r_product(spec, m, reversed);
    const auto p = column_space_projector(prod, tol);
    const int rank = numerical_rank(p.matrix(), 0.5);
    const long expected = binomial(spec.n(), m);
    if (rank != expected)
        throw std::runtime_error("fused projector of order " + std::to_string(m) + " has rank " +
                                 std::to_string(rank) + ", expected " + std::to_string(expected) +
                                 " (degenerate eta or ordering bug)");
    return {m, p, rank};
}

}  // namespace

FusedProjector build_projector(const ModelSpec& spec, int m, double rank_tolerance) {
    return projector_impl(spec, m, false, rank_tolerance);
}

FusedProjector build_reversed_projector(const ModelSpec& spec, int m, double rank_tolerance) {
    return projector_impl(spec, m, true, rank_tolerance);
}

FusedProjector build_su3_projector_oracle(Complex eta, int m) {
    const Complex wm = exp(-eta / 3.0);  // e^{-eta/3}
    const Complex wp = exp(eta / 3.0);
    const Complex ch = cosh(eta / 3.0);
    if (m == 2) {
        Matrix p = Matrix::Zero(9, 9);
        auto add = [&](int hi, int lo, Complex w, Complex norm2) {
            Vector v = Vector::Zero(9);
            v(hi) = 1.0;
            v(lo) = -w;
            p += (v * v.transpose()) / norm2;
        };
        add(0 * 3 + 1, 1 * 3 + 0, wm, 2.0 * wm * ch);  // |12> - e^{-eta/3} |21>
        add(0 * 3 + 2, 2 * 3 + 0, wp, 2.0 * wp * ch);  // |13> - e^{+eta/3} |31>
        add(1 * 3 + 2, 2 * 3 + 1, wm, 2.0 * wm * ch);  // |23> - e^{-eta/3} |32>
        return {2, TensorOperator{{3, 3}, std::move(p)}, 3};
    }
    if (m == 3) {
        Vector v = Vector::Zero(27);
        auto idx = [](int a, int b, int c) { return (a - 1) * 9 + (b - 1) * 3 + (c - 1); };
        v(idx(1, 2, 3)) = 1.0;
        v(idx(1, 3, 2)) = -wm;
        v(idx(2, 1, 3)) = -wm;
        v(idx(2, 3, 1)) = 1.0;
        v(idx(3, 1, 2)) = 1.0;
        v(idx(3, 2, 1)) = -wm;
        Matrix p = (v * v.transpose()) / (6.0 * wm * ch);
        return {3, TensorOperator{{3, 3, 3}, std::move(p)}, 1};
    }
    throw std::invalid_argument("su(3) oracle projectors exist for m = 2 or 3");
}

TransferFamily::TransferFamily(ModelSpec spec, double rank_tolerance) : spec_(std::move(spec)) {
    const int n = spec_.n();
    const Matrix g = spec_.twist_matrix();
    proj_.resize(n + 1);
    twist_.resize(n + 1);
    proj_[1] = Matrix::Identity(n, n);
    twist_[1] = g;
    for (int m = 2; m <= n; ++m) {
        proj_[m] = build_reversed_projector(spec_, m, rank_tolerance).op.matrix();
        twist_[m] = proj_[m] * kron_power(g, m) * proj_[m];
    }
}

TensorOperator TransferFamily::t(int m, Complex u) const {
    const int n = spec_.n();
    const int N = spec_.chain_length();
    if (m < 1 || m > n) throw std::invalid_argument("fused order must lie in 1..n");
    const Matrix& p = proj_[m];
    const long adim = p.rows();

    // Fold site blocks into aux-matrix-valued coefficients C[q, q'],
    // processing sites N..2, then close site 1 through the trace.
    std::vector<Matrix> coeff{Matrix(twist_[m] * p)};
    long qdim = 1;
    for (int j = N; j >= 2; --j) {
        const auto w = site_chain_blocks(spec_, m, u, spec_.thetas()[j - 1]);
        std::vector<Matrix> next(qdim * n * qdim * n);
        for (long q = 0; q < qdim; ++q)
            for (long qp = 0; qp < qdim; ++qp)
                for (int s = 0; s < n; ++s)
                    for (int t = 0; t < n; ++t)
                        next[(s * qdim + q) * qdim * n + (t * qdim + qp)] =
                            coeff[q * qdim + qp] * w[s * n + t];
        coeff = std::move(next);
        qdim *= n;
    }

    const auto w1 = site_chain_blocks(spec_, m, u, spec_.thetas()[0]);
    std::vector<Matrix> closed(n * n);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) closed[s * n + t] = w1[s * n + t] * p;

    const long dim = qdim * n;
    Matrix out(dim, dim);
    for (long q = 0; q < qdim; ++q)
        for (long qp = 0; qp < qdim; ++qp) {
            const Matrix& c = coeff[q * qdim + qp];
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t) {
                    // tr(c . closed) without forming the product.
                    const Matrix& b = closed[s * n + t];
                    Complex acc{0, 0};
                    for (long r = 0; r < adim; ++r) acc += (c.row(r) * b.col(r))(0, 0);
                    out(s * qdim + q, t * qdim + qp) = acc;
                }
        }
    return {std::vector<int>(N, n), std::move(out)};
}

Complex quantum_determinant(const ModelSpec& spec, Complex u) {
    Complex det{1.0, 0.0};
    for (const Complex& theta : spec.thetas()) {
        det *= sinh(u - theta + spec.eta());
        for (int k = 1; k < spec.n(); ++k) det *= sinh(u - theta - double(k) * spec.eta());
    }
    return det;
}

FusionLadderReport verify_fusion_ladder(const TransferFamily& family, Complex commut_u,
                                        Complex commut_v) {
    const ModelSpec& spec = family.spec();
    const int n = spec.n();
    const int N = spec.chain_length();
    FusionLadderReport report;

    auto rel = [](double num, double scale) { return num / (1.0 + scale); };
    auto push = [&](std::string name, Complex point, double value) {
        report.checks.push_back({std::move(name), point, value});
        report.max_residual = std::max(report.max_residual, value);
    };

    for (int j = 0; j < N; ++j) {
        const Complex theta = spec.thetas()[j];
        const Matrix t_here = family.t(1, theta).matrix();
        for (int m = 1; m < n; ++m) {
            const Matrix lhs = t_here * family.t(m, theta - spec.eta()).matrix();
            const Matrix rhs = family.t(m + 1, theta).matrix();
            push("t(theta_j) t_" + std::to_string(m) + "(theta_j - eta) = t_" +
                     std::to_string(m + 1) + "(theta_j)",
                 theta, rel(max_abs(lhs - rhs), std::max(max_abs(lhs), max_abs(rhs))));
        }
        for (int m = 2; m < n; ++m)
            for (int k = 1; k < m; ++k) {
                const Complex point = theta + double(k) * spec.eta();
                const Matrix val = family.t(m, point).matrix();
                const double scale = max_abs(family.t(m, point + Complex{0.45, 0.31}).matrix());
                push("t_" + std::to_string(m) + "(theta_j + " + std::to_string(k) + " eta) = 0",
                     point, rel(max_abs(val), scale));
            }
    }

    std::vector<Matrix> at_u(n + 1), at_v(n + 1);
    for (int m = 1; m <= n; ++m) {
        at_u[m] = family.t(m, commut_u).matrix();
        at_v[m] = family.t(m, commut_v).matrix();
    }

    // Top of the ladder: t_n is the quantum determinant times identity.
    {
        const Matrix& tn = at_u[n];
        const Complex scalar =
            double((n - 1) % 2 == 0 ? 1 : -1) * quantum_determinant(spec, commut_u);
        const Matrix expected = scalar * Matrix::Identity(tn.rows(), tn.cols());
        push("t_n(u) = (-1)^{n-1} Det_q T(u) id", commut_u,
             rel(max_abs(tn - expected), std::abs(scalar)));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            const Matrix& a = at_u[i];
            const Matrix& b = at_v[j];
            push("[t_" + std::to_string(i) + "(u), t_" + std::to_string(j) + "(v)] = 0", commut_u,
                 rel(max_abs(a * b - b * a), max_abs(a * b)));
        }

    return report;
}

}  // namespace spintorus
