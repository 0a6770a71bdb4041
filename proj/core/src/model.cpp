#include "spintorus/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spintorus {

namespace {

using std::exp;
using std::sinh;

constexpr double DEGENERACY_TOL = 1e-12;
constexpr double THETA_COLLISION_TOL = 1e-10;

}  // namespace

ModelSpec::ModelSpec(int n, int chain_length, Complex eta, std::vector<Complex> thetas,
                     TwistClass twist)
    : n_(n), len_(chain_length), eta_(eta), thetas_(std::move(thetas)), twist_(std::move(twist)) {
    if (n_ < 2) throw std::invalid_argument("site dimension n must be >= 2");
    if (len_ < 1) throw std::invalid_argument("chain length N must be >= 1");
    if (static_cast<int>(thetas_.size()) != len_)
        throw std::invalid_argument("expected " + std::to_string(len_) +
                                    " inhomogeneity parameters, got " +
                                    std::to_string(thetas_.size()));
    for (int m = 1; m < n_; ++m)
        if (std::abs(sinh(double(m) * eta_)) < DEGENERACY_TOL)
            throw std::invalid_argument("degenerate crossing parameter: sinh(" +
                                        std::to_string(m) + " eta) vanishes");
    for (int j = 0; j < len_; ++j)
        for (int k = j + 1; k < len_; ++k) {
            if (std::abs(thetas_[j] - thetas_[k]) < THETA_COLLISION_TOL)
                throw std::invalid_argument("inhomogeneity collision between theta_" +
                                            std::to_string(j + 1) + " and theta_" +
                                            std::to_string(k + 1));
            for (int m = -(n_ - 1); m <= n_ - 1; ++m)
                if (std::abs(sinh(thetas_[j] - thetas_[k] + double(m) * eta_)) < DEGENERACY_TOL)
                    throw std::invalid_argument(
                        "degenerate configuration: sinh(theta_" + std::to_string(j + 1) +
                        " - theta_" + std::to_string(k + 1) + " + m eta) vanishes");
        }
    if (!twist_.diag.empty() && static_cast<int>(twist_.diag.size()) != n_)
        throw std::invalid_argument("twist diagonal size must equal n");
    for (const Complex& d : twist_.diag)
        if (std::abs(d) < DEGENERACY_TOL)
            throw std::invalid_argument("degenerate twist diagonal entry");
    if (twist_.power < 0 || twist_.power > n_ - 1)
        throw std::invalid_argument("twist power must lie in 0..n-1");
}

Matrix ModelSpec::twist_matrix() const {
    std::vector<Complex> d = twist_.diag;
    if (d.empty()) d.assign(n_, Complex{1.0, 0.0});
    return build_generic_twist(d, twist_.power, n_).matrix();
}

TensorOperator build_r(int n, Complex eta, Complex u) {
    Matrix r = Matrix::Zero(n * n, n * n);
    const Complex su = sinh(u);
    const Complex sue = sinh(u + eta);
    const Complex se = sinh(eta);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const int diag = k * n + l;
            r(diag, diag) = (k == l) ? sue : su;
            if (k != l) {
                // E^{kl} x E^{lk} entry: row (k,l), column (l,k).
                const int gap = std::abs(l - k);
                const double w = double(n - 2 * gap) / double(n);
                const Complex weight = (k < l) ? exp(w * u) : exp(-w * u);
                r(diag, l * n + k) = se * weight;
            }
        }
    return {{n, n}, std::move(r)};
}

TensorOperator build_r(const ModelSpec& spec, Complex u) {
    return build_r(spec.n(), spec.eta(), u);
}

TensorOperator build_r_derivative(int n, Complex eta, Complex u) {
    Matrix r = Matrix::Zero(n * n, n * n);
    const Complex cu = cosh(u);
    const Complex cue = cosh(u + eta);
    const Complex se = sinh(eta);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            const int diag = k * n + l;
            r(diag, diag) = (k == l) ? cue : cu;
            if (k != l) {
                const int gap = std::abs(l - k);
                const double w = double(n - 2 * gap) / double(n);
                const double sign = (k < l) ? w : -w;
                r(diag, l * n + k) = se * sign * exp(sign * u);
            }
        }
    return {{n, n}, std::move(r)};
}

TensorOperator build_h(int n) {
    Matrix h = Matrix::Zero(n, n);
    const Complex w = exp(Complex{0.0, 2.0 * PI / double(n)});
    Complex p{1.0, 0.0};
    for (int k = 0; k < n; ++k, p *= w) h(k, k) = p;
    return {{n}, std::move(h)};
}

TensorOperator build_g(int n) {
    Matrix g = Matrix::Zero(n, n);
    g(0, n - 1) = 1.0;
    for (int k = 1; k < n; ++k) g(k, k - 1) = 1.0;
    return {{n}, std::move(g)};
}

TensorOperator build_generic_twist(const std::vector<Complex>& diag, int l, int n) {
    if (static_cast<int>(diag.size()) != n)
        throw std::invalid_argument("twist diagonal size must equal n");
    for (const Complex& d : diag)
        if (std::abs(d) < DEGENERACY_TOL) throw std::invalid_argument("degenerate twist diagonal");
    if (l < 0 || l > n - 1) throw std::invalid_argument("twist power must lie in 0..n-1");
    Matrix m = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) m(k, k) = diag[k];
    const Matrix g = build_g(n).matrix();
    for (int p = 0; p < l; ++p) m = m * g;
    return {{n}, std::move(m)};
}

double check_qybe(const ModelSpec& spec, Complex u1, Complex u2, Complex u3) {
    const int n = spec.n();
    const auto r12 = embed(build_r(n, spec.eta(), u1 - u2), {0, 1}, 3, n);
    const auto r13 = embed(build_r(n, spec.eta(), u1 - u3), {0, 2}, 3, n);
    const auto r23 = embed(build_r(n, spec.eta(), u2 - u3), {1, 2}, 3, n);
    return max_abs(r12.matrix() * r13.matrix() * r23.matrix() -
                   r23.matrix() * r13.matrix() * r12.matrix());
}

double check_unitarity(const ModelSpec& spec, Complex u) {
    const int n = spec.n();
    const Matrix p = swap_operator(n).matrix();
    const Matrix r = build_r(n, spec.eta(), u).matrix();
    const Matrix r21 = p * build_r(n, spec.eta(), -u).matrix() * p;
    const Complex rho = -sinh(u + spec.eta()) * sinh(u - spec.eta());
    return max_abs(r * r21 - rho * Matrix::Identity(n * n, n * n));
}

double check_crossing_unitarity(const ModelSpec& spec, Complex u) {
    const int n = spec.n();
    const Complex ne = double(n) * spec.eta();
    const Matrix p = swap_operator(n).matrix();
    const auto r12t = partial_transpose(build_r(n, spec.eta(), u), 0);
    const TensorOperator r21{{n, n}, Matrix(p * build_r(n, spec.eta(), -u - ne).matrix() * p)};
    const auto r21t = partial_transpose(r21, 0);
    const Complex rho = -sinh(u) * sinh(u + ne);
    return max_abs(r12t.matrix() * r21t.matrix() - rho * Matrix::Identity(n * n, n * n));
}

double check_periodicity(const ModelSpec& spec, Complex u) {
    const int n = spec.n();
    const Matrix r = build_r(n, spec.eta(), u).matrix();
    const Matrix rs = build_r(n, spec.eta(), u + Complex{0.0, PI}).matrix();
    const Matrix h = build_h(n).matrix();
    const Matrix hinv = h.inverse();
    const Matrix id = Matrix::Identity(n, n);
    const Matrix h1 = kron(TensorOperator{{n}, h}, TensorOperator{{n}, id}).matrix();
    const Matrix h1i = kron(TensorOperator{{n}, hinv}, TensorOperator{{n}, id}).matrix();
    const Matrix h2 = kron(TensorOperator{{n}, id}, TensorOperator{{n}, h}).matrix();
    const Matrix h2i = kron(TensorOperator{{n}, id}, TensorOperator{{n}, hinv}).matrix();
    const double r1 = max_abs(rs + h1 * r * h1i);
    const double r2 = max_abs(rs + h2i * r * h2);
    return std::max(r1, r2);
}

double check_gauge_invariance(const ModelSpec& spec, Complex u) {
    const int n = spec.n();
    const Matrix r = build_r(n, spec.eta(), u).matrix();
    const Matrix g = spec.twist_matrix();
    const Matrix gg = kron(TensorOperator{{n}, g}, TensorOperator{{n}, g}).matrix();
    return max_abs(r * gg - gg * r);
}

double check_hg_relation(int n) {
    const Matrix h = build_h(n).matrix();
    const Matrix g = build_g(n).matrix();
    const Complex w = exp(Complex{0.0, 2.0 * PI / double(n)});
    return max_abs(h * g - w * g * h);
}

TensorOperator build_monodromy(const ModelSpec& spec, Complex u) {
    const int n = spec.n();
    const int N = spec.chain_length();
    TensorOperator t = TensorOperator::identity(std::vector<int>(N + 1, n));
    for (int j = N; j >= 1; --j)
        t = t * embed(build_r(n, spec.eta(), u - spec.thetas()[j - 1]), {0, j}, N + 1, n);
    return t;
}

TensorOperator build_monodromy_derivative(const ModelSpec& spec, Complex u) {
    const int n = spec.n();
    const int N = spec.chain_length();
    TensorOperator acc = TensorOperator::zero_uniform(N + 1, n);
    for (int d = N; d >= 1; --d) {
        TensorOperator term = TensorOperator::identity(std::vector<int>(N + 1, n));
        for (int j = N; j >= 1; --j) {
            const Complex arg = u - spec.thetas()[j - 1];
            const auto factor = (j == d) ? build_r_derivative(n, spec.eta(), arg)
                                         : build_r(n, spec.eta(), arg);
            term = term * embed(factor, {0, j}, N + 1, n);
        }
        acc = acc + term;
    }
    return acc;
}

double check_yang_baxter_algebra(const ModelSpec& spec, Complex u, Complex v) {
    const int n = spec.n();
    const int N = spec.chain_length();
    const int total = N + 2;  // aux1, aux2, quantum sites
    auto embed_monodromy = [&](Complex arg, int aux) {
        TensorOperator t = TensorOperator::identity(std::vector<int>(total, n));
        for (int j = N; j >= 1; --j)
            t = t * embed(build_r(n, spec.eta(), arg - spec.thetas()[j - 1]), {aux, 1 + j},
                          total, n);
        return t;
    };
    const auto t1 = embed_monodromy(u, 0);
    const auto t2 = embed_monodromy(v, 1);
    const auto r12 = embed(build_r(n, spec.eta(), u - v), {0, 1}, total, n);
    return max_abs(r12.matrix() * t1.matrix() * t2.matrix() -
                   t2.matrix() * t1.matrix() * r12.matrix());
}

TensorOperator build_transfer(const ModelSpec& spec, Complex u) {
    const int n = spec.n();
    const int N = spec.chain_length();
    const auto g0 = embed(TensorOperator{{n}, spec.twist_matrix()}, {0}, N + 1, n);
    return partial_trace(g0 * build_monodromy(spec, u), 0);
}

TensorOperator build_transfer_derivative(const ModelSpec& spec, Complex u) {
    const int n = spec.n();
    const int N = spec.chain_length();
    const auto g0 = embed(TensorOperator{{n}, spec.twist_matrix()}, {0}, N + 1, n);
    return partial_trace(g0 * build_monodromy_derivative(spec, u), 0);
}

TensorOperator build_hamiltonian_local(const ModelSpec& spec) {
    const int n = spec.n();
    const int N = spec.chain_length();
    if (N < 2) throw std::invalid_argument("hamiltonian construction needs N >= 2");
    const Matrix p = swap_operator(n).matrix();
    const Matrix hloc = p * build_r_derivative(n, spec.eta(), Complex{0.0, 0.0}).matrix();
    const TensorOperator hpair{{n, n}, hloc};

    TensorOperator h = TensorOperator::zero_uniform(N, n);
    for (int j = 1; j < N; ++j) h = h + embed(hpair, {j - 1, j}, N, n);

    // Boundary term h_{N,N+1} with the (N+1)-th leg twisted back onto
    // site 1: conjugate the second leg by the twist matrix.
    const Matrix g = spec.twist_matrix();
    const Matrix id = Matrix::Identity(n, n);
    const Matrix conj = kron(TensorOperator{{n}, id}, TensorOperator{{n}, g}).matrix() * hloc *
                        kron(TensorOperator{{n}, id}, TensorOperator{{n}, Matrix(g.inverse())})
                            .matrix();
    h = h + embed(TensorOperator{{n, n}, conj}, {N - 1, 0}, N, n);
    return h;
}

namespace {

// Homogeneous-point transfer matrix or its derivative, assembled inline
// because a ModelSpec cannot carry coinciding thetas.
TensorOperator homogeneous_transfer_impl(const ModelSpec& spec, Complex u, bool derivative) {
    const int n = spec.n();
    const int N = spec.chain_length();
    const auto g0 = embed(TensorOperator{{n}, spec.twist_matrix()}, {0}, N + 1, n);
    if (!derivative) {
        TensorOperator t = TensorOperator::identity(std::vector<int>(N + 1, n));
        for (int j = N; j >= 1; --j)
            t = t * embed(build_r(n, spec.eta(), u), {0, j}, N + 1, n);
        return partial_trace(g0 * t, 0);
    }
    TensorOperator acc = TensorOperator::zero_uniform(N, n);
    for (int d = N; d >= 1; --d) {
        TensorOperator term = TensorOperator::identity(std::vector<int>(N + 1, n));
        for (int j = N; j >= 1; --j) {
            const auto factor = (j == d) ? build_r_derivative(n, spec.eta(), u)
                                         : build_r(n, spec.eta(), u);
            term = term * embed(factor, {0, j}, N + 1, n);
        }
        acc = acc + partial_trace(g0 * term, 0);
    }
    return acc;
}

}  // namespace

TensorOperator build_homogeneous_transfer(const ModelSpec& spec, Complex u) {
    return homogeneous_transfer_impl(spec, u, false);
}

TensorOperator build_hamiltonian_from_transfer(const ModelSpec& spec) {
    const int N = spec.chain_length();
    if (N < 2) throw std::invalid_argument("hamiltonian construction needs N >= 2");
    const Matrix t0 = homogeneous_transfer_impl(spec, Complex{0, 0}, false).matrix();
    const Matrix t0p = homogeneous_transfer_impl(spec, Complex{0, 0}, true).matrix();
    return {std::vector<int>(N, spec.n()), Matrix(sinh(spec.eta()) * t0.inverse() * t0p)};
}

}  // namespace spintorus
