#include "doctest.h"

#include <cmath>

#include "spintorus/decomp.hpp"
#include "spintorus/fusion.hpp"
#include "test_support.hpp"

using namespace spintorus;
using spintorus::testing::Sampler;

namespace {

ModelSpec make_spec(int n, int N, Complex eta, Sampler& s) {
    return ModelSpec(n, N, eta, s.boxes(N));
}

// Dense reference route for t_2(u): build everything on the full
// aux1 x aux2 x quantum space and trace explicitly. Slow but independent
// of the site-blocked contraction in TransferFamily.
Matrix dense_t2(const ModelSpec& spec, Complex u) {
    const int n = spec.n();
    const int N = spec.chain_length();
    const int total = N + 2;
    auto monodromy_on = [&](Complex arg, int aux) {
        TensorOperator t = TensorOperator::identity(std::vector<int>(total, n));
        for (int j = N; j >= 1; --j)
            t = t * embed(build_r(n, spec.eta(), arg - spec.thetas()[j - 1]), {aux, 2 + j - 1},
                          total, n);
        return t;
    };
    const auto p21 = build_reversed_projector(spec, 2).op;
    const auto pbig = embed(p21, {0, 1}, total, n);
    const Matrix g = spec.twist_matrix();
    const auto gg =
        embed(kron(TensorOperator{{n}, g}, TensorOperator{{n}, g}), {0, 1}, total, n);
    const auto fused_twist = pbig * gg * pbig;
    const auto fused_mono = pbig * monodromy_on(u, 0) * monodromy_on(u - spec.eta(), 1) * pbig;
    return partial_trace(partial_trace(fused_twist * fused_mono, 0), 0).matrix();
}

}  // namespace

TEST_CASE("su(3) projector column space matches the closed-form vectors") {
    Sampler s(3);
    const Complex eta{0.6, 0.0};
    auto spec = make_spec(3, 1, eta, s);

    const auto p2 = build_projector(spec, 2);
    CHECK(p2.rank == 3);
    const auto oracle2 = build_su3_projector_oracle(eta, 2);
    CHECK(max_abs(oracle2.op.matrix() * oracle2.op.matrix() - oracle2.op.matrix()) < 1e-12);
    // Real eta: the bilinear projector is the orthogonal one.
    CHECK(max_abs(p2.op.matrix() - oracle2.op.matrix()) < 1e-10);

    const auto p3 = build_projector(spec, 3);
    CHECK(p3.rank == 1);
    const auto oracle3 = build_su3_projector_oracle(eta, 3);
    CHECK(max_abs(p3.op.matrix() - oracle3.op.matrix()) < 1e-10);
}

TEST_CASE("su(3) projector subspace match at complex eta") {
    Sampler s(5);
    const Complex eta{0.55, 0.3};
    auto spec = make_spec(3, 1, eta, s);
    const auto p2 = build_projector(spec, 2);
    const auto oracle2 = build_su3_projector_oracle(eta, 2);
    CHECK(subspace_distance(p2.op.matrix(), oracle2.op.matrix()) < 1e-10);
    // Complex eta: the closed-form projector is oblique, not Hermitian.
    CHECK(max_abs(oracle2.op.matrix() * oracle2.op.matrix() - oracle2.op.matrix()) < 1e-12);
    CHECK(max_abs(oracle2.op.matrix() - oracle2.op.matrix().adjoint()) > 1e-6);
}

TEST_CASE("closed-form vectors are bilinearly normalized") {
    const Complex eta{0.42, 0.17};
    const Complex wm = std::exp(-eta / 3.0);
    const Complex ch = std::cosh(eta / 3.0);
    Vector v = Vector::Zero(9);
    v(1) = 1.0;
    v(3) = -wm;
    const Complex norm2 = v.transpose() * v;
    CHECK(std::abs(norm2 / (2.0 * wm * ch) - 1.0) < 1e-14);
}

TEST_CASE("reversed projector differs from ascending and is its swap conjugate") {
    Sampler s(7);
    auto spec = make_spec(3, 1, Complex{0.6, 0.0}, s);
    const Matrix p12 = build_projector(spec, 2).op.matrix();
    const Matrix p21 = build_reversed_projector(spec, 2).op.matrix();
    const Matrix swap = swap_operator(3).matrix();
    CHECK(max_abs(p21 - swap * p12 * swap) < 1e-10);
    CHECK(max_abs(p21 - p12) > 1e-3);  // q-deformation breaks site symmetry
}

TEST_CASE("projector ranks follow binomial(n, m)") {
    Sampler s(11);
    for (int n : {2, 3, 4, 5}) {
        auto spec = make_spec(n, 1, Complex{0.52, 0.11}, s);
        for (int m = 2; m <= n; ++m)
            CHECK(build_projector(spec, m).rank == binomial(n, m));
    }
}

TEST_CASE("fused projectors commute with the diagonal twist product") {
    Sampler s(13);
    for (int n : {3, 4}) {
        auto spec = make_spec(n, 1, Complex{0.6, 0.2}, s);
        for (int m = 2; m <= n; ++m) {
            const Matrix p = build_reversed_projector(spec, m).op.matrix();
            Matrix gk = spec.twist_matrix();
            TensorOperator acc{{n}, gk};
            for (int i = 1; i < m; ++i) acc = kron(acc, TensorOperator{{n}, gk});
            CHECK(max_abs(commutator(p, acc.matrix())) < 1e-11);
        }
    }
}

TEST_CASE("family order 1 equals the plain transfer matrix") {
    Sampler s(17);
    auto spec = make_spec(3, 2, Complex{0.6, 0.1}, s);
    TransferFamily family(spec);
    for (int k = 0; k < 3; ++k) {
        const Complex u = s.box();
        CHECK(max_abs(family.t(1, u).matrix() - build_transfer(spec, u).matrix()) < 1e-12);
    }
}

TEST_CASE("fused t_2 matches the dense reference construction") {
    Sampler s(19);
    for (int n : {2, 3}) {
        auto spec = make_spec(n, 2, Complex{0.57, 0.13}, s);
        TransferFamily family(spec);
        for (int k = 0; k < 2; ++k) {
            const Complex u = s.box();
            CHECK(max_abs(family.t(2, u).matrix() - dense_t2(spec, u)) < 1e-11);
        }
    }
}

TEST_CASE("fusion identities at the inhomogeneity points, su(3)") {
    Sampler s(23);
    auto spec = make_spec(3, 2, Complex{0.61, 0.0}, s);
    TransferFamily family(spec);
    for (int j = 0; j < 2; ++j) {
        const Complex theta = spec.thetas()[j];
        const Matrix prod =
            family.t(1, theta).matrix() * family.t(1, theta - spec.eta()).matrix();
        CHECK(max_abs(prod - family.t(2, theta).matrix()) / (1 + max_abs(prod)) < 1e-9);

        const Matrix prod2 =
            family.t(1, theta).matrix() * family.t(2, theta - spec.eta()).matrix();
        const Complex det = quantum_determinant(spec, theta);
        CHECK(max_abs(prod2 - det * Matrix::Identity(9, 9)) / std::abs(det) < 1e-9);

        CHECK(max_abs(family.t(2, theta + spec.eta()).matrix()) < 1e-9);
    }
}

TEST_CASE("quantum determinant zeros and factorization") {
    Sampler s(29);
    auto spec = make_spec(3, 2, Complex{0.6, 0.15}, s);
    for (int k = 1; k <= 2; ++k)
        CHECK(std::abs(quantum_determinant(spec, spec.thetas()[0] + double(k) * spec.eta())) <
              1e-12);

    auto a = [&](Complex u) {
        Complex p{1, 0};
        for (auto th : spec.thetas()) p *= std::sinh(u - th + spec.eta());
        return p;
    };
    auto d = [&](Complex u) {
        Complex p{1, 0};
        for (auto th : spec.thetas()) p *= std::sinh(u - th);
        return p;
    };
    const Complex u = s.box();
    const Complex expected = a(u) * d(u - spec.eta()) * d(u - 2.0 * spec.eta());
    CHECK(std::abs(quantum_determinant(spec, u) - expected) < 1e-12);
}

TEST_CASE("fusion ladder report, su(3) chains") {
    Sampler s(31);
    for (int N : {2, 3}) {
        auto spec = make_spec(3, N, Complex{0.6, 0.07}, s);
        TransferFamily family(spec);
        const auto report = verify_fusion_ladder(family, s.box(), s.box());
        CHECK(report.max_residual < 1e-9);
        CHECK(!report.checks.empty());
    }
}

TEST_CASE("fusion ladder report, su(4) short chain") {
    Sampler s(37);
    auto spec = make_spec(4, 1, Complex{0.63, 0.05}, s);
    TransferFamily family(spec);
    const auto report = verify_fusion_ladder(family, s.box(), s.box());
    CHECK(report.max_residual < 1e-8);
}
