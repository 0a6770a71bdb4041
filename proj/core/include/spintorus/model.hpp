#ifndef SPINTORUS_MODEL_HPP
#define SPINTORUS_MODEL_HPP

#include <vector>

#include "spintorus/tensor.hpp"

namespace spintorus {

/// Twist class D.g^l: a non-degenerate diagonal matrix times a power of
/// the cyclic-shift matrix g. D = id, l = 1 is the anti-periodic torus.
struct TwistClass {
    std::vector<Complex> diag;  // empty means identity diagonal
    int power = 1;
};

/// One spin-torus instance: site dimension n, chain length N, crossing
/// parameter eta, inhomogeneities theta_j, and the boundary twist.
///
/// Construction validates that eta and the thetas stay away from the
/// degenerate configurations the operator identities require: sinh(m.eta)
/// nonzero for m = 1..n-1, thetas pairwise distinct, and
/// sinh(theta_j - theta_k + m.eta) nonzero for |m| < n.
class ModelSpec {
public:
    ModelSpec(int n, int chain_length, Complex eta, std::vector<Complex> thetas,
              TwistClass twist = {});

    int n() const { return n_; }
    int chain_length() const { return len_; }
    Complex eta() const { return eta_; }
    const std::vector<Complex>& thetas() const { return thetas_; }
    const TwistClass& twist() const { return twist_; }

    /// n x n matrix D.g^l of this spec's twist.
    Matrix twist_matrix() const;

private:
    int n_;
    int len_;
    Complex eta_;
    std::vector<Complex> thetas_;
    TwistClass twist_;
};

/// Trigonometric R-matrix in principal gradation as a 2-site operator:
/// sinh(u+eta) on the aligned diagonal, sinh(u) on the mixed diagonal,
/// and sinh(eta) e^{+-(n-2|l-k|)u/n} on the exchange entries.
TensorOperator build_r(int n, Complex eta, Complex u);
TensorOperator build_r(const ModelSpec& spec, Complex u);

/// Entry-wise derivative of build_r with respect to u.
TensorOperator build_r_derivative(int n, Complex eta, Complex u);

/// Diagonal matrix diag(1, w, ..., w^{n-1}) with w = e^{2 i pi / n}.
TensorOperator build_h(int n);
/// Cyclic shift with the single 1 in the top-right corner; g^n = 1.
TensorOperator build_g(int n);
/// D.g^l; throws if D is degenerate or l is out of range.
TensorOperator build_generic_twist(const std::vector<Complex>& diag, int l, int n);

/// Max-entry residual of the Yang-Baxter equation
/// R12(u1-u2) R13(u1-u3) R23(u2-u3) = R23 R13 R12 on three sites.
double check_qybe(const ModelSpec& spec, Complex u1, Complex u2, Complex u3);

/// Residual of R12(u) R21(-u) = -sinh(u+eta) sinh(u-eta) id.
double check_unitarity(const ModelSpec& spec, Complex u);

/// Residual of R12^{t1}(u) R21^{t1}(-u-n.eta) = -sinh(u) sinh(u+n.eta) id.
double check_crossing_unitarity(const ModelSpec& spec, Complex u);

/// Residual of R12(u+i.pi) = -h1 R12(u) h1^{-1} = -h2^{-1} R12(u) h2
/// (the larger of the two conjugation forms).
double check_periodicity(const ModelSpec& spec, Complex u);

/// Residual of R12(u) G1 G2 = G1 G2 R12(u) for this spec's twist.
double check_gauge_invariance(const ModelSpec& spec, Complex u);

/// Max-entry norm of h.g - w_n.g.h.
double check_hg_relation(int n);

/// Row-to-row monodromy T0(u) = R0N(u-theta_N) ... R01(u-theta_1) as an
/// operator on N+1 sites with the auxiliary space first (site 0).
TensorOperator build_monodromy(const ModelSpec& spec, Complex u);
TensorOperator build_monodromy_derivative(const ModelSpec& spec, Complex u);

/// Residual of the Yang-Baxter algebra
/// R12(u-v) T1(u) T2(v) = T2(v) T1(u) R12(u-v) on aux1 x aux2 x quantum.
double check_yang_baxter_algebra(const ModelSpec& spec, Complex u, Complex v);

/// Twisted transfer matrix t(u) = tr_0 { G_0 T_0(u) } on the N quantum sites.
TensorOperator build_transfer(const ModelSpec& spec, Complex u);
TensorOperator build_transfer_derivative(const ModelSpec& spec, Complex u);

/// Transfer matrix at the homogeneous point (all thetas = 0), which a
/// ModelSpec cannot represent directly; used by the Hamiltonian routes.
TensorOperator build_homogeneous_transfer(const ModelSpec& spec, Complex u);

/// Sum of local two-site terms d/du { P R(u) } |_{u=0} with the boundary
/// term closed through the twist: the site-(N+1) leg is the g-conjugated
/// first site. Uses the homogeneous point (all thetas = 0) regardless of
/// the spec's inhomogeneities.
TensorOperator build_hamiltonian_local(const ModelSpec& spec);

/// sinh(eta) t(0)^{-1} t'(0) at the homogeneous point.
TensorOperator build_hamiltonian_from_transfer(const ModelSpec& spec);

}  // namespace spintorus

#endif
