#ifndef SPINTORUS_TYPES_HPP
#define SPINTORUS_TYPES_HPP

#include <complex>
#include <Eigen/Dense>

namespace spintorus {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr Complex I_UNIT{0.0, 1.0};
inline constexpr double PI = 3.14159265358979323846;

/// Largest absolute entry; the residual norm used throughout.
inline double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline long ipow(int base, int exp) {
    long r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace spintorus

#endif
