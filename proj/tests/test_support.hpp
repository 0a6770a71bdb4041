#ifndef SPINTORUS_TEST_SUPPORT_HPP
#define SPINTORUS_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "spintorus/tensor.hpp"

namespace spintorus::testing {

// Fixed-seed sampler so every run sees the same draws.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed = 42) : gen_(seed) {}

    double real(double lo = -1.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }

    Complex box(double radius = 1.0) { return {radius * real(), radius * real()}; }

    std::vector<Complex> boxes(int count, double radius = 1.0) {
        std::vector<Complex> v(count);
        for (auto& z : v) z = box(radius);
        return v;
    }

    Matrix matrix(int rows, int cols) {
        Matrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = box();
        return m;
    }

    TensorOperator tensor_op(const std::vector<int>& dims) {
        long d = 1;
        for (int x : dims) d *= x;
        return {dims, matrix(d, d)};
    }

    std::mt19937_64& gen() { return gen_; }

private:
    std::mt19937_64 gen_;
};

}  // namespace spintorus::testing

#endif
