#pragma once

#include "lie_algebra.hpp"

#include <cstdint>
#include <random>

namespace liecg {

/// Deterministic sampling: mt19937_64 is pinned by the standard, and the
/// draws below avoid the library distributions (whose output is not), so the
/// same seed yields the same stream on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    int uniform(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational(int max_num = 3, int max_den = 2) {
        int num = uniform(-max_num, max_num);
        int den = uniform(1, max_den);
        return Rational(num, den);
    }

    Rational nonzero_rational(int max_num = 3, int max_den = 2) {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (r != 0) return r;
        }
    }

    Functional functional(std::size_t dim, int max_num = 3, int max_den = 2) {
        Vec v = zero_vec(dim);
        for (auto& x : v) x = rational(max_num, max_den);
        return Functional{v};
    }

    /// Functional with prescribed values pinned nonzero at one coordinate.
    Functional functional_nonzero_at(std::size_t dim, std::size_t at, int max_num = 3,
                                     int max_den = 2) {
        Functional f = functional(dim, max_num, max_den);
        if (f.coords[at] == 0) f.coords[at] = nonzero_rational(max_num, max_den);
        return f;
    }

    /// Random functional inside the annihilator of a subspace (rows span the
    /// subspace to kill).
    Functional functional_killing(const Mat& rows, std::size_t dim, int max_num = 2) {
        Mat constraints = rows;
        Mat basis = nullspace(std::move(constraints), dim);
        Vec v = zero_vec(dim);
        for (const auto& b : basis) add_scaled(v, b, rational(max_num, 1));
        return Functional{v};
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace liecg
