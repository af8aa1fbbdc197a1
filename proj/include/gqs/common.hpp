#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gqs {

using complex = std::complex<double>;
using cvector = std::vector<complex>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Violation of a documented type invariant or operation precondition
// (dimension mismatch, non-Hermitian input, weights not summing to one, ...).
class InvariantError : public std::runtime_error {
public:
    explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// Wraps an angle into [0, 2pi).
inline double wrap_angle(double nu) {
    nu = std::fmod(nu, kTwoPi);
    if (nu < 0.0) nu += kTwoPi;
    if (nu >= kTwoPi) nu = 0.0;  // fmod can round up to 2pi
    return nu;
}

// Seeded RNG with hand-rolled variate transforms so that streams are
// reproducible independent of the standard library's distribution internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = kTwoPi * uniform();
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    complex gaussian_complex() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

    // Index in [0, n) from the inverse CDF of the given nonnegative weights.
    std::size_t categorical(const std::vector<double>& cumulative) {
        const double u = uniform() * cumulative.back();
        std::size_t lo = 0, hi = cumulative.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (cumulative[mid] <= u) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        return lo;
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace gqs
