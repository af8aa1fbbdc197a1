#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace gqs::kernels {

// Structure-of-arrays view over a batch of n complex state vectors of
// dimension dim. Component a of point i lives at re[a * n + i] (same for im),
// so the SIMD variants stream contiguously across the point index.
struct BatchView {
    const double* re = nullptr;
    const double* im = nullptr;
    std::size_t dim = 0;
    std::size_t n = 0;
};

// Owning SoA storage for a batch of state vectors.
class StateBatch {
public:
    StateBatch(std::size_t dim, std::size_t n)
        : dim_(dim), n_(n), re_(dim * n, 0.0), im_(dim * n, 0.0) {}

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return n_; }

    void set(std::size_t i, const std::complex<double>* amps) {
        for (std::size_t a = 0; a < dim_; ++a) {
            re_[a * n_ + i] = amps[a].real();
            im_[a * n_ + i] = amps[a].imag();
        }
    }

    void set(std::size_t i, const std::vector<std::complex<double>>& amps) { set(i, amps.data()); }

    BatchView view() const { return {re_.data(), im_.data(), dim_, n_}; }

private:
    std::size_t dim_, n_;
    std::vector<double> re_, im_;
};

// Data-parallel inner loops behind the quadrature and ensemble reductions.
// Each entry has a scalar reference implementation and may have SIMD
// variants; the variants are equivalence-tested against the reference.
struct Kernels {
    // sum_i x[i]
    double (*sum)(const double* x, std::size_t n);
    // sum_i x[i] * y[i]
    double (*dot)(const double* x, const double* y, std::size_t n);
    // out[i] = exp(a * x[i]); bit-identical between scalar and SIMD variants
    void (*exp_scale)(const double* x, double a, double* out, std::size_t n);
    // out[i] = Re(z_i^dag M z_i) with M a row-major dim x dim Hermitian matrix
    void (*quadratic_form)(BatchView zs, const std::complex<double>* m, double* out);
    // acc[a*dim+b] += sum_i w[i] * z_a(i) * conj(z_b(i)); acc is row-major
    void (*weighted_outer)(BatchView zs, const double* w, std::complex<double>* acc);
    const char* name;
};

enum class Isa { Scalar, Avx2 };

// Best instruction set supported by the running CPU.
Isa detect();

// True when the binary carries a variant for the given ISA and the CPU can
// run it.
bool available(Isa isa);

const Kernels& get(Isa isa);

// Process-wide selection; defaults to detect() on first use.
const Kernels& active();
void set_active(Isa isa);
const char* isa_name(Isa isa);

}  // namespace gqs::kernels
