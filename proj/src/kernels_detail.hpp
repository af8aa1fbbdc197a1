#pragma once

#include "gqs/kernels.hpp"

// Shared between the scalar and SIMD kernel translation units. The exp
// constants are the classic Cephes double-precision rational approximation:
// exp(x) = 2^n * (1 + 2 r P(r^2) / (Q(r^2) - r P(r^2))) with r = x - n ln 2.
// Both variants evaluate it with the same operation order so results match
// bit for bit.

namespace gqs::kernels::detail {

inline constexpr double kExpHi = 709.436;    // above this 2^n overflows
inline constexpr double kExpLo = -708.395;   // below this the result underflows to 0
inline constexpr double kLog2E = 1.4426950408889634073599;
inline constexpr double kLn2Hi = 6.93145751953125e-1;
inline constexpr double kLn2Lo = 1.42860682030941723212e-6;

inline constexpr double kExpP0 = 1.26177193074810590878e-4;
inline constexpr double kExpP1 = 3.02994407707441961300e-2;
inline constexpr double kExpP2 = 9.99999999999999999910e-1;
inline constexpr double kExpQ0 = 3.00198505138664455042e-6;
inline constexpr double kExpQ1 = 2.52448340349684104192e-3;
inline constexpr double kExpQ2 = 2.27265548208155028766e-1;
inline constexpr double kExpQ3 = 2.00000000000000000005e0;

namespace scalar {
double sum(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
void exp_scale(const double* x, double a, double* out, std::size_t n);
void quadratic_form(BatchView zs, const std::complex<double>* m, double* out);
void weighted_outer(BatchView zs, const double* w, std::complex<double>* acc);
}  // namespace scalar

#if GQS_HAVE_AVX2
namespace avx2 {
double sum(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
void exp_scale(const double* x, double a, double* out, std::size_t n);
void quadratic_form(BatchView zs, const std::complex<double>* m, double* out);
void weighted_outer(BatchView zs, const double* w, std::complex<double>* acc);
}  // namespace avx2
#endif

}  // namespace gqs::kernels::detail
