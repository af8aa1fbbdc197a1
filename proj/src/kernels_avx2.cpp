#include <immintrin.h>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>

#include "kernels_detail.hpp"

namespace gqs::kernels::detail::avx2 {

namespace {

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// Vector body of the shared Cephes-style exp; see kernels_detail.hpp.
inline __m256d exp_pd(__m256d x) {
    const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(kLog2E)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fmadd_pd(n, _mm256_set1_pd(-kLn2Hi), x);
    r = _mm256_fmadd_pd(n, _mm256_set1_pd(-kLn2Lo), r);
    const __m256d r2 = _mm256_mul_pd(r, r);

    __m256d p = _mm256_fmadd_pd(_mm256_set1_pd(kExpP0), r2, _mm256_set1_pd(kExpP1));
    p = _mm256_fmadd_pd(p, r2, _mm256_set1_pd(kExpP2));
    p = _mm256_mul_pd(p, r);
    __m256d q = _mm256_fmadd_pd(_mm256_set1_pd(kExpQ0), r2, _mm256_set1_pd(kExpQ1));
    q = _mm256_fmadd_pd(q, r2, _mm256_set1_pd(kExpQ2));
    q = _mm256_fmadd_pd(q, r2, _mm256_set1_pd(kExpQ3));

    __m256d y = _mm256_add_pd(
        _mm256_set1_pd(1.0),
        _mm256_mul_pd(_mm256_set1_pd(2.0), _mm256_div_pd(p, _mm256_sub_pd(q, p))));

    // 2^n through the exponent bits; n fits in int32 after the range clamp.
    const __m128i ni = _mm256_cvtpd_epi32(n);
    const __m256i shift = _mm256_slli_epi64(_mm256_cvtepi32_epi64(ni), 52);
    y = _mm256_castsi256_pd(_mm256_add_epi64(_mm256_castpd_si256(y), shift));

    // Range and NaN handling, applied in the same priority as the scalar path.
    const __m256d inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    y = _mm256_blendv_pd(y, inf, _mm256_cmp_pd(x, _mm256_set1_pd(kExpHi), _CMP_GT_OQ));
    y = _mm256_blendv_pd(y, _mm256_setzero_pd(),
                         _mm256_cmp_pd(x, _mm256_set1_pd(kExpLo), _CMP_LT_OQ));
    y = _mm256_blendv_pd(y, x, _mm256_cmp_pd(x, x, _CMP_UNORD_Q));
    return y;
}

// Scalar tail identical to detail::scalar::exp_core.
inline double exp_tail(double x) {
    if (std::isnan(x)) return x;
    if (x > kExpHi) return std::numeric_limits<double>::infinity();
    if (x < kExpLo) return 0.0;
    const double n = std::nearbyint(x * kLog2E);
    double r = std::fma(n, -kLn2Hi, x);
    r = std::fma(n, -kLn2Lo, r);
    const double r2 = r * r;
    double p = std::fma(kExpP0, r2, kExpP1);
    p = std::fma(p, r2, kExpP2);
    p *= r;
    double q = std::fma(kExpQ0, r2, kExpQ1);
    q = std::fma(q, r2, kExpQ2);
    q = std::fma(q, r2, kExpQ3);
    double y = 1.0 + 2.0 * (p / (q - p));
    const auto ni = static_cast<std::int64_t>(n);
    std::uint64_t bits;
    std::memcpy(&bits, &y, sizeof bits);
    bits += static_cast<std::uint64_t>(ni) << 52;
    std::memcpy(&y, &bits, sizeof y);
    return y;
}

}  // namespace

double sum(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i];
    return s;
}

double dot(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
    double s = hsum(acc);
    for (; i < n; ++i) s = std::fma(x[i], y[i], s);
    return s;
}

void exp_scale(const double* x, double a, double* out, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, exp_pd(_mm256_mul_pd(av, _mm256_loadu_pd(x + i))));
    for (; i < n; ++i) out[i] = exp_tail(a * x[i]);
}

void quadratic_form(BatchView zs, const std::complex<double>* m, double* out) {
    const std::size_t d = zs.dim, n = zs.n;
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
        const double* ra = zs.re + a * n;
        const double* ia = zs.im + a * n;
        const double maa = m[a * d + a].real();
        const __m256d maav = _mm256_set1_pd(maa);
        std::size_t i = 0;
        for (; i + 4 <= n; i += 4) {
            const __m256d rav = _mm256_loadu_pd(ra + i);
            const __m256d iav = _mm256_loadu_pd(ia + i);
            const __m256d nrm = _mm256_fmadd_pd(rav, rav, _mm256_mul_pd(iav, iav));
            _mm256_storeu_pd(out + i, _mm256_fmadd_pd(maav, nrm, _mm256_loadu_pd(out + i)));
        }
        for (; i < n; ++i)
            out[i] = std::fma(maa, std::fma(ra[i], ra[i], ia[i] * ia[i]), out[i]);
        for (std::size_t b = a + 1; b < d; ++b) {
            const double* rb = zs.re + b * n;
            const double* ib = zs.im + b * n;
            const double cr = 2.0 * m[a * d + b].real();
            const double ci = -2.0 * m[a * d + b].imag();
            const __m256d crv = _mm256_set1_pd(cr);
            const __m256d civ = _mm256_set1_pd(ci);
            i = 0;
            for (; i + 4 <= n; i += 4) {
                const __m256d rav = _mm256_loadu_pd(ra + i);
                const __m256d iav = _mm256_loadu_pd(ia + i);
                const __m256d rbv = _mm256_loadu_pd(rb + i);
                const __m256d ibv = _mm256_loadu_pd(ib + i);
                const __m256d xv = _mm256_fmadd_pd(rav, rbv, _mm256_mul_pd(iav, ibv));
                const __m256d yv =
                    _mm256_fmadd_pd(rav, ibv, _mm256_sub_pd(_mm256_setzero_pd(),
                                                            _mm256_mul_pd(iav, rbv)));
                const __m256d t = _mm256_fmadd_pd(civ, yv, _mm256_loadu_pd(out + i));
                _mm256_storeu_pd(out + i, _mm256_fmadd_pd(crv, xv, t));
            }
            for (; i < n; ++i) {
                const double x = std::fma(ra[i], rb[i], ia[i] * ib[i]);
                const double y = std::fma(ra[i], ib[i], -(ia[i] * rb[i]));
                out[i] = std::fma(cr, x, std::fma(ci, y, out[i]));
            }
        }
    }
}

void weighted_outer(BatchView zs, const double* w, std::complex<double>* acc) {
    const std::size_t d = zs.dim, n = zs.n;
    for (std::size_t a = 0; a < d; ++a) {
        const double* ra = zs.re + a * n;
        const double* ia = zs.im + a * n;
        for (std::size_t b = a; b < d; ++b) {
            const double* rb = zs.re + b * n;
            const double* ib = zs.im + b * n;
            __m256d sre = _mm256_setzero_pd();
            __m256d sim = _mm256_setzero_pd();
            std::size_t i = 0;
            for (; i + 4 <= n; i += 4) {
                const __m256d wv = _mm256_loadu_pd(w + i);
                const __m256d rav = _mm256_loadu_pd(ra + i);
                const __m256d iav = _mm256_loadu_pd(ia + i);
                const __m256d rbv = _mm256_loadu_pd(rb + i);
                const __m256d ibv = _mm256_loadu_pd(ib + i);
                sre = _mm256_fmadd_pd(
                    wv, _mm256_fmadd_pd(rav, rbv, _mm256_mul_pd(iav, ibv)), sre);
                if (a != b)
                    sim = _mm256_fmadd_pd(
                        wv,
                        _mm256_fmadd_pd(iav, rbv, _mm256_sub_pd(_mm256_setzero_pd(),
                                                                _mm256_mul_pd(rav, ibv))),
                        sim);
            }
            double re_acc = hsum(sre), im_acc = (a != b) ? hsum(sim) : 0.0;
            for (; i < n; ++i) {
                re_acc = std::fma(w[i], std::fma(ra[i], rb[i], ia[i] * ib[i]), re_acc);
                if (a != b)
                    im_acc = std::fma(w[i], std::fma(ia[i], rb[i], -(ra[i] * ib[i])), im_acc);
            }
            acc[a * d + b] += {re_acc, im_acc};
            if (a != b) acc[b * d + a] += {re_acc, -im_acc};
        }
    }
}

}  // namespace gqs::kernels::detail::avx2
