#include "gqs/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>

#include "kernels_detail.hpp"

namespace gqs::kernels {

namespace detail::scalar {

double sum(const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i];
    return acc;
}

double dot(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc = std::fma(x[i], y[i], acc);
    return acc;
}

namespace {

// Scalar mirror of the SIMD exp: identical polynomial, identical fma order.
double exp_core(double x) {
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

    // Scale by 2^n through the exponent bits; |n| <= 1075 here.
    const auto ni = static_cast<std::int64_t>(n);
    std::uint64_t bits;
    std::memcpy(&bits, &y, sizeof bits);
    bits += static_cast<std::uint64_t>(ni) << 52;
    std::memcpy(&y, &bits, sizeof y);
    return y;
}

}  // namespace

void exp_scale(const double* x, double a, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = exp_core(a * x[i]);
}

void quadratic_form(BatchView zs, const std::complex<double>* m, double* out) {
    const std::size_t d = zs.dim, n = zs.n;
    for (std::size_t i = 0; i < n; ++i) out[i] = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
        const double* ra = zs.re + a * n;
        const double* ia = zs.im + a * n;
        const double maa = m[a * d + a].real();
        for (std::size_t i = 0; i < n; ++i)
            out[i] = std::fma(maa, std::fma(ra[i], ra[i], ia[i] * ia[i]), out[i]);
        for (std::size_t b = a + 1; b < d; ++b) {
            const double* rb = zs.re + b * n;
            const double* ib = zs.im + b * n;
            // 2 Re(conj(z_a) m_ab z_b)
            const double cr = 2.0 * m[a * d + b].real();
            const double ci = -2.0 * m[a * d + b].imag();
            for (std::size_t i = 0; i < n; ++i) {
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
            double sre = 0.0, sim = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                sre = std::fma(w[i], std::fma(ra[i], rb[i], ia[i] * ib[i]), sre);
                if (a != b)
                    sim = std::fma(w[i], std::fma(ia[i], rb[i], -(ra[i] * ib[i])), sim);
            }
            acc[a * d + b] += {sre, sim};
            if (a != b) acc[b * d + a] += {sre, -sim};
        }
    }
}

}  // namespace detail::scalar

namespace {

const Kernels kScalar = {
    detail::scalar::sum,
    detail::scalar::dot,
    detail::scalar::exp_scale,
    detail::scalar::quadratic_form,
    detail::scalar::weighted_outer,
    "scalar",
};

#if GQS_HAVE_AVX2
const Kernels kAvx2 = {
    detail::avx2::sum,
    detail::avx2::dot,
    detail::avx2::exp_scale,
    detail::avx2::quadratic_form,
    detail::avx2::weighted_outer,
    "avx2",
};
#endif

std::atomic<const Kernels*> g_active{nullptr};

}  // namespace

Isa detect() {
#if GQS_HAVE_AVX2
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::Avx2;
#endif
    return Isa::Scalar;
}

bool available(Isa isa) {
    if (isa == Isa::Scalar) return true;
#if GQS_HAVE_AVX2
    if (isa == Isa::Avx2) return detect() == Isa::Avx2;
#endif
    return false;
}

const Kernels& get(Isa isa) {
#if GQS_HAVE_AVX2
    if (isa == Isa::Avx2) return kAvx2;
#else
    (void)isa;
#endif
    return kScalar;
}

const Kernels& active() {
    const Kernels* k = g_active.load(std::memory_order_acquire);
    if (k == nullptr) {
        k = &get(detect());
        g_active.store(k, std::memory_order_release);
    }
    return *k;
}

void set_active(Isa isa) { g_active.store(&get(isa), std::memory_order_release); }

const char* isa_name(Isa isa) { return get(isa).name; }

}  // namespace gqs::kernels
