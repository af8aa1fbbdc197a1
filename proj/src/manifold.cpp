#include "gqs/manifold.hpp"

#include <algorithm>
#include <cmath>

namespace gqs {

namespace {

// First component eligible as the gauge reference.
std::size_t gauge_reference(const cvector& amps) {
    for (std::size_t a = 0; a < amps.size(); ++a)
        if (std::abs(amps[a]) > kGaugeEps) return a;
    // Unreachable for normalized vectors: max modulus >= 1/sqrt(D).
    return 0;
}

}  // namespace

PureStatePoint::PureStatePoint(cvector amplitudes) : amps_(std::move(amplitudes)) {
    if (amps_.size() < 2) throw InvariantError("pure state needs dimension >= 2");
    double norm2 = 0.0;
    for (const complex& z : amps_) norm2 += std::norm(z);
    if (!(norm2 > 1e-300) || !std::isfinite(norm2))
        throw InvariantError("pure state amplitudes must be nonzero and finite");
    const double inv = 1.0 / std::sqrt(norm2);
    for (complex& z : amps_) z *= inv;

    const std::size_t ref = gauge_reference(amps_);
    const double mod = std::abs(amps_[ref]);
    const complex rot = std::conj(amps_[ref]) / mod;
    for (complex& z : amps_) z *= rot;
    amps_[ref] = complex{mod, 0.0};
}

ProbPhasePoint::ProbPhasePoint(int dim, std::vector<double> probs, std::vector<double> phases)
    : dim_(dim), probs_(std::move(probs)), phases_(std::move(phases)) {
    if (dim_ < 2) throw InvariantError("prob-phase point needs dimension >= 2");
    const auto expected = static_cast<std::size_t>(dim_ - 1);
    if (probs_.size() != expected || phases_.size() != expected)
        throw InvariantError("prob-phase point needs dim-1 probabilities and phases");
    double sum = 0.0;
    for (double& p : probs_) {
        if (p < -kNormTol) throw InvariantError("negative probability coordinate");
        p = std::max(p, 0.0);
        sum += p;
    }
    if (sum > 1.0 + kNormTol)
        throw InvariantError("probability coordinates exceed the simplex");
    for (double& nu : phases_) {
        if (!std::isfinite(nu)) throw InvariantError("non-finite phase coordinate");
        nu = wrap_angle(nu);
    }
}

double ProbPhasePoint::p0() const {
    double sum = 0.0;
    for (double p : probs_) sum += p;
    return std::max(0.0, 1.0 - sum);
}

ProbPhasePoint to_prob_phase(const PureStatePoint& point) {
    const int d = point.dim();
    std::vector<double> probs(d - 1), phases(d - 1);
    for (int a = 1; a < d; ++a) {
        const complex& z = point[static_cast<std::size_t>(a)];
        probs[a - 1] = std::norm(z);
        phases[a - 1] = (std::abs(z) == 0.0) ? 0.0 : wrap_angle(std::arg(z));
    }
    return {d, std::move(probs), std::move(phases)};
}

PureStatePoint from_prob_phase(const ProbPhasePoint& coords) {
    const int d = coords.dim();
    cvector amps(static_cast<std::size_t>(d));
    amps[0] = complex{std::sqrt(coords.p0()), 0.0};
    for (int a = 1; a < d; ++a) {
        const double r = std::sqrt(coords.probs()[a - 1]);
        const double nu = coords.phases()[a - 1];
        amps[static_cast<std::size_t>(a)] = complex{r * std::cos(nu), r * std::sin(nu)};
    }
    return PureStatePoint(std::move(amps));
}

double cp_volume(int dim) {
    double v = 1.0;
    for (int k = 1; k < dim; ++k) v *= std::numbers::pi / k;
    return v;
}

namespace {

// Per-axis subdivision used to estimate a boundary cell's contained fraction;
// 4x4 = 16 sub-samples for the 2-simplex, 3^3 = 27 for the 3-simplex.
int clip_subdivision(int n_axes) { return n_axes <= 1 ? 16 : (n_axes == 2 ? 4 : 3); }

}  // namespace

FsGrid FsGrid::uniform(int dim, int bins_p, int bins_phase) {
    if (dim < 2) throw InvariantError("fs grid needs dimension >= 2");
    if (dim > 4)
        throw InvariantError("fs grid rejected for dimension > 4; use sampling instead");
    if (bins_p < 1 || bins_phase < 1) throw InvariantError("fs grid needs bins >= 1");

    FsGrid g;
    g.dim_ = dim;
    g.bins_p_ = bins_p;
    g.bins_phase_ = bins_phase;

    const int n_axes = dim - 1;
    const double hp = 1.0 / bins_p;

    std::size_t total_p = 1;
    for (int a = 0; a < n_axes; ++a) total_p *= static_cast<std::size_t>(bins_p);

    const int nsub = clip_subdivision(n_axes);
    std::size_t sub_total = 1;
    for (int a = 0; a < n_axes; ++a) sub_total *= static_cast<std::size_t>(nsub);

    std::vector<std::uint32_t> idx(n_axes, 0);
    std::vector<double> centroid(n_axes);
    for (std::size_t flat = 0; flat < total_p; ++flat) {
        // Decode row-major multi-index (axis 0 slowest).
        std::size_t rem = flat;
        for (int a = n_axes - 1; a >= 0; --a) {
            idx[a] = static_cast<std::uint32_t>(rem % bins_p);
            rem /= bins_p;
        }
        double lo_sum = 0.0, hi_sum = 0.0;
        for (int a = 0; a < n_axes; ++a) {
            lo_sum += idx[a] * hp;
            hi_sum += (idx[a] + 1) * hp;
        }
        double fraction = 1.0;
        if (hi_sum <= 1.0 + 1e-14) {
            for (int a = 0; a < n_axes; ++a) centroid[a] = (idx[a] + 0.5) * hp;
        } else if (lo_sum >= 1.0) {
            continue;  // fully outside the simplex
        } else {
            // Midpoint sub-samples inside this cell, counted against the cut.
            std::size_t inside = 0;
            std::fill(centroid.begin(), centroid.end(), 0.0);
            for (std::size_t s = 0; s < sub_total; ++s) {
                std::size_t srem = s;
                double sum = 0.0;
                double pt[3];
                for (int a = n_axes - 1; a >= 0; --a) {
                    const auto sj = static_cast<int>(srem % nsub);
                    srem /= nsub;
                    pt[a] = (idx[a] + (sj + 0.5) / nsub) * hp;
                    sum += pt[a];
                }
                if (sum <= 1.0) {
                    ++inside;
                    for (int a = 0; a < n_axes; ++a) centroid[a] += pt[a];
                }
            }
            if (inside == 0) continue;
            fraction = static_cast<double>(inside) / static_cast<double>(sub_total);
            for (int a = 0; a < n_axes; ++a) centroid[a] /= static_cast<double>(inside);
        }
        double measure = fraction;
        for (int a = 0; a < n_axes; ++a) measure *= hp;
        g.p_centers_.insert(g.p_centers_.end(), centroid.begin(), centroid.end());
        g.p_measures_.push_back(measure);
        g.p_index_.insert(g.p_index_.end(), idx.begin(), idx.end());
    }
    g.p_count_ = g.p_measures_.size();

    g.nu_count_ = 1;
    for (int a = 0; a < n_axes; ++a) g.nu_count_ *= static_cast<std::size_t>(bins_phase);
    g.phase_cell_measure_ = 1.0;
    for (int a = 0; a < n_axes; ++a) g.phase_cell_measure_ *= (kTwoPi / bins_phase) / 2.0;
    return g;
}

ProbPhasePoint FsGrid::center(std::size_t i) const {
    const int n_axes = dim_ - 1;
    const std::size_t ip = i / nu_count_;
    std::size_t inu = i % nu_count_;
    std::vector<double> probs(p_center_ptr(ip), p_center_ptr(ip) + n_axes);
    std::vector<double> phases(n_axes);
    const double hnu = kTwoPi / bins_phase_;
    for (int a = n_axes - 1; a >= 0; --a) {
        phases[a] = (static_cast<double>(inu % bins_phase_) + 0.5) * hnu;
        inu /= bins_phase_;
    }
    return {dim_, std::move(probs), std::move(phases)};
}

double FsGrid::volume(std::size_t i) const {
    return p_measures_[i / nu_count_] * phase_cell_measure_;
}

double FsGrid::total_volume() const {
    double p_total = 0.0;
    for (double m : p_measures_) p_total += m;
    return p_total * phase_cell_measure_ * static_cast<double>(nu_count_);
}

FsCell FsGrid::cell(std::size_t i) const {
    const int n_axes = dim_ - 1;
    const std::size_t ip = i / nu_count_;
    std::size_t inu = i % nu_count_;
    FsCell c;
    c.p_lo.resize(n_axes);
    c.p_hi.resize(n_axes);
    c.nu_lo.resize(n_axes);
    c.nu_hi.resize(n_axes);
    const double hp = 1.0 / bins_p_;
    const double hnu = kTwoPi / bins_phase_;
    for (int a = 0; a < n_axes; ++a) {
        const std::uint32_t j = p_index_[ip * n_axes + a];
        c.p_lo[a] = j * hp;
        c.p_hi[a] = (j + 1) * hp;
    }
    for (int a = n_axes - 1; a >= 0; --a) {
        const auto k = static_cast<double>(inu % bins_phase_);
        inu /= bins_phase_;
        c.nu_lo[a] = k * hnu;
        c.nu_hi[a] = (k + 1) * hnu;
    }
    c.volume = volume(i);
    return c;
}

kernels::StateBatch FsGrid::amplitude_batch() const {
    const int n_axes = dim_ - 1;
    kernels::StateBatch batch(static_cast<std::size_t>(dim_), size());
    cvector amps(static_cast<std::size_t>(dim_));
    const double hnu = kTwoPi / bins_phase_;
    std::vector<double> cosv(static_cast<std::size_t>(bins_phase_));
    std::vector<double> sinv(static_cast<std::size_t>(bins_phase_));
    for (int k = 0; k < bins_phase_; ++k) {
        const double nu = (k + 0.5) * hnu;
        cosv[k] = std::cos(nu);
        sinv[k] = std::sin(nu);
    }
    std::size_t i = 0;
    for (std::size_t ip = 0; ip < p_count_; ++ip) {
        const double* pc = p_center_ptr(ip);
        double p0 = 1.0;
        for (int a = 0; a < n_axes; ++a) p0 -= pc[a];
        const double r0 = std::sqrt(std::max(0.0, p0));
        for (std::size_t inu = 0; inu < nu_count_; ++inu, ++i) {
            amps[0] = complex{r0, 0.0};
            std::size_t rem = inu;
            for (int a = n_axes - 1; a >= 0; --a) {
                const auto k = static_cast<std::size_t>(rem % bins_phase_);
                rem /= bins_phase_;
                const double r = std::sqrt(pc[a]);
                amps[static_cast<std::size_t>(a) + 1] = complex{r * cosv[k], r * sinv[k]};
            }
            batch.set(i, amps);
        }
    }
    return batch;
}

std::vector<double> FsGrid::volumes() const {
    std::vector<double> out(size());
    std::size_t i = 0;
    for (std::size_t ip = 0; ip < p_count_; ++ip) {
        const double v = p_measures_[ip] * phase_cell_measure_;
        for (std::size_t inu = 0; inu < nu_count_; ++inu, ++i) out[i] = v;
    }
    return out;
}

}  // namespace gqs
