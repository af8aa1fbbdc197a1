#pragma once

#include <memory>

#include "gqs/common.hpp"
#include "gqs/kernels.hpp"

namespace gqs {

inline constexpr double kNormTol = 1e-12;
inline constexpr double kGaugeEps = 1e-9;

// A point of CP^{D-1} held as a normalized amplitude vector in canonical
// gauge: the first component whose modulus exceeds kGaugeEps is real and
// nonnegative. Construction normalizes and gauge-fixes, so two amplitude
// vectors describing the same ray compare equal entrywise.
class PureStatePoint {
public:
    explicit PureStatePoint(cvector amplitudes);

    int dim() const { return static_cast<int>(amps_.size()); }
    const cvector& amplitudes() const { return amps_; }
    const complex& operator[](std::size_t i) const { return amps_[i]; }

private:
    cvector amps_;
};

// Probability + phase coordinates on CP^{D-1}: D-1 probabilities p_1..p_{D-1}
// with p_0 = 1 - sum implicit, and D-1 phases in [0, 2pi) relative to the
// gauge reference component.
class ProbPhasePoint {
public:
    ProbPhasePoint(int dim, std::vector<double> probs, std::vector<double> phases);

    int dim() const { return dim_; }
    const std::vector<double>& probs() const { return probs_; }
    const std::vector<double>& phases() const { return phases_; }
    double p0() const;

private:
    int dim_;
    std::vector<double> probs_;
    std::vector<double> phases_;
};

// Rectangular cell in (p_1.., nu_1..) coordinates carrying its Fubini-Study
// volume. For cells clipped by the probability simplex the volume includes
// the contained fraction and the center is the centroid of the contained part.
struct FsCell {
    std::vector<double> p_lo, p_hi;
    std::vector<double> nu_lo, nu_hi;
    double volume = 0.0;
};

// Midpoint-rule grid over the simplex x torus coordinate patch of CP^{D-1}.
// Cells are ordered probability-block-major: index = ip * phase_cells + inu,
// with each block in row-major order over its component axes.
class FsGrid {
public:
    // Throws for dim < 2, dim > 4 or bins < 1. Cells straddling the simplex
    // boundary are clipped by a sub-sampled contained fraction.
    static FsGrid uniform(int dim, int bins_p, int bins_phase);

    int dim() const { return dim_; }
    int bins_p() const { return bins_p_; }
    int bins_phase() const { return bins_phase_; }
    std::size_t size() const { return p_count_ * nu_count_; }
    std::size_t p_cells() const { return p_count_; }
    std::size_t phase_cells() const { return nu_count_; }

    ProbPhasePoint center(std::size_t i) const;
    double volume(std::size_t i) const;
    double total_volume() const;
    FsCell cell(std::size_t i) const;

    // Amplitude vectors at all cell centers, SoA for the kernels.
    kernels::StateBatch amplitude_batch() const;
    // Per-cell volumes in cell order.
    std::vector<double> volumes() const;

private:
    FsGrid() = default;

    const double* p_center_ptr(std::size_t ip) const {
        return p_centers_.data() + ip * static_cast<std::size_t>(dim_ - 1);
    }

    int dim_ = 0, bins_p_ = 0, bins_phase_ = 0;
    std::size_t p_count_ = 0, nu_count_ = 0;
    // Per probability-cell: centroid coordinates (dim-1 each), flat measure x
    // contained fraction, and the cell's multi-index for edge reconstruction.
    std::vector<double> p_centers_;
    std::vector<double> p_measures_;
    std::vector<std::uint32_t> p_index_;
    double phase_cell_measure_ = 0.0;  // (2pi/bins)^{dim-1} / 2^{dim-1}
};

// Coordinate maps between the two representations. to_prob_phase reports
// phases in the canonical gauge (the reference component has phase zero);
// zero amplitudes get phase 0 by convention.
ProbPhasePoint to_prob_phase(const PureStatePoint& point);
PureStatePoint from_prob_phase(const ProbPhasePoint& coords);

// vol(CP^{D-1}) = pi^{D-1} / (D-1)!
double cp_volume(int dim);

}  // namespace gqs
