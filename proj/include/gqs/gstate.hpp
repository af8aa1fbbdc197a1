#pragma once

#include <variant>

#include "gqs/observables.hpp"

namespace gqs {

// Finite convex combination of covariant deltas; atoms are kept exact and
// need not be orthogonal.
struct DeltaAtom {
    double weight;
    PureStatePoint point;
};

class DeltaMixture {
public:
    DeltaMixture(int dim, std::vector<DeltaAtom> atoms);

    int dim() const { return dim_; }
    const std::vector<DeltaAtom>& atoms() const { return atoms_; }

private:
    int dim_;
    std::vector<DeltaAtom> atoms_;
};

// Nonnegative density sampled at the cells of an FsGrid, normalized so that
// sum q * volume = 1.
class GridDensity {
public:
    GridDensity(std::shared_ptr<const FsGrid> grid, std::vector<double> values);

    int dim() const { return grid_->dim(); }
    const FsGrid& grid() const { return *grid_; }
    std::shared_ptr<const FsGrid> grid_ptr() const { return grid_; }
    const std::vector<double>& values() const { return values_; }

private:
    std::shared_ptr<const FsGrid> grid_;
    std::vector<double> values_;
};

// Monte Carlo representation: weighted points with the generating seed
// recorded for reproducibility.
class SampleEnsemble {
public:
    SampleEnsemble(int dim, std::vector<PureStatePoint> samples,
                   std::optional<std::vector<double>> weights, std::uint64_t rng_seed);

    int dim() const { return dim_; }
    std::size_t size() const { return samples_.size(); }
    const std::vector<PureStatePoint>& samples() const { return samples_; }
    const std::optional<std::vector<double>>& weights() const { return weights_; }
    double weight(std::size_t i) const {
        return weights_ ? (*weights_)[i] : 1.0 / static_cast<double>(samples_.size());
    }
    std::uint64_t rng_seed() const { return rng_seed_; }

private:
    int dim_;
    std::vector<PureStatePoint> samples_;
    std::optional<std::vector<double>> weights_;
    std::uint64_t rng_seed_;
};

// A geometric quantum state: a distribution over the pure-state manifold in
// one of the three concrete representations.
class GeometricState {
public:
    enum class Kind { Delta, Grid, Samples };

    GeometricState(DeltaMixture m) : value_(std::move(m)) {}
    GeometricState(GridDensity g) : value_(std::move(g)) {}
    GeometricState(SampleEnsemble s) : value_(std::move(s)) {}

    Kind kind() const { return static_cast<Kind>(value_.index()); }
    int dim() const;
    const DeltaMixture& delta() const { return std::get<DeltaMixture>(value_); }
    const GridDensity& grid() const { return std::get<GridDensity>(value_); }
    const SampleEnsemble& samples() const { return std::get<SampleEnsemble>(value_); }

    template <class Visitor>
    decltype(auto) visit(Visitor&& v) const {
        return std::visit(std::forward<Visitor>(v), value_);
    }

private:
    std::variant<DeltaMixture, GridDensity, SampleEnsemble> value_;
};

// 2-D mass table over [0,1] x [0,2pi) for qubit states; phase bins are
// half-open, so an atom exactly at 2pi wraps into the first bin.
struct Histogram {
    int bins_p = 0;
    int bins_nu = 0;
    std::vector<double> mass;  // row-major, [ip * bins_nu + inu]

    double at(int ip, int inu) const { return mass[static_cast<std::size_t>(ip) * bins_nu + inu]; }
    double p_lo(int ip) const { return static_cast<double>(ip) / bins_p; }
    double p_hi(int ip) const { return static_cast<double>(ip + 1) / bins_p; }
    double nu_lo(int inu) const { return kTwoPi * inu / bins_nu; }
    double nu_hi(int inu) const { return kTwoPi * (inu + 1) / bins_nu; }
    double total() const;
};

// P_q[O], evaluated per representation: weighted atom values, cell quadrature
// or weighted sample mean.
double expectation(const GeometricState& state, const Observable& obs);

// Barycenter rho_ab = P_q[Z^a conj(Z)^b].
DensityMatrix density_matrix(const GeometricState& state);

// Outcome probabilities; a geometric state enters POVM statistics only
// through its barycenter.
std::vector<double> povm_statistics(const GeometricState& state, const Povm& povm);

// Eigendecomposition of rho as a delta mixture; zero-eigenvalue atoms are
// dropped and the surviving weights renormalized.
DeltaMixture eigen_mixture(const DensityMatrix& rho);

Histogram histogram(const GeometricState& state, int bins_p, int bins_nu);

// Grid density with values exp(-1/2 conj(Z) rho^{-1} Z) at cell centers,
// normalized numerically.
GridDensity make_gaussian_grid(const DensityMatrix& rho, int bins_p, int bins_nu);

// Uniform Fubini-Study samples: probabilities uniform on the simplex, phases
// uniform on the torus.
SampleEnsemble sample_uniform_fs(int dim, std::size_t n, std::uint64_t seed);

}  // namespace gqs
