#pragma once

#include <optional>

#include "gqs/manifold.hpp"

namespace gqs {

inline constexpr double kHermTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;

// Hermitian operator as its standard matrix: row index is the bra index, and
// the value at a point Z is sum_ab conj(Z_a) M_ab Z_b.
class Observable {
public:
    Observable(int dim, cvector matrix);

    static Observable identity(int dim);
    static Observable diagonal(std::vector<double> entries);
    static Observable pauli_x();
    static Observable pauli_y();
    static Observable pauli_z();

    int dim() const { return dim_; }
    const cvector& matrix() const { return m_; }
    complex at(int r, int c) const { return m_[static_cast<std::size_t>(r) * dim_ + c]; }

private:
    int dim_;
    cvector m_;
};

// Measurement effects: positive semidefinite within kPsdTol, summing to the
// identity within kPsdTol.
class Povm {
public:
    Povm(int dim, std::vector<Observable> effects);

    int dim() const { return dim_; }
    std::size_t size() const { return effects_.size(); }
    const std::vector<Observable>& effects() const { return effects_; }

private:
    int dim_;
    std::vector<Observable> effects_;
};

struct PovmValidation {
    std::optional<Povm> povm;
    std::string error;  // names the first violated condition when empty povm
    bool ok() const { return povm.has_value(); }
};

// Validates raw effect matrices; never throws for the conditions it reports.
PovmValidation validate_povm(int dim, const std::vector<cvector>& effects);

// Unit-trace positive semidefinite Hermitian matrix.
class DensityMatrix {
public:
    DensityMatrix(int dim, cvector matrix);

    int dim() const { return dim_; }
    const cvector& matrix() const { return m_; }
    complex at(int r, int c) const { return m_[static_cast<std::size_t>(r) * dim_ + c]; }

private:
    int dim_;
    cvector m_;
};

// <psi(Z)|O|psi(Z)>; the quadratic-form kernel yields the real part directly.
double eval_observable(const Observable& obs, const PureStatePoint& point);

// Effect values at a point: clamped at zero, summing to one.
std::vector<double> povm_probabilities_point(const Povm& povm, const PureStatePoint& point);

// Tr(rho * O), real by Hermiticity.
double observable_mean(const DensityMatrix& rho, const Observable& obs);
std::vector<double> povm_probabilities(const DensityMatrix& rho, const Povm& povm);

}  // namespace gqs
