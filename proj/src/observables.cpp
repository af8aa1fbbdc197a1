#include "gqs/observables.hpp"

#include <algorithm>
#include <cmath>

#include "gqs/linalg.hpp"

namespace gqs {

namespace {

void check_square(int dim, const cvector& m, const char* what) {
    if (dim < 1 || m.size() != static_cast<std::size_t>(dim) * dim)
        throw InvariantError(std::string(what) + ": matrix size does not match dimension");
    for (const complex& z : m)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw InvariantError(std::string(what) + ": non-finite entry");
}

}  // namespace

Observable::Observable(int dim, cvector matrix) : dim_(dim), m_(std::move(matrix)) {
    check_square(dim_, m_, "observable");
    if (linalg::hermitian_deviation(m_, dim_) > kHermTol)
        throw InvariantError("observable matrix is not Hermitian");
}

Observable Observable::identity(int dim) {
    cvector m(static_cast<std::size_t>(dim) * dim, complex{0.0, 0.0});
    for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(i) * dim + i] = 1.0;
    return {dim, std::move(m)};
}

Observable Observable::diagonal(std::vector<double> entries) {
    const int dim = static_cast<int>(entries.size());
    cvector m(static_cast<std::size_t>(dim) * dim, complex{0.0, 0.0});
    for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(i) * dim + i] = entries[i];
    return {dim, std::move(m)};
}

Observable Observable::pauli_x() { return {2, {0.0, 1.0, 1.0, 0.0}}; }
Observable Observable::pauli_y() {
    return {2, {0.0, complex{0.0, -1.0}, complex{0.0, 1.0}, 0.0}};
}
Observable Observable::pauli_z() { return {2, {1.0, 0.0, 0.0, -1.0}}; }

Povm::Povm(int dim, std::vector<Observable> effects)
    : dim_(dim), effects_(std::move(effects)) {
    if (effects_.empty()) throw InvariantError("povm needs at least one effect");
    cvector sum(static_cast<std::size_t>(dim_) * dim_, complex{0.0, 0.0});
    for (const Observable& e : effects_) {
        if (e.dim() != dim_) throw InvariantError("povm effect dimension mismatch");
        if (linalg::min_eigenvalue(e.matrix(), dim_) < -kPsdTol)
            throw InvariantError("povm effect is not positive semidefinite");
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += e.matrix()[i];
    }
    const cvector id = Observable::identity(dim_).matrix();
    if (linalg::max_abs_diff(sum, id) > kPsdTol)
        throw InvariantError("povm effects do not sum to the identity");
}

PovmValidation validate_povm(int dim, const std::vector<cvector>& effects) {
    PovmValidation out;
    if (effects.empty()) {
        out.error = "no effects given";
        return out;
    }
    std::vector<Observable> obs;
    obs.reserve(effects.size());
    for (std::size_t j = 0; j < effects.size(); ++j) {
        const cvector& e = effects[j];
        if (e.size() != static_cast<std::size_t>(dim) * dim) {
            out.error = "effect " + std::to_string(j) + ": wrong matrix size";
            return out;
        }
        if (linalg::hermitian_deviation(e, dim) > kHermTol) {
            out.error = "effect " + std::to_string(j) + ": not Hermitian";
            return out;
        }
        if (linalg::min_eigenvalue(e, dim) < -kPsdTol) {
            out.error = "effect " + std::to_string(j) + ": not positive semidefinite";
            return out;
        }
        obs.emplace_back(dim, e);
    }
    cvector sum(static_cast<std::size_t>(dim) * dim, complex{0.0, 0.0});
    for (const Observable& e : obs)
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += e.matrix()[i];
    if (linalg::max_abs_diff(sum, Observable::identity(dim).matrix()) > kPsdTol) {
        out.error = "effects do not sum to the identity";
        return out;
    }
    out.povm = Povm(dim, std::move(obs));
    return out;
}

DensityMatrix::DensityMatrix(int dim, cvector matrix) : dim_(dim), m_(std::move(matrix)) {
    check_square(dim_, m_, "density matrix");
    if (linalg::hermitian_deviation(m_, dim_) > kHermTol)
        throw InvariantError("density matrix is not Hermitian");
    if (std::abs(linalg::trace(m_, dim_).real() - 1.0) > kTraceTol)
        throw InvariantError("density matrix trace is not one");
    if (linalg::min_eigenvalue(m_, dim_) < -kPsdTol)
        throw InvariantError("density matrix is not positive semidefinite");
}

double eval_observable(const Observable& obs, const PureStatePoint& point) {
    if (obs.dim() != point.dim()) throw InvariantError("observable/point dimension mismatch");
    kernels::StateBatch batch(static_cast<std::size_t>(point.dim()), 1);
    batch.set(0, point.amplitudes());
    double value = 0.0;
    kernels::active().quadratic_form(batch.view(), obs.matrix().data(), &value);
    return value;
}

std::vector<double> povm_probabilities_point(const Povm& povm, const PureStatePoint& point) {
    if (povm.dim() != point.dim()) throw InvariantError("povm/point dimension mismatch");
    std::vector<double> probs(povm.size());
    for (std::size_t j = 0; j < povm.size(); ++j) {
        const double v = eval_observable(povm.effects()[j], point);
        if (v < -kNormTol)
            throw InvariantError("povm effect evaluated negative beyond tolerance");
        probs[j] = std::max(v, 0.0);
    }
    return probs;
}

double observable_mean(const DensityMatrix& rho, const Observable& obs) {
    if (rho.dim() != obs.dim()) throw InvariantError("density/observable dimension mismatch");
    return linalg::trace_product(rho.matrix(), obs.matrix(), rho.dim()).real();
}

std::vector<double> povm_probabilities(const DensityMatrix& rho, const Povm& povm) {
    if (rho.dim() != povm.dim()) throw InvariantError("density/povm dimension mismatch");
    std::vector<double> probs(povm.size());
    for (std::size_t j = 0; j < povm.size(); ++j)
        probs[j] = std::max(0.0, observable_mean(rho, povm.effects()[j]));
    return probs;
}

}  // namespace gqs
