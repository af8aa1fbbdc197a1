#include "gqs/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace gqs::linalg {

namespace {

using EMatrix = Eigen::MatrixXcd;

EMatrix to_eigen(const cvector& m, int dim) {
    EMatrix out(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) out(r, c) = m[static_cast<std::size_t>(r) * dim + c];
    return out;
}

cvector from_eigen(const EMatrix& m) {
    const int dim = static_cast<int>(m.rows());
    cvector out(static_cast<std::size_t>(dim) * dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) out[static_cast<std::size_t>(r) * dim + c] = m(r, c);
    return out;
}

Eigen::SelfAdjointEigenSolver<EMatrix> solve(const cvector& m, int dim, bool vectors) {
    Eigen::SelfAdjointEigenSolver<EMatrix> es;
    es.compute(to_eigen(m, dim), vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw InvariantError("hermitian eigendecomposition failed to converge");
    return es;
}

}  // namespace

HermitianEig hermitian_eig(const cvector& m, int dim) {
    const auto es = solve(m, dim, true);
    HermitianEig out;
    out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + dim);
    out.vectors = from_eigen(es.eigenvectors());
    return out;
}

std::vector<double> hermitian_eigenvalues(const cvector& m, int dim) {
    const auto es = solve(m, dim, false);
    return {es.eigenvalues().data(), es.eigenvalues().data() + dim};
}

double min_eigenvalue(const cvector& m, int dim) {
    return hermitian_eigenvalues(m, dim).front();
}

cvector hermitian_inverse(const cvector& m, int dim, double tol) {
    const auto eig = hermitian_eig(m, dim);
    for (double v : eig.values)
        if (std::abs(v) < tol) throw InvariantError("matrix is singular within tolerance");
    cvector out(static_cast<std::size_t>(dim) * dim, complex{0.0, 0.0});
    for (int j = 0; j < dim; ++j) {
        const double inv = 1.0 / eig.values[j];
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                out[static_cast<std::size_t>(r) * dim + c] +=
                    inv * eig.vectors[static_cast<std::size_t>(r) * dim + j] *
                    std::conj(eig.vectors[static_cast<std::size_t>(c) * dim + j]);
    }
    return out;
}

cvector hermitian_exp_scaled(const cvector& m, int dim, double s) {
    const auto eig = hermitian_eig(m, dim);
    cvector out(static_cast<std::size_t>(dim) * dim, complex{0.0, 0.0});
    for (int j = 0; j < dim; ++j) {
        const double w = std::exp(s * eig.values[j]);
        for (int r = 0; r < dim; ++r)
            for (int c = 0; c < dim; ++c)
                out[static_cast<std::size_t>(r) * dim + c] +=
                    w * eig.vectors[static_cast<std::size_t>(r) * dim + j] *
                    std::conj(eig.vectors[static_cast<std::size_t>(c) * dim + j]);
    }
    return out;
}

cvector matmul(const cvector& a, const cvector& b, int dim) {
    return from_eigen(to_eigen(a, dim) * to_eigen(b, dim));
}

cvector adjoint(const cvector& m, int dim) {
    cvector out(m.size());
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            out[static_cast<std::size_t>(r) * dim + c] =
                std::conj(m[static_cast<std::size_t>(c) * dim + r]);
    return out;
}

complex trace(const cvector& m, int dim) {
    complex t{0.0, 0.0};
    for (int r = 0; r < dim; ++r) t += m[static_cast<std::size_t>(r) * dim + r];
    return t;
}

complex trace_product(const cvector& a, const cvector& b, int dim) {
    complex t{0.0, 0.0};
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            t += a[static_cast<std::size_t>(r) * dim + c] *
                 b[static_cast<std::size_t>(c) * dim + r];
    return t;
}

double max_abs_diff(const cvector& a, const cvector& b) {
    if (a.size() != b.size()) throw InvariantError("matrix size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double hermitian_deviation(const cvector& m, int dim) {
    double dev = 0.0;
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            dev = std::max(dev, std::abs(m[static_cast<std::size_t>(r) * dim + c] -
                                         std::conj(m[static_cast<std::size_t>(c) * dim + r])));
    return dev;
}

double trace_distance(const cvector& a, const cvector& b, int dim) {
    cvector diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
    double d = 0.0;
    for (double v : hermitian_eigenvalues(diff, dim)) d += std::abs(v);
    return 0.5 * d;
}

}  // namespace gqs::linalg
