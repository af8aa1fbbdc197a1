#pragma once

#include "gqs/common.hpp"

namespace gqs::linalg {

// Eigendecomposition of a Hermitian matrix. Eigenvalues ascend; column j of
// `vectors` (row-major, vectors[i * dim + j]) is the eigenvector for values[j].
struct HermitianEig {
    std::vector<double> values;
    cvector vectors;
};

HermitianEig hermitian_eig(const cvector& m, int dim);
std::vector<double> hermitian_eigenvalues(const cvector& m, int dim);
double min_eigenvalue(const cvector& m, int dim);

// Inverse of a Hermitian matrix via its spectrum; throws InvariantError when
// an eigenvalue magnitude falls below `tol`.
cvector hermitian_inverse(const cvector& m, int dim, double tol = 1e-12);

// V diag(exp(s * lambda)) V^dag for Hermitian m.
cvector hermitian_exp_scaled(const cvector& m, int dim, double s);

cvector matmul(const cvector& a, const cvector& b, int dim);
cvector adjoint(const cvector& m, int dim);
complex trace(const cvector& m, int dim);
complex trace_product(const cvector& a, const cvector& b, int dim);

// max_ij |a_ij - b_ij|
double max_abs_diff(const cvector& a, const cvector& b);
// max_ij |m_ij - conj(m_ji)|
double hermitian_deviation(const cvector& m, int dim);
// (1/2) sum_i |lambda_i(a - b)| for Hermitian a, b
double trace_distance(const cvector& a, const cvector& b, int dim);

}  // namespace gqs::linalg
