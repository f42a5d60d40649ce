// Copyright 2026 The cohcost Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COHCOST_INFOGEO_HPP
#define COHCOST_INFOGEO_HPP

// Variance, f-variance, metric adjusted skew information, the Fisher inner
// product and the logarithmic-derivative operator L for the unitary family
// rho_t = e^{-iAt} rho e^{iAt}.
//
// All sums run over ordered eigenvalue pairs (i, j) of rho, diagonal included.
// Zero-eigenvalue handling lives entirely in m_f's boundary rules.

#include <string>

#include "cohcost/linops.hpp"
#include "cohcost/monotone.hpp"

namespace cohcost {

struct MeasureReport {
    double v = 0.0;     // variance
    double vf = 0.0;    // f-variance
    double skew = 0.0;  // I^f
    double u = 0.0;     // U^f
    std::string f_name;
};

/// A Hermitian operator written in rho's eigenbasis: <i|A|j>.
Matrix in_eigenbasis(const DensityMatrix &rho, const Matrix &a);

double variance(const DensityMatrix &rho, const HermitianOperator &a);

/// I^f = f(0)/2 sum_ij (p_i - p_j)^2 / m_f(p_i, p_j) |<i|A|j>|^2.
double skew_information(const DensityMatrix &rho, const HermitianOperator &a, const MonotoneFunction &f);

/// V^f = sum_ij m_f(p_i, p_j) |<i|A_0|j>|^2 with A_0 = A - <A>.
double f_variance(const DensityMatrix &rho, const HermitianOperator &a, const MonotoneFunction &f);

/// sqrt(V^2 - (V - I^f)^2).
double u_quantity(const DensityMatrix &rho, const HermitianOperator &a, const MonotoneFunction &f);
/// sqrt(I^f (V + V^{f~})), the second route to U^f.
double u_quantity_identity(const DensityMatrix &rho, const HermitianOperator &a, const MonotoneFunction &f);

/// L with m_f(L_rho, R_rho)(L) = -i[A, rho]. Raises ErrorKind::SingularMetric
/// when A couples eigenvalues p_i != p_j with m_f(p_i, p_j) = 0.
Matrix l_operator(const DensityMatrix &rho, const HermitianOperator &a, const MonotoneFunction &f);

/// <X, Y>^f_rho = sum_ij m_f(p_i, p_j) conj(X_ij) Y_ij in rho's eigenbasis.
cplx fisher_inner(const DensityMatrix &rho, const Matrix &x, const Matrix &y, const MonotoneFunction &f);

/// <L, L>^f_rho for the unitary family generated by A.
double fisher_information(const DensityMatrix &rho, const HermitianOperator &a, const MonotoneFunction &f);

MeasureReport measure_report(const DensityMatrix &rho, const HermitianOperator &a, const MonotoneFunction &f);

/// rho restricted to its support: rho = sum_k w_k |v_k><v_k| with w_k > 0 and
/// orthonormal columns v_k. Used for large environments where the full
/// eigenbasis is never materialized.
struct SupportState {
    RealVector weights;
    Matrix vectors;

    Eigen::Index dim() const { return vectors.rows(); }
    static SupportState from_density(const DensityMatrix &rho, double cutoff = 0.0);
    static SupportState pure(const Vector &state);
};

double variance(const SupportState &rho, const SparseOperator &a);

/// Same quantity as the dense skew_information. Kernel directions enter only
/// through sum_{j in ker} |<i|A|j>|^2 = <i|A^2|i> - sum_{j in supp} |<i|A|j>|^2
/// with m_f(p, 0) = p f(0).
double skew_information(const SupportState &rho, const SparseOperator &a, const MonotoneFunction &f);

}  // namespace cohcost

#endif  // COHCOST_INFOGEO_HPP
