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

#ifndef COHCOST_LINOPS_HPP
#define COHCOST_LINOPS_HPP

// Dense complex linear algebra at desk scale (dim <= 64): validated operator
// types, a cyclic Jacobi Hermitian eigensolver, tensor structure and seeded
// random ensembles.
//
// Kronecker convention: everything in this library is S-major. For X on S
// and Y on E, (X (x) Y)[i*dE + k, j*dE + l] = X[i,j] * Y[k,l].

#include <complex>
#include <cstdint>
#include <functional>
#include <span>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace cohcost {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using SparseOperator = Eigen::SparseMatrix<cplx>;

namespace tol {
inline constexpr double kHermitianEntry = 1e-12;
inline constexpr double kTrace = 1e-10;
inline constexpr double kUnitary = 1e-10;
inline constexpr double kNegativeEigenvalue = 1e-12;
inline constexpr double kClampLimit = 1e-8;
inline constexpr double kZeroEigenvalue = 1e-14;
inline constexpr double kJacobiOffDiagonal = 1e-14;
}  // namespace tol

class HermitianOperator {
  public:
    /// Throws ErrorKind::Validation naming the worst (row, col) entry if
    /// |H - H^dagger| exceeds 1e-12 anywhere. The stored matrix is the exact
    /// Hermitian part.
    explicit HermitianOperator(const Matrix &entries);

    static HermitianOperator identity(Eigen::Index dim);
    static HermitianOperator zero(Eigen::Index dim);
    static HermitianOperator diagonal(std::span<const double> values);

    Eigen::Index dim() const { return m_.rows(); }
    const Matrix &matrix() const { return m_; }

  private:
    Matrix m_;
};

/// Spectral data of a Hermitian matrix: ascending eigenvalues and the unitary
/// whose columns are the matching eigenvectors.
struct EigenDecomposition {
    RealVector values;
    Matrix vectors;
};

class DensityMatrix {
  public:
    /// Validates Hermiticity, unit trace (1e-10) and positivity. Eigenvalues in
    /// [-1e-8, 1e-14) are clamped to zero and the state renormalized; anything
    /// more negative is a validation error.
    explicit DensityMatrix(const Matrix &entries);

    static DensityMatrix pure(const Vector &state);
    static DensityMatrix maximally_mixed(Eigen::Index dim);

    Eigen::Index dim() const { return m_.rows(); }
    const Matrix &matrix() const { return m_; }
    const RealVector &eigenvalues() const { return spectrum_.values; }
    const Matrix &eigenvectors() const { return spectrum_.vectors; }

  private:
    Matrix m_;
    EigenDecomposition spectrum_;
};

class UnitaryOperator {
  public:
    /// Throws ErrorKind::Validation when ||U^dagger U - 1||_F > 1e-10.
    explicit UnitaryOperator(const Matrix &entries);

    static UnitaryOperator identity(Eigen::Index dim);

    Eigen::Index dim() const { return m_.rows(); }
    const Matrix &matrix() const { return m_; }

  private:
    Matrix m_;
};

// Worst deviation from Hermiticity, reported as the entry and its residual.
struct HermiticityResidual {
    double residual = 0.0;
    Eigen::Index row = 0;
    Eigen::Index col = 0;
};
HermiticityResidual hermiticity_residual(const Matrix &m);

EigenDecomposition eigh(const HermitianOperator &h);
/// Validating overload; non-Hermitian input raises ErrorKind::Validation.
EigenDecomposition eigh(const Matrix &h);

Matrix commutator(const Matrix &a, const Matrix &b);
Matrix commutator(const HermitianOperator &a, const HermitianOperator &b);

/// Largest singular value.
double op_norm(const Matrix &x);

Matrix tensor(const Matrix &x, const Matrix &y);
Matrix partial_trace_env(const Matrix &x, Eigen::Index dim_s, Eigen::Index dim_e);
UnitaryOperator swap_gate(Eigen::Index d);

/// Tr[rho X].
cplx expectation(const DensityMatrix &rho, const Matrix &x);

/// f(H) by functional calculus on the eigendecomposition.
Matrix apply_function(const HermitianOperator &h, const std::function<double(double)> &fn);

/// exp(-i t H).
UnitaryOperator unitary_exp(const HermitianOperator &h, double t = 1.0);

DensityMatrix random_density(Eigen::Index dim, std::uint64_t seed);
HermitianOperator random_hermitian(Eigen::Index dim, std::uint64_t seed, double scale = 1.0);
Vector random_state_vector(Eigen::Index dim, std::uint64_t seed);
/// exp(-iH) with H a random Hermitian projected onto the commutant of
/// a_total, so the result commutes with a_total.
UnitaryOperator random_conserving_unitary(const HermitianOperator &a_total, std::uint64_t seed);
/// Random Hermitian in the commutant of `a` (block-diagonal in its eigenspaces).
HermitianOperator random_commuting_hermitian(const HermitianOperator &a, std::uint64_t seed,
                                             double scale = 1.0);

/// Deterministic stream splitting for seeded ensembles.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Sparse helpers used by the large indirect-measurement models.
SparseOperator to_sparse(const Matrix &m);
SparseOperator sparse_identity(Eigen::Index dim);
SparseOperator sparse_tensor(const SparseOperator &x, const SparseOperator &y);
double frobenius_norm(const SparseOperator &x);
/// Exact op_norm for dim <= 128, else the rigorous upper bound
/// min(||X||_F, sqrt(||X||_1 ||X||_inf)).
double op_norm_or_bound(const SparseOperator &x);
double max_abs_entry(const SparseOperator &x);

}  // namespace cohcost

#endif  // COHCOST_LINOPS_HPP
