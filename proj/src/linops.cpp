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

#include "cohcost/linops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "cohcost/error.hpp"

namespace cohcost {

namespace {

std::string describe_residual(const char *type, const HermiticityResidual &r) {
    std::ostringstream os;
    os << type << ": entry (" << r.row << "," << r.col << ") deviates from Hermiticity by "
       << r.residual;
    return os.str();
}

void require_square(const Matrix &m, const char *what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        std::ostringstream os;
        os << what << ": expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
        fail(ErrorKind::DimensionMismatch, os.str());
    }
}

// Cyclic Jacobi for a complex Hermitian matrix. Each rotation
//   G = [[c, s e^{i phi}], [-s e^{-i phi}, c]]   (rows/cols p, q)
// with a_pq = |a_pq| e^{i phi} zeroes the (p,q) entry of G^dagger A G.
EigenDecomposition jacobi_eigh(const Matrix &h) {
    const Eigen::Index n = h.rows();
    Matrix a = 0.5 * (h + h.adjoint());
    Matrix v = Matrix::Identity(n, n);

    const double norm_f = a.norm();
    auto off_norm = [&] {
        double s = 0.0;
        for (Eigen::Index q = 0; q < n; ++q)
            for (Eigen::Index p = 0; p < n; ++p)
                if (p != q) s += std::norm(a(p, q));
        return std::sqrt(s);
    };

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    for (; sweep < kMaxSweeps && norm_f > 0.0; ++sweep) {
        if (off_norm() <= tol::kJacobiOffDiagonal * norm_f) break;
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const cplx phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx s_pos = s * phase;             // s e^{i phi}
                const cplx s_neg = s * std::conj(phase);  // s e^{-i phi}

                for (Eigen::Index k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp - s_neg * akq;
                    a(k, q) = s_pos * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = c * apk - s_pos * aqk;
                    a(q, k) = s_neg * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (Eigen::Index k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = c * vkp - s_neg * vkq;
                    v(k, q) = s_pos * vkp + c * vkq;
                }
            }
        }
    }
    if (sweep == kMaxSweeps && off_norm() > 1e-12 * norm_f) {
        fail(ErrorKind::Numerical, "eigh: Jacobi iteration did not converge");
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out{RealVector(n), Matrix(n, n)};
    for (Eigen::Index k = 0; k < n; ++k) {
        out.values(k) = a(order[k], order[k]).real();
        out.vectors.col(k) = v.col(order[k]);
    }
    return out;
}

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(mix_seed(seed, 0x9e37)); }

Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix g(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = cplx(re, im);
        }
    return g;
}

}  // namespace

HermiticityResidual hermiticity_residual(const Matrix &m) {
    HermiticityResidual worst;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            const double r = std::abs(m(i, j) - std::conj(m(j, i)));
            if (r > worst.residual) worst = {r, i, j};
        }
    return worst;
}

HermitianOperator::HermitianOperator(const Matrix &entries) {
    require_square(entries, "HermitianOperator");
    const auto r = hermiticity_residual(entries);
    if (r.residual > tol::kHermitianEntry) fail(ErrorKind::Validation, describe_residual("HermitianOperator", r));
    m_ = 0.5 * (entries + entries.adjoint());
}

HermitianOperator HermitianOperator::identity(Eigen::Index dim) {
    return HermitianOperator(Matrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(Eigen::Index dim) {
    return HermitianOperator(Matrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::diagonal(std::span<const double> values) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = values[i];
    return HermitianOperator(m);
}

DensityMatrix::DensityMatrix(const Matrix &entries) {
    require_square(entries, "DensityMatrix");
    const auto r = hermiticity_residual(entries);
    if (r.residual > tol::kHermitianEntry) fail(ErrorKind::Validation, describe_residual("DensityMatrix", r));
    m_ = 0.5 * (entries + entries.adjoint());

    const double trace = m_.trace().real();
    if (std::abs(trace - 1.0) > tol::kTrace) {
        std::ostringstream os;
        os << "DensityMatrix: trace " << trace << " differs from 1 by " << std::abs(trace - 1.0);
        fail(ErrorKind::Validation, os.str());
    }

    spectrum_ = jacobi_eigh(m_);
    const double min_eig = spectrum_.values.minCoeff();
    if (min_eig < -tol::kClampLimit) {
        std::ostringstream os;
        os << "DensityMatrix: eigenvalue " << min_eig << " is negative beyond the clamp limit";
        fail(ErrorKind::Validation, os.str());
    }
    // Below kZeroEigenvalue an eigenvalue is solver noise; pure states would
    // otherwise carry ~1e-17 weights that sqrt-type means amplify.
    if (min_eig < tol::kZeroEigenvalue) {
        for (auto &p : spectrum_.values)
            if (p < tol::kZeroEigenvalue) p = 0.0;
        spectrum_.values /= spectrum_.values.sum();
        m_ = spectrum_.vectors * spectrum_.values.cast<cplx>().asDiagonal() * spectrum_.vectors.adjoint();
    }
}

DensityMatrix DensityMatrix::pure(const Vector &state) {
    const double norm = state.norm();
    if (norm == 0.0) fail(ErrorKind::InvalidArgument, "DensityMatrix::pure: zero state vector");
    const Vector psi = state / norm;
    return DensityMatrix(psi * psi.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
    return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

UnitaryOperator::UnitaryOperator(const Matrix &entries) {
    require_square(entries, "UnitaryOperator");
    const double residual = (entries.adjoint() * entries - Matrix::Identity(entries.rows(), entries.cols())).norm();
    if (residual > tol::kUnitary) {
        std::ostringstream os;
        os << "UnitaryOperator: ||U^dagger U - 1||_F = " << residual;
        fail(ErrorKind::Validation, os.str());
    }
    m_ = entries;
}

UnitaryOperator UnitaryOperator::identity(Eigen::Index dim) { return UnitaryOperator(Matrix::Identity(dim, dim)); }

EigenDecomposition eigh(const HermitianOperator &h) { return jacobi_eigh(h.matrix()); }

EigenDecomposition eigh(const Matrix &h) { return eigh(HermitianOperator(h)); }

Matrix commutator(const Matrix &a, const Matrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
        fail(ErrorKind::DimensionMismatch, "commutator: operands must be square with equal dimensions");
    }
    return a * b - b * a;
}

Matrix commutator(const HermitianOperator &a, const HermitianOperator &b) {
    return commutator(a.matrix(), b.matrix());
}

double op_norm(const Matrix &x) {
    require_square(x, "op_norm");
    const Matrix gram = x.adjoint() * x;
    const auto spectrum = jacobi_eigh(gram);
    return std::sqrt(std::max(0.0, spectrum.values(spectrum.values.size() - 1)));
}

Matrix tensor(const Matrix &x, const Matrix &y) {
    Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
        for (Eigen::Index j = 0; j < x.cols(); ++j)
            out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return out;
}

Matrix partial_trace_env(const Matrix &x, Eigen::Index dim_s, Eigen::Index dim_e) {
    if (x.rows() != dim_s * dim_e || x.cols() != dim_s * dim_e) {
        std::ostringstream os;
        os << "partial_trace_env: matrix is " << x.rows() << "x" << x.cols() << ", expected "
           << dim_s * dim_e << " for dims " << dim_s << "x" << dim_e;
        fail(ErrorKind::DimensionMismatch, os.str());
    }
    Matrix out = Matrix::Zero(dim_s, dim_s);
    for (Eigen::Index i = 0; i < dim_s; ++i)
        for (Eigen::Index j = 0; j < dim_s; ++j)
            out(i, j) = x.block(i * dim_e, j * dim_e, dim_e, dim_e).trace();
    return out;
}

UnitaryOperator swap_gate(Eigen::Index d) {
    if (d < 1) fail(ErrorKind::InvalidArgument, "swap_gate: d must be >= 1");
    Matrix m = Matrix::Zero(d * d, d * d);
    for (Eigen::Index a = 0; a < d; ++a)
        for (Eigen::Index b = 0; b < d; ++b) m(b * d + a, a * d + b) = 1.0;
    return UnitaryOperator(m);
}

cplx expectation(const DensityMatrix &rho, const Matrix &x) {
    if (x.rows() != rho.dim() || x.cols() != rho.dim()) {
        fail(ErrorKind::DimensionMismatch, "expectation: operator and state dimensions differ");
    }
    return (rho.matrix() * x).trace();
}

Matrix apply_function(const HermitianOperator &h, const std::function<double(double)> &fn) {
    const auto spec = eigh(h);
    RealVector mapped(spec.values.size());
    for (Eigen::Index i = 0; i < mapped.size(); ++i) mapped(i) = fn(spec.values(i));
    return spec.vectors * mapped.cast<cplx>().asDiagonal() * spec.vectors.adjoint();
}

UnitaryOperator unitary_exp(const HermitianOperator &h, double t) {
    const auto spec = eigh(h);
    Vector phases(spec.values.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) phases(i) = std::polar(1.0, -t * spec.values(i));
    Matrix u = spec.vectors * phases.asDiagonal() * spec.vectors.adjoint();
    return UnitaryOperator(u);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over the combined words
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

DensityMatrix random_density(Eigen::Index dim, std::uint64_t seed) {
    if (dim < 1) fail(ErrorKind::InvalidArgument, "random_density: dim must be >= 1");
    auto rng = make_rng(seed);
    const Matrix g = gaussian_matrix(dim, dim, rng);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

HermitianOperator random_hermitian(Eigen::Index dim, std::uint64_t seed, double scale) {
    if (dim < 1) fail(ErrorKind::InvalidArgument, "random_hermitian: dim must be >= 1");
    auto rng = make_rng(seed);
    const Matrix g = gaussian_matrix(dim, dim, rng);
    return HermitianOperator(0.5 * scale * (g + g.adjoint()));
}

Vector random_state_vector(Eigen::Index dim, std::uint64_t seed) {
    auto rng = make_rng(seed);
    Vector v = gaussian_matrix(dim, 1, rng).col(0);
    return v / v.norm();
}

HermitianOperator random_commuting_hermitian(const HermitianOperator &a, std::uint64_t seed, double scale) {
    const auto spec = eigh(a);
    const Eigen::Index n = a.dim();
    const double gap_tol = 1e-9 * std::max(1.0, spec.values.cwiseAbs().maxCoeff());
    // cluster[i] labels the eigenspace of eigenvalue i (values are ascending)
    std::vector<int> cluster(static_cast<std::size_t>(n), 0);
    for (Eigen::Index i = 1; i < n; ++i)
        cluster[i] = cluster[i - 1] + (spec.values(i) - spec.values(i - 1) > gap_tol ? 1 : 0);

    Matrix h = random_hermitian(n, seed, scale).matrix();
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (cluster[i] != cluster[j]) h(i, j) = 0.0;
    return HermitianOperator(spec.vectors * h * spec.vectors.adjoint());
}

UnitaryOperator random_conserving_unitary(const HermitianOperator &a_total, std::uint64_t seed) {
    return unitary_exp(random_commuting_hermitian(a_total, seed));
}

SparseOperator to_sparse(const Matrix &m) {
    std::vector<Eigen::Triplet<cplx>> triplets;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != cplx(0.0)) triplets.emplace_back(i, j, m(i, j));
    SparseOperator s(m.rows(), m.cols());
    s.setFromTriplets(triplets.begin(), triplets.end());
    return s;
}

SparseOperator sparse_identity(Eigen::Index dim) {
    SparseOperator s(dim, dim);
    s.setIdentity();
    return s;
}

SparseOperator sparse_tensor(const SparseOperator &x, const SparseOperator &y) {
    std::vector<Eigen::Triplet<cplx>> triplets;
    triplets.reserve(static_cast<std::size_t>(x.nonZeros() * y.nonZeros()));
    for (int kx = 0; kx < x.outerSize(); ++kx)
        for (SparseOperator::InnerIterator ix(x, kx); ix; ++ix)
            for (int ky = 0; ky < y.outerSize(); ++ky)
                for (SparseOperator::InnerIterator iy(y, ky); iy; ++iy)
                    triplets.emplace_back(ix.row() * y.rows() + iy.row(), ix.col() * y.cols() + iy.col(),
                                          ix.value() * iy.value());
    SparseOperator out(x.rows() * y.rows(), x.cols() * y.cols());
    out.setFromTriplets(triplets.begin(), triplets.end());
    return out;
}

double frobenius_norm(const SparseOperator &x) { return x.norm(); }

double max_abs_entry(const SparseOperator &x) {
    double worst = 0.0;
    for (int k = 0; k < x.outerSize(); ++k)
        for (SparseOperator::InnerIterator it(x, k); it; ++it) worst = std::max(worst, std::abs(it.value()));
    return worst;
}

double op_norm_or_bound(const SparseOperator &x) {
    if (x.rows() <= 128) return op_norm(Matrix(x));
    RealVector col_sums = RealVector::Zero(x.cols());
    RealVector row_sums = RealVector::Zero(x.rows());
    for (int k = 0; k < x.outerSize(); ++k)
        for (SparseOperator::InnerIterator it(x, k); it; ++it) {
            col_sums(it.col()) += std::abs(it.value());
            row_sums(it.row()) += std::abs(it.value());
        }
    const double holder = std::sqrt(col_sums.maxCoeff() * row_sums.maxCoeff());
    return std::min(frobenius_norm(x), holder);
}

}  // namespace cohcost
