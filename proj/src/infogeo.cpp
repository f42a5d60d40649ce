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

#include "cohcost/infogeo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cohcost/error.hpp"

namespace cohcost {

namespace {

void require_same_dim(const DensityMatrix &rho, Eigen::Index dim, const char *what) {
    if (rho.dim() != dim) {
        std::ostringstream os;
        os << what << ": state has dim " << rho.dim() << " but operator has dim " << dim;
        fail(ErrorKind::DimensionMismatch, os.str());
    }
}

// Threshold below which a coupling <i|A|j> is treated as absent when deciding
// whether the metric is singular.
constexpr double kCouplingTolerance = 1e-12;

}  // namespace

Matrix in_eigenbasis(const DensityMatrix &rho, const Matrix &a) {
    require_same_dim(rho, a.rows(), "in_eigenbasis");
    const Matrix &v = rho.eigenvectors();
    return v.adjoint() * a * v;
}

double variance(const DensityMatrix &rho, const HermitianOperator &a) {
    require_same_dim(rho, a.dim(), "variance");
    const double mean = expectation(rho, a.matrix()).real();
    const double second = expectation(rho, a.matrix() * a.matrix()).real();
    return second - mean * mean;
}

double skew_information(const DensityMatrix &rho, const HermitianOperator &a, const MonotoneFunction &f) {
    const Matrix ae = in_eigenbasis(rho, a.matrix());
    const RealVector &p = rho.eigenvalues();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        for (Eigen::Index j = 0; j < p.size(); ++j) {
            const double m = m_f(f, p(i), p(j));
            if (m == 0.0) continue;
            const double d = p(i) - p(j);
            sum += d * d / m * std::norm(ae(i, j));
        }
    }
    return 0.5 * f.f0() * sum;
}

double f_variance(const DensityMatrix &rho, const HermitianOperator &a, const MonotoneFunction &f) {
    require_same_dim(rho, a.dim(), "f_variance");
    const double mean = expectation(rho, a.matrix()).real();
    const Matrix centered = a.matrix() - mean * Matrix::Identity(a.dim(), a.dim());
    const Matrix ae = in_eigenbasis(rho, centered);
    const RealVector &p = rho.eigenvalues();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i)
        for (Eigen::Index j = 0; j < p.size(); ++j) sum += m_f(f, p(i), p(j)) * std::norm(ae(i, j));
    return sum;
}

double u_quantity(const DensityMatrix &rho, const HermitianOperator &a, const MonotoneFunction &f) {
    const double v = variance(rho, a);
    const double skew = skew_information(rho, a, f);
    const double radicand = v * v - (v - skew) * (v - skew);
    if (radicand < -1e-10 * std::max(1.0, v * v)) {
        std::ostringstream os;
        os << "u_quantity: negative radicand " << radicand << " (I^f exceeds V?)";
        fail(ErrorKind::Numerical, os.str());
    }
    return std::sqrt(std::max(0.0, radicand));
}

double u_quantity_identity(const DensityMatrix &rho, const HermitianOperator &a, const MonotoneFunction &f) {
    const double skew = skew_information(rho, a, f);
    const double v = variance(rho, a);
    const double v_tilde = f_variance(rho, a, f_tilde(f));
    return std::sqrt(std::max(0.0, skew * (v + v_tilde)));
}

Matrix l_operator(const DensityMatrix &rho, const HermitianOperator &a, const MonotoneFunction &f) {
    const Matrix ae = in_eigenbasis(rho, a.matrix());
    const RealVector &p = rho.eigenvalues();
    const Eigen::Index n = p.size();
    const double scale = std::max(1.0, ae.cwiseAbs().maxCoeff());
    Matrix l = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (p(i) == p(j)) continue;
            const double m = m_f(f, p(i), p(j));
            if (m == 0.0) {
                if (std::abs(ae(i, j)) > kCouplingTolerance * scale) {
                    std::ostringstream os;
                    os << "l_operator: A couples eigenvalues " << p(i) << " and " << p(j)
                       << " where m_f vanishes (rank-deficient state)";
                    fail(ErrorKind::SingularMetric, os.str());
                }
                continue;
            }
            l(i, j) = cplx(0.0, -1.0) * (p(j) - p(i)) * ae(i, j) / m;
        }
    }
    const Matrix &v = rho.eigenvectors();
    return v * l * v.adjoint();
}

cplx fisher_inner(const DensityMatrix &rho, const Matrix &x, const Matrix &y, const MonotoneFunction &f) {
    const Matrix xe = in_eigenbasis(rho, x);
    const Matrix ye = in_eigenbasis(rho, y);
    const RealVector &p = rho.eigenvalues();
    cplx sum = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i)
        for (Eigen::Index j = 0; j < p.size(); ++j) sum += m_f(f, p(i), p(j)) * std::conj(xe(i, j)) * ye(i, j);
    return sum;
}

double fisher_information(const DensityMatrix &rho, const HermitianOperator &a, const MonotoneFunction &f) {
    const Matrix l = l_operator(rho, a, f);
    return fisher_inner(rho, l, l, f).real();
}

MeasureReport measure_report(const DensityMatrix &rho, const HermitianOperator &a, const MonotoneFunction &f) {
    MeasureReport r;
    r.v = variance(rho, a);
    r.vf = f_variance(rho, a, f);
    r.skew = skew_information(rho, a, f);
    r.u = u_quantity(rho, a, f);
    r.f_name = f.name();
    return r;
}

SupportState SupportState::from_density(const DensityMatrix &rho, double cutoff) {
    const RealVector &p = rho.eigenvalues();
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < p.size(); ++i)
        if (p(i) > cutoff) keep.push_back(i);
    SupportState s{RealVector(static_cast<Eigen::Index>(keep.size())), Matrix(rho.dim(), static_cast<Eigen::Index>(keep.size()))};
    for (std::size_t k = 0; k < keep.size(); ++k) {
        s.weights(static_cast<Eigen::Index>(k)) = p(keep[k]);
        s.vectors.col(static_cast<Eigen::Index>(k)) = rho.eigenvectors().col(keep[k]);
    }
    return s;
}

SupportState SupportState::pure(const Vector &state) {
    const double norm = state.norm();
    if (norm == 0.0) fail(ErrorKind::InvalidArgument, "SupportState::pure: zero state vector");
    SupportState s{RealVector::Ones(1), Matrix(state.size(), 1)};
    s.vectors.col(0) = state / norm;
    return s;
}

double variance(const SupportState &rho, const SparseOperator &a) {
    if (a.rows() != rho.dim()) fail(ErrorKind::DimensionMismatch, "variance: state and operator dimensions differ");
    const Matrix av = a * rho.vectors;
    double mean = 0.0;
    double second = 0.0;
    for (Eigen::Index k = 0; k < rho.weights.size(); ++k) {
        mean += rho.weights(k) * rho.vectors.col(k).dot(av.col(k)).real();
        second += rho.weights(k) * av.col(k).squaredNorm();
    }
    return second - mean * mean;
}

double skew_information(const SupportState &rho, const SparseOperator &a, const MonotoneFunction &f) {
    if (a.rows() != rho.dim()) fail(ErrorKind::DimensionMismatch, "skew_information: state and operator dimensions differ");
    const Matrix av = a * rho.vectors;                  // A |v_k>
    const Matrix inner = rho.vectors.adjoint() * av;    // <v_i|A|v_j>
    const RealVector &p = rho.weights;
    double sum = 0.0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        double in_support = 0.0;
        for (Eigen::Index j = 0; j < p.size(); ++j) {
            const double coupling = std::norm(inner(i, j));
            in_support += coupling;
            const double m = m_f(f, p(i), p(j));
            if (m == 0.0) continue;
            const double d = p(i) - p(j);
            sum += d * d / m * coupling;
        }
        // (i, ker) and (ker, i) pairs: p^2 / m_f(p, 0) each
        const double to_kernel = std::max(0.0, av.col(i).squaredNorm() - in_support);
        const double m = m_f(f, p(i), 0.0);
        if (m > 0.0) sum += 2.0 * p(i) * p(i) / m * to_kernel;
    }
    return 0.5 * f.f0() * sum;
}

}  // namespace cohcost
