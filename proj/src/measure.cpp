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

#include "cohcost/measure.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "cohcost/error.hpp"
#include "cohcost/uncertainty.hpp"

namespace cohcost {

namespace {

constexpr double kProbeTolerance = 1e-9;
constexpr double kStateTolerance = 1e-10;

void require_square(const SparseOperator &x, const char *what) {
    if (x.rows() != x.cols()) {
        std::ostringstream os;
        os << what << " is " << x.rows() << "x" << x.cols() << ", expected square";
        fail(ErrorKind::DimensionMismatch, os.str());
    }
}

void check_dims(const HermitianOperator &a_s, const SparseOperator &a_e, const SparseOperator &m_e,
                const SupportState &rho_e, const SparseOperator &u_se) {
    require_square(a_e, "A_E");
    require_square(m_e, "M_E");
    require_square(u_se, "U_SE");
    const Eigen::Index de = a_e.rows();
    std::ostringstream os;
    if (m_e.rows() != de) os << "M_E has dim " << m_e.rows() << " but A_E has dim " << de;
    else if (rho_e.dim() != de) os << "rho_E has dim " << rho_e.dim() << " but A_E has dim " << de;
    else if (rho_e.weights.size() != rho_e.vectors.cols()) os << "rho_E has mismatched weights and vectors";
    else if (u_se.rows() != a_s.dim() * de)
        os << "U_SE has dim " << u_se.rows() << " but dim_S * dim_E = " << a_s.dim() * de;
    if (!os.str().empty()) fail(ErrorKind::DimensionMismatch, os.str());
}

SparseOperator sparse_adjoint(const SparseOperator &x) { return SparseOperator(x.adjoint()); }

double hermiticity_of(const SparseOperator &x) {
    const SparseOperator d = x - sparse_adjoint(x);
    return d.nonZeros() == 0 ? 0.0 : max_abs_entry(d);
}

SparseOperator hermitian_part(const SparseOperator &x) {
    SparseOperator h = 0.5 * (x + sparse_adjoint(x));
    h.prune(cplx(0.0, 0.0));
    return h;
}

// |s> (x) |v> for every pair of rho_S eigenvector and rho_E support vector with
// positive joint weight.
struct ProductEnsemble {
    Matrix columns;
    RealVector weights;
};

ProductEnsemble product_ensemble(const ImplementationSet &impl, const DensityMatrix &rho_s) {
    if (rho_s.dim() != impl.dim_s()) {
        std::ostringstream os;
        os << "rho_S has dim " << rho_s.dim() << " but A_S has dim " << impl.dim_s();
        fail(ErrorKind::DimensionMismatch, os.str());
    }
    const RealVector &p = rho_s.eigenvalues();
    const SupportState &env = impl.rho_e();
    const Eigen::Index ds = impl.dim_s();
    const Eigen::Index de = impl.dim_e();
    std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
    for (Eigen::Index i = 0; i < p.size(); ++i)
        for (Eigen::Index k = 0; k < env.weights.size(); ++k)
            if (p(i) * env.weights(k) > 0.0) pairs.emplace_back(i, k);

    ProductEnsemble out{Matrix::Zero(ds * de, static_cast<Eigen::Index>(pairs.size())),
                        RealVector(static_cast<Eigen::Index>(pairs.size()))};
    for (std::size_t c = 0; c < pairs.size(); ++c) {
        const auto [i, k] = pairs[c];
        const Eigen::Index col = static_cast<Eigen::Index>(c);
        out.weights(col) = p(i) * env.weights(k);
        const auto s = rho_s.eigenvectors().col(i);
        const auto v = env.vectors.col(k);
        for (Eigen::Index a = 0; a < ds; ++a) out.columns.col(col).segment(a * de, de) = s(a) * v;
    }
    return out;
}

void require_b(const ImplementationSet &impl, const HermitianOperator &b_s) {
    if (b_s.dim() != impl.dim_s()) {
        std::ostringstream os;
        os << "B_S has dim " << b_s.dim() << " but A_S has dim " << impl.dim_s();
        fail(ErrorKind::DimensionMismatch, os.str());
    }
}

double total_skew(const ImplementationSet &impl, const DensityMatrix &rho_s, const MonotoneFunction &f) {
    return skew_information(rho_s, impl.a_s(), f) + skew_information(impl.rho_e(), impl.a_e(), f);
}

// num / den with the zero conventions of the bound: 0 when the commutator
// expectation vanishes, +inf when only the denominator does.
double guarded_ratio(double num, bool num_zero, double den, bool den_zero) {
    if (num_zero) return 0.0;
    if (den_zero) return std::numeric_limits<double>::infinity();
    return num / den;
}

struct CommutatorPiece {
    cplx value;
    bool zero = false;
};

CommutatorPiece commutator_piece(const ImplementationSet &impl, const HermitianOperator &b_s,
                                 const DensityMatrix &rho_s) {
    require_b(impl, b_s);
    const cplx c = commutator_expectation(rho_s, impl.a_s(), b_s);
    const double scale = std::max(1.0, impl.a_s().matrix().norm() * b_s.matrix().norm());
    return {c, std::abs(c) <= 1e-12 * scale};
}

bool denominator_zero(const ImplementationSet &impl, double den) {
    return den <= 1e-14 * std::max(1.0, impl.a_s().matrix().squaredNorm());
}

HermitianOperator integer_spectrum_operator(Eigen::Index dim, std::uint64_t seed) {
    std::mt19937_64 rng(mix_seed(seed, 0));
    std::uniform_int_distribution<int> level(0, 2);
    std::vector<double> values(static_cast<std::size_t>(dim));
    for (auto &v : values) v = level(rng);
    values[0] = 0.0;
    if (dim > 1) values[1] = 1.0;
    const Matrix w = unitary_exp(random_hermitian(dim, mix_seed(seed, 1), 3.0)).matrix();
    const HermitianOperator d = HermitianOperator::diagonal(values);
    Matrix h = w * d.matrix() * w.adjoint();
    h = 0.5 * (h + h.adjoint()).eval();
    return HermitianOperator(h);
}

}  // namespace

bool InvariantStatus::ok() const {
    return probe_commutator <= kProbeTolerance && conservation <= kConservationTolerance &&
           unitarity <= tol::kUnitary && hermiticity <= tol::kHermitianEntry && state <= kStateTolerance;
}

std::string InvariantStatus::describe() const {
    std::ostringstream os;
    auto add = [&](bool bad, const char *name, double value) {
        if (!bad) return;
        if (os.tellp() > 0) os << "; ";
        os << name << " residual " << value;
    };
    add(probe_commutator > kProbeTolerance, "probe commutator [M_E, A_E]", probe_commutator);
    add(conservation > kConservationTolerance, "conservation [U_SE, A_S + A_E]", conservation);
    add(unitarity > tol::kUnitary, "unitarity of U_SE", unitarity);
    add(hermiticity > tol::kHermitianEntry, "hermiticity of A_E, M_E", hermiticity);
    add(state > kStateTolerance, "normalization of rho_E", state);
    return os.str();
}

ImplementationSet::ImplementationSet(const HermitianOperator &a_s, SparseOperator a_e, SparseOperator m_e,
                                     SupportState rho_e, SparseOperator u_se)
    : a_s_(a_s), a_e_(std::move(a_e)), m_e_(std::move(m_e)), rho_e_(std::move(rho_e)), u_se_(std::move(u_se)) {
    check_dims(a_s, a_e_, m_e_, rho_e_, u_se_);

    shift_ = eigh(a_s).values(0);
    a_s_ = HermitianOperator(a_s.matrix() - shift_ * Matrix::Identity(a_s.dim(), a_s.dim()));

    status_.hermiticity = std::max(hermiticity_of(a_e_), hermiticity_of(m_e_));
    a_e_ = hermitian_part(a_e_);
    m_e_ = hermitian_part(m_e_);

    const SparseOperator probe = m_e_ * a_e_ - a_e_ * m_e_;
    status_.probe_commutator = op_norm_or_bound(probe);

    const SparseOperator total = a_total();
    const SparseOperator cons = u_se_ * total - total * u_se_;
    status_.conservation = op_norm_or_bound(cons);

    const SparseOperator gram = sparse_adjoint(u_se_) * u_se_ - sparse_identity(u_se_.rows());
    status_.unitarity = frobenius_norm(gram);

    double state = std::abs(rho_e_.weights.sum() - 1.0);
    if (rho_e_.weights.size() > 0 && rho_e_.weights.minCoeff() < 0.0) state += -rho_e_.weights.minCoeff();
    const Eigen::Index r = rho_e_.vectors.cols();
    state += (rho_e_.vectors.adjoint() * rho_e_.vectors - Matrix::Identity(r, r)).norm();
    status_.state = state;
}

ImplementationSet ImplementationSet::create(const HermitianOperator &a_s, SparseOperator a_e, SparseOperator m_e,
                                            SupportState rho_e, SparseOperator u_se) {
    ImplementationSet impl(a_s, std::move(a_e), std::move(m_e), std::move(rho_e), std::move(u_se));
    if (!impl.status_.ok()) fail(ErrorKind::InvariantViolation, "implementation set: " + impl.status_.describe());
    return impl;
}

ImplementationSet ImplementationSet::create(const HermitianOperator &a_s, const HermitianOperator &a_e,
                                            const HermitianOperator &m_e, const DensityMatrix &rho_e,
                                            const UnitaryOperator &u_se) {
    return create(a_s, to_sparse(a_e.matrix()), to_sparse(m_e.matrix()), SupportState::from_density(rho_e),
                  to_sparse(u_se.matrix()));
}

ImplementationSet ImplementationSet::unchecked(const HermitianOperator &a_s, SparseOperator a_e, SparseOperator m_e,
                                               SupportState rho_e, SparseOperator u_se) {
    return ImplementationSet(a_s, std::move(a_e), std::move(m_e), std::move(rho_e), std::move(u_se));
}

SparseOperator ImplementationSet::a_total() const {
    return sparse_tensor(to_sparse(a_s_.matrix()), sparse_identity(dim_e())) +
           sparse_tensor(sparse_identity(dim_s()), a_e_);
}

SparseOperator noise_operator(const ImplementationSet &impl, const HermitianOperator &b_s) {
    require_b(impl, b_s);
    const SparseOperator &u = impl.u_se();
    const SparseOperator probe = sparse_tensor(sparse_identity(impl.dim_s()), impl.m_e());
    SparseOperator n = sparse_tensor(to_sparse(b_s.matrix()), sparse_identity(impl.dim_e())) -
                       SparseOperator(sparse_adjoint(u) * probe * u);
    n.prune(cplx(0.0, 0.0));
    return n;
}

double error_sq(const ImplementationSet &impl, const HermitianOperator &b_s, const DensityMatrix &rho_s) {
    const SparseOperator n = noise_operator(impl, b_s);
    const ProductEnsemble ens = product_ensemble(impl, rho_s);
    const Matrix np = n * ens.columns;
    double sum = 0.0;
    for (Eigen::Index c = 0; c < np.cols(); ++c) sum += ens.weights(c) * np.col(c).squaredNorm();
    return sum;
}

double error(const ImplementationSet &impl, const HermitianOperator &b_s, const DensityMatrix &rho_s) {
    return std::sqrt(std::max(0.0, error_sq(impl, b_s, rho_s)));
}

Matrix conditional_error_operator(const ImplementationSet &impl, const HermitianOperator &b_s) {
    const SparseOperator n = noise_operator(impl, b_s);
    const Eigen::Index ds = impl.dim_s();
    const Eigen::Index de = impl.dim_e();
    const SupportState &env = impl.rho_e();
    Matrix k = Matrix::Zero(ds, ds);
    Matrix cols(ds * de, ds);
    for (Eigen::Index e = 0; e < env.weights.size(); ++e) {
        if (env.weights(e) <= 0.0) continue;
        cols.setZero();
        for (Eigen::Index a = 0; a < ds; ++a) cols.col(a).segment(a * de, de) = env.vectors.col(e);
        const Matrix phi = n * cols;
        k += env.weights(e) * (phi.adjoint() * phi);
    }
    return 0.5 * (k + k.adjoint());
}

WorstError worst_error(const ImplementationSet &impl, const HermitianOperator &b_s) {
    const EigenDecomposition dec = eigh(HermitianOperator(conditional_error_operator(impl, b_s)));
    const Eigen::Index top = dec.values.size() - 1;
    return {std::sqrt(std::max(0.0, dec.values(top))), dec.vectors.col(top)};
}

double way_ozawa_bound(const ImplementationSet &impl, const HermitianOperator &b_s, const DensityMatrix &rho_s,
                       const MonotoneFunction &f) {
    const CommutatorPiece c = commutator_piece(impl, b_s, rho_s);
    const double num = 0.5 * f.f0() * std::norm(c.value);
    const double den = total_skew(impl, rho_s, f);
    return guarded_ratio(num, c.zero, den, denominator_zero(impl, den));
}

TransferReport commutator_transfer_check(const ImplementationSet &impl, const HermitianOperator &b_s,
                                         const DensityMatrix &rho_s) {
    TransferReport r;
    const SparseOperator n = noise_operator(impl, b_s);
    const SparseOperator total = impl.a_total();
    const ProductEnsemble ens = product_ensemble(impl, rho_s);
    const Matrix np = n * ens.columns;
    const Matrix ap = total * ens.columns;
    cplx lhs = 0.0;
    for (Eigen::Index c = 0; c < np.cols(); ++c)
        lhs += ens.weights(c) * (np.col(c).dot(ap.col(c)) - ap.col(c).dot(np.col(c)));
    r.lhs = lhs;
    r.rhs = expectation(rho_s, commutator(b_s, impl.a_s()));
    r.residual = std::abs(r.lhs - r.rhs);
    r.holds = r.residual <= 1e-9 * std::max({1.0, std::abs(r.lhs), std::abs(r.rhs)});
    r.invariant_violation = impl.status().describe();
    return r;
}

KorzekwaComparison korzekwa_comparison(const ImplementationSet &impl, const HermitianOperator &b_s,
                                       const DensityMatrix &rho_s) {
    const CommutatorPiece c = commutator_piece(impl, b_s, rho_s);
    const double num = std::norm(c.value);
    const double i_sld = total_skew(impl, rho_s, MonotoneFunction::sld());
    const double i_wy = total_skew(impl, rho_s, MonotoneFunction::wy());
    const double v = variance(rho_s, impl.a_s()) + variance(impl.rho_e(), impl.a_e());

    KorzekwaComparison k;
    k.bound_sld = guarded_ratio(num, c.zero, 4.0 * i_sld, denominator_zero(impl, i_sld));
    k.bound_korzekwa = guarded_ratio(num, c.zero, 8.0 * i_wy, denominator_zero(impl, i_wy));
    k.bound_original = guarded_ratio(num, c.zero, 4.0 * v, denominator_zero(impl, v));
    auto geq = [](double big, double small) {
        if (std::isinf(big)) return true;
        return big >= small - 1e-10 * std::max(1.0, std::abs(small));
    };
    k.ordered = geq(k.bound_sld, k.bound_korzekwa) && geq(k.bound_sld, k.bound_original);
    return k;
}

ErrorReport error_report(const ImplementationSet &impl, const HermitianOperator &b_s, const DensityMatrix &rho_s,
                         const std::vector<MonotoneFunction> &fs) {
    ErrorReport r;
    r.epsilon_sq = std::max(0.0, error_sq(impl, b_s, rho_s));
    r.epsilon = std::sqrt(r.epsilon_sq);
    r.bound_sld = way_ozawa_bound(impl, b_s, rho_s, MonotoneFunction::sld());
    for (const auto &f : fs) r.bound_f[f.name()] = way_ozawa_bound(impl, b_s, rho_s, f);
    r.commutator_expect = commutator_piece(impl, b_s, rho_s).value;
    return r;
}

ImplementationSet random_implementation(Eigen::Index dim_s, Eigen::Index dim_e, std::uint64_t seed) {
    const HermitianOperator a_s = integer_spectrum_operator(dim_s, mix_seed(seed, 10));
    const HermitianOperator a_e = integer_spectrum_operator(dim_e, mix_seed(seed, 11));
    const HermitianOperator m_e = random_commuting_hermitian(a_e, mix_seed(seed, 12));
    const DensityMatrix rho_e = random_density(dim_e, mix_seed(seed, 13));
    const Matrix total = tensor(a_s.matrix(), Matrix::Identity(dim_e, dim_e)) +
                         tensor(Matrix::Identity(dim_s, dim_s), a_e.matrix());
    const UnitaryOperator u = random_conserving_unitary(HermitianOperator(total), mix_seed(seed, 14));
    return ImplementationSet::create(a_s, a_e, m_e, rho_e, u);
}

ImplementationSet random_nonconserving_implementation(Eigen::Index dim_s, Eigen::Index dim_e, std::uint64_t seed) {
    const HermitianOperator a_s = integer_spectrum_operator(dim_s, mix_seed(seed, 10));
    const HermitianOperator a_e = integer_spectrum_operator(dim_e, mix_seed(seed, 11));
    const HermitianOperator m_e = random_commuting_hermitian(a_e, mix_seed(seed, 12));
    const DensityMatrix rho_e = random_density(dim_e, mix_seed(seed, 13));
    const UnitaryOperator u = unitary_exp(random_hermitian(dim_s * dim_e, mix_seed(seed, 15), 2.0));
    return ImplementationSet::unchecked(a_s, to_sparse(a_e.matrix()), to_sparse(m_e.matrix()),
                                        SupportState::from_density(rho_e), to_sparse(u.matrix()));
}

}  // namespace cohcost
