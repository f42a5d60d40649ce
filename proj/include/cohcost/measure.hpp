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

#ifndef COHCOST_MEASURE_HPP
#define COHCOST_MEASURE_HPP

// Indirect measurement of B_S through a probe M_E on an environment E, with a
// joint unitary U_SE that conserves A_S + A_E. The error of the process on an
// input rho_S is eps(rho_S)^2 = Tr[(rho_S (x) rho_E) N^2] where
//   N = B_S (x) 1 - U^dagger (1 (x) M_E) U.
//
// Environment and joint operators are stored sparse so that large discretized
// environments (see construct.hpp) go through the same code.

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "cohcost/infogeo.hpp"
#include "cohcost/linops.hpp"
#include "cohcost/monotone.hpp"

namespace cohcost {

inline constexpr double kConservationTolerance = 1e-9;

/// Residual norms of the implementation-set invariants.
struct InvariantStatus {
    double probe_commutator = 0.0;  // ||[M_E, A_E]||
    double conservation = 0.0;      // ||[U_SE, A_S (x) 1 + 1 (x) A_E]||
    double unitarity = 0.0;         // ||U^dagger U - 1||_F
    double hermiticity = 0.0;       // worst entry of A_E, M_E against their adjoints
    double state = 0.0;             // |sum w - 1| + ||V^dagger V - 1||_F for rho_E

    bool ok() const;
    /// Names every violated invariant with its residual; empty when ok().
    std::string describe() const;
};

class ImplementationSet {
  public:
    /// Validates every invariant and throws ErrorKind::InvariantViolation (or
    /// DimensionMismatch) naming the violated one. A_S is shifted so that its
    /// minimum eigenvalue is zero; the shift is recorded.
    static ImplementationSet create(const HermitianOperator &a_s, SparseOperator a_e, SparseOperator m_e,
                                    SupportState rho_e, SparseOperator u_se);
    static ImplementationSet create(const HermitianOperator &a_s, const HermitianOperator &a_e,
                                    const HermitianOperator &m_e, const DensityMatrix &rho_e,
                                    const UnitaryOperator &u_se);
    /// Same construction without the invariant gate (dimensions are still
    /// checked). For negative controls; status() reports the residuals.
    static ImplementationSet unchecked(const HermitianOperator &a_s, SparseOperator a_e, SparseOperator m_e,
                                       SupportState rho_e, SparseOperator u_se);

    Eigen::Index dim_s() const { return a_s_.dim(); }
    Eigen::Index dim_e() const { return a_e_.rows(); }
    const HermitianOperator &a_s() const { return a_s_; }
    double a_s_shift() const { return shift_; }
    const SparseOperator &a_e() const { return a_e_; }
    const SparseOperator &m_e() const { return m_e_; }
    const SupportState &rho_e() const { return rho_e_; }
    const SparseOperator &u_se() const { return u_se_; }
    /// A_S (x) 1 + 1 (x) A_E
    SparseOperator a_total() const;
    const InvariantStatus &status() const { return status_; }

  private:
    ImplementationSet(const HermitianOperator &a_s, SparseOperator a_e, SparseOperator m_e, SupportState rho_e,
                      SparseOperator u_se);

    HermitianOperator a_s_;
    double shift_ = 0.0;
    SparseOperator a_e_;
    SparseOperator m_e_;
    SupportState rho_e_;
    SparseOperator u_se_;
    InvariantStatus status_;
};

SparseOperator noise_operator(const ImplementationSet &impl, const HermitianOperator &b_s);

double error_sq(const ImplementationSet &impl, const HermitianOperator &b_s, const DensityMatrix &rho_s);
double error(const ImplementationSet &impl, const HermitianOperator &b_s, const DensityMatrix &rho_s);

/// K = Tr_E[(1 (x) sqrt(rho_E)) N^2 (1 (x) sqrt(rho_E))], so eps(rho_S)^2 = Tr[rho_S K].
Matrix conditional_error_operator(const ImplementationSet &impl, const HermitianOperator &b_s);

struct WorstError {
    double epsilon = 0.0;
    Vector worst_state;  // eigenvector of K for its largest eigenvalue
};

/// max over rho_S of eps(rho_S), computed as sqrt(lambda_max(K)).
WorstError worst_error(const ImplementationSet &impl, const HermitianOperator &b_s);

/// (f(0)/2) |<[A_S,B_S]>|^2 / (I^f(rho_S, A_S) + I^f(rho_E, A_E)); +inf when the
/// numerator is positive and the total skew information vanishes.
double way_ozawa_bound(const ImplementationSet &impl, const HermitianOperator &b_s, const DensityMatrix &rho_s,
                       const MonotoneFunction &f);

/// <[N, A_S + A_E]>_{rho_S (x) rho_E} against <[B_S, A_S]>_{rho_S}.
struct TransferReport {
    cplx lhs;
    cplx rhs;
    double residual = 0.0;
    bool holds = false;
    /// Non-empty when the implementation set violates its invariants; the
    /// identity is then not expected and a mismatch is not an inequality failure.
    std::string invariant_violation;
};
TransferReport commutator_transfer_check(const ImplementationSet &impl, const HermitianOperator &b_s,
                                         const DensityMatrix &rho_s);

struct KorzekwaComparison {
    double bound_sld = 0.0;
    double bound_korzekwa = 0.0;  // 2 (I^WY_S + I^WY_E) in the denominator
    double bound_original = 0.0;  // V_S(A_S) + V_E(A_E) in the denominator
    bool ordered = false;         // sld >= korzekwa and sld >= original, slack 1e-10
};
KorzekwaComparison korzekwa_comparison(const ImplementationSet &impl, const HermitianOperator &b_s,
                                       const DensityMatrix &rho_s);

struct ErrorReport {
    double epsilon = 0.0;
    double epsilon_sq = 0.0;
    double bound_sld = 0.0;
    std::map<std::string, double> bound_f;
    cplx commutator_expect;  // <[A_S, B_S]>_{rho_S}
};
ErrorReport error_report(const ImplementationSet &impl, const HermitianOperator &b_s, const DensityMatrix &rho_s,
                         const std::vector<MonotoneFunction> &fs);

/// Seeded conserving implementation with integer spectra for A_S and A_E in
/// random bases (so A_S + A_E has degenerate sectors and U mixes them).
ImplementationSet random_implementation(Eigen::Index dim_s, Eigen::Index dim_e, std::uint64_t seed);
/// Same shape with a generic (non-conserving) U; built unchecked.
ImplementationSet random_nonconserving_implementation(Eigen::Index dim_s, Eigen::Index dim_e, std::uint64_t seed);

}  // namespace cohcost

#endif  // COHCOST_MEASURE_HPP
