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

#ifndef COHCOST_UNCERTAINTY_HPP
#define COHCOST_UNCERTAINTY_HPP

#include <optional>
#include <string>

#include "cohcost/infogeo.hpp"

namespace cohcost {

/// Both sides of an inequality lhs >= rhs. `holds` is slack >= -tol with
/// tol = 1e-9 * max(1, |lhs|, |rhs|).
struct RelationVerdict {
    std::string relation;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool holds = false;
};

RelationVerdict make_verdict(std::string relation, double lhs, double rhs);
double verdict_tolerance(double lhs, double rhs);

/// <[A,B]>_rho = Tr[rho (AB - BA)]. Purely imaginary for Hermitian A, B; a real
/// part above 1e-10 * max(1, ||A||_F ||B||_F) raises ErrorKind::Numerical.
cplx commutator_expectation(const DensityMatrix &rho, const HermitianOperator &a, const HermitianOperator &b);

/// V(A) V(B) >= |<[A,B]>|^2 / 4
RelationVerdict robertson(const DensityMatrix &rho, const HermitianOperator &a, const HermitianOperator &b);
/// I^f(A) V^f(B) >= f(0)/2 |<[A,B]>|^2
RelationVerdict lemma1(const DensityMatrix &rho, const HermitianOperator &a, const HermitianOperator &b,
                       const MonotoneFunction &f);
/// U^f(A) U^f(B) >= f(0)^2 |<[A,B]>|^2
RelationVerdict type1(const DensityMatrix &rho, const HermitianOperator &a, const HermitianOperator &b,
                      const MonotoneFunction &f);
/// U^f(A) U^f(B) >= f(0) |<[A,B]>|^2, only for f passing check_cond_Y;
/// otherwise ErrorKind::ConditionNotMet.
RelationVerdict type2(const DensityMatrix &rho, const HermitianOperator &a, const HermitianOperator &b,
                      const MonotoneFunction &f);
/// I^f(A) V(B) >= f(0)/2 |<[A,B]>|^2
RelationVerdict type3(const DensityMatrix &rho, const HermitianOperator &a, const HermitianOperator &b,
                      const MonotoneFunction &f);

/// lemma1.lhs <= type3.lhs <= robertson.lhs with equal right-hand sides.
struct TightnessChain {
    RelationVerdict lemma1;
    RelationVerdict type3;
    RelationVerdict robertson;
    bool ordered = false;
};

/// std::nullopt when f(0) != 1/2: the right-hand sides then live on different
/// scales and no ordering is claimed.
std::optional<TightnessChain> tightness_chain(const DensityMatrix &rho, const HermitianOperator &a,
                                              const HermitianOperator &b, const MonotoneFunction &f);

/// Pieces of the Cauchy-Schwarz step behind lemma1, evaluated on the unitary
/// family generated by A at t = 0.
struct CauchySchwarzStep {
    double inner_b_l = 0.0;     // <B_0, L>^f (real for Hermitian B, L)
    double b_norm_sq = 0.0;     // <B_0, B_0>^f = V^f(B)
    double fisher = 0.0;        // <L, L>^f
    double derivative = 0.0;    // d<B>/dt at t = 0, central finite difference
    bool holds = false;         // |<B_0, L>|^2 <= <B_0,B_0><L,L> within 1e-9 scale
};

CauchySchwarzStep cauchy_schwarz_step(const DensityMatrix &rho, const HermitianOperator &a,
                                      const HermitianOperator &b, const MonotoneFunction &f, double step = 1e-5);

}  // namespace cohcost

#endif  // COHCOST_UNCERTAINTY_HPP
