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

#include "cohcost/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cohcost/error.hpp"

namespace cohcost {

double verdict_tolerance(double lhs, double rhs) {
    return 1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

RelationVerdict make_verdict(std::string relation, double lhs, double rhs) {
    RelationVerdict v;
    v.relation = std::move(relation);
    v.lhs = lhs;
    v.rhs = rhs;
    v.slack = lhs - rhs;
    v.holds = v.slack >= -verdict_tolerance(lhs, rhs);
    return v;
}

cplx commutator_expectation(const DensityMatrix &rho, const HermitianOperator &a, const HermitianOperator &b) {
    const cplx c = expectation(rho, commutator(a, b));
    const double scale = std::max(1.0, a.matrix().norm() * b.matrix().norm());
    if (std::abs(c.real()) > 1e-10 * scale) {
        std::ostringstream os;
        os << "commutator expectation has real part " << c.real() << "; expected purely imaginary";
        fail(ErrorKind::Numerical, os.str());
    }
    return c;
}

RelationVerdict robertson(const DensityMatrix &rho, const HermitianOperator &a, const HermitianOperator &b) {
    const double c2 = std::norm(commutator_expectation(rho, a, b));
    return make_verdict("robertson", variance(rho, a) * variance(rho, b), c2 / 4.0);
}

RelationVerdict lemma1(const DensityMatrix &rho, const HermitianOperator &a, const HermitianOperator &b,
                       const MonotoneFunction &f) {
    const double c2 = std::norm(commutator_expectation(rho, a, b));
    return make_verdict("lemma1", skew_information(rho, a, f) * f_variance(rho, b, f), 0.5 * f.f0() * c2);
}

RelationVerdict type1(const DensityMatrix &rho, const HermitianOperator &a, const HermitianOperator &b,
                      const MonotoneFunction &f) {
    const double c2 = std::norm(commutator_expectation(rho, a, b));
    return make_verdict("type1", u_quantity(rho, a, f) * u_quantity(rho, b, f), f.f0() * f.f0() * c2);
}

RelationVerdict type2(const DensityMatrix &rho, const HermitianOperator &a, const HermitianOperator &b,
                      const MonotoneFunction &f) {
    if (!check_cond_Y(f)) {
        fail(ErrorKind::ConditionNotMet, "type2: f = '" + f.name() + "' does not satisfy (x+1)/2 + f~(x) >= 2 f(x)");
    }
    const double c2 = std::norm(commutator_expectation(rho, a, b));
    return make_verdict("type2", u_quantity(rho, a, f) * u_quantity(rho, b, f), f.f0() * c2);
}

RelationVerdict type3(const DensityMatrix &rho, const HermitianOperator &a, const HermitianOperator &b,
                      const MonotoneFunction &f) {
    const double c2 = std::norm(commutator_expectation(rho, a, b));
    return make_verdict("type3", skew_information(rho, a, f) * variance(rho, b), 0.5 * f.f0() * c2);
}

std::optional<TightnessChain> tightness_chain(const DensityMatrix &rho, const HermitianOperator &a,
                                              const HermitianOperator &b, const MonotoneFunction &f) {
    if (f.f0() != 0.5) return std::nullopt;
    TightnessChain chain{lemma1(rho, a, b, f), type3(rho, a, b, f), robertson(rho, a, b), false};
    const double t1 = 1e-10 * std::max(1.0, chain.robertson.lhs);
    const double t2 = 1e-10 * std::max(1.0, chain.robertson.rhs);
    chain.ordered = chain.lemma1.lhs <= chain.type3.lhs + t1 && chain.type3.lhs <= chain.robertson.lhs + t1 &&
                    std::abs(chain.lemma1.rhs - chain.robertson.rhs) <= t2 &&
                    std::abs(chain.type3.rhs - chain.robertson.rhs) <= t2;
    return chain;
}

CauchySchwarzStep cauchy_schwarz_step(const DensityMatrix &rho, const HermitianOperator &a,
                                      const HermitianOperator &b, const MonotoneFunction &f, double step) {
    CauchySchwarzStep out;
    const Eigen::Index n = rho.dim();
    const double mean_b = expectation(rho, b.matrix()).real();
    const Matrix b0 = b.matrix() - mean_b * Matrix::Identity(n, n);
    const Matrix l = l_operator(rho, a, f);

    out.inner_b_l = fisher_inner(rho, b0, l, f).real();
    out.b_norm_sq = fisher_inner(rho, b0, b0, f).real();
    out.fisher = fisher_inner(rho, l, l, f).real();

    auto mean_at = [&](double t) {
        const Matrix u = unitary_exp(a, t).matrix();
        const Matrix rho_t = u * rho.matrix() * u.adjoint();
        return (rho_t * b.matrix()).trace().real();
    };
    out.derivative = (mean_at(step) - mean_at(-step)) / (2.0 * step);

    const double lhs = out.inner_b_l * out.inner_b_l;
    const double rhs = out.b_norm_sq * out.fisher;
    out.holds = lhs <= rhs + 1e-9 * std::max(1.0, rhs);
    return out;
}

}  // namespace cohcost
