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


#include "cohcost/costs.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "cohcost/construct.hpp"
#include "cohcost/error.hpp"

namespace cohcost {

double cost_lower_sqrt(double norm_comm, double norm_a, double eps, const MonotoneFunction &f) {
    if (!(eps > 0.0)) fail(ErrorKind::InvalidArgument, "cost_lower_sqrt: eps must be positive");
    if (norm_comm < 0.0 || norm_a < 0.0) fail(ErrorKind::InvalidArgument, "cost_lower_sqrt: norms must be nonnegative");
    return std::sqrt(0.5 * f.f0()) * norm_comm / eps - 0.5 * norm_a;
}

double cost_upper_sqrt(double norm_comm, double norm_a, double eps) {
    return xi_for_epsilon(norm_comm, norm_a, eps);
}

CostReport cost_report(double norm_comm, double norm_a, double eps, const MonotoneFunction &f) {
    CostReport r;
    r.eps = eps;
    r.f_name = f.name();
    r.norm_a = norm_a;
    r.norm_comm = norm_comm;
    r.lower_sqrt = cost_lower_sqrt(norm_comm, norm_a, eps, f);
    r.in_window = norm_comm > 0.0 && norm_a > 0.0 && eps <= epsilon_window(norm_comm, norm_a);
    if (r.in_window) {
        r.upper_sqrt = cost_upper_sqrt(norm_comm, norm_a, eps);
        r.achieved_sqrt = xi_for_epsilon(norm_comm, norm_a, eps);
    } else {
        r.upper_sqrt = std::numeric_limits<double>::quiet_NaN();
        r.achieved_sqrt = std::numeric_limits<double>::quiet_NaN();
    }
    return r;
}

AsymptoticTable asymptotic_table(double norm_comm, double norm_a, const std::vector<double> &eps_list,
                                 const MonotoneFunction &f) {
    if (eps_list.empty()) fail(ErrorKind::InvalidArgument, "asymptotic_table: empty eps list");
    AsymptoticTable t;
    t.lower_limit = norm_comm * std::sqrt(0.5 * f.f0());
    t.upper_limit = 0.5 * norm_comm;
    t.equality_applies = f.f0() == 0.5;
    t.coefficient_gap = t.upper_limit - t.lower_limit;
    t.consistent = true;
    for (double eps : eps_list) {
        if (!(eps > 0.0)) fail(ErrorKind::InvalidArgument, "asymptotic_table: eps values must be positive");
        CostReport r = cost_report(norm_comm, norm_a, eps, f);
        if (r.in_window) {
            const double tol = 1e-10 * std::max(1.0, r.upper_sqrt);
            if (std::abs(eps * r.achieved_sqrt - t.upper_limit) > eps * norm_a + tol) t.consistent = false;
            if (t.equality_applies && (r.lower_sqrt > r.achieved_sqrt + tol || r.achieved_sqrt > r.upper_sqrt + tol))
                t.consistent = false;
        }
        t.rows.push_back(std::move(r));
    }
    return t;
}

GcovTransferNote gcov_transfer_note(double norm_comm, double norm_a, double eps, const MonotoneFunction &f) {
    GcovTransferNote n;
    n.lower_statement =
        "sqrt(I'_cost) >= sqrt(f(0)/2) ||[A,B]|| / eps - ||A|| / 2 for covariant implementations";
    n.upper_statement =
        "sqrt(I'_cost) <= ||[A,B]|| / (2 eps) + ||A|| for 0 < eps <= ||[A,B]|| / (8 ||A||)";
    n.lower_sqrt = cost_lower_sqrt(norm_comm, norm_a, eps, f);
    n.upper_sqrt = cost_upper_sqrt(norm_comm, norm_a, eps);
    return n;
}

}  // namespace cohcost
