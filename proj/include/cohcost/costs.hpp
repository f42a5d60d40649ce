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


#ifndef COHCOST_COSTS_HPP
#define COHCOST_COSTS_HPP

// Two-sided bounds on the square root of the coherence cost, the minimal
// environment skew information that allows worst-case error eps:
//   sqrt(f(0)/2) ||[A,B]|| / eps - ||A|| / 2  <=  sqrt(I)  <=  ||[A,B]|| / (2 eps) + ||A||
// where the upper side needs 0 < eps <= ||[A,B]|| / (8 ||A||).

#include <string>
#include <vector>

#include "cohcost/monotone.hpp"

namespace cohcost {

double cost_lower_sqrt(double norm_comm, double norm_a, double eps, const MonotoneFunction &f);
/// Raises ErrorKind::OutOfRegime outside the eps window or for non-positive norms.
double cost_upper_sqrt(double norm_comm, double norm_a, double eps);

struct CostReport {
    double eps = 0.0;
    std::string f_name;
    double lower_sqrt = 0.0;
    double upper_sqrt = 0.0;     // NaN outside the window
    double achieved_sqrt = 0.0;  // xi_eps of the Gaussian-pointer construction; NaN outside the window
    double norm_a = 0.0;
    double norm_comm = 0.0;
    bool in_window = false;
};

CostReport cost_report(double norm_comm, double norm_a, double eps, const MonotoneFunction &f);

struct AsymptoticTable {
    std::vector<CostReport> rows;
    double lower_limit = 0.0;  // ||[A,B]|| sqrt(f(0)/2), the limit of eps * lower
    double upper_limit = 0.0;  // ||[A,B]|| / 2, the limit of eps * upper
    /// true when f(0) = 1/2 and the two limits coincide; otherwise the table
    /// reports the coefficient gap below and claims nothing more.
    bool equality_applies = false;
    double coefficient_gap = 0.0;  // upper_limit - lower_limit
    /// |eps * achieved - ||[A,B]||/2| <= eps ||A|| on every in-window row,
    /// and lower <= achieved <= upper there when equality_applies.
    bool consistent = false;
};

/// Raises ErrorKind::InvalidArgument for an empty or non-positive eps list.
AsymptoticTable asymptotic_table(double norm_comm, double norm_a, const std::vector<double> &eps_list,
                                 const MonotoneFunction &f);

/// The same two inequalities restated for covariant (symmetry-respecting)
/// operations. Documentation only: the evaluators are the ones above and no
/// group representation is built.
struct GcovTransferNote {
    std::string lower_statement;
    std::string upper_statement;
    double lower_sqrt = 0.0;
    double upper_sqrt = 0.0;
};
GcovTransferNote gcov_transfer_note(double norm_comm, double norm_a, double eps, const MonotoneFunction &f);

}  // namespace cohcost

#endif  // COHCOST_COSTS_HPP
