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

#ifndef COHCOST_MONOTONE_HPP
#define COHCOST_MONOTONE_HPP

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cohcost {

/// A standard operator monotone function f: f(1) = 1, f(x) = x f(1/x),
/// nondecreasing. f(0) is stored analytically rather than taken as a limit.
///
/// Instances built through the public factories are validated on the
/// logarithmic grid {2^k : k = -20..20}; construction throws
/// ErrorKind::Validation if the function is not standard.
class MonotoneFunction {
  public:
    using Evaluator = std::function<double(double)>;

    static MonotoneFunction sld();
    static MonotoneFunction wy();
    /// Wigner-Yanase-Dyson, alpha in (0,1).
    static MonotoneFunction wyd(double alpha);
    static MonotoneFunction custom(std::string name, Evaluator eval, double f0);
    /// Tabulated user function. Interpolates g(t) = f(e^t) e^{-t/2} linearly in
    /// t = log x, so a table symmetric in log x gives an exactly symmetric f.
    /// The table must cover [2^-20, 2^20].
    static MonotoneFunction tabulated(std::string name, std::vector<double> xs, std::vector<double> fs, double f0);

    const std::string &name() const { return name_; }
    double f0() const { return f0_; }
    /// f(x) for x >= 0; f(0) returns the stored f0.
    double operator()(double x) const;

  private:
    friend MonotoneFunction f_tilde(const MonotoneFunction &f);
    MonotoneFunction(std::string name, Evaluator eval, double f0) : name_(std::move(name)), eval_(std::move(eval)), f0_(f0) {}

    std::string name_;
    Evaluator eval_;
    double f0_;
};

/// Outcome of the Q2/Q3/monotonicity checks on the sampling grid.
struct StandardnessReport {
    bool normalized = false;  // Q3
    bool symmetric = false;   // Q2
    bool monotone = false;    // scalar surrogate of Q1
    double normalization_residual = 0.0;
    double worst_symmetry_residual = 0.0;
    std::string reason;  // empty when standard
    bool standard() const { return normalized && symmetric && monotone; }
};

StandardnessReport check_standard(const MonotoneFunction::Evaluator &f);

/// {2^k : k = -20..20}
std::span<const double> sampling_grid();

/// The registry proper: sld and wy.
std::vector<MonotoneFunction> registry();

/// "sld", "wy" or "wyd:<alpha>". Unknown names raise ErrorKind::InvalidArgument.
MonotoneFunction lookup(std::string_view name);

/// Matrix-mean scalar m_f(x, y) = y f(x/y), with m_f(x, 0) = x f(0) and
/// m_f(0, 0) = 0. Negative arguments raise ErrorKind::InvalidArgument.
double m_f(const MonotoneFunction &f, double x, double y);

/// f~(x) = (x+1)/2 - (x-1)^2/2 * f(0)/f(x). The result has f~(0) = 0 and is
/// not revalidated as operator monotone.
MonotoneFunction f_tilde(const MonotoneFunction &f);

/// (x+1)/2 + f~(x) >= 2 f(x) on the sampling grid and at x = 0, with slack
/// 1e-10 * max(1, 2 f(x)).
bool check_cond_Y(const MonotoneFunction &f);

}  // namespace cohcost

#endif  // COHCOST_MONOTONE_HPP
