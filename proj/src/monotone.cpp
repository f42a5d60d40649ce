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

#include "cohcost/monotone.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <sstream>

#include "cohcost/error.hpp"

namespace cohcost {

namespace {

constexpr int kGridMinExp = -20;
constexpr int kGridMaxExp = 20;

const std::array<double, kGridMaxExp - kGridMinExp + 1> &grid_storage() {
    static const auto grid = [] {
        std::array<double, kGridMaxExp - kGridMinExp + 1> g{};
        for (int k = kGridMinExp; k <= kGridMaxExp; ++k) g[static_cast<std::size_t>(k - kGridMinExp)] = std::ldexp(1.0, k);
        return g;
    }();
    return grid;
}

MonotoneFunction validated(MonotoneFunction f) {
    const auto report = check_standard([&f](double x) { return f(x); });
    if (!report.standard()) fail(ErrorKind::Validation, "monotone function '" + f.name() + "': " + report.reason);
    return f;
}

std::string format_alpha(double alpha) {
    std::ostringstream os;
    os.precision(15);
    os << alpha;
    return os.str();
}

}  // namespace

std::span<const double> sampling_grid() { return grid_storage(); }

StandardnessReport check_standard(const MonotoneFunction::Evaluator &f) {
    StandardnessReport r;
    r.normalization_residual = std::abs(f(1.0) - 1.0);
    r.normalized = r.normalization_residual <= 1e-12;

    r.symmetric = true;
    r.monotone = true;
    double prev = -1.0;
    for (double x : sampling_grid()) {
        const double fx = f(x);
        const double residual = std::abs(fx - x * f(1.0 / x));
        r.worst_symmetry_residual = std::max(r.worst_symmetry_residual, residual / std::max(1.0, fx));
        if (!std::isfinite(fx) || fx <= 0.0) r.monotone = false;
        if (prev >= 0.0 && fx < prev - 1e-12 * std::max(1.0, prev)) r.monotone = false;
        prev = fx;
    }
    r.symmetric = r.worst_symmetry_residual <= 1e-10;

    std::ostringstream why;
    if (!r.normalized) why << "Q3 violated: |f(1) - 1| = " << r.normalization_residual << "; ";
    if (!r.symmetric) why << "Q2 violated: max |f(x) - x f(1/x)| / max(1, f(x)) = " << r.worst_symmetry_residual << "; ";
    if (!r.monotone) why << "not positive and nondecreasing on the sampling grid; ";
    r.reason = why.str();
    return r;
}

double MonotoneFunction::operator()(double x) const {
    if (x < 0.0 || std::isnan(x)) fail(ErrorKind::InvalidArgument, "monotone function '" + name_ + "': negative argument");
    if (x == 0.0) return f0_;
    return eval_(x);
}

MonotoneFunction MonotoneFunction::sld() {
    return MonotoneFunction("sld", [](double x) { return 0.5 * (1.0 + x); }, 0.5);
}

MonotoneFunction MonotoneFunction::wy() {
    return MonotoneFunction(
        "wy",
        [](double x) {
            const double h = 0.5 * (std::sqrt(x) + 1.0);
            return h * h;
        },
        0.25);
}

MonotoneFunction MonotoneFunction::wyd(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        fail(ErrorKind::InvalidArgument, "wyd: alpha must lie in (0,1), got " + format_alpha(alpha));
    }
    const double q = alpha * alpha - alpha + 1.0;
    auto eval = [alpha, q](double x) {
        const double t = x - 1.0;
        if (std::abs(t) < 1e-4) {
            // removable singularity at x = 1
            return 1.0 + t / 2.0 - q * t * t / 12.0 + q * t * t * t / 24.0;
        }
        const double lx = std::abs(t) < 0.5 ? std::log1p(t) : std::log(x);
        return alpha * (1.0 - alpha) * t * t / (std::expm1(alpha * lx) * std::expm1((1.0 - alpha) * lx));
    };
    return validated(MonotoneFunction("wyd:" + format_alpha(alpha), eval, alpha * (1.0 - alpha)));
}

MonotoneFunction MonotoneFunction::custom(std::string name, Evaluator eval, double f0) {
    if (!eval) fail(ErrorKind::InvalidArgument, "custom monotone function needs an evaluator");
    if (!(f0 >= 0.0) || !std::isfinite(f0)) fail(ErrorKind::Validation, "custom monotone function: f(0) must be finite and >= 0");
    return validated(MonotoneFunction(std::move(name), std::move(eval), f0));
}

MonotoneFunction MonotoneFunction::tabulated(std::string name, std::vector<double> xs, std::vector<double> fs, double f0) {
    if (xs.size() != fs.size() || xs.size() < 2) {
        fail(ErrorKind::InvalidArgument, "tabulated monotone function: need >= 2 (x, f) pairs of equal length");
    }
    auto log_x = std::make_shared<std::vector<double>>();
    auto g = std::make_shared<std::vector<double>>();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0) || !(fs[i] > 0.0)) fail(ErrorKind::Validation, "tabulated monotone function: x and f must be positive");
        if (i > 0 && !(xs[i] > xs[i - 1])) fail(ErrorKind::Validation, "tabulated monotone function: x must be strictly increasing");
        log_x->push_back(std::log(xs[i]));
        g->push_back(fs[i] / std::sqrt(xs[i]));
    }
    const double lo = std::ldexp(1.0, kGridMinExp);
    const double hi = std::ldexp(1.0, kGridMaxExp);
    if (xs.front() > lo * (1 + 1e-12) || xs.back() < hi * (1 - 1e-12)) {
        fail(ErrorKind::Validation, "tabulated monotone function: table must cover [2^-20, 2^20]");
    }
    const std::string label = name;
    auto eval = [log_x, g, label](double x) {
        const double t = std::log(x);
        const auto &ts = *log_x;
        if (t < ts.front() - 1e-12 || t > ts.back() + 1e-12) {
            fail(ErrorKind::InvalidArgument, "tabulated monotone function '" + label + "': argument outside table");
        }
        auto it = std::upper_bound(ts.begin(), ts.end(), t);
        std::size_t hi_i = std::min<std::size_t>(static_cast<std::size_t>(it - ts.begin()), ts.size() - 1);
        if (hi_i == 0) hi_i = 1;
        const std::size_t lo_i = hi_i - 1;
        const double w = (t - ts[lo_i]) / (ts[hi_i] - ts[lo_i]);
        const double gx = (1.0 - w) * (*g)[lo_i] + w * (*g)[hi_i];
        return gx * std::sqrt(x);
    };
    return custom(std::move(name), eval, f0);
}

std::vector<MonotoneFunction> registry() { return {MonotoneFunction::sld(), MonotoneFunction::wy()}; }

MonotoneFunction lookup(std::string_view name) {
    if (name == "sld") return MonotoneFunction::sld();
    if (name == "wy") return MonotoneFunction::wy();
    if (name.starts_with("wyd:")) {
        const std::string arg(name.substr(4));
        std::size_t used = 0;
        double alpha = 0.0;
        try {
            alpha = std::stod(arg, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != arg.size()) fail(ErrorKind::InvalidArgument, "malformed function name '" + std::string(name) + "'");
        return MonotoneFunction::wyd(alpha);
    }
    fail(ErrorKind::InvalidArgument, "unknown monotone function '" + std::string(name) + "' (expected sld, wy, wyd:<alpha>)");
}

double m_f(const MonotoneFunction &f, double x, double y) {
    if (x < 0.0 || y < 0.0) fail(ErrorKind::InvalidArgument, "m_f: arguments must be nonnegative");
    if (y > 0.0) return y * f(x / y);
    if (x > 0.0) return x * f.f0();
    return 0.0;
}

MonotoneFunction f_tilde(const MonotoneFunction &f) {
    const double f0 = f.f0();
    auto eval = [f, f0](double x) {
        const double d = x - 1.0;
        return 0.5 * (x + 1.0) - 0.5 * d * d * f0 / f(x);
    };
    const double tilde0 = f0 > 0.0 ? 0.0 : 0.5;
    return MonotoneFunction("tilde(" + f.name() + ")", eval, tilde0);
}

bool check_cond_Y(const MonotoneFunction &f) {
    const auto tilde = f_tilde(f);
    auto holds = [&](double x) {
        const double two_f = 2.0 * f(x);
        return 0.5 * (x + 1.0) + tilde(x) >= two_f - 1e-10 * std::max(1.0, two_f);
    };
    if (!holds(0.0)) return false;
    for (double x : sampling_grid())
        if (!holds(x)) return false;
    return true;
}

}  // namespace cohcost
