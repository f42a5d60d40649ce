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


// Invariant suites run by the `selftest` command.

#include <cmath>
#include <functional>
#include <random>

#include "cohcost/costs.hpp"
#include "cohcost/error.hpp"
#include "cohcost/harness.hpp"
#include "cohcost/uncertainty.hpp"
#include "harness_util.hpp"

namespace cohcost {

using detail::csv_field;
using detail::hex64;
using detail::num;

namespace {

class Suite {
  public:
    Suite(std::string name, std::uint64_t seed, std::uint64_t stream) : name_(std::move(name)), seed_(mix_seed(seed, stream)) {}

    std::uint64_t seed(std::uint64_t i) const { return mix_seed(seed_, i); }

    void check(bool ok, const std::function<std::string()> &what) {
        ++cases_;
        if (ok) return;
        ++violations_;
        if (first_failure_.empty()) first_failure_ = what();
    }
    void check(bool ok, const std::string &what) {
        check(ok, [&] { return what; });
    }
    void absorb(std::uint64_t cases, std::uint64_t violations, const std::string &what) {
        cases_ += cases;
        violations_ += violations;
        if (violations > 0 && first_failure_.empty()) first_failure_ = what;
    }
    // Runs fn and counts an unexpected exception as a violation.
    void guard(const std::string &what, const std::function<void()> &fn) {
        try {
            fn();
        } catch (const std::exception &e) {
            check(false, what + ": " + e.what());
        }
    }
    template <typename Fn>
    void expect_error(ErrorKind kind, const std::string &what, Fn &&fn) {
        try {
            fn();
            check(false, what + ": no error raised");
        } catch (const Error &e) {
            check(e.kind() == kind, what + ": wrong error kind " + to_string(e.kind()));
        }
    }

    const std::string &name() const { return name_; }
    std::uint64_t cases() const { return cases_; }
    std::uint64_t violations() const { return violations_; }
    const std::string &first_failure() const { return first_failure_; }

  private:
    std::string name_;
    std::uint64_t seed_;
    std::uint64_t cases_ = 0;
    std::uint64_t violations_ = 0;
    std::string first_failure_;
};

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

std::vector<MonotoneFunction> suite_functions() {
    return {MonotoneFunction::sld(), MonotoneFunction::wy(), MonotoneFunction::wyd(0.3)};
}

void linops_suite(Suite &s) {
    for (int i = 0; i < 100; ++i) {
        const Eigen::Index dim = 1 + i % 16;
        const HermitianOperator h = random_hermitian(dim, s.seed(i));
        const EigenDecomposition d = eigh(h);
        const Matrix rec = d.vectors * d.values.cast<cplx>().asDiagonal() * d.vectors.adjoint();
        s.check((rec - h.matrix()).norm() <= 1e-10 * static_cast<double>(dim), "eigh reconstruction");
        const Matrix gram = d.vectors.adjoint() * d.vectors - Matrix::Identity(dim, dim);
        s.check(gram.norm() <= 1e-10, "eigenvectors unitary");
        bool sorted = true;
        for (Eigen::Index k = 1; k < dim; ++k) sorted = sorted && d.values(k - 1) <= d.values(k);
        s.check(sorted, "eigenvalues ascending");
    }
    for (int i = 0; i < 50; ++i) {
        const Eigen::Index ds = 1 + i % 3, de = 1 + i % 4;
        const Matrix x = random_hermitian(ds * de, s.seed(1000 + i)).matrix();
        s.check(std::abs(partial_trace_env(x, ds, de).trace() - x.trace()) <= 1e-12 * std::max(1.0, x.norm()),
                "partial trace preserves trace");
        const Matrix xs = random_hermitian(ds, s.seed(2000 + i)).matrix();
        const DensityMatrix ye = random_density(de, s.seed(3000 + i));
        s.check((partial_trace_env(tensor(xs, ye.matrix()), ds, de) - xs).norm() <= 1e-12 * std::max(1.0, xs.norm()),
                "partial trace of product");
    }
    for (int i = 0; i < 100; ++i) {
        const Matrix x = random_hermitian(4, s.seed(4000 + i)).matrix() * random_hermitian(4, s.seed(5000 + i)).matrix();
        const Matrix y = random_hermitian(4, s.seed(6000 + i)).matrix();
        s.check(op_norm(x * y) <= op_norm(x) * op_norm(y) + 1e-10, "op_norm submultiplicative");
    }
    for (int i = 0; i < 100; ++i) {
        const Matrix w = unitary_exp(random_hermitian(6, s.seed(7000 + i), 3.0)).matrix();
        const double lv[] = {0, 0, 1, 1, 1, 2};
        const Matrix total = w * HermitianOperator::diagonal(lv).matrix() * w.adjoint();
        const HermitianOperator a(0.5 * (total + total.adjoint()));
        const UnitaryOperator u = random_conserving_unitary(a, s.seed(8000 + i));
        s.check(op_norm(commutator(u.matrix(), a.matrix())) <= 1e-9, "conserving unitary commutes");
    }
}

void monotone_suite(Suite &s) {
    std::vector<MonotoneFunction> fs = suite_functions();
    fs.push_back(MonotoneFunction::wyd(0.5));
    for (const auto &f : fs) {
        const StandardnessReport rep = check_standard([&](double x) { return f(x); });
        s.check(rep.standard(), "registry entry " + f.name() + " standard: " + rep.reason);
        for (double x : sampling_grid())
            s.check(std::abs(f(x) - x * f(1.0 / x)) <= 1e-10 * std::max(1.0, f(x)), "symmetry of " + f.name());
        // f(x) - f(0) can decay like x^alpha, so the approach is checked on a
        // decreasing sequence ending well below 1e-8
        double prev = std::abs(f(1e-8) - f.f0());
        for (double x : {1e-12, 1e-16, 1e-20, 1e-30}) {
            const double gap = std::abs(f(x) - f.f0());
            s.check(gap <= prev, "f(x) approaches f0 for " + f.name());
            prev = gap;
        }
        s.check(prev <= 1e-6, "f0 consistency of " + f.name());
        s.check(std::abs(f_tilde(f)(1.0) - 1.0) <= 1e-12, "f~(1) = 1 for " + f.name());
        s.check(std::abs(m_f(f, 0.3, 0.7) - m_f(f, 0.7, 0.3)) <= 1e-10, "m_f symmetric for " + f.name());
        std::mt19937_64 rng(s.seed(17));
        std::normal_distribution<double> g;
        for (int i = 0; i < 200; ++i) {
            auto psd = [&] {
                Matrix m(2, 2);
                for (int r = 0; r < 2; ++r)
                    for (int c = 0; c < 2; ++c) m(r, c) = cplx(g(rng), g(rng));
                return Matrix(m * m.adjoint());
            };
            const Matrix a = psd();
            const Matrix b = a + psd();
            auto fn = [&](double x) { return f(std::max(0.0, x)); };
            const Matrix diff = apply_function(HermitianOperator(0.5 * (b + b.adjoint())), fn) -
                                apply_function(HermitianOperator(0.5 * (a + a.adjoint())), fn);
            const double lo = eigh(HermitianOperator(0.5 * (diff + diff.adjoint()))).values(0);
            s.check(lo >= -1e-9, "2x2 operator monotonicity of " + f.name());
        }
    }
    s.check(!check_cond_Y(MonotoneFunction::sld()), "sld fails the type-2 condition");
    s.check(check_cond_Y(MonotoneFunction::wy()), "wy meets the type-2 condition");
    s.expect_error(ErrorKind::Validation, "f(1) != 1 rejected",
                   [] { MonotoneFunction::custom("bad", [](double x) { return 1.0 + x; }, 1.0); });
    s.expect_error(ErrorKind::Validation, "asymmetric f rejected",
                   [] { MonotoneFunction::custom("linear", [](double x) { return x; }, 0.0); });
    s.expect_error(ErrorKind::InvalidArgument, "unknown name rejected", [] { lookup("nope"); });
}

void infogeo_suite(Suite &s) {
    const auto fs = suite_functions();
    for (int i = 0; i < 300; ++i) {
        const Eigen::Index dim = 2 + i % 7;
        const DensityMatrix rho = random_density(dim, s.seed(i));
        const HermitianOperator a = random_hermitian(dim, s.seed(10000 + i));
        const double v = variance(rho, a);
        for (const auto &f : fs) {
            const double skew = skew_information(rho, a, f);
            s.check(skew >= -1e-10 && skew <= v + 1e-10, [&] { return "P1 for " + f.name() + " seed " + std::to_string(i); });
            s.check(f_variance(rho, a, f) <= v + 1e-10, "V^f <= V for " + f.name());
        }
        s.check(std::abs(f_variance(rho, a, MonotoneFunction::sld()) - v) <= 1e-12 * std::max(1.0, v), "V^sld = V");
    }
    for (int i = 0; i < 100; ++i) {
        const Eigen::Index dim = 2 + i % 5;
        const HermitianOperator a = random_hermitian(dim, s.seed(20000 + i));
        const EigenDecomposition d = eigh(a);
        const DensityMatrix diag = random_density(dim, s.seed(21000 + i));
        RealVector p(dim);
        for (Eigen::Index k = 0; k < dim; ++k) p(k) = diag.matrix()(k, k).real();
        const DensityMatrix commuting(d.vectors * p.cast<cplx>().asDiagonal() * d.vectors.adjoint());
        const DensityMatrix pure = DensityMatrix::pure(random_state_vector(dim, s.seed(22000 + i)));
        for (const auto &f : fs) {
            s.check(std::abs(skew_information(commuting, a, f)) <= 1e-10, "P2 for " + f.name());
            s.check(rel(skew_information(pure, a, f), variance(pure, a)) <= 1e-10, "P3 for " + f.name());
        }
    }
    for (int i = 0; i < 200; ++i) {
        const Eigen::Index dim = 2 + i % 4;
        const HermitianOperator a = random_hermitian(dim, s.seed(30000 + i));
        std::mt19937_64 rng(s.seed(31000 + i));
        std::uniform_real_distribution<double> u(0.0, 1.0);
        double q[3], total = 0.0;
        for (double &x : q) total += (x = u(rng) + 1e-3);
        Matrix mix = Matrix::Zero(dim, dim);
        std::vector<DensityMatrix> parts;
        for (int k = 0; k < 3; ++k) {
            parts.push_back(random_density(dim, s.seed(32000 + 3 * i + k)));
            mix += (q[k] / total) * parts.back().matrix();
        }
        const DensityMatrix rho(mix);
        for (const auto &f : fs) {
            double rhs = 0.0;
            for (int k = 0; k < 3; ++k) rhs += (q[k] / total) * skew_information(parts[static_cast<std::size_t>(k)], a, f);
            s.check(skew_information(rho, a, f) <= rhs + 1e-9, "P4 convexity for " + f.name());
        }
    }
    for (int i = 0; i < 100; ++i) {
        const Eigen::Index d1 = 2 + i % 2, d2 = 2 + i % 3;
        const DensityMatrix r1 = random_density(d1, s.seed(40000 + i)), r2 = random_density(d2, s.seed(41000 + i));
        const HermitianOperator a1 = random_hermitian(d1, s.seed(42000 + i)), a2 = random_hermitian(d2, s.seed(43000 + i));
        const DensityMatrix rho(tensor(r1.matrix(), r2.matrix()));
        const HermitianOperator a(tensor(a1.matrix(), Matrix::Identity(d2, d2)) + tensor(Matrix::Identity(d1, d1), a2.matrix()));
        for (const auto &f : fs) {
            const double whole = skew_information(rho, a, f);
            const double parts = skew_information(r1, a1, f) + skew_information(r2, a2, f);
            s.check(std::abs(whole - parts) <= 1e-9 * std::max(1.0, whole), "additivity for " + f.name());
        }
    }
    for (int i = 0; i < 200; ++i) {
        const Eigen::Index dim = 2 + i % 5;
        const DensityMatrix rho = random_density(dim, s.seed(50000 + i));
        const HermitianOperator a = random_hermitian(dim, s.seed(51000 + i));
        for (const auto &f : fs) {
            const double skew = skew_information(rho, a, f);
            const double fisher = fisher_information(rho, a, f);
            s.check(std::abs(skew - 0.5 * f.f0() * fisher) <= 1e-9 * skew, "skew-Fisher identity for " + f.name());
            const double u1 = u_quantity(rho, a, f), u2 = u_quantity_identity(rho, a, f);
            s.check(std::abs(u1 - u2) <= 1e-8 * std::max(u1, u2), "U dual path for " + f.name());
        }
    }
    for (int i = 0; i < 100; ++i) {
        const DensityMatrix rho = random_density(4, s.seed(60000 + i));
        const HermitianOperator a = random_hermitian(4, s.seed(61000 + i));
        for (const auto &f : fs) {
            const Matrix le = in_eigenbasis(rho, l_operator(rho, a, f));
            const RealVector &p = rho.eigenvalues();
            Matrix t(4, 4);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) t(r, c) = m_f(f, p(r), p(c)) * le(r, c);
            const Matrix &v = rho.eigenvectors();
            const Matrix tangent = cplx(0.0, -1.0) * commutator(a.matrix(), rho.matrix());
            s.check((v * t * v.adjoint() - tangent).norm() <= 1e-9, "L reproduces the tangent for " + f.name());
        }
    }
}

void uncertainty_suite(Suite &s, const RunConfig &parent) {
    RunConfig cfg;
    cfg.command = "relations";
    cfg.seed = s.seed(0);
    cfg.trials = 200;
    cfg.f_names = {"sld", "wy", "wyd:0.5"};
    cfg.threads = parent.threads;
    const RunResult rel_run = run_relations(cfg);
    s.absorb(rel_run.checks, rel_run.violations, rel_run.notes.empty() ? "relation violated" : rel_run.notes.front());

    const MonotoneFunction sld = MonotoneFunction::sld();
    for (int i = 0; i < 200; ++i) {
        const Eigen::Index dim = 2 + i % 3;
        const DensityMatrix rho = random_density(dim, s.seed(100 + i));
        const HermitianOperator a = random_hermitian(dim, s.seed(1000 + i)), b = random_hermitian(dim, s.seed(2000 + i));
        const auto chain = tightness_chain(rho, a, b, sld);
        s.check(chain && chain->ordered, "tightness chain ordered");
        const double c = 1.7;
        const RelationVerdict base = lemma1(rho, a, b, sld);
        const RelationVerdict scaled = lemma1(rho, HermitianOperator(c * a.matrix()), b, sld);
        s.check(rel(scaled.lhs, c * c * base.lhs) <= 1e-10 && rel(scaled.rhs, c * c * base.rhs) <= 1e-10,
                "lemma1 scale covariance");
    }
    s.check(!tightness_chain(random_density(2, s.seed(3)), random_hermitian(2, s.seed(4)), random_hermitian(2, s.seed(5)),
                             MonotoneFunction::wy()),
            "tightness chain not applicable for f(0) != 1/2");
    for (int i = 0; i < 50; ++i) {
        const DensityMatrix rho = random_density(3, s.seed(3000 + i));
        const HermitianOperator a = random_hermitian(3, s.seed(4000 + i)), b = random_hermitian(3, s.seed(5000 + i));
        for (const auto &f : suite_functions()) {
            const CauchySchwarzStep cs = cauchy_schwarz_step(rho, a, b, f);
            s.check(cs.holds, "Cauchy-Schwarz step for " + f.name());
            s.check(std::abs(cs.derivative - cs.inner_b_l) <= 1e-6, "derivative matches <B_0, L> for " + f.name());
        }
    }
    Matrix sy(2, 2);
    sy << 0, cplx(0, -1), cplx(0, 1), 0;
    Matrix w = Matrix::Zero(2, 2);
    w(0, 0) = 0.75;
    w(1, 1) = 0.25;
    const DensityMatrix witness(w);
    const RelationVerdict sat = lemma1(witness, HermitianOperator(pauli_x()), HermitianOperator(sy), sld);
    s.check(std::abs(sat.lhs - 0.25) <= 1e-10 && std::abs(sat.rhs - 0.25) <= 1e-10, "saturation witness");
    s.expect_error(ErrorKind::ConditionNotMet, "type2 gated on the condition",
                   [&] { type2(witness, HermitianOperator(pauli_x()), HermitianOperator(sy), sld); });
}

void measure_suite(Suite &s) {
    const auto fs = suite_functions();
    const std::pair<int, int> shapes[] = {{2, 4}, {3, 3}};
    for (const auto &[ds, de] : shapes) {
        for (int i = 0; i < 100; ++i) {
            const std::uint64_t seed = s.seed(static_cast<std::uint64_t>(ds * 1000 + i));
            s.guard("random implementation", [&] {
                const ImplementationSet impl = random_implementation(ds, de, seed);
                const HermitianOperator b = random_hermitian(ds, mix_seed(seed, 100));
                const DensityMatrix rho = random_density(ds, mix_seed(seed, 101));
                const double e2 = error_sq(impl, b, rho);
                for (const auto &f : fs) {
                    const double bound = way_ozawa_bound(impl, b, rho, f);
                    s.check(e2 - bound >= -verdict_tolerance(e2, bound), "WAY-Ozawa bound for " + f.name());
                }
                s.check(commutator_transfer_check(impl, b, rho).holds, "commutator transfer identity");
                s.check(korzekwa_comparison(impl, b, rho).ordered, "bound ordering");
                const SparseOperator n = noise_operator(impl, b);
                const SparseOperator nd = n - SparseOperator(n.adjoint());
                s.check(nd.nonZeros() == 0 || max_abs_entry(nd) <= 1e-10, "noise operator Hermitian");
                const EigenDecomposition k = eigh(HermitianOperator(conditional_error_operator(impl, b)));
                s.check(k.values(0) >= -1e-10 * std::max(1.0, k.values(ds - 1)), "K positive semidefinite");
                const WorstError worst = worst_error(impl, b);
                s.check(worst.epsilon >= error(impl, b, rho) - 1e-12, "worst error dominates");
                for (int j = 0; j < 10; ++j) {
                    const DensityMatrix pure = DensityMatrix::pure(random_state_vector(ds, mix_seed(seed, 200 + j)));
                    s.check(worst.epsilon >= error(impl, b, pure) - 1e-12, "worst error dominates sampled states");
                }
                const double at_worst = error(impl, b, DensityMatrix::pure(worst.worst_state));
                s.check(std::abs(at_worst - worst.epsilon) <= 1e-9, "worst state attains the worst error");
            });
        }
    }
    // perfect measurement of a commuting observable
    const double levels[] = {0.0, 1.0}, bvals[] = {0.3, -1.2};
    const HermitianOperator a_s = HermitianOperator::diagonal(levels);
    const HermitianOperator b_s = HermitianOperator::diagonal(bvals);
    Vector zero = Vector::Zero(2);
    zero(0) = 1.0;
    const ImplementationSet perfect =
        ImplementationSet::create(a_s, a_s, b_s, DensityMatrix::pure(zero), swap_gate(2));
    for (int i = 0; i < 10; ++i)
        s.check(error(perfect, b_s, random_density(2, s.seed(9000 + i))) <= 1e-12, "perfect commuting measurement");
    s.check(worst_error(perfect, b_s).epsilon <= 1e-12, "perfect commuting worst error");
    // no interaction, no probe
    const HermitianOperator sx(pauli_x());
    const ImplementationSet idle = ImplementationSet::create(a_s, a_s, HermitianOperator::zero(2),
                                                             DensityMatrix::pure(zero), UnitaryOperator::identity(4));
    s.check(std::abs(error_sq(idle, sx, random_density(2, s.seed(9100))) - 1.0) <= 1e-12, "idle error is 1");
    s.check(std::abs(worst_error(idle, sx).epsilon - 1.0) <= 1e-12, "idle worst error is 1");
    const auto tr = commutator_transfer_check(idle, sx, random_density(2, s.seed(9101)));
    s.check(tr.holds, "idle transfer identity");
    // negative control
    const ImplementationSet broken = random_nonconserving_implementation(2, 4, s.seed(9200));
    s.check(!broken.status().ok(), "non-conserving U flagged");
    s.expect_error(ErrorKind::InvariantViolation, "non-conserving U rejected", [&] {
        ImplementationSet::create(broken.a_s(), broken.a_e(), broken.m_e(), broken.rho_e(), broken.u_se());
    });
    s.check(!commutator_transfer_check(broken, sx, random_density(2, s.seed(9201))).invariant_violation.empty(),
            "transfer failure reported as invariant violation");
}

void construct_suite(Suite &s) {
    for (double xi : {1.0, 2.0, 6.0}) {
        const Matrix w = exact_error_matrix(qubit_spec(xi)).matrix();
        const double closed = 2.0 * (1.0 - std::exp(-1.0 / (8.0 * xi * xi)));
        s.check(std::abs(w(0, 0) - closed) <= 1e-12 && std::abs(w(1, 1) - closed) <= 1e-12 &&
                    std::abs(w(0, 1)) <= 1e-15,
                "qubit closed form at xi " + num(xi));
    }
    const double diag_b[] = {0.4, -0.9, 1.3};
    const ConstructionSpec commuting = make_spec(1.0, {0, 1, 3}, HermitianOperator::diagonal(diag_b), 2.0);
    s.check(exact_error_matrix(commuting).matrix().norm() == 0.0, "commuting B gives W = 0");
    s.check(error_bound(commuting) == 0.0 && series_tail_bound(commuting, 4).total == 0.0, "commuting bounds vanish");
    s.check(exact_worst_error(qubit_spec(1e6)) <= 1e-6, "wide pointer gives vanishing error");

    std::mt19937_64 rng(s.seed(1));
    std::uniform_real_distribution<double> logxi(0.0, std::log(50.0));
    for (int i = 0; i < 50; ++i) {
        const ConstructionSpec spec = random_spec(2 + i % 4, s.seed(100 + i), std::exp(logxi(rng)));
        const double exact = exact_worst_error(spec);
        const double bound = error_bound(spec);
        const SeriesBound series = series_tail_bound(spec, 1 + i % 6);
        s.check(exact * exact <= series.total * (1 + 1e-12) + 1e-15, "worst error within series majorant");
        s.check(series.total <= bound + 1e-12 * std::max(1.0, bound), "series majorant within error bound");
        s.check(eigh(exact_error_matrix(spec)).values(0) >= -1e-10, "W positive semidefinite");
    }
    for (double eps : {0.125, 0.1, 0.05, 0.01}) {
        const double xi = xi_for_epsilon(1.0, 1.0, eps);
        s.check(exact_worst_error(qubit_spec(xi)) <= eps, "construction achieves eps " + num(eps));
    }
    s.expect_error(ErrorKind::OutOfRegime, "eps above the window", [] { xi_for_epsilon(1.0, 1.0, 0.2); });

    s.guard("grid cross-check", [&] {
        const ConstructionSpec spec = qubit_spec(1.0);
        const ImplementationSet impl = discretize(spec, GridSpec{});
        for (int i = 0; i < 10; ++i) {
            const DensityMatrix rho = random_density(2, s.seed(500 + i));
            s.check(std::abs(error_sq(impl, spec.b, rho) - exact_error_sq(spec, rho)) <= 1e-6, "grid matches closed form");
        }
        const PointerGrid pg = pointer_grid(spec, GridSpec{});
        s.check(rel(pg.position_variance, 1.0) <= 1e-6, "pointer variance is xi^2");
        for (const auto &f : suite_functions())
            s.check(rel(skew_information(impl.rho_e(), impl.a_e(), f), pointer_coherence(spec)) <= 1e-6,
                    "pointer coherence for " + f.name());
        const double phases[] = {0.7, -1.3};
        const ImplementationSet rephased = discretize(spec, GridSpec{}, phases);
        const DensityMatrix rho = random_density(2, s.seed(600));
        s.check(std::abs(error_sq(rephased, spec.b, rho) - error_sq(impl, spec.b, rho)) <= 1e-12,
                "error invariant under B eigenvector phases");
        const double zb[] = {1.0, -1.0};
        const ConstructionSpec flat = make_spec(1.0, {0, 1}, HermitianOperator::diagonal(zb), 1.0);
        s.check(worst_error(discretize(flat, GridSpec{}), flat.b).epsilon <= 1e-10, "grid commuting case");
    });
}

void costs_suite(Suite &s) {
    const MonotoneFunction sld = MonotoneFunction::sld();
    const double eps[] = {0.1, 0.05, 0.01};
    const double lower[] = {4.5, 9.5, 49.5}, upper[] = {6.0, 11.0, 51.0};
    const AsymptoticTable t = asymptotic_table(1.0, 1.0, {0.1, 0.05, 0.01}, sld);
    s.check(t.consistent && t.equality_applies, "sld table consistent");
    for (int i = 0; i < 3; ++i) {
        const CostReport &r = t.rows[static_cast<std::size_t>(i)];
        s.check(std::abs(r.lower_sqrt - lower[i]) <= 1e-12 && std::abs(r.upper_sqrt - upper[i]) <= 1e-12,
                "cost table values at eps " + num(eps[i]));
        s.check(std::abs(eps[i] * r.upper_sqrt - eps[i] * r.lower_sqrt - 1.5 * eps[i]) <= 1e-12, "bound gap is 1.5 eps");
        s.check(r.lower_sqrt <= r.achieved_sqrt && r.achieved_sqrt <= r.upper_sqrt, "sandwich");
        s.check(exact_worst_error(qubit_spec(r.achieved_sqrt)) <= eps[i], "achieved cost reaches eps");
        if (i > 0) {
            const CostReport &p = t.rows[static_cast<std::size_t>(i - 1)];
            s.check(r.lower_sqrt > p.lower_sqrt && r.upper_sqrt > p.upper_sqrt, "bounds decrease in eps");
            s.check(std::abs(eps[i] * r.upper_sqrt - 0.5) < std::abs(eps[i - 1] * p.upper_sqrt - 0.5) &&
                        std::abs(eps[i] * r.lower_sqrt - 0.5) < std::abs(eps[i - 1] * p.lower_sqrt - 0.5),
                    "products approach 1/2");
        }
    }
    const MonotoneFunction wy = MonotoneFunction::wy();
    s.check(std::abs(cost_lower_sqrt(1.0, 1.0, 0.1, wy) - (std::sqrt(0.125) / 0.1 - 0.5)) <= 1e-12, "wy lower bound");
    s.check(!asymptotic_table(1.0, 1.0, {0.1}, wy).equality_applies, "wy reports a gap");
    const double c = 2.5;
    s.check(rel(cost_upper_sqrt(c, c, 0.1), c * cost_upper_sqrt(1.0, 1.0, 0.1)) <= 1e-12 &&
                rel(cost_lower_sqrt(c, c, 0.1, sld), c * cost_lower_sqrt(1.0, 1.0, 0.1, sld)) <= 1e-12,
            "dimensional covariance");
    s.check(std::abs(cost_upper_sqrt(1.0, 1.0, 0.125) - 5.0) <= 1e-12, "window boundary accepted");
    s.expect_error(ErrorKind::OutOfRegime, "eps outside the window", [] { cost_upper_sqrt(1.0, 1.0, 0.2); });
    s.expect_error(ErrorKind::OutOfRegime, "zero commutator", [] { cost_upper_sqrt(0.0, 1.0, 0.1); });
}

}  // namespace

RunResult run_selftest(const RunConfig &cfg) {
    std::vector<Suite> suites;
    auto add = [&](const char *name, std::uint64_t stream, const std::function<void(Suite &)> &body) {
        suites.emplace_back(name, cfg.seed, stream);
        Suite &s = suites.back();
        s.guard(name, [&] { body(s); });
    };
    add("linops", 1, linops_suite);
    add("monotone", 2, monotone_suite);
    add("infogeo", 3, infogeo_suite);
    add("uncertainty", 4, [&](Suite &s) { uncertainty_suite(s, cfg); });
    add("measure", 5, measure_suite);
    add("construct", 6, construct_suite);
    add("costs", 7, costs_suite);

    const std::string hash = hex64(config_hash(cfg));
    RunResult r;
    r.output = "suite,cases,violations,first_failure,seed,config_hash\n";
    for (const auto &s : suites) {
        r.checks += s.cases();
        r.violations += s.violations();
        if (!s.first_failure().empty()) r.notes.push_back(s.name() + ": " + s.first_failure());
        r.output += s.name() + "," + std::to_string(s.cases()) + "," + std::to_string(s.violations()) + "," +
                    csv_field(s.first_failure()) + "," + std::to_string(cfg.seed) + "," + hash + "\n";
    }
    r.passed = r.violations == 0;
    return r;
}

}  // namespace cohcost
