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


#include <cmath>
#include <limits>
#include <random>

#include "cohcost/error.hpp"
#include "cohcost/measure.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cohcost;

namespace {

Matrix dense_env_state(const SupportState &s) {
    return s.vectors * s.weights.cast<cplx>().asDiagonal() * s.vectors.adjoint();
}

// eps^2 straight from the definition with dense Kronecker products.
double oracle_error_sq(const ImplementationSet &impl, const Matrix &b, const Matrix &rho_s) {
    const Eigen::Index ds = impl.dim_s(), de = impl.dim_e();
    const Matrix u = Matrix(impl.u_se());
    const Matrix n = oracle::kron(b, Matrix::Identity(de, de)) -
                     u.adjoint() * oracle::kron(Matrix::Identity(ds, ds), Matrix(impl.m_e())) * u;
    const Matrix joint = oracle::kron(rho_s, dense_env_state(impl.rho_e()));
    return (joint * n * n).trace().real();
}

ImplementationSet swap_copy(double b0, double b1) {
    const HermitianOperator a(oracle::diag2(0, 1));
    const HermitianOperator m(oracle::diag2(b0, b1));
    Vector zero(2);
    zero << 1, 0;
    return ImplementationSet::create(a, a, m, DensityMatrix::pure(zero), swap_gate(2));
}

ImplementationSet idle(Eigen::Index de) {
    std::vector<double> levels(static_cast<std::size_t>(de));
    for (Eigen::Index k = 0; k < de; ++k) levels[static_cast<std::size_t>(k)] = static_cast<double>(k);
    return ImplementationSet::create(HermitianOperator(oracle::diag2(0, 1)), HermitianOperator::diagonal(levels),
                                     HermitianOperator::zero(de), DensityMatrix::maximally_mixed(de),
                                     UnitaryOperator::identity(2 * de));
}

}  // namespace

TEST_CASE("trivial implementations") {
    const HermitianOperator sx(oracle::pauli_x());
    const auto id = idle(3);
    CHECK((Matrix(noise_operator(id, sx)) - oracle::kron(oracle::pauli_x(), Matrix::Identity(3, 3))).norm() < 1e-15);
    for (std::uint64_t s = 0; s < 5; ++s) CHECK(error_sq(id, sx, random_density(2, s)) == doctest::Approx(1.0));
    CHECK(worst_error(id, sx).epsilon == doctest::Approx(1.0));
    CHECK((conditional_error_operator(id, sx) - Matrix::Identity(2, 2)).norm() < 1e-13);

    const auto copy = swap_copy(0.3, -1.2);
    const HermitianOperator b(oracle::diag2(0.3, -1.2));
    CHECK(Matrix(noise_operator(copy, b)).norm() < 1e-14);
    for (std::uint64_t s = 0; s < 5; ++s) CHECK(error(copy, b, random_density(2, s)) < 1e-7);
    CHECK(worst_error(copy, b).epsilon < 1e-7);
}

TEST_CASE("error agrees with the dense definition") {
    std::mt19937_64 rng(61);
    for (auto [ds, de] : {std::pair<int, int>{2, 4}, {3, 3}, {2, 3}}) {
        for (std::uint64_t s = 0; s < 15; ++s) {
            const auto impl = random_implementation(ds, de, s);
            const Matrix b = oracle::random_hermitian(ds, rng);
            const Matrix rho = oracle::random_state(ds, rng);
            const double e2 = error_sq(impl, HermitianOperator(b), DensityMatrix(rho));
            CHECK(e2 == doctest::Approx(oracle_error_sq(impl, b, rho)).epsilon(1e-10));
            const Matrix k = conditional_error_operator(impl, HermitianOperator(b));
            CHECK((rho * k).trace().real() == doctest::Approx(e2).epsilon(1e-10));
        }
    }
}

TEST_CASE("worst error bounds sampled states") {
    std::mt19937_64 rng(67);
    const auto impl = random_implementation(3, 3, 5);
    const HermitianOperator b(oracle::random_hermitian(3, rng));
    const auto worst = worst_error(impl, b);
    double sampled = 0.0;
    for (int t = 0; t < 500; ++t)
        sampled = std::max(sampled, error(impl, b, DensityMatrix::pure(oracle::random_vector(3, rng))));
    const double at_worst = error(impl, b, DensityMatrix::pure(worst.worst_state));
    sampled = std::max(sampled, at_worst);
    CHECK(sampled <= worst.epsilon + 1e-9);
    CHECK(worst.epsilon <= sampled + 1e-6);
}

TEST_CASE("invariants of random implementation sets") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto impl = random_implementation(2, 3, s);
        CHECK(impl.status().ok());
        CHECK(impl.status().hermiticity <= 1e-10);
        CHECK(impl.status().conservation <= kConservationTolerance);
        const Matrix u = Matrix(impl.u_se());
        CHECK(commutator(u, Matrix(impl.a_total())).norm() <= 1e-9);
        CHECK(impl.a_s().matrix().selfadjointView<Eigen::Lower>().eigenvalues().minCoeff() == doctest::Approx(0.0));
    }
}

TEST_CASE("non-conserving unitary is an invariant violation") {
    const auto bad = random_nonconserving_implementation(2, 3, 4);
    CHECK_FALSE(bad.status().ok());
    CHECK(bad.status().conservation > 1e-3);
    CHECK(bad.status().describe().find("conservation") != std::string::npos);

    const HermitianOperator b(oracle::pauli_x());
    const auto report = commutator_transfer_check(bad, b, random_density(2, 1));
    CHECK_FALSE(report.invariant_violation.empty());

    std::mt19937_64 rng(71);
    const Matrix u = unitary_exp(HermitianOperator(oracle::random_hermitian(4, rng))).matrix();
    try {
        ImplementationSet::create(HermitianOperator(oracle::diag2(0, 1)), HermitianOperator(oracle::diag2(0, 1)),
                                  HermitianOperator(oracle::diag2(0, 1)), DensityMatrix::maximally_mixed(2),
                                  UnitaryOperator(u));
        FAIL("expected an invariant violation");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::InvariantViolation);
    }
}

TEST_CASE("probe must commute with A_E") {
    try {
        ImplementationSet::create(HermitianOperator(oracle::diag2(0, 1)), HermitianOperator(oracle::diag2(0, 1)),
                                  HermitianOperator(oracle::pauli_x()), DensityMatrix::maximally_mixed(2),
                                  UnitaryOperator::identity(4));
        FAIL("expected an invariant violation");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::InvariantViolation);
        CHECK(std::string(e.what()).find("probe") != std::string::npos);
    }
    CHECK_THROWS_AS(ImplementationSet::create(HermitianOperator(oracle::diag2(0, 1)), HermitianOperator::zero(3),
                                              HermitianOperator::zero(3), DensityMatrix::maximally_mixed(3),
                                              UnitaryOperator::identity(4)),
                    Error);
}

TEST_CASE("WAY-Ozawa bound") {
    const HermitianOperator a(oracle::diag2(0, 1));
    const auto id = idle(2);
    // commuting B
    CHECK(way_ozawa_bound(id, HermitianOperator(oracle::pauli_z()), random_density(2, 2), MonotoneFunction::sld()) == 0.0);
    // maximally mixed input
    CHECK(way_ozawa_bound(id, HermitianOperator(oracle::pauli_x()), DensityMatrix::maximally_mixed(2),
                          MonotoneFunction::sld()) == 0.0);
    // eigenstate of A_S with a pure environment: zero skew information, nonzero commutator -> +inf
    Vector plus(2);
    plus << 1, 1;
    Vector zero(2);
    zero << 1, 0;
    const auto pure_env = ImplementationSet::create(a, a, HermitianOperator::zero(2), DensityMatrix::pure(zero),
                                                    UnitaryOperator::identity(4));
    const double inf = way_ozawa_bound(pure_env, HermitianOperator(oracle::pauli_y()), DensityMatrix::pure(plus),
                                       MonotoneFunction::sld());
    CHECK(inf > 0.0);

    std::mt19937_64 rng(73);
    for (auto [ds, de] : {std::pair<int, int>{2, 4}, {3, 3}}) {
        for (std::uint64_t s = 0; s < 40; ++s) {
            const auto impl = random_implementation(ds, de, mix_seed(s, 9));
            const HermitianOperator b(oracle::random_hermitian(ds, rng));
            const DensityMatrix rho(oracle::random_state(ds, rng));
            const double e2 = error_sq(impl, b, rho);
            for (const auto &f : registry()) {
                const double bound = way_ozawa_bound(impl, b, rho, f);
                CHECK(e2 >= bound - 1e-9 * std::max(1.0, bound));
            }
            const auto tr = commutator_transfer_check(impl, b, rho);
            CHECK(tr.holds);
            CHECK(tr.residual <= 1e-9);
            CHECK(std::abs(tr.lhs - tr.rhs) <= 1e-9);
            CHECK(korzekwa_comparison(impl, b, rho).ordered);
        }
    }
}

TEST_CASE("bound closed form against direct skew information") {
    std::mt19937_64 rng(79);
    const auto impl = random_implementation(2, 4, 3);
    const Matrix b = oracle::random_hermitian(2, rng);
    const Matrix rho = oracle::random_state(2, rng);
    const Matrix a_s = impl.a_s().matrix();
    const cplx c = (rho * (a_s * b - b * a_s)).trace();
    const Matrix rho_e = dense_env_state(impl.rho_e());
    const Matrix a_e = Matrix(impl.a_e());
    const double i_s = oracle::wy_skew(rho, a_s), i_e = oracle::wy_skew(rho_e, a_e);
    const double expected = 0.25 / 2 * std::norm(c) / (i_s + i_e);
    CHECK(way_ozawa_bound(impl, HermitianOperator(b), DensityMatrix(rho), MonotoneFunction::wy()) ==
          doctest::Approx(expected).epsilon(1e-8));

    const auto cmp = korzekwa_comparison(impl, HermitianOperator(b), DensityMatrix(rho));
    CHECK(cmp.bound_korzekwa == doctest::Approx(std::norm(c) / (8 * (i_s + i_e))).epsilon(1e-8));
    const double v = oracle::variance(rho, a_s) + oracle::variance(rho_e, a_e);
    CHECK(cmp.bound_original == doctest::Approx(std::norm(c) / (4 * v)).epsilon(1e-8));
}

TEST_CASE("error report") {
    const auto impl = random_implementation(2, 3, 8);
    const HermitianOperator b(oracle::pauli_x());
    const DensityMatrix rho = random_density(2, 8);
    const auto r = error_report(impl, b, rho, registry());
    CHECK(r.epsilon * r.epsilon == doctest::Approx(r.epsilon_sq));
    CHECK(r.bound_f.count("sld") == 1);
    CHECK(r.bound_f.count("wy") == 1);
    CHECK(r.bound_sld == doctest::Approx(r.bound_f.at("sld")));
    CHECK(r.epsilon_sq >= r.bound_sld - 1e-9);
    CHECK(std::abs(r.commutator_expect.real()) < 1e-12);
}
