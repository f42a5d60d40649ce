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
#include <random>

#include "cohcost/error.hpp"
#include "cohcost/infogeo.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cohcost;

namespace {

const MonotoneFunction kSld = MonotoneFunction::sld();
const MonotoneFunction kWy = MonotoneFunction::wy();

DensityMatrix witness_state() { return DensityMatrix(oracle::diag2(0.75, 0.25)); }
HermitianOperator sx() { return HermitianOperator(oracle::pauli_x()); }

}  // namespace

TEST_CASE("variance examples") {
    Vector up(2);
    up << 1, 0;
    CHECK(variance(DensityMatrix::pure(up), HermitianOperator(oracle::pauli_z())) == doctest::Approx(0.0));
    CHECK(variance(witness_state(), sx()) == doctest::Approx(1.0));
    CHECK(variance(DensityMatrix::maximally_mixed(2), HermitianOperator(oracle::diag2(0, 1))) == doctest::Approx(0.25));
}

TEST_CASE("skew information on the witness state") {
    CHECK(skew_information(witness_state(), sx(), kSld) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(skew_information(witness_state(), sx(), kWy) == doctest::Approx(1 - std::sqrt(3.0) / 2).epsilon(1e-13));
}

TEST_CASE("skew information against independent formulas") {
    std::mt19937_64 rng(101);
    for (int n = 2; n <= 6; ++n) {
        for (int t = 0; t < 30; ++t) {
            const Matrix rho = oracle::random_state(n, rng);
            const Matrix a = oracle::random_hermitian(n, rng);
            const DensityMatrix r(rho);
            const HermitianOperator op(a);
            CHECK(skew_information(r, op, kWy) == doctest::Approx(oracle::wy_skew(rho, a)).epsilon(1e-9));
            CHECK(skew_information(r, op, kSld) == doctest::Approx(0.25 * oracle::sld_fisher(rho, a)).epsilon(1e-9));
        }
    }
}

TEST_CASE("commuting and pure states") {
    std::mt19937_64 rng(7);
    for (int n : {2, 3, 5}) {
        const Matrix a = oracle::random_hermitian(n, rng);
        Eigen::SelfAdjointEigenSolver<Matrix> es(a);
        // a state diagonal in A's eigenbasis commutes with A
        Eigen::VectorXd w = Eigen::VectorXd::Random(n).cwiseAbs() + Eigen::VectorXd::Constant(n, 0.1);
        w /= w.sum();
        const Matrix rho = es.eigenvectors() * w.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
        for (const auto &f : registry()) CHECK(std::abs(skew_information(DensityMatrix(rho), HermitianOperator(a), f)) < 1e-12);

        const Vector psi = oracle::random_vector(n, rng);
        const DensityMatrix pure = DensityMatrix::pure(psi);
        const double v = oracle::variance(psi * psi.adjoint(), a);
        for (const auto &f : registry()) CHECK(skew_information(pure, HermitianOperator(a), f) == doctest::Approx(v).epsilon(1e-10));
    }
}

TEST_CASE("f-variance") {
    CHECK(f_variance(witness_state(), sx(), kWy) ==
          doctest::Approx(0.25 * kWy(3.0) + 0.75 * kWy(1.0 / 3.0)).epsilon(1e-13));
    CHECK(f_variance(witness_state(), sx(), kWy) == doctest::Approx(0.933013).epsilon(1e-6));
    std::mt19937_64 rng(19);
    for (int t = 0; t < 30; ++t) {
        const Matrix rho = oracle::random_state(4, rng);
        const Matrix a = oracle::random_hermitian(4, rng);
        CHECK(std::abs(f_variance(DensityMatrix(rho), HermitianOperator(a), kSld) - oracle::variance(rho, a)) < 1e-12);
    }
}

TEST_CASE("U^f by both routes") {
    // 1 - (1 - I)^2 = I (2 - I) with I = 1 - sqrt(3)/2 equals 1/4 exactly
    const double u = u_quantity(witness_state(), sx(), kWy);
    CHECK(u == doctest::Approx(0.5).epsilon(1e-14));
    const double i = 1 - std::sqrt(3.0) / 2;
    CHECK(u == doctest::Approx(std::sqrt(1 - (1 - i) * (1 - i))).epsilon(1e-13));
    CHECK(u_quantity_identity(witness_state(), sx(), kWy) == doctest::Approx(u).epsilon(1e-12));

    std::mt19937_64 rng(29);
    for (int n = 2; n <= 6; ++n)
        for (int t = 0; t < 20; ++t) {
            const DensityMatrix rho(oracle::random_state(n, rng));
            const HermitianOperator a(oracle::random_hermitian(n, rng));
            for (const auto &f : registry())
                CHECK(u_quantity(rho, a, f) == doctest::Approx(u_quantity_identity(rho, a, f)).epsilon(1e-8));
        }
}

TEST_CASE("L operator and Fisher information") {
    const Matrix l = l_operator(witness_state(), sx(), kSld);
    Matrix expected(2, 2);
    expected << 0, cplx(0, 1), cplx(0, -1), 0;
    CHECK((l - expected).norm() < 1e-13);
    CHECK(fisher_information(witness_state(), sx(), kSld) == doctest::Approx(1.0).epsilon(1e-13));

    std::mt19937_64 rng(31);
    for (int t = 0; t < 100; ++t) {
        const Matrix rho = oracle::random_state(4, rng);
        const Matrix a = oracle::random_hermitian(4, rng);
        const DensityMatrix r(rho);
        const HermitianOperator op(a);
        for (const auto &f : registry()) {
            const Matrix lf = l_operator(r, op, f);
            // tangent reconstruction: m_f(L_rho, R_rho)(L) = -i[A, rho], checked in rho's eigenbasis
            const Matrix le = in_eigenbasis(r, lf);
            const Matrix target = in_eigenbasis(r, cplx(0, -1) * (a * rho - rho * a));
            const auto &p = r.eigenvalues();
            double residual = 0.0;
            for (Eigen::Index i = 0; i < 4; ++i)
                for (Eigen::Index j = 0; j < 4; ++j)
                    residual = std::max(residual, std::abs(m_f(f, p(i), p(j)) * le(i, j) - target(i, j)));
            CHECK(residual <= 1e-9);
            CHECK(skew_information(r, op, f) ==
                  doctest::Approx(0.5 * f.f0() * fisher_information(r, op, f)).epsilon(1e-9));
        }
    }
}

TEST_CASE("Fisher inner product gives the derivative of <B>") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 20; ++t) {
        const Matrix rho = oracle::random_state(3, rng);
        const Matrix a = oracle::random_hermitian(3, rng);
        const Matrix b = oracle::random_hermitian(3, rng);
        const DensityMatrix r(rho);
        const HermitianOperator op(a);
        auto mean_at = [&](double s) {
            Eigen::SelfAdjointEigenSolver<Matrix> es(a);
            const Matrix u = es.eigenvectors() *
                             (es.eigenvalues() * cplx(0, -s)).array().exp().matrix().asDiagonal() *
                             es.eigenvectors().adjoint();
            return (u * rho * u.adjoint() * b).trace().real();
        };
        const double h = 1e-5;
        const double derivative = (mean_at(h) - mean_at(-h)) / (2 * h);
        const Matrix b0 = b - (rho * b).trace() * Matrix::Identity(3, 3);
        for (const auto &f : registry())
            CHECK(std::abs(derivative - fisher_inner(r, b0, l_operator(r, op, f), f).real()) <= 1e-6);
    }
}

TEST_CASE("singular metric on rank-deficient states") {
    Vector up(2);
    up << 1, 0;
    const auto geometric = MonotoneFunction::custom("geometric", [](double x) { return std::sqrt(x); }, 0.0);
    try {
        l_operator(DensityMatrix::pure(up), sx(), geometric);
        FAIL("expected a singular-metric error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::SingularMetric);
    }
    // f(0) > 0 keeps the metric regular on the kernel
    CHECK(l_operator(DensityMatrix::pure(up), sx(), kSld).norm() > 0.0);
    // a diagonal A does not couple the support to the kernel
    CHECK(l_operator(DensityMatrix::pure(up), HermitianOperator(oracle::pauli_z()), geometric).norm() == 0.0);
}

TEST_CASE("properties P1 to P4 and additivity") {
    std::mt19937_64 rng(41);
    for (int n = 2; n <= 8; ++n) {
        for (int t = 0; t < 40; ++t) {
            const Matrix a = oracle::random_hermitian(n, rng);
            const HermitianOperator op(a);
            const DensityMatrix rho(oracle::random_state(n, rng));
            const double v = variance(rho, op);
            for (const auto &f : registry()) {
                const double i = skew_information(rho, op, f);
                CHECK(i >= -1e-10);
                CHECK(i <= v + 1e-10);
            }
            // convexity over a 3-mixture
            std::uniform_real_distribution<double> u(0.05, 1.0);
            double q[3] = {u(rng), u(rng), u(rng)};
            const double total = q[0] + q[1] + q[2];
            Matrix mix = Matrix::Zero(n, n);
            Matrix parts[3];
            for (int k = 0; k < 3; ++k) {
                q[k] /= total;
                parts[k] = oracle::random_state(n, rng);
                mix += q[k] * parts[k];
            }
            for (const auto &f : registry()) {
                double rhs = 0.0;
                for (int k = 0; k < 3; ++k) rhs += q[k] * skew_information(DensityMatrix(parts[k]), op, f);
                CHECK(skew_information(DensityMatrix(mix), op, f) <= rhs + 1e-9);
            }
        }
    }
    for (int t = 0; t < 30; ++t) {
        const Matrix r1 = oracle::random_state(2, rng), r2 = oracle::random_state(3, rng);
        const Matrix a1 = oracle::random_hermitian(2, rng), a2 = oracle::random_hermitian(3, rng);
        const Matrix total = oracle::kron(a1, Matrix::Identity(3, 3)) + oracle::kron(Matrix::Identity(2, 2), a2);
        for (const auto &f : registry()) {
            const double joint = skew_information(DensityMatrix(oracle::kron(r1, r2)), HermitianOperator(total), f);
            const double sum = skew_information(DensityMatrix(r1), HermitianOperator(a1), f) +
                               skew_information(DensityMatrix(r2), HermitianOperator(a2), f);
            CHECK(std::abs(joint - sum) <= 1e-9 * std::max(1.0, sum));
        }
    }
}

TEST_CASE("support-state overloads agree with the dense path") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 20; ++t) {
        const Matrix a = oracle::random_hermitian(5, rng);
        // rank-2 state in dimension 5
        const Vector v1 = oracle::random_vector(5, rng), v2 = oracle::random_vector(5, rng);
        Matrix rho = 0.7 * v1 * v1.adjoint() + 0.3 * v2 * v2.adjoint();
        const DensityMatrix r(rho);
        const SupportState s = SupportState::from_density(r, 1e-12);
        CHECK(s.weights.size() == 2);
        CHECK(variance(s, to_sparse(a)) == doctest::Approx(oracle::variance(rho, a)).epsilon(1e-10));
        for (const auto &f : registry())
            CHECK(skew_information(s, to_sparse(a), f) ==
                  doctest::Approx(skew_information(r, HermitianOperator(a), f)).epsilon(1e-9));
    }
    Vector zero = Vector::Zero(3);
    CHECK_THROWS_AS(SupportState::pure(zero), Error);
}

TEST_CASE("measure report and dimension checks") {
    const auto r = measure_report(witness_state(), sx(), kSld);
    CHECK(r.v == doctest::Approx(1.0));
    CHECK(r.skew == doctest::Approx(0.25));
    CHECK(r.f_name == "sld");
    try {
        variance(witness_state(), HermitianOperator::identity(3));
        FAIL("expected a dimension error");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
}
