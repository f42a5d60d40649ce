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
#include "cohcost/linops.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cohcost;

namespace {

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Numerical;
}

}  // namespace

TEST_CASE("eigh on small fixed matrices") {
    auto id = eigh(HermitianOperator::identity(2));
    CHECK(id.values(0) == doctest::Approx(1.0));
    CHECK(id.values(1) == doctest::Approx(1.0));
    CHECK((id.vectors.adjoint() * id.vectors - Matrix::Identity(2, 2)).norm() < 1e-14);

    auto sx = eigh(HermitianOperator(oracle::pauli_x()));
    CHECK(sx.values(0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(sx.values(1) == doctest::Approx(1.0).epsilon(1e-14));

    auto d = eigh(HermitianOperator(oracle::diag2(0, 1) + 0.5 * oracle::pauli_x()));
    CHECK(std::abs(d.values(0) - (0.5 - std::sqrt(2.0) / 2)) < 1e-14);
    CHECK(std::abs(d.values(1) - (0.5 + std::sqrt(2.0) / 2)) < 1e-14);
}

TEST_CASE("eigh agrees with Eigen's solver on random Hermitian matrices") {
    std::mt19937_64 rng(11);
    for (int n : {2, 3, 5, 8, 16, 32}) {
        for (int t = 0; t < 10; ++t) {
            const Matrix h = oracle::random_hermitian(n, rng);
            const auto mine = eigh(HermitianOperator(h));
            Eigen::SelfAdjointEigenSolver<Matrix> ref(h);
            CHECK((mine.values - ref.eigenvalues()).cwiseAbs().maxCoeff() < 1e-11 * std::max(1.0, h.norm()));
            const Matrix recon = mine.vectors * mine.values.cast<cplx>().asDiagonal() * mine.vectors.adjoint();
            CHECK((recon - h).norm() < 1e-11 * std::max(1.0, h.norm()));
            CHECK((mine.vectors.adjoint() * mine.vectors - Matrix::Identity(n, n)).norm() < 1e-11);
        }
    }
}

TEST_CASE("eigh rejects non-Hermitian input") {
    Matrix m = oracle::pauli_x();
    m(0, 1) = 2.0;
    CHECK(kind_of([&] { eigh(m); }) == ErrorKind::Validation);
    try {
        HermitianOperator bad(m);
    } catch (const Error &e) {
        CHECK(std::string(e.what()).find("entry (") != std::string::npos);
    }
}

TEST_CASE("commutator and operator norm") {
    const Matrix sx = oracle::pauli_x(), sy = oracle::pauli_y(), sz = oracle::pauli_z();
    CHECK(commutator(sx, sx).norm() == 0.0);
    CHECK((commutator(sx, sy) - cplx(0, 2) * sz).norm() < 1e-15);
    const Matrix c = commutator(oracle::diag2(0, 1), sx);
    CHECK(c(1, 0) == cplx(1, 0));
    CHECK(c(0, 1) == cplx(-1, 0));
    CHECK(op_norm(Matrix::Zero(3, 3)) == 0.0);
    CHECK(op_norm(sx) == doctest::Approx(1.0));
    CHECK(op_norm(c) == doctest::Approx(1.0));

    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        Matrix m = oracle::random_hermitian(5, rng) + cplx(0, 1) * oracle::random_hermitian(5, rng);
        CHECK(op_norm(m) == doctest::Approx(oracle::largest_singular_value(m)).epsilon(1e-11));
    }
}

TEST_CASE("tensor, partial trace and swap") {
    CHECK((tensor(Matrix::Identity(2, 2), Matrix::Identity(3, 3)) - Matrix::Identity(6, 6)).norm() == 0.0);
    std::mt19937_64 rng(3);
    const Matrix x = oracle::random_hermitian(2, rng), y = oracle::random_hermitian(3, rng);
    CHECK((tensor(x, y) - oracle::kron(x, y)).norm() < 1e-15);

    const Matrix rho_e = oracle::random_state(3, rng);
    CHECK((partial_trace_env(tensor(oracle::pauli_z(), rho_e), 2, 3) - oracle::pauli_z()).norm() < 1e-13);

    const Matrix sw = swap_gate(2).matrix();
    Matrix expected = Matrix::Identity(4, 4);
    expected.row(1).swap(expected.row(2));
    CHECK((sw - expected).norm() == 0.0);
    CHECK((partial_trace_env(sw, 2, 2) - Matrix::Identity(2, 2)).norm() < 1e-15);
    CHECK(swap_gate(1).matrix()(0, 0) == cplx(1, 0));
    for (int d : {2, 3, 4}) {
        const Matrix s = swap_gate(d).matrix();
        CHECK((s * s - Matrix::Identity(d * d, d * d)).norm() == 0.0);
        const Matrix a = oracle::random_hermitian(d, rng), b = oracle::random_hermitian(d, rng);
        CHECK((s * oracle::kron(a, b) * s - oracle::kron(b, a)).norm() < 1e-13);
    }
}

TEST_CASE("density matrix validation") {
    CHECK(random_density(1, 9).matrix()(0, 0) == cplx(1, 0));
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto rho = random_density(4, s);
        CHECK(std::abs(rho.eigenvalues().sum() - 1.0) < 1e-10);
        CHECK(rho.eigenvalues().minCoeff() >= 0.0);
    }
    CHECK(kind_of([] { DensityMatrix(Matrix::Identity(2, 2)); }) == ErrorKind::Validation);
    CHECK(kind_of([] { DensityMatrix(oracle::diag2(1.5, -0.5)); }) == ErrorKind::Validation);

    // a tiny negative eigenvalue is clamped and the trace restored
    const DensityMatrix clamped(oracle::diag2(1.0 + 1e-9, -1e-9));
    CHECK(clamped.eigenvalues().minCoeff() == 0.0);
    CHECK(std::abs(clamped.matrix().trace().real() - 1.0) < 1e-15);

    Matrix u = Matrix::Identity(2, 2);
    u(0, 0) = 2.0;
    CHECK(kind_of([&] { UnitaryOperator bad(u); }) == ErrorKind::Validation);
}

TEST_CASE("functional calculus and unitary exponential") {
    std::mt19937_64 rng(17);
    const Matrix h = oracle::random_hermitian(4, rng);
    const HermitianOperator op(h);
    const Matrix sq = apply_function(op, [](double x) { return x * x; });
    CHECK((sq - h * h).norm() < 1e-12);
    const Matrix u = unitary_exp(op, 0.7).matrix();
    // Taylor oracle for exp(-i t H)
    Matrix term = Matrix::Identity(4, 4), sum = Matrix::Identity(4, 4);
    for (int k = 1; k < 60; ++k) {
        term = term * (cplx(0, -0.7) * h) / static_cast<double>(k);
        sum += term;
    }
    CHECK((u - sum).norm() < 1e-11);
}

TEST_CASE("random ensembles are seeded and structured") {
    CHECK((random_density(3, 5).matrix() - random_density(3, 5).matrix()).norm() == 0.0);
    CHECK((random_density(3, 5).matrix() - random_density(3, 6).matrix()).norm() > 1e-3);
    CHECK(mix_seed(1, 2) != mix_seed(2, 1));

    for (std::uint64_t s = 0; s < 100; ++s) {
        const RealVector levels = (RealVector(6) << 0, 1, 1, 2, 2, 2).finished();
        const Matrix basis = unitary_exp(random_hermitian(6, mix_seed(s, 1), 3.0)).matrix();
        const HermitianOperator a(basis * levels.cast<cplx>().asDiagonal() * basis.adjoint());
        const Matrix u = random_conserving_unitary(a, s).matrix();
        CHECK(commutator(u, a.matrix()).norm() <= 1e-9);
        CHECK((u.adjoint() * u - Matrix::Identity(6, 6)).norm() <= 1e-10);
        const Matrix m = random_commuting_hermitian(a, s).matrix();
        CHECK(commutator(m, a.matrix()).norm() <= 1e-9);
    }
    CHECK(std::abs(random_state_vector(5, 3).norm() - 1.0) < 1e-14);
}

TEST_CASE("sparse helpers match dense arithmetic") {
    std::mt19937_64 rng(23);
    const Matrix x = oracle::random_hermitian(3, rng), y = oracle::random_hermitian(2, rng);
    const SparseOperator t = sparse_tensor(to_sparse(x), to_sparse(y));
    CHECK((Matrix(t) - oracle::kron(x, y)).norm() < 1e-14);
    CHECK(frobenius_norm(t) == doctest::Approx(oracle::kron(x, y).norm()));
    CHECK(op_norm_or_bound(to_sparse(x)) >= oracle::largest_singular_value(x) - 1e-12);
    CHECK(max_abs_entry(to_sparse(x)) == doctest::Approx(x.cwiseAbs().maxCoeff()));
    CHECK((Matrix(sparse_identity(4)) - Matrix::Identity(4, 4)).norm() == 0.0);
}
