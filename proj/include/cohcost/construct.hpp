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

#ifndef COHCOST_CONSTRUCT_HPP
#define COHCOST_CONSTRUCT_HPP

// Gaussian-pointer implementation of a B_S measurement under conservation of
// A_S. S is swapped into a copy S', which is then rotated into the B basis
// while a Gaussian pointer of width xi is translated by the change in A so
// the total charge is unchanged. The pointer overlap
//   <psi_xi| gamma_y |psi_xi> = exp(-y^2 / (8 xi^2))
// makes the error exactly computable without materializing the pointer.

#include <cstdint>
#include <span>
#include <vector>

#include "cohcost/linops.hpp"
#include "cohcost/measure.hpp"

namespace cohcost {

/// A_S = unit * diag(levels) with levels[0] == 0 and nondecreasing; B_S is
/// given in the A_S eigenbasis.
struct ConstructionSpec {
    double unit = 1.0;
    std::vector<long> levels;
    HermitianOperator b = HermitianOperator::zero(1);
    double xi = 1.0;

    Eigen::Index dim() const { return static_cast<Eigen::Index>(levels.size()); }
    RealVector spectrum() const;
    HermitianOperator a() const;
    /// ||A_S|| for the shifted spectrum, i.e. unit * levels.back().
    double norm_a() const;
    /// ||[A_S, B_S]||
    double norm_comm() const;
    ConstructionSpec with_xi(double xi) const;
    /// Throws ErrorKind::Validation on a malformed spec.
    void validate() const;
};

ConstructionSpec make_spec(double unit, std::vector<long> levels, const HermitianOperator &b, double xi);
/// levels (0, 1), B = sigma_x.
ConstructionSpec qubit_spec(double xi);
/// Sorted random levels in [0, max_level] with levels[0] = 0 and a random
/// Hermitian B.
ConstructionSpec random_spec(Eigen::Index dim, std::uint64_t seed, double xi, long max_level = 4);

/// W with eps(rho_S)^2 = Tr[rho_S W]:
///   W_{k,k''} = sum_{k'} B_{kk'} B_{k'k''} g(k,k',k''),
///   g = e^{-(a_k-a_k'')^2/8xi^2} - e^{-(a_k-a_k')^2/8xi^2} - e^{-(a_k'-a_k'')^2/8xi^2} + 1.
HermitianOperator exact_error_matrix(const ConstructionSpec &spec);
double exact_error_sq(const ConstructionSpec &spec, const DensityMatrix &rho_s);
/// sqrt(lambda_max(W)).
double exact_worst_error(const ConstructionSpec &spec);

/// (||[B,A]||^2 / 4 xi^2) (1 + ||A||^2 / xi^2) exp(||A||^2 / 2 xi^2)
double error_bound(const ConstructionSpec &spec);

/// ||[A,B]|| / (2 eps) + ||A||. Requires 0 < eps <= norm_comm / (8 norm_a);
/// otherwise ErrorKind::OutOfRegime.
double xi_for_epsilon(double norm_comm, double norm_a, double eps);
/// Upper end of the eps window, norm_comm / (8 norm_a).
double epsilon_window(double norm_comm, double norm_a);

/// Skew information of the pointer state for any standard f: xi^2.
double pointer_coherence(const ConstructionSpec &spec);

/// Term-by-term majorant of the error series:
///   sum_{m>=1} (||[A,B]||^2 / 4 xi^2) (2m-1)/(m-1)! (||A||^2 / 2 xi^2)^{m-1}.
/// `truncated` holds orders 1..M, `tail` the remaining orders summed directly.
struct SeriesBound {
    double truncated = 0.0;
    double tail = 0.0;
    double total = 0.0;
};
SeriesBound series_tail_bound(const ConstructionSpec &spec, int order);

/// Grid h = unit / subdivision on [-half_extent, half_extent].
struct GridSpec {
    int subdivision = 50;
    double half_extent = 12.0;
};

struct PointerGrid {
    double spacing = 0.0;
    long half_points = 0;  // N, with 2N + 1 points at n h for n = -N..N
    RealVector positions;
    RealVector amplitudes;  // normalized Gaussian samples e^{-x^2 / 4 xi^2}
    double tail_mass = 0.0;  // pointer weight beyond half_extent - max gap
    double position_variance = 0.0;
};

/// Throws ErrorKind::InvalidArgument if the grid cannot represent the spectrum
/// or is too narrow for the pointer.
PointerGrid pointer_grid(const ConstructionSpec &spec, const GridSpec &grid);

/// The finite-grid implementation set on S (x) (S' (x) pointer), S'-major in E:
///   rho_E = |0><0| (x) |psi><psi|, A_E = A_S' (x) 1 + 1 (x) x,
///   M_E = sum_j b_j |j_A><j_A| (x) 1, U = (1 (x) V)(SWAP (x) 1),
/// where V|k>|x> = sum_j u_jk |j>|x + a_k - a_j> with u_jk = <j_B|k_A>. Charge
/// sectors that would leave the grid are mapped by the identity.
/// `b_phases`, when given, multiplies the j-th B eigenvector by e^{i phase_j}.
ImplementationSet discretize(const ConstructionSpec &spec, const GridSpec &grid,
                             std::span<const double> b_phases = {});

}  // namespace cohcost

#endif  // COHCOST_CONSTRUCT_HPP
