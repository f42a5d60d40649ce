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


#include "cohcost/construct.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "cohcost/error.hpp"

namespace cohcost {

namespace {

double overlap(double y, double xi) { return std::exp(-y * y / (8.0 * xi * xi)); }

}  // namespace

RealVector ConstructionSpec::spectrum() const {
    RealVector a(dim());
    for (Eigen::Index k = 0; k < dim(); ++k) a(k) = unit * static_cast<double>(levels[static_cast<std::size_t>(k)]);
    return a;
}

HermitianOperator ConstructionSpec::a() const {
    const RealVector s = spectrum();
    return HermitianOperator::diagonal(std::span<const double>(s.data(), static_cast<std::size_t>(s.size())));
}

double ConstructionSpec::norm_a() const { return unit * static_cast<double>(levels.back()); }

double ConstructionSpec::norm_comm() const { return op_norm(commutator(a(), b)); }

ConstructionSpec ConstructionSpec::with_xi(double new_xi) const {
    ConstructionSpec s = *this;
    s.xi = new_xi;
    s.validate();
    return s;
}

void ConstructionSpec::validate() const {
    std::ostringstream os;
    if (!(unit > 0.0) || !std::isfinite(unit)) os << "unit must be positive, got " << unit;
    else if (levels.empty()) os << "levels must be non-empty";
    else if (levels.front() != 0) os << "levels[0] must be 0, got " << levels.front();
    else if (!std::is_sorted(levels.begin(), levels.end())) os << "levels must be nondecreasing";
    else if (b.dim() != dim()) os << "B has dim " << b.dim() << " but there are " << dim() << " levels";
    else if (!(xi > 0.0) || !std::isfinite(xi)) os << "xi must be positive, got " << xi;
    if (!os.str().empty()) fail(ErrorKind::Validation, "construction spec: " + os.str());
}

ConstructionSpec make_spec(double unit, std::vector<long> levels, const HermitianOperator &b, double xi) {
    ConstructionSpec s{unit, std::move(levels), b, xi};
    s.validate();
    return s;
}

ConstructionSpec qubit_spec(double xi) {
    Matrix sx(2, 2);
    sx << 0, 1, 1, 0;
    return make_spec(1.0, {0, 1}, HermitianOperator(sx), xi);
}

ConstructionSpec random_spec(Eigen::Index dim, std::uint64_t seed, double xi, long max_level) {
    std::mt19937_64 rng(mix_seed(seed, 0));
    std::uniform_int_distribution<long> level(0, max_level);
    std::vector<long> levels(static_cast<std::size_t>(dim));
    for (auto &l : levels) l = level(rng);
    levels[0] = 0;
    std::sort(levels.begin(), levels.end());
    return make_spec(1.0, std::move(levels), random_hermitian(dim, mix_seed(seed, 1)), xi);
}

HermitianOperator exact_error_matrix(const ConstructionSpec &spec) {
    spec.validate();
    const Eigen::Index n = spec.dim();
    const RealVector a = spec.spectrum();
    const Matrix &b = spec.b.matrix();
    Matrix w = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index k2 = 0; k2 < n; ++k2) {
            cplx sum = 0.0;
            for (Eigen::Index k1 = 0; k1 < n; ++k1) {
                const double g = overlap(a(k) - a(k2), spec.xi) - overlap(a(k) - a(k1), spec.xi) -
                                 overlap(a(k1) - a(k2), spec.xi) + 1.0;
                sum += b(k, k1) * b(k1, k2) * g;
            }
            w(k, k2) = sum;
        }
    }
    return HermitianOperator(0.5 * (w + w.adjoint()));
}

double exact_error_sq(const ConstructionSpec &spec, const DensityMatrix &rho_s) {
    if (rho_s.dim() != spec.dim()) fail(ErrorKind::DimensionMismatch, "exact_error_sq: state and spec dimensions differ");
    return expectation(rho_s, exact_error_matrix(spec).matrix()).real();
}

double exact_worst_error(const ConstructionSpec &spec) {
    const EigenDecomposition dec = eigh(exact_error_matrix(spec));
    return std::sqrt(std::max(0.0, dec.values(dec.values.size() - 1)));
}

double error_bound(const ConstructionSpec &spec) {
    spec.validate();
    const double c = spec.norm_comm();
    const double na = spec.norm_a();
    const double x2 = spec.xi * spec.xi;
    return c * c / (4.0 * x2) * (1.0 + na * na / x2) * std::exp(na * na / (2.0 * x2));
}

double epsilon_window(double norm_comm, double norm_a) { return norm_comm / (8.0 * norm_a); }

double xi_for_epsilon(double norm_comm, double norm_a, double eps) {
    if (!(norm_comm > 0.0) || !(norm_a > 0.0)) {
        std::ostringstream os;
        os << "xi_for_epsilon: norms must be positive (norm_comm = " << norm_comm << ", norm_a = " << norm_a << ")";
        fail(ErrorKind::OutOfRegime, os.str());
    }
    const double window = epsilon_window(norm_comm, norm_a);
    if (!(eps > 0.0) || eps > window) {
        std::ostringstream os;
        os << "eps = " << eps << " outside the validity window (0, " << window << "]";
        fail(ErrorKind::OutOfRegime, os.str());
    }
    return norm_comm / (2.0 * eps) + norm_a;
}

double pointer_coherence(const ConstructionSpec &spec) {
    spec.validate();
    return spec.xi * spec.xi;
}

SeriesBound series_tail_bound(const ConstructionSpec &spec, int order) {
    spec.validate();
    if (order < 1) fail(ErrorKind::InvalidArgument, "series_tail_bound: order must be >= 1");
    const double c = spec.norm_comm();
    const double na = spec.norm_a();
    const double lead = c * c / (4.0 * spec.xi * spec.xi);
    const double x = na * na / (2.0 * spec.xi * spec.xi);

    SeriesBound out;
    // term(m) = lead * (2m-1) * x^{m-1} / (m-1)!; power carries x^{m-1}/(m-1)!
    double power = 1.0;
    for (int m = 1;; ++m) {
        if (m > 1) power *= x / static_cast<double>(m - 1);
        const double term = lead * static_cast<double>(2 * m - 1) * power;
        if (m <= order) {
            out.truncated += term;
        } else {
            out.tail += term;
            if (term <= 1e-18 * (out.truncated + out.tail) || term == 0.0) break;
        }
        if (m > 100000) fail(ErrorKind::Numerical, "series_tail_bound: tail did not converge");
    }
    out.total = out.truncated + out.tail;
    return out;
}

PointerGrid pointer_grid(const ConstructionSpec &spec, const GridSpec &grid) {
    spec.validate();
    if (grid.subdivision < 1) fail(ErrorKind::InvalidArgument, "grid subdivision must be >= 1");
    PointerGrid pg;
    pg.spacing = spec.unit / grid.subdivision;
    const double ratio = grid.half_extent / pg.spacing;
    pg.half_points = std::lround(ratio);
    if (pg.half_points < 1 || std::abs(ratio - static_cast<double>(pg.half_points)) > 1e-9 * std::max(1.0, ratio)) {
        std::ostringstream os;
        os << "half extent " << grid.half_extent << " is not a positive multiple of the spacing " << pg.spacing;
        fail(ErrorKind::InvalidArgument, os.str());
    }
    const double max_gap = spec.norm_a();
    if (grid.half_extent < max_gap + 8.0 * spec.xi) {
        std::ostringstream os;
        os << "half extent " << grid.half_extent << " below max gap + 8 xi = " << max_gap + 8.0 * spec.xi;
        fail(ErrorKind::InvalidArgument, os.str());
    }

    const Eigen::Index points = 2 * pg.half_points + 1;
    pg.positions.resize(points);
    pg.amplitudes.resize(points);
    for (Eigen::Index i = 0; i < points; ++i) {
        const double x = static_cast<double>(i - pg.half_points) * pg.spacing;
        pg.positions(i) = x;
        pg.amplitudes(i) = std::exp(-x * x / (4.0 * spec.xi * spec.xi));
    }
    pg.amplitudes /= pg.amplitudes.norm();

    const double inner = grid.half_extent - max_gap;
    for (Eigen::Index i = 0; i < points; ++i) {
        const double p = pg.amplitudes(i) * pg.amplitudes(i);
        if (std::abs(pg.positions(i)) > inner) pg.tail_mass += p;
        pg.position_variance += p * pg.positions(i) * pg.positions(i);
    }
    if (pg.tail_mass >= 1e-12) {
        std::ostringstream os;
        os << "pointer tail mass " << pg.tail_mass << " beyond the usable extent is not below 1e-12";
        fail(ErrorKind::InvalidArgument, os.str());
    }
    return pg;
}

ImplementationSet discretize(const ConstructionSpec &spec, const GridSpec &grid, std::span<const double> b_phases) {
    const PointerGrid pg = pointer_grid(spec, grid);
    const Eigen::Index ds = spec.dim();
    const Eigen::Index np = pg.positions.size();
    const Eigen::Index de = ds * np;
    const long n_half = pg.half_points;
    const RealVector a = spec.spectrum();

    if (!b_phases.empty() && static_cast<Eigen::Index>(b_phases.size()) != ds)
        fail(ErrorKind::DimensionMismatch, "discretize: one phase per B eigenvector expected");

    // grid offset of each level
    std::vector<long> shift(static_cast<std::size_t>(ds));
    for (Eigen::Index k = 0; k < ds; ++k) shift[static_cast<std::size_t>(k)] = spec.levels[static_cast<std::size_t>(k)] * grid.subdivision;

    const EigenDecomposition bdec = eigh(spec.b);
    Matrix vecs = bdec.vectors;
    for (std::size_t j = 0; j < b_phases.size(); ++j)
        vecs.col(static_cast<Eigen::Index>(j)) *= std::polar(1.0, b_phases[j]);
    const Matrix u = vecs.adjoint();  // u(j, k) = <j_B|k_A>

    // E = S' (x) P, index t * np + (n + N)
    std::vector<Eigen::Triplet<cplx>> a_e, m_e;
    for (Eigen::Index t = 0; t < ds; ++t) {
        for (Eigen::Index i = 0; i < np; ++i) {
            const Eigen::Index e = t * np + i;
            a_e.emplace_back(e, e, cplx(a(t) + pg.positions(i), 0.0));
            if (bdec.values(t) != 0.0) {
                // M_E carries b_j on |j_A>
                m_e.emplace_back(e, e, cplx(bdec.values(t), 0.0));
            }
        }
    }
    SparseOperator a_e_op(de, de), m_e_op(de, de);
    a_e_op.setFromTriplets(a_e.begin(), a_e.end());
    m_e_op.setFromTriplets(m_e.begin(), m_e.end());

    // U |s, t, n> = (1 (x) V) |t, s, n>
    std::vector<Eigen::Triplet<cplx>> u_trip;
    u_trip.reserve(static_cast<std::size_t>(ds * de * ds));
    auto index = [&](Eigen::Index s, Eigen::Index t, long n) { return s * de + t * np + static_cast<Eigen::Index>(n + n_half); };
    for (Eigen::Index s = 0; s < ds; ++s) {
        for (Eigen::Index t = 0; t < ds; ++t) {
            for (long n = -n_half; n <= n_half; ++n) {
                const Eigen::Index col = index(s, t, n);
                const long q = shift[static_cast<std::size_t>(s)] + n;
                bool complete = true;
                for (Eigen::Index j = 0; j < ds && complete; ++j) {
                    const long target = q - shift[static_cast<std::size_t>(j)];
                    complete = target >= -n_half && target <= n_half;
                }
                if (!complete) {
                    u_trip.emplace_back(index(t, s, n), col, cplx(1.0, 0.0));
                    continue;
                }
                for (Eigen::Index j = 0; j < ds; ++j) {
                    const cplx amp = u(j, s);
                    if (amp == cplx(0.0, 0.0)) continue;
                    u_trip.emplace_back(index(t, j, q - shift[static_cast<std::size_t>(j)]), col, amp);
                }
            }
        }
    }
    SparseOperator u_op(ds * de, ds * de);
    u_op.setFromTriplets(u_trip.begin(), u_trip.end());

    Vector pointer = Vector::Zero(de);
    pointer.segment(0, np) = pg.amplitudes.cast<cplx>();  // |0>_{S'} (x) psi
    return ImplementationSet::create(spec.a(), std::move(a_e_op), std::move(m_e_op), SupportState::pure(pointer),
                                     std::move(u_op));
}

}  // namespace cohcost
