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

#include "cohcost/costs.hpp"
#include "cohcost/error.hpp"
#include "doctest.h"

using namespace cohcost;

TEST_CASE("lower bound") {
    const auto sld = MonotoneFunction::sld();
    CHECK(cost_lower_sqrt(1, 1, 0.1, sld) == doctest::Approx(4.5).epsilon(1e-14));
    CHECK(cost_lower_sqrt(0, 1, 0.1, sld) == doctest::Approx(-0.5));
    CHECK(cost_lower_sqrt(1, 1, 0.1, MonotoneFunction::wy()) == doctest::Approx(std::sqrt(0.125) * 10 - 0.5).epsilon(1e-14));
    CHECK(cost_lower_sqrt(1, 1, 0.1, MonotoneFunction::wy()) == doctest::Approx(3.035534).epsilon(1e-6));
    CHECK_THROWS_AS(cost_lower_sqrt(1, 1, 0.0, sld), Error);
}

TEST_CASE("upper bound") {
    CHECK(cost_upper_sqrt(1, 1, 0.1) == doctest::Approx(6.0));
    CHECK(cost_upper_sqrt(1, 1, 0.125) == doctest::Approx(5.0));
    CHECK(cost_upper_sqrt(1, 1, 0.01) == doctest::Approx(51.0));
    try {
        cost_upper_sqrt(1, 1, 0.2);
        FAIL("expected out-of-regime");
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::OutOfRegime);
    }
}

TEST_CASE("cost report") {
    const auto in = cost_report(1, 1, 0.05, MonotoneFunction::sld());
    CHECK(in.in_window);
    CHECK(in.lower_sqrt == doctest::Approx(9.5));
    CHECK(in.upper_sqrt == doctest::Approx(11.0));
    CHECK(in.achieved_sqrt == doctest::Approx(11.0));
    const auto out = cost_report(1, 1, 0.2, MonotoneFunction::sld());
    CHECK_FALSE(out.in_window);
    CHECK(std::isnan(out.upper_sqrt));
    CHECK(out.lower_sqrt == doctest::Approx(2.0));
}

TEST_CASE("asymptotic table") {
    const auto t = asymptotic_table(1, 1, {0.1, 0.05, 0.01}, MonotoneFunction::sld());
    REQUIRE(t.rows.size() == 3);
    CHECK(t.equality_applies);
    CHECK(t.consistent);
    CHECK(t.lower_limit == doctest::Approx(0.5));
    CHECK(t.upper_limit == doctest::Approx(0.5));
    const double lower[] = {0.45, 0.475, 0.495}, upper[] = {0.6, 0.55, 0.51};
    for (int k = 0; k < 3; ++k) {
        CHECK(t.rows[k].eps * t.rows[k].lower_sqrt == doctest::Approx(lower[k]).epsilon(1e-14));
        CHECK(t.rows[k].eps * t.rows[k].upper_sqrt == doctest::Approx(upper[k]).epsilon(1e-14));
        CHECK(t.rows[k].upper_sqrt - t.rows[k].lower_sqrt == doctest::Approx(1.5));
    }
    const auto wy = asymptotic_table(1, 1, {0.1, 0.05, 0.01}, MonotoneFunction::wy());
    CHECK_FALSE(wy.equality_applies);
    CHECK(wy.coefficient_gap == doctest::Approx(0.5 - std::sqrt(0.125)));
    CHECK(asymptotic_table(1, 1, {0.125}, MonotoneFunction::sld()).rows.size() == 1);
    CHECK_THROWS_AS(asymptotic_table(1, 1, {}, MonotoneFunction::sld()), Error);
    CHECK_THROWS_AS(asymptotic_table(1, 1, {-0.1}, MonotoneFunction::sld()), Error);
}

TEST_CASE("covariant restatement carries the same numbers") {
    const auto note = gcov_transfer_note(1, 1, 0.1, MonotoneFunction::sld());
    CHECK(note.lower_sqrt == doctest::Approx(4.5));
    CHECK(note.upper_sqrt == doctest::Approx(6.0));
    CHECK_FALSE(note.lower_statement.empty());
}
