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
#include <cstring>
#include <string>

#include "cohcost/cohcost.h"
#include "doctest.h"

namespace {

std::string data(const char *name) { return std::string(COHCOST_TEST_DATA) + "/" + name; }

struct Witness {
    cc_state *rho = nullptr;
    cc_operator *a = nullptr;
    cc_operator *b = nullptr;
    cc_function *sld = nullptr;
    cc_function *wy = nullptr;

    Witness() {
        const double rho_re[] = {0.75, 0, 0, 0.25};
        const double x_re[] = {0, 1, 1, 0};
        const double y_re[] = {0, 0, 0, 0};
        const double y_im[] = {0, -1, 1, 0};
        REQUIRE(cc_state_create(2, rho_re, nullptr, &rho) == CC_OK);
        REQUIRE(cc_operator_create(2, x_re, nullptr, &a) == CC_OK);
        REQUIRE(cc_operator_create(2, y_re, y_im, &b) == CC_OK);
        REQUIRE(cc_function_lookup("sld", &sld) == CC_OK);
        REQUIRE(cc_function_lookup("wy", &wy) == CC_OK);
    }
    ~Witness() {
        cc_state_free(rho);
        cc_operator_free(a);
        cc_operator_free(b);
        cc_function_free(sld);
        cc_function_free(wy);
    }
};

}  // namespace

TEST_CASE("status names and errors") {
    CHECK(std::string(cc_status_name(CC_OK)) == "ok");
    CHECK(std::string(cc_status_name(CC_ERR_OUT_OF_REGIME)) == "out_of_regime");
    CHECK(std::strlen(cc_version()) > 0);

    cc_operator *op = nullptr;
    const double bad[] = {0, 2, 1, 0};
    CHECK(cc_operator_create(2, bad, nullptr, &op) == CC_ERR_VALIDATION);
    CHECK(op == nullptr);
    CHECK(std::string(cc_last_error()).find("entry (") != std::string::npos);
    CHECK(cc_operator_create(2, nullptr, nullptr, &op) == CC_ERR_INVALID_ARGUMENT);
    CHECK(cc_operator_from_json("{oops", &op) == CC_ERR_PARSE);
    CHECK(cc_operator_load("/nonexistent.json", &op) == CC_ERR_IO);
    cc_function *f = nullptr;
    CHECK(cc_function_lookup("nope", &f) == CC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("measures through the C API") {
    Witness w;
    double v = 0;
    REQUIRE(cc_variance(w.rho, w.a, &v) == CC_OK);
    CHECK(v == doctest::Approx(1.0));
    REQUIRE(cc_skew_information(w.rho, w.a, w.sld, &v) == CC_OK);
    CHECK(v == doctest::Approx(0.25));
    REQUIRE(cc_skew_information(w.rho, w.a, w.wy, &v) == CC_OK);
    CHECK(v == doctest::Approx(1 - std::sqrt(3.0) / 2));
    double u1 = 0, u2 = 0;
    REQUIRE(cc_u_quantity(w.rho, w.a, w.wy, &u1) == CC_OK);
    REQUIRE(cc_u_quantity_identity(w.rho, w.a, w.wy, &u2) == CC_OK);
    CHECK(u1 == doctest::Approx(u2).epsilon(1e-10));
    REQUIRE(cc_fisher_information(w.rho, w.a, w.sld, &v) == CC_OK);
    CHECK(v == doctest::Approx(1.0));
    REQUIRE(cc_f_variance(w.rho, w.a, w.wy, &v) == CC_OK);
    CHECK(v == doctest::Approx(0.933013).epsilon(1e-6));

    char *json = nullptr;
    REQUIRE(cc_measures_json(w.rho, w.a, w.sld, &json) == CC_OK);
    CHECK(std::string(json).find("\"skew\"") != std::string::npos);
    cc_string_free(json);

    double ev[2];
    REQUIRE(cc_state_eigenvalues(w.rho, ev) == CC_OK);
    CHECK(ev[0] + ev[1] == doctest::Approx(1.0));
    CHECK(cc_state_dim(w.rho) == 2);
    CHECK(cc_operator_dim(w.a) == 2);
}

TEST_CASE("functions through the C API") {
    Witness w;
    CHECK(std::string(cc_function_name(w.wy)) == "wy");
    CHECK(cc_function_f0(w.wy) == 0.25);
    double x = 0;
    REQUIRE(cc_function_eval(w.wy, 3.0, &x) == CC_OK);
    CHECK(x == doctest::Approx(1.866025).epsilon(1e-6));
    REQUIRE(cc_function_tilde_eval(w.wy, 3.0, &x) == CC_OK);
    CHECK(x == doctest::Approx(1.732051).epsilon(1e-6));
    REQUIRE(cc_m_f(w.wy, 1.0, 0.0, &x) == CC_OK);
    CHECK(x == doctest::Approx(0.25));
    int y = -1;
    REQUIRE(cc_check_cond_y(w.wy, &y) == CC_OK);
    CHECK(y == 1);
    REQUIRE(cc_check_cond_y(w.sld, &y) == CC_OK);
    CHECK(y == 0);
}

TEST_CASE("relations through the C API") {
    Witness w;
    cc_verdict v{};
    REQUIRE(cc_relation("lemma1", w.rho, w.a, w.b, w.sld, &v) == CC_OK);
    CHECK(std::abs(v.lhs - 0.25) < 1e-10);
    CHECK(std::abs(v.rhs - 0.25) < 1e-10);
    CHECK(v.holds == 1);
    REQUIRE(cc_relation("robertson", w.rho, w.a, w.b, nullptr, &v) == CC_OK);
    CHECK(v.rhs == doctest::Approx(0.25));
    CHECK(cc_relation("type2", w.rho, w.a, w.b, w.sld, &v) == CC_ERR_CONDITION_NOT_MET);
    CHECK(cc_relation("type9", w.rho, w.a, w.b, w.sld, &v) == CC_ERR_INVALID_ARGUMENT);
    double n = 0;
    REQUIRE(cc_commutator_norm(w.a, w.b, &n) == CC_OK);
    CHECK(n == doctest::Approx(2.0));
}

TEST_CASE("implementation sets through the C API") {
    cc_impl *impl = nullptr;
    REQUIRE(cc_impl_load(data("swap_copy.json").c_str(), &impl) == CC_OK);
    CHECK(cc_impl_validate(impl) == CC_OK);
    cc_operator *b = nullptr;
    REQUIRE(cc_operator_load(data("b_copy.json").c_str(), &b) == CC_OK);
    double e = 1;
    REQUIRE(cc_impl_worst_error(impl, b, &e) == CC_OK);
    CHECK(e < 1e-7);
    cc_impl_free(impl);
    cc_operator_free(b);

    cc_impl *bad = nullptr;
    CHECK(cc_impl_load(data("nonconserving.json").c_str(), &bad) == CC_ERR_INVARIANT_VIOLATION);
    REQUIRE(cc_impl_random_nonconserving(2, 3, 1, &bad) == CC_OK);
    CHECK(cc_impl_validate(bad) == CC_ERR_INVARIANT_VIOLATION);
    cc_impl_free(bad);

    cc_impl *good = nullptr;
    REQUIRE(cc_impl_random(2, 4, 7, &good) == CC_OK);
    CHECK(cc_impl_dim_s(good) == 2);
    CHECK(cc_impl_dim_e(good) == 4);
    cc_operator *bs = nullptr;
    cc_state *rho = nullptr;
    cc_function *sld = nullptr;
    REQUIRE(cc_operator_random(2, 3, 1.0, &bs) == CC_OK);
    REQUIRE(cc_state_random(2, 3, &rho) == CC_OK);
    REQUIRE(cc_function_lookup("sld", &sld) == CC_OK);
    double err = 0, bound = 0, residual = 1;
    int holds = 0;
    REQUIRE(cc_impl_error(good, bs, rho, &err) == CC_OK);
    REQUIRE(cc_way_ozawa_bound(good, bs, rho, sld, &bound) == CC_OK);
    CHECK(err * err >= bound - 1e-9);
    REQUIRE(cc_commutator_transfer(good, bs, rho, &residual, &holds) == CC_OK);
    CHECK(holds == 1);
    CHECK(residual < 1e-9);
    char *json = nullptr;
    REQUIRE(cc_error_report_json(good, bs, rho, "sld,wy", &json) == CC_OK);
    CHECK(std::string(json).find("\"wy\"") != std::string::npos);
    cc_string_free(json);
    cc_impl_free(good);
    cc_operator_free(bs);
    cc_state_free(rho);
    cc_function_free(sld);
}

TEST_CASE("construction and costs through the C API") {
    cc_construction *q = nullptr;
    REQUIRE(cc_construction_qubit(6.0, &q) == CC_OK);
    double e = 0;
    REQUIRE(cc_construction_exact_worst_error(q, &e) == CC_OK);
    CHECK(e == doctest::Approx(std::sqrt(2 * (1 - std::exp(-1.0 / 288)))).epsilon(1e-12));
    double bound = 0;
    REQUIRE(cc_construction_error_bound(q, &bound) == CC_OK);
    CHECK(e * e <= bound);
    cc_construction *q1 = nullptr;
    REQUIRE(cc_construction_with_xi(q, 1.0, &q1) == CC_OK);
    double g = 0;
    REQUIRE(cc_construction_grid_worst_error(q1, 50, 12.0, &g) == CC_OK);
    CHECK(g * g == doctest::Approx(2 * (1 - std::exp(-0.125))).epsilon(1e-6));
    CHECK(cc_construction_grid_worst_error(q, 50, 12.0, &g) == CC_ERR_INVALID_ARGUMENT);
    double nc = 0, na = 0;
    REQUIRE(cc_construction_norms(q, &nc, &na) == CC_OK);
    CHECK(nc == doctest::Approx(1.0));
    CHECK(na == doctest::Approx(1.0));
    cc_construction_free(q);
    cc_construction_free(q1);

    cc_construction *file = nullptr;
    REQUIRE(cc_construction_load(data("qubit_spec.json").c_str(), &file) == CC_OK);
    cc_construction_free(file);

    double xi = 0;
    REQUIRE(cc_xi_for_epsilon(1, 1, 0.1, &xi) == CC_OK);
    CHECK(xi == doctest::Approx(6.0));
    CHECK(cc_cost_upper_sqrt(1, 1, 0.2, &xi) == CC_ERR_OUT_OF_REGIME);
    cc_function *sld = nullptr;
    REQUIRE(cc_function_lookup("sld", &sld) == CC_OK);
    REQUIRE(cc_cost_lower_sqrt(1, 1, 0.01, sld, &xi) == CC_OK);
    CHECK(xi == doctest::Approx(49.5));
    cc_function_free(sld);
}

TEST_CASE("cc_run") {
    char *out = nullptr;
    char *notes = nullptr;
    cc_run_summary s{};
    REQUIRE(cc_run(R"({"command": "cost-table", "f": ["sld"]})", &out, &notes, &s) == CC_OK);
    CHECK(s.passed == 1);
    CHECK(std::string(out).find("49.5,51,51") != std::string::npos);
    cc_string_free(out);
    cc_string_free(notes);
    CHECK(cc_run(R"({"command": "cost-table", "eps": [0.2]})", &out, nullptr, &s) == CC_OK);
    cc_string_free(out);
    CHECK(cc_run(R"({"command": "cost-table", "typo": 1})", &out, nullptr, &s) == CC_ERR_INVALID_ARGUMENT);
}
