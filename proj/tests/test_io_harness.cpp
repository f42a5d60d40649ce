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
#include <string>

#include "cohcost/error.hpp"
#include "cohcost/harness.hpp"
#include "cohcost/io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cohcost;
using json = nlohmann::json;

namespace {

std::string data(const char *name) { return std::string(COHCOST_TEST_DATA) + "/" + name; }

Error caught(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e;
    }
    FAIL("expected an error");
    return Error(ErrorKind::Numerical, "");
}

int count_lines(const std::string &s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("matrix parsing") {
    const Matrix m = parse_matrix(R"({"dim": 2, "re": [[1, 2], [3, 4]], "im": [[0, 1], [0, 0]]})");
    CHECK(m(0, 1) == cplx(2, 1));
    CHECK(m(1, 0) == cplx(3, 0));
    const Matrix real_only = parse_matrix(R"({"dim": 1, "re": [[5]]})");
    CHECK(real_only(0, 0) == cplx(5, 0));

    const auto rows = caught([] { parse_matrix(R"({"dim": 2, "re": [[1, 2], [3]]})"); });
    CHECK(rows.kind() == ErrorKind::Parse);
    CHECK(std::string(rows.what()).find("/re/1") != std::string::npos);
    const auto type = caught([] { parse_matrix(R"({"dim": 2, "re": [[1, "x"], [3, 4]]})"); });
    CHECK(std::string(type.what()).find("/re/0/1") != std::string::npos);
    CHECK(caught([] { parse_matrix("{not json"); }).kind() == ErrorKind::Parse);
    CHECK(caught([] { parse_matrix(R"({"dim": 3, "re": [[1]]})"); }).kind() == ErrorKind::Parse);
    CHECK(caught([] { parse_hermitian(R"({"dim": 2, "re": [[0, 1], [0, 0]]})"); }).kind() == ErrorKind::Validation);
    CHECK(caught([] { parse_density(R"({"dim": 2, "re": [[1, 0], [0, 1]]})"); }).kind() == ErrorKind::Validation);
}

TEST_CASE("matrix round trip") {
    const DensityMatrix rho = random_density(3, 12);
    const Matrix back = parse_matrix(matrix_to_json(rho.matrix()));
    CHECK((back - rho.matrix()).norm() == 0.0);
}

TEST_CASE("implementation and spec files") {
    const auto impl = parse_implementation(read_text_file(data("swap_copy.json")));
    CHECK(impl.dim_s() == 2);
    CHECK(impl.status().ok());
    const auto bad = caught([] { parse_implementation(read_text_file(data("nonconserving.json"))); });
    CHECK(bad.kind() == ErrorKind::InvariantViolation);
    const auto spec = parse_construction_spec(read_text_file(data("qubit_spec.json")));
    CHECK(spec.levels.size() == 2);
    CHECK(spec.xi == 1.0);
    const auto again = parse_construction_spec(construction_spec_to_json(spec));
    CHECK(again.levels == spec.levels);
    CHECK((again.b.matrix() - spec.b.matrix()).norm() == 0.0);
    CHECK(caught([] { read_text_file("/nonexistent/file.json"); }).kind() == ErrorKind::Io);
    CHECK(caught([] { parse_construction_spec(R"({"levels": [0, 1]})"); }).kind() == ErrorKind::Parse);
}

TEST_CASE("report serialization") {
    const auto r = measure_report(DensityMatrix::maximally_mixed(2), HermitianOperator::identity(2), MonotoneFunction::wy());
    const json j = json::parse(measure_report_to_json(r));
    CHECK(j["f_name"] == "wy");
    ErrorReport e;
    e.epsilon = 1.0;
    e.bound_sld = std::numeric_limits<double>::infinity();
    const json k = json::parse(error_report_to_json(e));
    CHECK(k["bound_sld"] == "inf");
}

TEST_CASE("config parsing") {
    const auto cfg = parse_run_config(R"({"command": "relations", "dims": [2, 3], "trials": 5})");
    CHECK(cfg.dims == std::vector<int>{2, 3});
    CHECK(cfg.seed == 42);
    CHECK(caught([] { parse_run_config(R"({"command": "relations", "bogus": 1})"); }).what() ==
          std::string("config /bogus: unknown field"));
    CHECK_THROWS_AS(parse_run_config(R"({"dims": [2]})"), Error);
    CHECK_THROWS_AS(parse_run_config(R"({"command": "dance"})"), Error);
    CHECK_THROWS_AS(parse_run_config(R"({"command": "relations", "trials": 0})"), Error);
    CHECK_THROWS_AS(parse_run_config(R"({"command": "relations", "f": ["nope"]})"), Error);
    CHECK_THROWS_AS(parse_run_config(R"({"command": "construct-sweep", "grid": [50]})"), Error);
    CHECK(caught([] { parse_run_config("[1"); }).kind() == ErrorKind::Parse);
}

TEST_CASE("config hash ignores threads only") {
    const auto a = parse_run_config(R"({"command": "relations", "threads": 1})");
    const auto b = parse_run_config(R"({"command": "relations", "threads": 4})");
    const auto c = parse_run_config(R"({"command": "relations", "seed": 43})");
    CHECK(config_hash(a) == config_hash(b));
    CHECK(config_hash(a) != config_hash(c));
}

TEST_CASE("relations run is deterministic and thread independent") {
    auto cfg = parse_run_config(R"({"command": "relations", "dims": [2, 3], "trials": 30, "seed": 9})");
    const auto one = run(cfg);
    cfg.threads = 3;
    const auto three = run(cfg);
    CHECK(one.passed);
    CHECK(one.violations == 0);
    CHECK(one.output == three.output);
    CHECK(one.output.rfind("relation,f_name,dim,seed,lhs,rhs,slack,holds,trial,config_hash\n", 0) == 0);
    CHECK(one.output.find(",false,") == std::string::npos);
}

TEST_CASE("measures and way runs") {
    RunConfig cfg;
    cfg.command = "measures";
    cfg.rho_path = data("rho_witness.json");
    cfg.obs_path = data("sigma_x.json");
    const auto m = run(cfg);
    CHECK(m.passed);
    const json j = json::parse(m.output);
    REQUIRE(j["reports"].size() == 2);
    CHECK(j["reports"][0]["skew"].get<double>() == doctest::Approx(0.25));

    RunConfig way;
    way.command = "way";
    way.impl_path = data("swap_copy.json");
    way.b_path = data("b_copy.json");
    const auto w = run(way);
    CHECK(w.passed);
    way.impl_path = data("nonconserving.json");
    CHECK_THROWS_AS(run(way), Error);
}

TEST_CASE("construct sweep and cost table") {
    RunConfig cfg;
    cfg.command = "construct-sweep";
    const auto s = run(cfg);
    CHECK(s.passed);
    CHECK(count_lines(s.output) == 4);
    CHECK(s.output.find("\n6,0.083261047670935") != std::string::npos);

    cfg.eps_list = {0.2};
    CHECK_THROWS_AS(run(cfg), Error);

    RunConfig costs;
    costs.command = "cost-table";
    costs.f_names = {"sld"};
    const auto c = run(costs);
    CHECK(c.passed);
    CHECK(c.output.find(",4.5,6,6,") != std::string::npos);
    CHECK(c.output.find(",49.5,51,51,") != std::string::npos);
}

TEST_CASE("selftest") {
    RunConfig cfg;
    cfg.command = "selftest";
    const auto r = run(cfg);
    CHECK(r.passed);
    CHECK(r.violations == 0);
    CHECK(count_lines(r.output) == 8);
}
