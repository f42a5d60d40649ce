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


#include "cohcost/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "cohcost/error.hpp"
#include "io_json.hpp"

namespace cohcost {

namespace {

[[noreturn]] void parse_fail(const std::string &path, const std::string &reason) {
    fail(ErrorKind::Parse, (path.empty() ? std::string("/") : path) + ": " + reason);
}

json parse_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        fail(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
    }
}

const json &member(const json &j, const std::string &path, const char *key) {
    if (!j.is_object()) parse_fail(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) parse_fail(path, std::string("missing field \"") + key + "\"");
    return *it;
}

double number_at(const json &j, const std::string &path) {
    if (!j.is_number()) parse_fail(path, "expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) parse_fail(path, "non-finite number");
    return v;
}

long integer_at(const json &j, const std::string &path) {
    if (!j.is_number_integer()) parse_fail(path, "expected an integer");
    return j.get<long>();
}

Eigen::MatrixXd real_block(const json &j, const std::string &path, long dim) {
    if (!j.is_array() || static_cast<long>(j.size()) != dim)
        parse_fail(path, "expected an array of " + std::to_string(dim) + " rows");
    Eigen::MatrixXd m(dim, dim);
    for (long r = 0; r < dim; ++r) {
        const std::string rp = path + "/" + std::to_string(r);
        const json &row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<long>(row.size()) != dim)
            parse_fail(rp, "expected a row of " + std::to_string(dim) + " numbers");
        for (long c = 0; c < dim; ++c) m(r, c) = number_at(row[static_cast<std::size_t>(c)], rp + "/" + std::to_string(c));
    }
    return m;
}

json finite_or_string(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

// Wraps construction errors from the typed constructors with the field path.
template <typename Fn>
auto at_path(const std::string &path, Fn &&fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error &e) {
        fail(e.kind(), path + ": " + e.what());
    }
}

}  // namespace

Matrix matrix_from_json(const json &j, const std::string &path) {
    const long dim = integer_at(member(j, path, "dim"), path + "/dim");
    if (dim < 1) parse_fail(path + "/dim", "dimension must be positive");
    const Eigen::MatrixXd re = real_block(member(j, path, "re"), path + "/re", dim);
    Eigen::MatrixXd im = Eigen::MatrixXd::Zero(dim, dim);
    if (j.contains("im")) im = real_block(j["im"], path + "/im", dim);
    Matrix m(dim, dim);
    m.real() = re;
    m.imag() = im;
    return m;
}

json matrix_json(const Matrix &m) {
    json re = json::array(), im = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json rr = json::array(), ri = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            rr.push_back(m(r, c).real());
            ri.push_back(m(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ri));
    }
    return json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ConstructionSpec construction_spec_from_json(const json &j, const std::string &path) {
    const double unit = j.contains("unit") ? number_at(j["unit"], path + "/unit") : 1.0;
    const json &lv = member(j, path, "levels");
    if (!lv.is_array() || lv.empty()) parse_fail(path + "/levels", "expected a non-empty array of integers");
    std::vector<long> levels;
    for (std::size_t i = 0; i < lv.size(); ++i) levels.push_back(integer_at(lv[i], path + "/levels/" + std::to_string(i)));
    const Matrix b = matrix_from_json(member(j, path, "B"), path + "/B");
    const double xi = j.contains("xi") ? number_at(j["xi"], path + "/xi") : 1.0;
    return at_path(path, [&] { return make_spec(unit, std::move(levels), HermitianOperator(b), xi); });
}

json construction_spec_json(const ConstructionSpec &spec) {
    return json{{"unit", spec.unit}, {"levels", spec.levels}, {"B", matrix_json(spec.b.matrix())}, {"xi", spec.xi}};
}

json error_report_json(const ErrorReport &r) {
    json bounds = json::object();
    for (const auto &[name, v] : r.bound_f) bounds[name] = finite_or_string(v);
    return json{{"epsilon", r.epsilon},
                {"epsilon_sq", r.epsilon_sq},
                {"bound_sld", finite_or_string(r.bound_sld)},
                {"bound_f", std::move(bounds)},
                {"commutator_expect", {{"re", r.commutator_expect.real()}, {"im", r.commutator_expect.imag()}}}};
}

json measure_report_json(const MeasureReport &r) {
    return json{{"v", r.v}, {"vf", r.vf}, {"skew", r.skew}, {"u", r.u}, {"f_name", r.f_name}};
}

json number_json(double v) { return finite_or_string(v); }

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) fail(ErrorKind::Io, "error reading '" + path + "'");
    return os.str();
}

Matrix parse_matrix(std::string_view text) { return matrix_from_json(parse_text(text), ""); }

HermitianOperator parse_hermitian(std::string_view text) {
    const Matrix m = parse_matrix(text);
    return at_path("/", [&] { return HermitianOperator(m); });
}

DensityMatrix parse_density(std::string_view text) {
    const Matrix m = parse_matrix(text);
    return at_path("/", [&] { return DensityMatrix(m); });
}

UnitaryOperator parse_unitary(std::string_view text) {
    const Matrix m = parse_matrix(text);
    return at_path("/", [&] { return UnitaryOperator(m); });
}

ImplementationSet parse_implementation(std::string_view text) {
    const json j = parse_text(text);
    const long ds = integer_at(member(j, "", "dim_s"), "/dim_s");
    const long de = integer_at(member(j, "", "dim_e"), "/dim_e");
    auto load = [&](const char *key, long dim) {
        const std::string path = std::string("/") + key;
        Matrix m = matrix_from_json(member(j, "", key), path);
        if (m.rows() != dim) parse_fail(path + "/dim", "expected dimension " + std::to_string(dim));
        return m;
    };
    const Matrix a_s = load("A_S", ds);
    const Matrix a_e = load("A_E", de);
    const Matrix m_e = load("M_E", de);
    const Matrix rho_e = load("rho_E", de);
    const Matrix u = load("U_SE", ds * de);
    const HermitianOperator ha_s = at_path("/A_S", [&] { return HermitianOperator(a_s); });
    const HermitianOperator ha_e = at_path("/A_E", [&] { return HermitianOperator(a_e); });
    const HermitianOperator hm_e = at_path("/M_E", [&] { return HermitianOperator(m_e); });
    const DensityMatrix drho = at_path("/rho_E", [&] { return DensityMatrix(rho_e); });
    const UnitaryOperator uu = at_path("/U_SE", [&] { return UnitaryOperator(u); });
    return ImplementationSet::create(ha_s, ha_e, hm_e, drho, uu);
}

ConstructionSpec parse_construction_spec(std::string_view text) {
    return construction_spec_from_json(parse_text(text), "");
}

std::string matrix_to_json(const Matrix &m) { return matrix_json(m).dump(); }
std::string measure_report_to_json(const MeasureReport &r) { return measure_report_json(r).dump(); }
std::string error_report_to_json(const ErrorReport &r) { return error_report_json(r).dump(); }
std::string construction_spec_to_json(const ConstructionSpec &spec) { return construction_spec_json(spec).dump(); }

}  // namespace cohcost
