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


#ifndef COHCOST_SRC_IO_JSON_HPP
#define COHCOST_SRC_IO_JSON_HPP

// JSON-valued helpers shared by io.cpp and the harness; not installed.

#include <string>

#include "cohcost/construct.hpp"
#include "cohcost/infogeo.hpp"
#include "cohcost/measure.hpp"
#include "json.hpp"

namespace cohcost {

using json = nlohmann::json;

Matrix matrix_from_json(const json &j, const std::string &path);
json matrix_json(const Matrix &m);
ConstructionSpec construction_spec_from_json(const json &j, const std::string &path);
json construction_spec_json(const ConstructionSpec &spec);
json error_report_json(const ErrorReport &r);
json measure_report_json(const MeasureReport &r);
json number_json(double v);

}  // namespace cohcost

#endif  // COHCOST_SRC_IO_JSON_HPP
