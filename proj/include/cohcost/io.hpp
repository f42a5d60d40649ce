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


#ifndef COHCOST_IO_HPP
#define COHCOST_IO_HPP

// JSON exchange formats.
//
//   matrix:        {"dim": n, "re": [[...], ...], "im": [[...], ...]}   row-major; "im" may be omitted
//   implementation {"dim_s", "dim_e", "A_S", "A_E", "M_E", "rho_E", "U_SE"}  (matrices as above)
//   construction   {"unit": u, "levels": [n0, ...], "B": matrix, "xi": xi}
//
// Parse failures raise ErrorKind::Parse with a JSON-pointer path to the
// offending value; semantic failures keep the kind raised by the type.
// Non-finite numbers are written as the strings "inf", "-inf" and "nan".

#include <string>
#include <string_view>

#include "cohcost/construct.hpp"
#include "cohcost/infogeo.hpp"
#include "cohcost/linops.hpp"
#include "cohcost/measure.hpp"

namespace cohcost {

std::string read_text_file(const std::string &path);

Matrix parse_matrix(std::string_view text);
HermitianOperator parse_hermitian(std::string_view text);
DensityMatrix parse_density(std::string_view text);
UnitaryOperator parse_unitary(std::string_view text);
ImplementationSet parse_implementation(std::string_view text);
ConstructionSpec parse_construction_spec(std::string_view text);

std::string matrix_to_json(const Matrix &m);
std::string measure_report_to_json(const MeasureReport &r);
std::string error_report_to_json(const ErrorReport &r);
std::string construction_spec_to_json(const ConstructionSpec &spec);

}  // namespace cohcost

#endif  // COHCOST_IO_HPP
