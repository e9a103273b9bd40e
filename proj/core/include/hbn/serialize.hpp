#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hbn/components.hpp"
#include "hbn/experiments.hpp"
#include "hbn/laurent.hpp"
#include "hbn/poset.hpp"

namespace hbn {

nlohmann::json to_json(const SplittingType& e);
nlohmann::json to_json(const BBType& bb);
nlohmann::json to_json(const ComponentRecord& record);
nlohmann::json to_json(const ExtClass& gamma);
nlohmann::json to_json(const ExperimentReport& report);

/// {"query": {g,k,d,r}, "components": [...]}.
nlohmann::json components_to_json(int g, int k, int d, int r, const std::vector<ComponentRecord>& records);

SplittingType splitting_type_from_json(const nlohmann::json& j);
BBType bb_from_json(const nlohmann::json& j);

/// One header row, then one row per component.
std::string components_to_csv(const std::vector<ComponentRecord>& records);

/// digraph with one node per type labeled by e, u(e) and g - u(e); edges are
/// covering relations pointing from the larger type to the smaller one.
std::string poset_to_dot(const HasseDiagram& diagram, int g);

// Matrix text format: line 1 "p k", then k*k lines in row-major order, each a
// Laurent polynomial written as space-separated "coeff^exponent" pairs; an
// empty line is the zero entry.

/// Throws input_error on malformed input or a non-invertible matrix.
LaurentMatrix read_matrix(std::istream& in);
LaurentMatrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const LaurentMatrix& m);

}  // namespace hbn
