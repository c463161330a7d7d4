#pragma once

// JSON documents for fields, groups, modules and subgroups.
//
//   field:    {"p": 2, "n": 3, "min_poly": [1, 1, 0, 1]}
//   element:  coefficient vector, constant term first
//   group:    {"degree": 3, "generators": [[2, 1, 3], [2, 3, 1]]}  (1-based images)
//   module:   {"group": ..., "field": ..., "dim": d,
//              "generators": [matrix, ...]}  matrix = rows of elements
//
// Readers validate everything and throw MathError on malformed input.

#include "json.hpp"

#include "modclass/finite_field.hpp"
#include "modclass/perm_group.hpp"
#include "modclass/rep.hpp"

namespace modclass {

using Json = nlohmann::json;

Json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const Json& j);

Json element_to_json(const FiniteField& f, Elem a);
Elem element_from_json(const FiniteField& f, const Json& j);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldPtr& f, const Json& j, std::size_t rows, std::size_t cols);

Json group_to_json(const GroupPtr& g);
/// Accepts a group document or a catalog name.
GroupPtr group_from_json(const Json& j);

Json module_to_json(const Rep& v);
/// Parses and validates the homomorphism property.
Rep module_from_json(const Json& j);

/// Elements as 1-based image vectors.
Json subgroup_to_json(const Subgroup& s);

}  // namespace modclass
