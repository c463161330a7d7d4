#include "modclass/serialize.hpp"

#include "modclass/errors.hpp"

namespace modclass {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MathError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::uint64_t unsigned_of(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw MathError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

}  // namespace

Json field_to_json(const FieldPtr& f) {
  return {{"p", f->characteristic()}, {"n", f->degree()}, {"min_poly", f->min_poly()}};
}

FieldPtr field_from_json(const Json& j) {
  const auto p = unsigned_of(member(j, "p"), "p");
  const auto n = unsigned_of(member(j, "n"), "n");
  if (p > 0xffffffffULL || n > 64) throw MathError("field parameters out of range");
  const FieldPtr f = make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(n));
  if (j.contains("min_poly")) {
    const Json& mp = j.at("min_poly");
    if (!mp.is_array()) throw MathError("min_poly must be an array");
    std::vector<std::uint32_t> given;
    for (const auto& c : mp) given.push_back(static_cast<std::uint32_t>(unsigned_of(c, "min_poly coefficient")));
    if (given != f->min_poly()) {
      throw MathError("unsupported defining polynomial for " + f->name() + "; expected the standard one");
    }
  }
  return f;
}

Json element_to_json(const FiniteField& f, Elem a) { return f.coeffs(a); }

Elem element_from_json(const FiniteField& f, const Json& j) {
  if (!j.is_array() || j.size() != f.degree()) {
    throw MathError("field element must be a coefficient vector of length " + std::to_string(f.degree()));
  }
  std::vector<std::uint32_t> c;
  for (const auto& x : j) {
    const auto v = unsigned_of(x, "coefficient");
    if (v >= f.characteristic()) throw MathError("coefficient out of range");
    c.push_back(static_cast<std::uint32_t>(v));
  }
  return f.from_coeffs(c);
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(element_to_json(*m.field(), m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const FieldPtr& f, const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw MathError("matrix must have " + std::to_string(rows) + " rows");
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols) throw MathError("matrix row must have " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = element_from_json(*f, row[k]);
  }
  return m;
}

Json group_to_json(const GroupPtr& g) {
  Json gens = Json::array();
  for (const auto& perm : g->generators()) {
    Json images = Json::array();
    for (auto x : perm) images.push_back(x + 1);
    gens.push_back(std::move(images));
  }
  return {{"degree", g->degree()}, {"generators", std::move(gens)}};
}

GroupPtr group_from_json(const Json& j) {
  if (j.is_string()) return catalog_group(j.get<std::string>());
  if (j.is_object() && j.contains("catalog")) return catalog_group(member(j, "catalog").get<std::string>());
  const auto degree = unsigned_of(member(j, "degree"), "degree");
  if (degree == 0 || degree > 64) throw MathError("group degree out of range");
  const Json& gens = member(j, "generators");
  if (!gens.is_array()) throw MathError("generators must be an array");
  std::vector<Perm> perms;
  for (const auto& g : gens) {
    if (!g.is_array() || g.size() != degree) throw MathError("generator must list " + std::to_string(degree) + " images");
    Perm p;
    for (const auto& x : g) {
      const auto v = unsigned_of(x, "image");
      if (v < 1 || v > degree) throw MathError("image out of range");
      p.push_back(static_cast<std::uint16_t>(v - 1));
    }
    perms.push_back(std::move(p));
  }
  return group_from_generators(degree, perms);
}

Json module_to_json(const Rep& v) {
  Json gens = Json::array();
  for (const auto& m : v.generators()) gens.push_back(matrix_to_json(m));
  return {{"group", group_to_json(v.group())}, {"field", field_to_json(v.field())}, {"dim", v.dim()},
          {"generators", std::move(gens)}};
}

Rep module_from_json(const Json& j) {
  const GroupPtr g = group_from_json(member(j, "group"));
  const FieldPtr f = field_from_json(member(j, "field"));
  const auto d = unsigned_of(member(j, "dim"), "dim");
  if (d > 4096) throw MathError("module dimension out of range");
  const Json& gens = member(j, "generators");
  if (!gens.is_array() || gens.size() != g->generator_count()) {
    throw MathError("module must give one matrix per group generator");
  }
  std::vector<Matrix> ms;
  for (const auto& m : gens) ms.push_back(matrix_from_json(f, m, d, d));
  Rep v(g, f, d, std::move(ms));
  v.validate();
  return v;
}

Json subgroup_to_json(const Subgroup& s) {
  Json out = Json::array();
  for (int x : s.elements()) {
    Json images = Json::array();
    for (auto y : s.parent()->element(x)) images.push_back(y + 1);
    out.push_back(std::move(images));
  }
  return out;
}

}  // namespace modclass
