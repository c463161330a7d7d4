#include "modclass/meataxe.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "modclass/errors.hpp"
#include "modclass/limits.hpp"
#include "modclass/linalg.hpp"
#include "modclass/random.hpp"

namespace modclass {

namespace {

Elem random_elem(const FiniteField& f, Rng& rng) { return static_cast<Elem>(rng.below(f.order())); }

Matrix random_combination(const FieldPtr& field, std::size_t n, const std::vector<Matrix>& basis, Rng& rng) {
  Matrix m(field, n, n);
  for (const auto& b : basis) m.add_scaled(b, random_elem(*field, rng));
  return m;
}

Poly poly_power(const Poly& g, int e) {
  Poly r = Poly::constant(g.field(), 1);
  for (int i = 0; i < e; ++i) r = r * g;
  return r;
}

std::vector<Elem> row_of(const Matrix& m, std::size_t r) { return {m.row(r).begin(), m.row(r).end()}; }

std::vector<Matrix> transposed(const std::vector<Matrix>& ms) {
  std::vector<Matrix> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(m.transpose());
  return out;
}

// Breadth-first spin of one vector, keeping discovery order (not RREF).
Matrix standard_basis(const Rep& v, const std::vector<Elem>& start) {
  const std::size_t d = v.dim();
  EchelonBasis span(v.field(), d);
  std::vector<std::vector<Elem>> list;
  if (span.add(start)) list.push_back(start);
  for (std::size_t i = 0; i < list.size() && !span.full(); ++i) {
    for (const auto& g : v.generators()) {
      auto w = g.apply(list[i]);
      if (span.add(w)) list.push_back(std::move(w));
    }
  }
  Matrix s(v.field(), list.size(), d);
  for (std::size_t i = 0; i < list.size(); ++i) std::copy(list[i].begin(), list[i].end(), s.row(i).begin());
  return s;
}

// Closure of a subspace of End(V) under left and right multiplication by End(V).
class IdealBuilder {
 public:
  IdealBuilder(const FieldPtr& field, std::size_t d, const std::vector<Matrix>& algebra)
      : span_(field, d * d), algebra_(algebra) {}

  // Stops early once the ideal grows past `limit`.
  void add(const Matrix& x, std::size_t limit) {
    std::vector<Matrix> queue;
    if (span_.add(x.data())) {
      basis_.push_back(x);
      queue.push_back(x);
    }
    while (!queue.empty() && basis_.size() <= limit) {
      const Matrix y = std::move(queue.back());
      queue.pop_back();
      for (const auto& b : algebra_) {
        for (Matrix z : {b * y, y * b}) {
          if (span_.add(z.data())) {
            basis_.push_back(z);
            queue.push_back(std::move(z));
          }
        }
      }
    }
  }

  std::size_t size() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }
  const EchelonBasis& span() const { return span_; }

  bool nilpotent() const {
    if (basis_.empty()) return true;
    const FieldPtr& field = basis_.front().field();
    const std::size_t dd = basis_.front().rows() * basis_.front().cols();
    std::vector<Matrix> power = basis_;
    while (!power.empty()) {
      EchelonBasis next_span(field, dd);
      std::vector<Matrix> next;
      for (const auto& x : power) {
        for (const auto& y : basis_) {
          Matrix z = x * y;
          if (next_span.add(z.data())) next.push_back(std::move(z));
        }
      }
      if (next.size() >= power.size()) return false;
      power = std::move(next);
    }
    return true;
  }

 private:
  EchelonBasis span_;
  std::vector<Matrix> basis_;
  const std::vector<Matrix>& algebra_;
};

std::uint64_t point_count(std::uint64_t q, std::size_t r, std::uint64_t cap) {
  std::uint64_t total = 0;
  std::uint64_t term = 1;
  for (std::size_t i = 0; i < r; ++i) {
    total += term;
    if (total > cap) return cap + 1;
    term *= q;
  }
  return total;
}

// Each projective point of the row space of `basis`, normalized so the first
// nonzero coordinate is one, is passed to `visit`.
template <typename F>
void for_each_point(const Matrix& basis, F&& visit) {
  const auto& f = *basis.field();
  const std::size_t r = basis.rows();
  const Elem q = f.order();
  for (std::size_t lead = 0; lead < r; ++lead) {
    std::vector<Elem> tail(r - lead - 1, 0);
    while (true) {
      std::vector<Elem> v(row_of(basis, lead));
      for (std::size_t j = 0; j < tail.size(); ++j) {
        if (tail[j] != 0) f.axpy(v, tail[j], basis.row(lead + 1 + j));
      }
      visit(v);
      std::size_t j = 0;
      while (j < tail.size() && ++tail[j] == q) tail[j++] = 0;
      if (j == tail.size()) break;
    }
  }
}

std::vector<Matrix> canonical_words(const Rep& v) {
  const auto& gens = v.generators();
  std::vector<Matrix> words;
  if (gens.empty()) return words;
  words.push_back(gens[0]);
  for (std::size_t i = 1; i < 12; ++i) {
    words.push_back(words[i - 1] * gens[i % gens.size()] + words[i / 2]);
  }
  return words;
}

std::string poly_text(const Poly& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) os << (i ? "," : "") << p.coeffs()[i];
  return os.str();
}

// Isomorphism between indecomposables: some f in Hom(a, b) composed with some
// g in Hom(b, a) is a unit of the local ring End(a).
std::optional<Matrix> indecomposable_iso(const Rep& a, const EndAnalysis& ea, const Rep& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  const HomSpace ab = hom_space(a, b);
  if (ab.dim() == 0) return std::nullopt;
  const HomSpace ba = hom_space(b, a);
  for (const auto& f : ab.basis) {
    for (const auto& g : ba.basis) {
      if (!ea.in_radical(f * g)) return f;
    }
  }
  return std::nullopt;
}

bool is_intertwiner(const Rep& a, const Rep& b, const Matrix& m) {
  for (std::size_t k = 0; k < a.generators().size(); ++k) {
    if (!(a.generator(k) * m == m * b.generator(k))) return false;
  }
  return true;
}

struct Piece {
  Matrix basis;
  Rep module;
  EndAnalysis end;
};

void split_recursive(const Rep& v, const Matrix& basis, Rng& rng, std::vector<Piece>& out) {
  if (v.dim() == 0) return;
  EndAnalysis ea = analyze_endomorphisms(v, rng.next());
  if (ea.local) {
    out.push_back({basis, v, std::move(ea)});
    return;
  }
  for (const auto& [g, e] : ea.splitter_factors) {
    const Matrix kernel = left_nullspace(evaluate(poly_power(g, e), *ea.splitter));
    const Rep part = sub_representation(v, kernel);
    split_recursive(part, kernel * basis, rng, out);
  }
}

}  // namespace

SimplicityResult test_simple(const Rep& v, std::uint64_t seed) {
  const std::size_t d = v.dim();
  if (d == 0) throw MathError("simplicity of the zero module");
  if (d == 1) return {true, std::nullopt};
  const FieldPtr& field = v.field();
  const auto& gens = v.generators();
  const auto gens_t = transposed(gens);
  Rng rng(seed);
  std::vector<Matrix> pool = gens;
  if (pool.empty()) pool.push_back(Matrix::identity(field, d));
  for (int attempt = 0; attempt < limits().las_vegas_attempts; ++attempt) {
    if (!gens.empty() && pool.size() < 24) {
      pool.push_back(pool[rng.below(pool.size())] * pool[rng.below(pool.size())]);
    }
    const Matrix theta = random_combination(field, d, pool, rng);
    auto factors = factor(charpoly(theta), rng);
    std::stable_sort(factors.begin(), factors.end(),
                     [](const auto& a, const auto& b) { return a.first.degree() < b.first.degree(); });
    for (const auto& [g, e] : factors) {
      const Matrix n = evaluate(g, theta);
      const Matrix null = left_nullspace(n);
      const Matrix s = spin(field, {row_of(null, 0)}, gens);
      if (s.rows() < d) return {false, s};
      if (null.rows() != static_cast<std::size_t>(g.degree())) continue;
      const Matrix dual_null = right_nullspace(n);
      const Matrix t = spin(field, {row_of(dual_null, 0)}, gens_t);
      if (t.rows() < d) return {false, right_nullspace(t)};
      return {true, std::nullopt};
    }
  }
  throw InconclusiveError("simplicity test: no certificate within the attempt budget");
}

bool is_simple(const Rep& v, std::uint64_t seed) { return test_simple(v, seed).simple; }

std::vector<Rep> composition_factors(const Rep& v, std::uint64_t seed) {
  std::vector<Rep> out;
  if (v.dim() == 0) return out;
  Rng rng(seed);
  std::vector<Rep> stack{v};
  while (!stack.empty()) {
    Rep m = std::move(stack.back());
    stack.pop_back();
    auto r = test_simple(m, rng.next());
    if (r.simple) {
      out.push_back(std::move(m));
      continue;
    }
    // Quotient pushed first so submodule factors come out first.
    stack.push_back(quotient_representation(m, *r.submodule));
    stack.push_back(sub_representation(m, *r.submodule));
  }
  return out;
}

bool EndAnalysis::in_radical(const Matrix& m) const {
  if (!local) throw MathError("radical membership needs a local endomorphism ring");
  if (!radical_span) return m.is_zero();
  return radical_span->contains(m.data());
}

EndAnalysis analyze_endomorphisms(const Rep& v, std::uint64_t seed) {
  const std::size_t d = v.dim();
  if (d == 0) throw MathError("endomorphisms of the zero module");
  const FieldPtr& field = v.field();
  EndAnalysis out;
  out.end = hom_space(v, v);
  const std::size_t k = out.end.dim();
  if (k == 1) {
    out.local = true;
    out.residue_degree = 1;
    return out;
  }
  const auto& basis = out.end.basis;
  Rng rng(seed);
  IdealBuilder ideal(field, d, basis);
  std::size_t max_degree = 0;
  bool certainly_not_local = false;
  std::vector<Matrix> pending;
  constexpr int kSplitFirst = 12;

  auto finish_local = [&](std::vector<Matrix> radical, std::size_t residue) {
    out.local = true;
    out.residue_degree = residue;
    auto span = std::make_shared<EchelonBasis>(field, d * d);
    for (const auto& r : radical) span->add(r.data());
    out.radical = std::move(radical);
    out.radical_span = std::move(span);
    return out;
  };

  for (int attempt = 0; attempt < limits().las_vegas_attempts; ++attempt) {
    const Matrix theta = random_combination(field, d, basis, rng);
    auto factors = factor(charpoly(theta), rng);
    if (factors.size() >= 2) {
      out.splitter = theta;
      out.splitter_factors = std::move(factors);
      return out;
    }
    if (certainly_not_local) continue;
    const Poly& g = factors.front().first;
    max_degree = std::max(max_degree, static_cast<std::size_t>(g.degree()));
    const Matrix n = evaluate(g, theta);
    if (n.is_zero()) {
      // theta generates a field of degree deg g inside End(V).
      if (static_cast<std::size_t>(g.degree()) == k) return finish_local({}, k);
    } else {
      // In a local ring b*n stays nilpotent; otherwise b*n is singular but not
      // nilpotent, so its characteristic polynomial splits.
      for (int probe = 0; probe < 4; ++probe) {
        Matrix t = random_combination(field, d, basis, rng) * n;
        auto tf = factor(charpoly(t), rng);
        if (tf.size() >= 2) {
          out.splitter = std::move(t);
          out.splitter_factors = std::move(tf);
          return out;
        }
      }
      pending.push_back(n);
    }
    // Ideal closure is the expensive step; give cheap splitting a head start.
    if (attempt < kSplitFirst) continue;
    for (const auto& x : pending) ideal.add(x, k - max_degree);
    pending.clear();
    if (k - ideal.size() < max_degree) {
      certainly_not_local = true;
    } else if (k - ideal.size() == max_degree) {
      if (ideal.nilpotent()) return finish_local(ideal.basis(), max_degree);
      certainly_not_local = true;
    }
  }

  // Fallback: scan every endomorphism.
  const std::uint64_t q = field->order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k && total <= limits().exhaustive_scan_cap; ++i) total *= q;
  if (total > limits().exhaustive_scan_cap) {
    throw InconclusiveError("endomorphism ring analysis: no certificate within the attempt budget");
  }
  std::vector<Elem> coeffs(k, 0);
  EchelonBasis nil_span(field, d * d);
  std::vector<Matrix> nil;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < k; ++i) {
      coeffs[i] = static_cast<Elem>(rest % q);
      rest /= q;
    }
    Matrix theta(field, d, d);
    for (std::size_t i = 0; i < k; ++i) theta.add_scaled(basis[i], coeffs[i]);
    auto factors = factor(charpoly(theta), rng);
    if (factors.size() >= 2) {
      out.splitter = theta;
      out.splitter_factors = std::move(factors);
      return out;
    }
    if (factors.front().first.degree() == 1 && factors.front().first[0] == 0) {
      if (nil_span.add(theta.data())) nil.push_back(theta);
    }
  }
  const std::size_t residue = k - nil.size();
  return finish_local(std::move(nil), residue);
}

bool is_indecomposable(const Rep& v, std::uint64_t seed) {
  if (v.dim() == 0) throw MathError("indecomposability of the zero module");
  return analyze_endomorphisms(v, seed).local;
}

bool is_absolutely_simple(const Rep& v, std::uint64_t seed) {
  return is_simple(v, seed) && end_degree(v) == 1;
}

bool is_absolutely_indecomposable(const Rep& v, std::uint64_t seed) {
  if (v.dim() == 0) throw MathError("indecomposability of the zero module");
  const EndAnalysis ea = analyze_endomorphisms(v, seed);
  return ea.local && ea.residue_degree == 1;
}

std::size_t end_degree(const Rep& v) { return hom_space(v, v).dim(); }

std::size_t residue_degree(const Rep& v, std::uint64_t seed) {
  const EndAnalysis ea = analyze_endomorphisms(v, seed);
  if (!ea.local) throw MathError("module is decomposable; decompose it first");
  return ea.residue_degree;
}

std::size_t Decomposition::component_count() const {
  std::size_t n = 0;
  for (const auto& s : summands) n += s.multiplicity;
  return n;
}

CanonicalForm canonical_form(const Rep& v, std::uint64_t seed) {
  const std::size_t d = v.dim();
  const FieldPtr& field = v.field();
  CanonicalForm out{v, Matrix::identity(field, d), false, {}};
  if (d == 0 || v.generators().empty()) {
    out.exact = true;
    return out;
  }
  Rng rng(seed);
  const auto words = canonical_words(v);
  std::ostringstream digest;
  digest << d;

  struct Candidate {
    std::uint64_t points;
    std::size_t word;
    Poly factor;
    Matrix null;
  };
  std::vector<Candidate> candidates;
  const std::uint64_t cap = limits().exhaustive_scan_cap;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const Poly cp = charpoly(words[i]);
    digest << '|' << poly_text(cp);
    for (const auto& [g, e] : factor(cp, rng)) {
      Matrix null = left_nullspace(evaluate(g, words[i]));
      const std::uint64_t pts = point_count(field->order(), null.rows(), cap);
      candidates.push_back({pts, i, g, std::move(null)});
    }
  }
  out.digest = digest.str();
  std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.points != b.points) return a.points < b.points;
    if (a.word != b.word) return a.word < b.word;
    return a.factor < b.factor;
  });

  for (const auto& c : candidates) {
    if (c.points > cap) break;
    std::optional<Matrix> best_basis;
    std::vector<Matrix> best;
    for_each_point(c.null, [&](const std::vector<Elem>& p) {
      Matrix s = standard_basis(v, p);
      if (s.rows() < d) return;
      const Rep image = change_basis(v, s);
      if (!best_basis || std::lexicographical_compare(image.generators().begin(), image.generators().end(),
                                                      best.begin(), best.end())) {
        best = image.generators();
        best_basis = std::move(s);
      }
    });
    if (best_basis) {
      out.module = Rep(v.group(), field, d, std::move(best));
      out.basis = std::move(*best_basis);
      out.exact = true;
      return out;
    }
  }
  return out;
}

bool canonical_less(const CanonicalForm& a, std::size_t end_a, const CanonicalForm& b, std::size_t end_b) {
  if (a.module.dim() != b.module.dim()) return a.module.dim() < b.module.dim();
  if (end_a != end_b) return end_a < end_b;
  if (a.exact != b.exact) return a.exact;
  if (a.exact) {
    const auto& ga = a.module.generators();
    const auto& gb = b.module.generators();
    return std::lexicographical_compare(ga.begin(), ga.end(), gb.begin(), gb.end());
  }
  return a.digest < b.digest;
}

Decomposition decompose(const Rep& v, std::uint64_t seed) {
  const FieldPtr& field = v.field();
  Rng rng(seed);
  std::vector<Piece> pieces;
  split_recursive(v, Matrix::identity(field, v.dim()), rng, pieces);

  struct Group {
    Rep module;
    EndAnalysis end;
    std::vector<Matrix> bases;
    CanonicalForm form;
  };
  std::vector<Group> groups;
  for (auto& piece : pieces) {
    bool placed = false;
    for (auto& g : groups) {
      auto f = indecomposable_iso(g.module, g.end, piece.module);
      if (!f) continue;
      // The block of f * basis equals g.module's matrices.
      g.bases.push_back(*f * piece.basis);
      placed = true;
      break;
    }
    if (!placed) {
      groups.push_back({piece.module, std::move(piece.end), {piece.basis}, CanonicalForm{piece.module, {}, false, {}}});
    }
  }

  for (auto& g : groups) {
    g.form = canonical_form(g.module, rng.next());
    for (auto& b : g.bases) b = g.form.basis * b;
  }
  std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
    return canonical_less(a.form, a.end.end.dim(), b.form, b.end.end.dim());
  });

  Decomposition out;
  out.basis_change = Matrix(field, 0, v.dim());
  for (auto& g : groups) {
    out.summands.push_back({g.form.module, g.bases.size()});
    for (const auto& b : g.bases) out.basis_change = out.basis_change.stacked(b);
  }
  return out;
}

IsomorphismResult test_isomorphic(const Rep& a, const Rep& b, std::uint64_t seed) {
  if (!same_group(a.group(), b.group()) || a.field() != b.field()) {
    throw MathError("isomorphism test between modules of different groups or fields");
  }
  if (a.dim() != b.dim()) return {false, std::nullopt};
  const FieldPtr& field = a.field();
  const std::size_t d = a.dim();
  if (d == 0) return {true, Matrix(field, 0, 0)};
  const HomSpace h = hom_space(a, b);
  if (h.dim() == 0) return {false, std::nullopt};
  Rng rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Matrix m = random_combination(field, d, h.basis, rng);
    if (rank(m) == d) return {true, std::move(m)};
  }

  const Decomposition da = decompose(a, rng.next());
  const Decomposition db = decompose(b, rng.next());
  if (da.summands.size() != db.summands.size() || da.component_count() != db.component_count()) {
    return {false, std::nullopt};
  }
  std::vector<std::size_t> offset_b(db.summands.size(), 0);
  for (std::size_t j = 1; j < db.summands.size(); ++j) {
    offset_b[j] = offset_b[j - 1] + db.summands[j - 1].multiplicity * db.summands[j - 1].module.dim();
  }
  std::vector<bool> used(db.summands.size(), false);
  Matrix blocks(field, d, d);
  std::size_t offset_a = 0;
  for (const auto& sa : da.summands) {
    const EndAnalysis ea = analyze_endomorphisms(sa.module, rng.next());
    std::optional<Matrix> iso;
    std::size_t match = 0;
    for (std::size_t j = 0; j < db.summands.size() && !iso; ++j) {
      if (used[j] || db.summands[j].multiplicity != sa.multiplicity) continue;
      iso = indecomposable_iso(sa.module, ea, db.summands[j].module);
      match = j;
    }
    if (!iso) return {false, std::nullopt};
    used[match] = true;
    const std::size_t n = sa.module.dim();
    for (std::size_t c = 0; c < sa.multiplicity; ++c) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) blocks(offset_a + c * n + i, offset_b[match] + c * n + j) = (*iso)(i, j);
      }
    }
    offset_a += sa.multiplicity * n;
  }
  Matrix m = *inverse(da.basis_change) * blocks * db.basis_change;
  if (!is_intertwiner(a, b, m) || rank(m) != d) {
    throw ConsistencyError("Krull-Schmidt isomorphism failed to intertwine");
  }
  return {true, std::move(m)};
}

bool is_isomorphic(const Rep& a, const Rep& b, std::uint64_t seed) { return test_isomorphic(a, b, seed).isomorphic; }

bool is_component(const Rep& u, const Rep& v, std::uint64_t seed) {
  if (u.dim() == 0) throw MathError("the zero module is not a component");
  if (u.dim() > v.dim()) return false;
  const EndAnalysis eu = analyze_endomorphisms(u, seed);
  if (!eu.local) throw MathError("component test needs an indecomposable module");
  const HomSpace uv = hom_space(u, v);
  if (uv.dim() == 0) return false;
  const HomSpace vu = hom_space(v, u);
  for (const auto& f : uv.basis) {
    for (const auto& g : vu.basis) {
      if (!eu.in_radical(f * g)) return true;
    }
  }
  return false;
}

SimpleSet simple_modules(const GroupPtr& g, const FieldPtr& k, std::uint64_t seed) {
  Rng rng(seed);
  const auto factors = composition_factors(regular_module(g, k), rng.next());
  std::vector<Rep> distinct;
  for (const auto& f : factors) {
    bool seen = false;
    for (const auto& d : distinct) {
      if (d.dim() == f.dim() && hom_space(d, f).dim() > 0) {
        seen = true;
        break;
      }
    }
    if (!seen) distinct.push_back(f);
  }
  struct Entry {
    CanonicalForm form;
    std::size_t end;
  };
  std::vector<Entry> entries;
  for (const auto& d : distinct) entries.push_back({canonical_form(d, rng.next()), end_degree(d)});
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return canonical_less(a.form, a.end, b.form, b.end); });
  SimpleSet out{g, k, {}, {}};
  for (auto& e : entries) {
    out.modules.push_back(e.form.module);
    out.end_degrees.push_back(e.end);
  }
  return out;
}

std::size_t find_simple(const SimpleSet& set, const Rep& w, std::uint64_t) {
  for (std::size_t i = 0; i < set.modules.size(); ++i) {
    if (set.modules[i].dim() == w.dim() && hom_space(set.modules[i], w).dim() > 0) return i;
  }
  throw ConsistencyError("simple module not found among the simple modules of the group");
}

}  // namespace modclass
