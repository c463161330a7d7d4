#include "modclass/classify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <optional>

#include "modclass/errors.hpp"
#include "modclass/green.hpp"
#include "modclass/meataxe.hpp"
#include "modclass/random.hpp"

namespace modclass {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed of an independent task, so results do not depend on scheduling.
std::uint64_t task_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
  return mix(mix(mix(seed ^ mix(a)) ^ b) ^ c);
}

FieldPtr prime_field_of(const Rep& v) { return make_field(v.field()->characteristic(), 1); }

void require_prime_field(const Rep& w) {
  if (w.field()->degree() != 1) throw MathError("module must be defined over the prime field");
}

std::vector<std::uint32_t> divisors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 1; m <= n; ++m) {
    if (n % m == 0) out.push_back(m);
  }
  return out;
}

// Orbit index of each summand under Aut(field). Twists of a summand must be
// summands again.
std::vector<std::size_t> galois_orbits(const std::vector<Summand>& summands, std::uint64_t seed) {
  std::vector<std::size_t> orbit(summands.size(), summands.size());
  std::size_t next = 0;
  Rng rng(seed);
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (orbit[i] != summands.size()) continue;
    orbit[i] = next;
    const Rep& v = summands[i].module;
    for (const auto& sigma : automorphisms(v.field())) {
      const Rep t = frobenius_twist(v, sigma);
      bool matched = false;
      for (std::size_t j = 0; j < summands.size() && !matched; ++j) {
        if (summands[j].module.dim() != t.dim()) continue;
        if (!is_isomorphic(t, summands[j].module, rng.next())) continue;
        matched = true;
        if (orbit[j] == summands.size()) orbit[j] = next;
        if (orbit[j] != next) throw ConsistencyError("Galois orbits overlap");
        if (summands[j].multiplicity != summands[i].multiplicity) {
          throw ConsistencyError("Frobenius twists occur with different multiplicities");
        }
      }
      if (!matched) throw ConsistencyError("a Frobenius twist of a component is not a component");
    }
    ++next;
  }
  return orbit;
}

// Are the absolutely indecomposable pairs a and b the same module over the
// algebraic closure? Decided over the compositum of their fields.
bool same_over_closure(const ClassifiedModule& a, const ClassifiedModule& b, std::uint64_t seed) {
  if (a.module.dim() != b.module.dim()) return false;
  const std::uint32_t n = std::lcm(a.field->degree(), b.field->degree());
  const FieldPtr l = make_field(a.field->characteristic(), n);
  return is_isomorphic(extend_scalars(a.module, l), extend_scalars(b.module, l), seed);
}

}  // namespace

ClassifiedModule classify_module(const Rep& v, std::uint64_t seed) {
  if (v.dim() == 0) throw MathError("the zero module is not indecomposable");
  Rng rng(seed);
  const EndAnalysis ea = analyze_endomorphisms(v, rng.next());
  if (!ea.local) throw MathError("module is decomposable");
  ClassifiedModule out{v.field(), v, false, ea.residue_degree == 1};
  out.absolutely_simple = out.absolutely_indecomposable && ea.end.dim() == 1 && is_simple(v, rng.next());
  return out;
}

UpDirections up_directions(const Rep& v, const Rep& u, std::uint64_t seed) {
  if (!same_group(v.group(), u.group())) throw MathError("modules of different groups");
  const auto& k = *v.field();
  const auto& l = *u.field();
  UpDirections out;
  out.subfield = k.characteristic() == l.characteristic() && l.degree() % k.degree() == 0;
  Rng rng(seed);
  if (!is_indecomposable(v, rng.next()) || !is_indecomposable(u, rng.next())) {
    throw MathError("module is decomposable");
  }
  if (!out.subfield) return out;
  out.extension = is_component(u, extend_scalars(v, u.field()), rng.next());
  out.restriction = is_component(v, restrict_scalars(u, v.field()), rng.next());
  return out;
}

bool up_relation(const Rep& v, const Rep& u, std::uint64_t seed) {
  const UpDirections d = up_directions(v, u, seed);
  if (d.extension != d.restriction) {
    throw ConsistencyError("U | V (x) L and V | Res(U) disagree");
  }
  return d.extension;
}

std::vector<FiberEntry> fiber(const Rep& w, std::uint32_t degree_bound, std::uint64_t seed) {
  require_prime_field(w);
  if (degree_bound < 1) throw MathError("degree bound must be at least 1");
  if (!is_indecomposable(w, seed)) throw MathError("fiber of a decomposable module");
  const auto p = w.field()->characteristic();
  std::vector<FiberEntry> out;
  for (std::uint32_t n = 1; n <= degree_bound; ++n) {
    const Decomposition d = decompose(extend_scalars(w, make_field(p, n)), task_seed(seed, 1, n));
    const auto orbit = galois_orbits(d.summands, task_seed(seed, 2, n));
    if (std::any_of(orbit.begin(), orbit.end(), [](std::size_t o) { return o != 0; })) {
      throw ConsistencyError("components of W (x) GF(" + std::to_string(p) + "^" + std::to_string(n) +
                             ") form more than one Galois orbit");
    }
    const std::size_t index = n - 1;
    for (std::size_t i = 0; i < d.summands.size(); ++i) {
      out.push_back({classify_module(d.summands[i].module, task_seed(seed, 3, n, i)), index,
                     d.summands[i].multiplicity});
    }
  }
  return out;
}

ClassifiedModule descend_component(const Rep& w, std::uint32_t n, std::size_t index, std::uint64_t seed) {
  require_prime_field(w);
  const auto p = w.field()->characteristic();
  const FieldPtr l = make_field(p, n);
  const Decomposition top = decompose(extend_scalars(w, l), task_seed(seed, 1, n));
  if (index >= top.summands.size()) throw MathError("component index out of range");
  const Rep& x = top.summands[index].module;
  for (std::uint32_t m : divisors(n)) {
    std::vector<Rep> candidates;
    if (m == n) {
      candidates.push_back(x);
    } else {
      const Decomposition d = decompose(extend_scalars(w, make_field(p, m)), task_seed(seed, 1, m));
      for (const auto& s : d.summands) candidates.push_back(s.module);
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Rep& y = candidates[i];
      if (y.dim() != x.dim()) continue;
      if (m != n && !is_isomorphic(extend_scalars(y, l), x, task_seed(seed, 4, m, i))) continue;
      if (!up_relation(w, y, task_seed(seed, 5, m, i))) {
        throw ConsistencyError("descended module is not above W");
      }
      return classify_module(y, task_seed(seed, 6, m, i));
    }
  }
  throw ConsistencyError("component is not defined over any subfield, not even its own");
}

Rep gamma_of(const ClassifiedModule& y, std::uint64_t seed) {
  if (!y.absolutely_indecomposable) throw MathError("gamma_of needs an absolutely indecomposable module");
  const Decomposition d = decompose(restrict_scalars(y.module, prime_field_of(y.module)), seed);
  if (d.summands.size() != 1) {
    throw ConsistencyError("restriction of scalars has " + std::to_string(d.summands.size()) +
                           " isomorphism types of components");
  }
  const Rep& w = d.summands.front().module;
  if (d.summands.front().multiplicity * w.dim() != y.field->degree() * y.module.dim()) {
    throw ConsistencyError("restriction of scalars has the wrong dimension");
  }
  return w;
}

Rep sigma_of(const ClassifiedModule& x, std::uint64_t seed) {
  if (!x.absolutely_simple) throw MathError("sigma_of needs an absolutely simple module");
  Rep w = gamma_of(x, seed);
  if (!is_simple(w, seed)) throw ConsistencyError("image of an absolutely simple module is not simple");
  return w;
}

std::vector<ClassifiedModule> sigma_fiber(const Rep& w, std::uint64_t seed) {
  require_prime_field(w);
  if (!is_simple(w, seed)) throw MathError("sigma_fiber needs a simple module");
  const std::size_t m = end_degree(w);
  const FieldPtr l = make_field(w.field()->characteristic(), static_cast<std::uint32_t>(m));
  const Decomposition d = decompose(extend_scalars(w, l), task_seed(seed, 1, m));
  if (d.summands.size() != m || d.component_count() != m) {
    throw ConsistencyError("W (x) GF(p^m) has " + std::to_string(d.component_count()) + " components, expected " +
                           std::to_string(m));
  }
  const auto orbit = galois_orbits(d.summands, task_seed(seed, 2, m));
  if (std::any_of(orbit.begin(), orbit.end(), [](std::size_t o) { return o != 0; })) {
    throw ConsistencyError("components of W (x) GF(p^m) form more than one Galois orbit");
  }
  std::vector<ClassifiedModule> out;
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    ClassifiedModule c = classify_module(d.summands[i].module, task_seed(seed, 3, m, i));
    if (!c.absolutely_simple) throw ConsistencyError("component of W (x) GF(p^m) is not absolutely simple");
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ClassifiedModule> gamma_fiber(const Rep& w, std::uint32_t degree_bound, std::uint64_t seed) {
  require_prime_field(w);
  const EndAnalysis ea = analyze_endomorphisms(w, seed);
  if (!ea.local) throw MathError("gamma_fiber needs an indecomposable module");
  const auto m = static_cast<std::uint32_t>(ea.residue_degree);
  for (std::uint32_t n = m; n == m || n <= degree_bound; n += m) {
    const FieldPtr l = make_field(w.field()->characteristic(), n);
    const Decomposition d = decompose(extend_scalars(w, l), task_seed(seed, 1, n));
    std::vector<ClassifiedModule> out;
    bool split = true;
    for (std::size_t i = 0; i < d.summands.size() && split; ++i) {
      out.push_back(classify_module(d.summands[i].module, task_seed(seed, 3, n, i)));
      split = out.back().absolutely_indecomposable;
    }
    if (split) return out;
  }
  throw MathError("splitting degree exceeds the bound " + std::to_string(degree_bound));
}

ClassificationReport count_absolutely_simple(const GroupPtr& g, std::uint32_t p, std::uint64_t seed) {
  if (!is_prime(p)) throw MathError("characteristic must be prime");
  ClassificationReport out;
  out.group = g;
  out.p = p;
  const SimpleSet set = simple_modules(g, make_field(p, 1), seed);
  for (std::size_t i = 0; i < set.modules.size(); ++i) {
    const auto fib = sigma_fiber(set.modules[i], task_seed(seed, 7, i));
    out.rows.push_back({set.modules[i].dim(), set.end_degrees[i], fib.size(), fib.front().field->degree()});
    out.total += fib.size();
  }
  out.oracle = p_regular_class_count(*g, p);
  out.agree = out.total == out.oracle;
  return out;
}

// ---- batch verification ----

bool VerificationReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.passed(); });
}

namespace {

enum Clause : std::size_t {
  kMaterialize,
  kUpEquivalence,
  kHomogeneity,
  kSingleOrbit,
  kTransitivity,
  kVertexSource,
  kGreenBijection,
  kSimplicity,
  kPartition,
  kCounting,
  kClauseCount
};

const char* const kClauseNames[kClauseCount] = {
    "materialize",        "up_equivalence", "restriction_homogeneity", "single_galois_orbit",
    "transitivity",       "vertex_source",  "green_bijection",         "simplicity_equivalence",
    "partition",          "counting_formula",
};

const char* const kClauseText[kClauseCount] = {
    "W (x) GF(p^n) decomposes for every sample W and n",
    "U | V (x) L agrees with V | Res(U) on every tested pair",
    "Res_F^K(V) = sW with s dim W = [K:F] dim V",
    "components of W (x) K form one Frobenius orbit",
    "(K,V) up (L,U) keeps both pairs above the same W",
    "components keep the vertex, a source dividing the extended source, and Green correspondents",
    "Green correspondence is a bijection between the fibers of W and of its correspondent",
    "V simple iff W simple",
    "fibers of distinct W are disjoint and cover every absolutely indecomposable component",
    "sum of |Sigma^-1(W)| equals the p-regular class count",
};

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) fail(what);
  }
  void fail(const std::string& what) {
    ++failures;
    if (notes.size() < 4) notes.push_back(what);
  }
  void merge(const Tally& o) {
    checks += o.checks;
    failures += o.failures;
    for (const auto& n : o.notes) {
      if (notes.size() < 4) notes.push_back(n);
    }
  }
};

using Tallies = std::array<Tally, kClauseCount>;

// Runs f; an exception counts as a failed check of `clause`.
void guarded(Tallies& t, Clause clause, const std::string& where, const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    t[clause].fail(where + ": " + e.what());
  }
}

struct SampleModule {
  Rep module;
  bool simple = false;
  std::size_t end_dim = 0;
};

struct Level {
  bool ok = false;
  FieldPtr field;
  std::vector<Summand> components;
  std::vector<ClassifiedModule> classified;
  std::vector<std::size_t> orbit;
  std::string error;
};

struct GreenInfo {
  Subgroup q;
  Subgroup h;
  Rep source;
  Rep correspondent;
};

struct GreenData {
  bool ok = false;
  std::optional<GreenInfo> info;
  std::string error;
};

std::string where(std::size_t w, std::uint32_t n) {
  return "W" + std::to_string(w) + " n=" + std::to_string(n);
}

}  // namespace

VerificationReport verify_classification(const GroupPtr& g, std::uint32_t p, std::uint32_t degree_bound,
                                         std::uint64_t seed) {
  if (!is_prime(p)) throw MathError("characteristic must be prime");
  if (degree_bound < 1) throw MathError("degree bound must be at least 1");
  const FieldPtr f = make_field(p, 1);
  VerificationReport report;
  report.group = g;
  report.p = p;
  report.degree_bound = degree_bound;
  Tallies total;

  // Sample: the simple modules, then the projective indecomposables that are not simple.
  std::vector<SampleModule> sample;
  const SimpleSet simples = simple_modules(g, f, task_seed(seed, 10));
  for (std::size_t i = 0; i < simples.modules.size(); ++i) {
    sample.push_back({simples.modules[i], true, simples.end_degrees[i]});
  }
  const Decomposition reg = decompose(regular_module(g, f), task_seed(seed, 11));
  for (std::size_t i = 0; i < reg.summands.size(); ++i) {
    const Rep& pim = reg.summands[i].module;
    bool seen = false;
    for (const auto& s : sample) seen = seen || is_isomorphic(s.module, pim, task_seed(seed, 12, i));
    if (!seen) sample.push_back({pim, false, end_degree(pim)});
  }
  const std::size_t ws = sample.size();
  const std::size_t nb = degree_bound;
  report.sample_size = ws;

  // Decompose every W (x) GF(p^n).
  std::vector<Level> levels(ws * nb);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t t = 0; t < levels.size(); ++t) {
    const std::size_t w = t / nb;
    const auto n = static_cast<std::uint32_t>(t % nb + 1);
    Level& lv = levels[t];
    try {
      lv.field = make_field(p, n);
      const Decomposition d = decompose(extend_scalars(sample[w].module, lv.field), task_seed(seed, 20, w, n));
      lv.components = d.summands;
      for (std::size_t i = 0; i < d.summands.size(); ++i) {
        lv.classified.push_back(classify_module(d.summands[i].module, task_seed(seed, 21, t, i)));
      }
      lv.orbit = galois_orbits(d.summands, task_seed(seed, 22, w, n));
      lv.ok = true;
    } catch (const std::exception& e) {
      lv.error = e.what();
    }
  }
  auto level = [&](std::size_t w, std::uint32_t n) -> const Level& { return levels[w * nb + (n - 1)]; };
  for (std::size_t t = 0; t < levels.size(); ++t) {
    total[kMaterialize].check(levels[t].ok, where(t / nb, t % nb + 1) + ": " + levels[t].error);
  }

  // Vertex, source and Green correspondent of each W.
  std::vector<GreenData> green(ws);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t w = 0; w < ws; ++w) {
    GreenData& gd = green[w];
    try {
      const Rep& m = sample[w].module;
      Subgroup q = vertex(m, task_seed(seed, 30, w));
      Subgroup h = normalizer(q);
      Rep src = source(m, q, task_seed(seed, 31, w));
      Rep gr = green_correspondent(m, q, h, task_seed(seed, 32, w));
      gd.info = GreenInfo{std::move(q), std::move(h), std::move(src), std::move(gr)};
      gd.ok = true;
    } catch (const std::exception& e) {
      gd.error = e.what();
    }
  }

  // Fibers of Gamma and Sigma.
  std::vector<std::vector<ClassifiedModule>> gamma(ws), sigma(ws);
  std::vector<std::string> fiber_error(ws);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t w = 0; w < ws; ++w) {
    try {
      gamma[w] = gamma_fiber(sample[w].module, std::max<std::uint32_t>(degree_bound, 1), task_seed(seed, 40, w));
      if (sample[w].simple) sigma[w] = sigma_fiber(sample[w].module, task_seed(seed, 41, w));
    } catch (const std::exception& e) {
      fiber_error[w] = e.what();
    }
  }

  // Per-(W, n) checks.
  std::vector<Tallies> local(ws * nb);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t t = 0; t < local.size(); ++t) {
    const std::size_t w = t / nb;
    const auto n = static_cast<std::uint32_t>(t % nb + 1);
    const Level& lv = levels[t];
    Tallies& tl = local[t];
    if (!lv.ok) continue;
    const Rep& wm = sample[w].module;
    const std::string at = where(w, n);

    tl[kSingleOrbit].check(
        std::all_of(lv.orbit.begin(), lv.orbit.end(), [](std::size_t o) { return o == 0; }),
        at + ": more than one Galois orbit");

    for (std::size_t i = 0; i < lv.components.size(); ++i) {
      const Rep& u = lv.components[i].module;
      const std::string atu = at + " U" + std::to_string(i);

      for (std::size_t w2 = 0; w2 < ws; ++w2) {
        guarded(tl, kUpEquivalence, atu, [&] {
          const UpDirections d = up_directions(sample[w2].module, u, task_seed(seed, 50, t, i * ws + w2));
          tl[kUpEquivalence].check(d.extension == d.restriction,
                                   atu + " vs W" + std::to_string(w2) + ": directions disagree");
          tl[kPartition].check(d.extension == (w2 == w),
                               atu + (w2 == w ? " is not a component of W (x) K" : " lies above a second W"));
        });
      }

      guarded(tl, kHomogeneity, atu, [&] {
        const Decomposition r = decompose(restrict_scalars(u, f), task_seed(seed, 51, t, i));
        bool ok = r.summands.size() == 1 &&
                  r.summands[0].multiplicity * wm.dim() == n * u.dim() &&
                  is_isomorphic(r.summands[0].module, wm, task_seed(seed, 52, t, i));
        tl[kHomogeneity].check(ok, atu + ": restriction is not a multiple of W");
      });

      guarded(tl, kSimplicity, atu, [&] {
        tl[kSimplicity].check(is_simple(u, task_seed(seed, 53, t, i)) == sample[w].simple,
                              atu + ": simplicity differs from W");
      });

      if (!green[w].ok) continue;
      const GreenInfo& gd = *green[w].info;
      guarded(tl, kVertexSource, atu, [&] {
        const Subgroup vx = vertex(u, task_seed(seed, 54, t, i));
        tl[kVertexSource].check(vx.order() == gd.q.order() && are_conjugate(vx, gd.q), atu + ": vertex changed");
        const Rep ext_source = extend_scalars(gd.source, lv.field);
        const Decomposition rq = decompose(restrict_subgroup(u, gd.q), task_seed(seed, 55, t, i));
        bool found = false;
        for (std::size_t j = 0; j < rq.summands.size() && !found; ++j) {
          const Rep& x = rq.summands[j].module;
          found = is_component(u, induce(x, gd.q), task_seed(seed, 56, t, i * 64 + j)) &&
                  is_component(x, ext_source, task_seed(seed, 57, t, i * 64 + j));
        }
        tl[kVertexSource].check(found, atu + ": no source dividing the extended source of W");
        const Rep gr = green_correspondent(u, gd.q, gd.h, task_seed(seed, 58, t, i));
        tl[kVertexSource].check(
            is_component(gr, extend_scalars(gd.correspondent, lv.field), task_seed(seed, 59, t, i)),
            atu + ": Green correspondent does not divide the extended correspondent of W");
      });
    }

    // Green correspondence between the fiber of W and the fiber of Gr(W).
    if (green[w].ok) {
      const GreenInfo& gd = *green[w].info;
      guarded(tl, kGreenBijection, at, [&] {
        std::vector<Rep> images;
        for (std::size_t i = 0; i < lv.components.size(); ++i) {
          images.push_back(green_correspondent(lv.components[i].module, gd.q, gd.h, task_seed(seed, 60, t, i)));
        }
        for (std::size_t i = 0; i < images.size(); ++i) {
          for (std::size_t j = i + 1; j < images.size(); ++j) {
            tl[kGreenBijection].check(!is_isomorphic(images[i], images[j], task_seed(seed, 61, t, i * 64 + j)),
                                      at + ": two components share a Green correspondent");
          }
        }
        const Decomposition gw = decompose(extend_scalars(gd.correspondent, lv.field), task_seed(seed, 62, t));
        tl[kGreenBijection].check(gw.summands.size() == images.size(),
                                  at + ": fiber sizes of W and its correspondent differ");
        for (std::size_t i = 0; i < images.size(); ++i) {
          bool hit = false;
          for (std::size_t j = 0; j < gw.summands.size() && !hit; ++j) {
            hit = gw.summands[j].module.dim() == images[i].dim() &&
                  is_isomorphic(gw.summands[j].module, images[i], task_seed(seed, 63, t, i * 64 + j));
          }
          tl[kGreenBijection].check(hit, at + ": correspondent of a component is not above Gr(W)");
        }
      });
    }
  }

  // Chains K < L inside the bound.
  struct Chain {
    std::size_t w;
    std::uint32_t m;
    std::uint32_t n;
  };
  std::vector<Chain> chains;
  for (std::size_t w = 0; w < ws; ++w) {
    for (std::uint32_t n = 2; n <= degree_bound; ++n) {
      for (std::uint32_t m = 1; m < n; ++m) {
        if (n % m == 0) chains.push_back({w, m, n});
      }
    }
  }
  std::vector<Tallies> chain_tallies(chains.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t c = 0; c < chains.size(); ++c) {
    const auto [w, m, n] = chains[c];
    Tallies& tl = chain_tallies[c];
    const Level& lower = level(w, m);
    if (!lower.ok) continue;
    std::vector<bool> covered(level(w, n).components.size(), false);
    for (std::size_t w2 = 0; w2 < ws; ++w2) {
      const Level& upper = level(w2, n);
      if (!upper.ok) continue;
      for (std::size_t i = 0; i < lower.components.size(); ++i) {
        for (std::size_t j = 0; j < upper.components.size(); ++j) {
          const std::string at = where(w, m) + " V" + std::to_string(i) + " -> " + where(w2, n) + " U" +
                                 std::to_string(j);
          guarded(tl, kUpEquivalence, at, [&] {
            const UpDirections d = up_directions(lower.components[i].module, upper.components[j].module,
                                                 task_seed(seed, 70, c, (w2 * 64 + i) * 64 + j));
            tl[kUpEquivalence].check(d.extension == d.restriction, at + ": directions disagree");
            if (d.extension) {
              tl[kTransitivity].check(w2 == w, at + ": relation crosses fibers");
              if (w2 == w) covered[j] = true;
            }
          });
        }
      }
    }
    for (std::size_t j = 0; j < covered.size(); ++j) {
      tl[kTransitivity].check(covered[j], where(w, n) + " U" + std::to_string(j) + ": above no component at degree " +
                                              std::to_string(m));
    }
  }

  // Disjointness and coverage of the Gamma fibers, the Sigma count.
  Tallies global;
  for (std::size_t w = 0; w < ws; ++w) {
    global[kPartition].check(fiber_error[w].empty(), "W" + std::to_string(w) + ": " + fiber_error[w]);
    global[kVertexSource].check(green[w].ok, "W" + std::to_string(w) + ": " + green[w].error);
    if (green[w].ok) {
      guarded(global, kGreenBijection, "W" + std::to_string(w), [&] {
        const GreenInfo& gd = *green[w].info;
        // For H = G the correspondent is W itself, a module of G.
        const Subgroup q_in_h =
            same_group(gd.correspondent.group(), gd.q.parent()) ? gd.q : subgroup_within(gd.q, gd.h);
        const Subgroup vx = vertex(gd.correspondent, task_seed(seed, 80, w));
        global[kGreenBijection].check(vx.order() == q_in_h.order() && are_conjugate(vx, q_in_h),
                                      "W" + std::to_string(w) + ": correspondent has a different vertex");
        const Decomposition rq = decompose(restrict_subgroup(gd.correspondent, q_in_h), task_seed(seed, 81, w));
        bool found = false;
        for (std::size_t j = 0; j < rq.summands.size() && !found; ++j) {
          const Rep& x = rq.summands[j].module;
          found = x.dim() == gd.source.dim() && is_isomorphic(x, gd.source, task_seed(seed, 82, w, j)) &&
                  is_component(gd.correspondent, induce(x, q_in_h), task_seed(seed, 83, w, j));
        }
        global[kGreenBijection].check(found, "W" + std::to_string(w) + ": correspondent lost the source");
      });
    }
  }
  for (std::size_t a = 0; a < ws; ++a) {
    for (std::size_t b = a + 1; b < ws; ++b) {
      for (std::size_t i = 0; i < gamma[a].size(); ++i) {
        for (std::size_t j = 0; j < gamma[b].size(); ++j) {
          guarded(global, kPartition, "fibers", [&] {
            global[kPartition].check(!same_over_closure(gamma[a][i], gamma[b][j], task_seed(seed, 90, a * 64 + b, i * 64 + j)),
                                     "W" + std::to_string(a) + " and W" + std::to_string(b) + " share a fiber entry");
          });
        }
      }
    }
  }
  for (std::size_t t = 0; t < levels.size(); ++t) {
    const Level& lv = levels[t];
    if (!lv.ok) continue;
    const std::size_t w = t / nb;
    for (std::size_t i = 0; i < lv.classified.size(); ++i) {
      if (!lv.classified[i].absolutely_indecomposable) continue;
      guarded(global, kPartition, where(w, t % nb + 1), [&] {
        std::size_t hits = 0;
        bool own = false;
        for (std::size_t w2 = 0; w2 < ws; ++w2) {
          for (std::size_t j = 0; j < gamma[w2].size(); ++j) {
            if (same_over_closure(lv.classified[i], gamma[w2][j], task_seed(seed, 91, t, (i * 64 + w2) * 64 + j))) {
              ++hits;
              own = own || w2 == w;
            }
          }
        }
        global[kPartition].check(hits == 1 && own, where(w, t % nb + 1) + " U" + std::to_string(i) + ": lies in " +
                                                      std::to_string(hits) + " fiber entries");
      });
    }
  }
  std::size_t count = 0;
  for (std::size_t w = 0; w < ws; ++w) {
    if (!sample[w].simple) continue;
    count += sigma[w].size();
    global[kCounting].check(sigma[w].size() == sample[w].end_dim,
                            "W" + std::to_string(w) + ": |Sigma^-1(W)| differs from dim End(W)");
  }
  const std::size_t oracle = p_regular_class_count(*g, p);
  global[kCounting].check(count == oracle, "total " + std::to_string(count) + " vs p-regular classes " +
                                               std::to_string(oracle));

  for (const auto& tl : local) {
    for (std::size_t c = 0; c < kClauseCount; ++c) total[c].merge(tl[c]);
  }
  for (const auto& tl : chain_tallies) {
    for (std::size_t c = 0; c < kClauseCount; ++c) total[c].merge(tl[c]);
  }
  for (std::size_t c = 0; c < kClauseCount; ++c) total[c].merge(global[c]);

  for (std::size_t c = 0; c < kClauseCount; ++c) {
    report.clauses.push_back({kClauseNames[c], kClauseText[c], total[c].checks, total[c].failures, total[c].notes});
  }
  return report;
}

}  // namespace modclass
