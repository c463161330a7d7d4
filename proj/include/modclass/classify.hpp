#pragma once

// Indecomposable modules over the algebraic closure of GF(p), represented by
// pairs (K, V) with K = GF(p^n) and V absolutely indecomposable over K, and
// their relation to indecomposables over the prime field:
//
//   (K, V) up (L, U)  iff  K <= L and U | V (x)_K L
//
// Gamma sends an absolutely indecomposable (K, V) to the unique W over GF(p)
// with (GF(p), W) up (K, V); Sigma is its restriction to absolutely simple
// modules. The fiber sizes of Sigma over the simple FG-modules add up to the
// number of absolutely simple modules.

#include <cstdint>
#include <string>
#include <vector>

#include "modclass/finite_field.hpp"
#include "modclass/perm_group.hpp"
#include "modclass/rep.hpp"

namespace modclass {

struct ClassifiedModule {
  FieldPtr field;
  Rep module;
  bool absolutely_simple = false;
  bool absolutely_indecomposable = false;
};

/// Computes the flags; throws MathError for decomposable or zero modules.
ClassifiedModule classify_module(const Rep& v, std::uint64_t seed = 0);

struct FiberEntry {
  ClassifiedModule entry;
  /// Entries sharing a field and an orbit index are Frobenius twists of each other.
  std::size_t galois_orbit_index = 0;
  /// Multiplicity of entry.module in W (x) K.
  std::size_t multiplicity = 1;
};

/// (K, V) up (L, U) for indecomposable V over K and U over L. Decided both as
/// "U | V (x) L" and as "V | Res_K^L(U)"; disagreement is a ConsistencyError.
bool up_relation(const Rep& v, const Rep& u, std::uint64_t seed = 0);

struct UpDirections {
  bool subfield = false;
  bool extension = false;    // U | V (x)_K L
  bool restriction = false;  // V | Res_K^L(U)
};
/// Both directions of the relation, without the agreement check.
UpDirections up_directions(const Rep& v, const Rep& u, std::uint64_t seed = 0);

/// Components of W (x) GF(p^n) for n = 1..degree_bound, grouped into Galois
/// orbits. Each field contributes exactly one orbit.
std::vector<FiberEntry> fiber(const Rep& w, std::uint32_t degree_bound, std::uint64_t seed = 0);

/// The component `index` (in decomposition order) of W (x) GF(p^n), realized
/// over the smallest subfield it is defined over.
ClassifiedModule descend_component(const Rep& w, std::uint32_t n, std::size_t index, std::uint64_t seed = 0);

/// The unique W over the prime field with Res(V) = sW.
Rep gamma_of(const ClassifiedModule& y, std::uint64_t seed = 0);
/// gamma_of for absolutely simple input; the result is simple.
Rep sigma_of(const ClassifiedModule& x, std::uint64_t seed = 0);

/// The components of W (x) GF(p^m), m = dim End(W): m absolutely simple
/// modules forming one Galois orbit.
std::vector<ClassifiedModule> sigma_fiber(const Rep& w, std::uint64_t seed = 0);

/// One representative per isomorphism type of the components of W (x) GF(p^m),
/// m = dim End(W)/rad, moving to multiples of m if needed (up to degree_bound).
std::vector<ClassifiedModule> gamma_fiber(const Rep& w, std::uint32_t degree_bound = 6, std::uint64_t seed = 0);

struct ReportRow {
  std::size_t dim = 0;
  std::size_t end_degree = 0;
  std::size_t fiber_size = 0;
  std::uint32_t splitting_degree = 0;
};

struct ClassificationReport {
  GroupPtr group;
  std::uint32_t p = 0;
  std::vector<ReportRow> rows;
  std::size_t total = 0;
  std::size_t oracle = 0;
  bool agree = false;
};

ClassificationReport count_absolutely_simple(const GroupPtr& g, std::uint32_t p, std::uint64_t seed = 0);

struct ClauseResult {
  std::string name;
  std::string description;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;   // first few failure messages
  bool passed() const { return failures == 0; }
};

struct VerificationReport {
  GroupPtr group;
  std::uint32_t p = 0;
  std::uint32_t degree_bound = 0;
  std::size_t sample_size = 0;
  std::vector<ClauseResult> clauses;
  bool passed() const;
};

/// Batch check of the classification statements on the simple modules and
/// the projective indecomposables of GF(p)G, over GF(p^n) for n <= degree_bound.
/// Failures are reported, never thrown.
VerificationReport verify_classification(const GroupPtr& g, std::uint32_t p, std::uint32_t degree_bound,
                                         std::uint64_t seed = 0);

}  // namespace modclass
