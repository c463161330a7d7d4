#pragma once

// MeatAxe-style module analysis: simplicity, chopping, endomorphism rings,
// Krull-Schmidt decomposition, isomorphism testing and the simple modules of
// a group algebra.
//
// Every randomized routine takes an explicit seed. Answers never depend on
// the seed; when the attempt budget runs out an InconclusiveError is thrown
// instead of guessing.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modclass/matrix.hpp"
#include "modclass/polynomial.hpp"
#include "modclass/rep.hpp"

namespace modclass {

class EchelonBasis;

struct SimplicityResult {
  bool simple = false;
  /// Basis of a proper nonzero submodule when not simple.
  std::optional<Matrix> submodule;
};

SimplicityResult test_simple(const Rep& v, std::uint64_t seed = 0);
bool is_simple(const Rep& v, std::uint64_t seed = 0);

/// Composition factors in the order a chop finds them.
std::vector<Rep> composition_factors(const Rep& v, std::uint64_t seed = 0);

/// Structure of End(V).
struct EndAnalysis {
  HomSpace end;
  bool local = false;
  /// Local case: basis of the Jacobson radical, and dim End/rad.
  std::vector<Matrix> radical;
  std::size_t residue_degree = 0;
  /// Non-local case: an endomorphism whose characteristic polynomial has at
  /// least two distinct irreducible factors, with that factorization.
  std::optional<Matrix> splitter;
  std::vector<std::pair<Poly, int>> splitter_factors;

  /// Membership of an endomorphism in the radical (local case only).
  bool in_radical(const Matrix& m) const;
  std::shared_ptr<const EchelonBasis> radical_span;
};

EndAnalysis analyze_endomorphisms(const Rep& v, std::uint64_t seed = 0);

bool is_indecomposable(const Rep& v, std::uint64_t seed = 0);
bool is_absolutely_simple(const Rep& v, std::uint64_t seed = 0);
bool is_absolutely_indecomposable(const Rep& v, std::uint64_t seed = 0);
std::size_t end_degree(const Rep& v);
/// dim End/rad End for indecomposable V.
std::size_t residue_degree(const Rep& v, std::uint64_t seed = 0);

struct IsomorphismResult {
  bool isomorphic = false;
  /// Invertible M with rho_a(g) M = M rho_b(g).
  std::optional<Matrix> intertwiner;
};

IsomorphismResult test_isomorphic(const Rep& a, const Rep& b, std::uint64_t seed = 0);
bool is_isomorphic(const Rep& a, const Rep& b, std::uint64_t seed = 0);

/// Is the indecomposable `u` isomorphic to a direct summand of `v`?
bool is_component(const Rep& u, const Rep& v, std::uint64_t seed = 0);

struct Summand {
  Rep module;
  std::size_t multiplicity = 1;
};

struct Decomposition {
  /// Pairwise non-isomorphic indecomposables in canonical order.
  std::vector<Summand> summands;
  /// Rows are the new basis: all copies of summand 0, then summand 1, ...
  /// basis_change * rho(g) * basis_change^-1 is block diagonal with the
  /// summand matrices on the diagonal.
  Matrix basis_change;

  std::size_t component_count() const;
};

Decomposition decompose(const Rep& v, std::uint64_t seed = 0);

/// Canonical representative of the isomorphism class of an indecomposable:
/// equal for isomorphic inputs whenever `exact` is true.
struct CanonicalForm {
  Rep module;
  Matrix basis;   // module == change_basis(input, basis)
  bool exact = false;
  std::string digest;   // isomorphism invariants, used for ordering
};

CanonicalForm canonical_form(const Rep& v, std::uint64_t seed = 0);

/// Ordering used for summands and simple modules: dim, End dimension, then
/// the canonical matrices.
bool canonical_less(const CanonicalForm& a, std::size_t end_a, const CanonicalForm& b,
                    std::size_t end_b);

struct SimpleSet {
  GroupPtr group;
  FieldPtr field;
  std::vector<Rep> modules;
  std::vector<std::size_t> end_degrees;
};

SimpleSet simple_modules(const GroupPtr& g, const FieldPtr& k, std::uint64_t seed = 0);

/// Index of the member isomorphic to the simple module `w`; throws if none.
std::size_t find_simple(const SimpleSet& set, const Rep& w, std::uint64_t seed = 0);

}  // namespace modclass
