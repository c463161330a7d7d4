#pragma once

// Finite groups as permutation groups, enumerated exhaustively.
//
// Permutations are 0-based image vectors; products compose left to right:
// (a * b)(i) = b(a(i)). Elements are stored in lexicographic order of their
// image vectors, so the identity is element 0.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace modclass {

using Perm = std::vector<std::uint16_t>;

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

/// Same degree and the same generator list (hence the same element order).
bool same_group(const GroupPtr& a, const GroupPtr& b);

class PermGroup {
 public:
  /// Closure of `generators` (0-based image vectors on `degree` points).
  static GroupPtr from_generators(std::size_t degree, std::vector<Perm> generators);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  /// Element index of generator k.
  int generator_element(std::size_t k) const { return generator_elements_[k]; }

  const Perm& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  int index_of(const Perm& perm) const;
  static constexpr int identity() { return 0; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order() + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inverses_[static_cast<std::size_t>(a)]; }
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }
  int element_order(int a) const;

  /// element(i) == element(parent) * generator(gen), along a breadth-first
  /// spanning tree rooted at the identity. Identity has parent -1.
  struct Step {
    int parent;
    int gen;
  };
  const std::vector<Step>& factorization() const { return steps_; }
  /// Elements in breadth-first order (parents before children).
  const std::vector<int>& bfs_order() const { return bfs_; }

 private:
  PermGroup() = default;
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<int> generator_elements_;
  std::vector<Perm> elements_;
  std::map<Perm, int> index_;
  std::vector<int> table_;
  std::vector<int> inverses_;
  std::vector<Step> steps_;
  std::vector<int> bfs_;
};

/// Subgroup of a parent group, held as a sorted list of parent element indices.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<int> elements);
  /// Subgroup generated by the given parent elements.
  static Subgroup generated_by(GroupPtr parent, const std::vector<int>& gens);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(int parent_element) const { return member_[static_cast<std::size_t>(parent_element)]; }
  bool is_subgroup_of(const Subgroup& other) const;

  /// Greedy generating set: scan elements in order, keep those not yet generated.
  const std::vector<int>& generators() const { return generators_; }
  /// This subgroup as a group in its own right (same degree).
  const GroupPtr& as_group() const { return group_; }
  /// Parent index of each element of as_group().
  int to_parent(int own_element) const { return to_parent_[static_cast<std::size_t>(own_element)]; }
  /// Own index of a parent element, -1 if outside.
  int from_parent(int parent_element) const { return from_parent_[static_cast<std::size_t>(parent_element)]; }

  /// The conjugate g^-1 S g.
  Subgroup conjugate(int g) const;

  bool operator==(const Subgroup& o) const { return same_group(parent_, o.parent_) && elements_ == o.elements_; }

 private:
  GroupPtr parent_;
  std::vector<int> elements_;
  std::vector<bool> member_;
  std::vector<int> generators_;
  GroupPtr group_;
  std::vector<int> to_parent_;
  std::vector<int> from_parent_;
};

GroupPtr group_from_generators(std::size_t degree, const std::vector<Perm>& generators);

/// Partition of the elements into classes; the identity's class is first,
/// classes ordered by their least element.
std::vector<std::vector<int>> conjugacy_classes(const PermGroup& g);

std::size_t p_regular_class_count(const PermGroup& g, std::uint32_t p);

/// One representative per conjugacy class of p-subgroups (trivial subgroup
/// included), sorted by order. Each representative is the conjugate with the
/// lexicographically least element list.
std::vector<Subgroup> p_subgroups_up_to_conjugacy(const GroupPtr& g, std::uint32_t p);

Subgroup normalizer(const Subgroup& q);

bool are_conjugate(const Subgroup& a, const Subgroup& b);
/// Is some conjugate of a contained in b?
bool conjugate_into(const Subgroup& a, const Subgroup& b);

/// Right cosets Q t, identity first, representatives in element order.
struct Transversal {
  std::vector<int> reps;
  std::vector<int> coset_of;   // parent element -> index into reps
};
Transversal right_transversal(const Subgroup& q);

/// Built-in groups by name (S3, C2, C3, C7, A4, D8, Q8, V4, S4), built once
/// per process. Throws on unknown names.
GroupPtr catalog_group(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace modclass
