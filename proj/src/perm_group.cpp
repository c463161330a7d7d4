#include "modclass/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>

#include "modclass/errors.hpp"
#include "modclass/finite_field.hpp"
#include "modclass/limits.hpp"

namespace modclass {

namespace {

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

bool is_p_power(std::size_t n, std::uint32_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

// Closure of a set of elements under the parent's multiplication.
std::vector<int> closure(const PermGroup& g, const std::vector<int>& gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<int> result{PermGroup::identity()};
  seen[0] = true;
  for (std::size_t i = 0; i < result.size(); ++i) {
    for (int s : gens) {
      const int x = g.mul(result[i], s);
      if (!seen[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = true;
        result.push_back(x);
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<int> conjugate_set(const PermGroup& g, const std::vector<int>& s, int x) {
  std::vector<int> r;
  r.reserve(s.size());
  for (int e : s) r.push_back(g.conj(e, x));
  std::sort(r.begin(), r.end());
  return r;
}

// Least conjugate (as a sorted element list) of a subgroup.
std::vector<int> canonical_conjugate(const PermGroup& g, const std::vector<int>& s) {
  std::vector<int> best = s;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    auto c = conjugate_set(g, s, x);
    if (c < best) best = std::move(c);
  }
  return best;
}

}  // namespace

GroupPtr PermGroup::from_generators(std::size_t degree, std::vector<Perm> generators) {
  if (degree == 0) throw MathError("group degree must be positive");
  for (const auto& gen : generators) {
    if (gen.size() != degree) throw MathError("generator has wrong length");
    std::vector<bool> hit(degree, false);
    for (auto image : gen) {
      if (image >= degree || hit[image]) throw MathError("generator is not a bijection");
      hit[image] = true;
    }
  }
  auto g = std::shared_ptr<PermGroup>(new PermGroup());
  g->degree_ = degree;
  g->generators_ = std::move(generators);

  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> found{id};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    Perm x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : g->generators_) {
      Perm y = compose(x, s);
      if (found.insert(y).second) {
        if (found.size() > limits().max_group_order) {
          throw MathError("group order exceeds the cap of " + std::to_string(limits().max_group_order));
        }
        queue.push_back(std::move(y));
      }
    }
  }
  g->elements_.assign(found.begin(), found.end());
  for (std::size_t i = 0; i < g->elements_.size(); ++i) g->index_[g->elements_[i]] = static_cast<int>(i);

  const std::size_t n = g->elements_.size();
  g->table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      g->table_[a * n + b] = g->index_.at(compose(g->elements_[a], g->elements_[b]));
    }
  }
  g->inverses_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g->table_[a * n + b] == 0) {
        g->inverses_[a] = static_cast<int>(b);
        break;
      }
    }
  }
  for (const auto& s : g->generators_) g->generator_elements_.push_back(g->index_.at(s));

  g->steps_.assign(n, Step{-1, -1});
  std::vector<bool> seen(n, false);
  seen[0] = true;
  g->bfs_.push_back(0);
  for (std::size_t i = 0; i < g->bfs_.size(); ++i) {
    const int x = g->bfs_[i];
    for (std::size_t k = 0; k < g->generators_.size(); ++k) {
      const int y = g->mul(x, g->generator_elements_[k]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        g->steps_[static_cast<std::size_t>(y)] = Step{x, static_cast<int>(k)};
        g->bfs_.push_back(y);
      }
    }
  }
  return g;
}

GroupPtr group_from_generators(std::size_t degree, const std::vector<Perm>& generators) {
  return PermGroup::from_generators(degree, generators);
}

int PermGroup::index_of(const Perm& perm) const {
  auto it = index_.find(perm);
  return it == index_.end() ? -1 : it->second;
}

int PermGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

// ---- Subgroup ----

Subgroup::Subgroup(GroupPtr parent, std::vector<int> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  const auto& g = *parent_;
  member_.assign(g.order(), false);
  for (int e : elements_) member_[static_cast<std::size_t>(e)] = true;
  if (elements_.empty() || elements_.front() != 0) throw MathError("subgroup must contain the identity");
  for (int a : elements_) {
    for (int b : elements_) {
      if (!contains(g.mul(a, b))) throw MathError("element set is not closed under products");
    }
  }
  if (g.order() % elements_.size() != 0) throw ConsistencyError("Lagrange violated");

  std::vector<int> span{0};
  for (int e : elements_) {
    if (std::binary_search(span.begin(), span.end(), e)) continue;
    generators_.push_back(e);
    span = closure(g, generators_);
  }
  std::vector<Perm> perms;
  for (int e : generators_) perms.push_back(g.element(e));
  group_ = PermGroup::from_generators(g.degree(), perms);
  to_parent_.resize(group_->order());
  from_parent_.assign(g.order(), -1);
  for (int i = 0; i < static_cast<int>(group_->order()); ++i) {
    const int pi = g.index_of(group_->element(i));
    to_parent_[static_cast<std::size_t>(i)] = pi;
    from_parent_[static_cast<std::size_t>(pi)] = i;
  }
}

Subgroup Subgroup::generated_by(GroupPtr parent, const std::vector<int>& gens) {
  auto elems = closure(*parent, gens);
  return {std::move(parent), std::move(elems)};
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<int> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return {std::move(parent), std::move(all)};
}

Subgroup Subgroup::trivial(GroupPtr parent) { return {std::move(parent), {0}}; }

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(), [&](int e) { return other.contains(e); });
}

Subgroup Subgroup::conjugate(int g) const { return {parent_, conjugate_set(*parent_, elements_, g)}; }

// ---- classes and subgroups ----

std::vector<std::vector<int>> conjugacy_classes(const PermGroup& g) {
  std::vector<int> class_of(g.order(), -1);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (class_of[static_cast<std::size_t>(x)] >= 0) continue;
    std::set<int> cls;
    for (int h = 0; h < static_cast<int>(g.order()); ++h) cls.insert(g.conj(x, h));
    for (int y : cls) class_of[static_cast<std::size_t>(y)] = static_cast<int>(classes.size());
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

std::size_t p_regular_class_count(const PermGroup& g, std::uint32_t p) {
  std::size_t count = 0;
  for (const auto& cls : conjugacy_classes(g)) {
    if (g.element_order(cls.front()) % static_cast<int>(p) != 0) ++count;
  }
  return count;
}

std::vector<Subgroup> p_subgroups_up_to_conjugacy(const GroupPtr& g, std::uint32_t p) {
  if (!is_prime(p)) throw MathError("p must be prime");
  std::set<std::vector<int>> keys;
  std::vector<std::vector<int>> reps{{0}};
  keys.insert({0});
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto current = reps[i];
    std::vector<bool> in_current(g->order(), false);
    for (int e : current) in_current[static_cast<std::size_t>(e)] = true;
    for (int x = 1; x < static_cast<int>(g->order()); ++x) {
      if (in_current[static_cast<std::size_t>(x)]) continue;
      if (!is_p_power(static_cast<std::size_t>(g->element_order(x)), p)) continue;
      const auto conj = conjugate_set(*g, current, x);
      if (conj != current) continue;  // x must normalize the current subgroup
      auto gens = current;
      gens.push_back(x);
      auto bigger = closure(*g, gens);
      auto key = canonical_conjugate(*g, bigger);
      if (keys.insert(key).second) reps.push_back(std::move(key));
    }
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> result;
  result.reserve(reps.size());
  for (auto& r : reps) result.emplace_back(g, std::move(r));
  return result;
}

Subgroup normalizer(const Subgroup& q) {
  const auto& g = *q.parent();
  std::vector<int> elems;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (conjugate_set(g, q.elements(), x) == q.elements()) elems.push_back(x);
  }
  return {q.parent(), std::move(elems)};
}

bool are_conjugate(const Subgroup& a, const Subgroup& b) {
  if (!same_group(a.parent(), b.parent())) throw MathError("subgroups of different groups");
  if (a.order() != b.order()) return false;
  const auto& g = *a.parent();
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (conjugate_set(g, a.elements(), x) == b.elements()) return true;
  }
  return false;
}

bool conjugate_into(const Subgroup& a, const Subgroup& b) {
  if (!same_group(a.parent(), b.parent())) throw MathError("subgroups of different groups");
  if (b.order() % a.order() != 0) return false;
  const auto& g = *a.parent();
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    bool inside = true;
    for (int e : a.elements()) {
      if (!b.contains(g.conj(e, x))) {
        inside = false;
        break;
      }
    }
    if (inside) return true;
  }
  return false;
}

Transversal right_transversal(const Subgroup& q) {
  const auto& g = *q.parent();
  Transversal t;
  t.coset_of.assign(g.order(), -1);
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (t.coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    const int idx = static_cast<int>(t.reps.size());
    t.reps.push_back(x);
    for (int h : q.elements()) t.coset_of[static_cast<std::size_t>(g.mul(h, x))] = idx;
  }
  return t;
}

// ---- catalog ----

namespace {

// 1-based cycle notation helper for the catalog.
Perm from_images(std::initializer_list<int> images) {
  Perm p;
  for (int i : images) p.push_back(static_cast<std::uint16_t>(i - 1));
  return p;
}

}  // namespace

std::vector<std::string> catalog_names() { return {"A4", "C2", "C3", "C7", "D8", "Q8", "S3", "S4", "V4"}; }

namespace {

GroupPtr build_catalog_group(const std::string& name) {
  if (name == "C2") return group_from_generators(2, {from_images({2, 1})});
  if (name == "C3") return group_from_generators(3, {from_images({2, 3, 1})});
  if (name == "C7") return group_from_generators(7, {from_images({2, 3, 4, 5, 6, 7, 1})});
  if (name == "S3") return group_from_generators(3, {from_images({2, 1, 3}), from_images({2, 3, 1})});
  if (name == "A4") return group_from_generators(4, {from_images({2, 3, 1, 4}), from_images({1, 3, 4, 2})});
  if (name == "V4") return group_from_generators(4, {from_images({2, 1, 4, 3}), from_images({3, 4, 1, 2})});
  if (name == "D8") return group_from_generators(4, {from_images({2, 3, 4, 1}), from_images({3, 2, 1, 4})});
  if (name == "S4") return group_from_generators(4, {from_images({2, 1, 3, 4}), from_images({2, 3, 4, 1})});
  if (name == "Q8") {
    // right regular action on 1,-1,i,-i,j,-j,k,-k
    return group_from_generators(8, {from_images({3, 4, 2, 1, 8, 7, 5, 6}),
                                     from_images({5, 6, 7, 8, 2, 1, 4, 3})});
  }
  throw MathError("unknown catalog group '" + name + "'");
}

}  // namespace

GroupPtr catalog_group(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, GroupPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
  }
  GroupPtr g = build_catalog_group(name);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(name, std::move(g)).first->second;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  return a && b && a->degree() == b->degree() && a->generators() == b->generators();
}

}  // namespace modclass
