#pragma once

// Test-side oracles. Deliberately independent of the library's linear algebra:
// plain Gaussian elimination and brute-force polynomial arithmetic.

#include <cstdint>
#include <vector>

#include "modclass/finite_field.hpp"
#include "modclass/matrix.hpp"
#include "modclass/perm_group.hpp"
#include "modclass/rep.hpp"

namespace oracle {

using modclass::Elem;
using modclass::FieldPtr;

inline std::size_t rank(const FieldPtr& field, std::vector<std::vector<Elem>> rows) {
  const auto& f = *field;
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    const Elem inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Elem k = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(k, rows[r][j]));
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const modclass::Matrix& m) {
  std::vector<std::vector<Elem>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
  return rank(m.field(), rows);
}

inline modclass::Matrix mul(const modclass::Matrix& a, const modclass::Matrix& b) {
  const auto& f = *a.field();
  modclass::Matrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Elem s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = f.add(s, f.mul(a(i, k), b(k, j)));
      c(i, j) = s;
    }
  return c;
}

/// dim Hom(a, b) from the full Kronecker system rho_a(g) M = M rho_b(g).
inline std::size_t hom_dim(const modclass::Rep& a, const modclass::Rep& b) {
  const auto& f = *a.field();
  const std::size_t da = a.dim(), db = b.dim();
  std::vector<std::vector<Elem>> eqs;
  for (std::size_t g = 0; g < a.generators().size(); ++g) {
    const auto& A = a.generator(g);
    const auto& B = b.generator(g);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < db; ++j) {
        // (A M)_{ij} - (M B)_{ij}, unknown M_{kl} at index k*db + l
        std::vector<Elem> row(da * db, 0);
        for (std::size_t k = 0; k < da; ++k) row[k * db + j] = f.add(row[k * db + j], A(i, k));
        for (std::size_t l = 0; l < db; ++l) row[i * db + l] = f.sub(row[i * db + l], B(l, j));
        eqs.push_back(std::move(row));
      }
  }
  if (eqs.empty()) return da * db;
  return da * db - rank(a.field(), eqs);
}

/// Companion matrix of a monic polynomial given constant-term first (without
/// the leading 1); acting on row vectors as multiplication by x.
inline modclass::Matrix companion(const FieldPtr& field, const std::vector<Elem>& low) {
  const auto& f = *field;
  const std::size_t n = low.size();
  modclass::Matrix m(field, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = 1;
  for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = f.neg(low[j]);
  return m;
}

/// Module of a one-generator group given by a single matrix.
inline modclass::Rep cyclic(const modclass::GroupPtr& g, const modclass::Matrix& m) {
  return modclass::Rep(g, m.field(), m.rows(), {m});
}

/// Brute-force product of packed elements: schoolbook polynomial product
/// reduced by the defining polynomial, over integers mod p.
inline Elem slow_mul(const modclass::FiniteField& f, Elem a, Elem b) {
  const std::uint32_t p = f.characteristic(), n = f.degree();
  auto ca = f.coeffs(a), cb = f.coeffs(b);
  std::vector<std::uint64_t> prod(2 * n, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % p;
  const auto& mp = f.min_poly();
  for (std::size_t d = 2 * n - 1; d >= n; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= n; ++i) prod[d - n + i] = (prod[d - n + i] + (p - c) * mp[i]) % p;
  }
  std::vector<std::uint32_t> out(prod.begin(), prod.begin() + n);
  return f.from_coeffs(out);
}

/// Is the monic polynomial (constant first) irreducible over GF(p)? Trial
/// division by every monic polynomial of degree <= n/2.
inline bool irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  const std::size_t n = poly.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint32_t> g(d + 1, 0);
      std::uint64_t r = idx;
      for (std::size_t i = 0; i < d; ++i) { g[i] = r % p; r /= p; }
      g[d] = 1;
      std::vector<std::uint64_t> rem(poly.begin(), poly.end());
      for (std::size_t k = n; k >= d; --k) {
        const std::uint64_t c = rem[k];
        if (c != 0)
          for (std::size_t i = 0; i <= d; ++i) rem[k - d + i] = (rem[k - d + i] + (p - c) * g[i]) % p;
        if (k == d) break;
      }
      bool zero = true;
      for (std::size_t i = 0; i < d; ++i) zero = zero && rem[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

/// Order of an element by repeated multiplication.
inline std::uint64_t mult_order(const modclass::FiniteField& f, Elem a) {
  std::uint64_t k = 1;
  for (Elem x = a; x != 1; x = f.mul(x, a)) ++k;
  return k;
}

}  // namespace oracle

#include "modclass/errors.hpp"
#include "modclass/random.hpp"

namespace oracle {

/// Every element of the span of `basis` (|K|^dim of them), for small spans.
template <typename F>
void for_each_combination(const std::vector<modclass::Matrix>& basis, F&& visit) {
  if (basis.empty()) return;
  const auto& field = basis.front().field();
  const std::uint64_t q = field->order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) total *= q;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    modclass::Matrix m(field, basis.front().rows(), basis.front().cols());
    std::uint64_t r = idx;
    for (const auto& b : basis) {
      m.add_scaled(b, static_cast<Elem>(r % q));
      r /= q;
    }
    visit(m);
  }
}

/// Brute force: does End(v) contain an idempotent other than 0 and 1?
inline bool has_nontrivial_idempotent(const std::vector<modclass::Matrix>& end_basis) {
  bool found = false;
  for_each_combination(end_basis, [&](const modclass::Matrix& e) {
    if (found || e.is_zero() || e.is_identity()) return;
    if (mul(e, e) == e) found = true;
  });
  return found;
}

/// Brute force: some invertible element in the span.
inline bool has_invertible(const std::vector<modclass::Matrix>& basis) {
  bool found = false;
  for_each_combination(basis, [&](const modclass::Matrix& m) {
    if (!found && m.rows() == m.cols() && oracle::rank(m) == m.rows()) found = true;
  });
  return found;
}

/// All one-dimensional modules of a group over a field, by trying every
/// assignment of nonzero scalars to the generators.
inline std::vector<modclass::Rep> linear_characters(const modclass::GroupPtr& g, const FieldPtr& k) {
  std::vector<modclass::Rep> out;
  const std::size_t n = g->generator_count();
  const std::uint64_t units = k->order() - 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= units;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<modclass::Matrix> gens;
    std::uint64_t r = idx;
    for (std::size_t i = 0; i < n; ++i) {
      modclass::Matrix m(k, 1, 1);
      m(0, 0) = static_cast<Elem>(1 + r % units);
      r /= units;
      gens.push_back(m);
    }
    modclass::Rep rep(g, k, 1, gens);
    try {
      rep.validate();
      out.push_back(rep);
    } catch (const modclass::MathError&) {
    }
  }
  return out;
}

inline modclass::Matrix random_invertible(const FieldPtr& k, std::size_t d, modclass::Rng& rng) {
  while (true) {
    modclass::Matrix m(k, d, d);
    for (auto& x : m.data()) x = static_cast<Elem>(rng.below(k->order()));
    if (oracle::rank(m) == d) return m;
  }
}

/// Direct sum of one or two inductions of random linear characters of random
/// cyclic subgroups, in a random basis.
inline modclass::Rep random_module(const modclass::GroupPtr& g, const FieldPtr& k, modclass::Rng& rng,
                                   std::size_t max_dim = 16) {
  using namespace modclass;
  while (true) {
    std::optional<Rep> acc;
    const int parts = 1 + static_cast<int>(rng.below(2));
    for (int i = 0; i < parts; ++i) {
      const int x = static_cast<int>(rng.below(g->order()));
      const Subgroup h = Subgroup::generated_by(g, {x});
      const auto chars = linear_characters(h.as_group(), k);
      const Rep ind = induce(chars[rng.below(chars.size())], h);
      acc = acc ? direct_sum(*acc, ind) : ind;
    }
    if (acc->dim() > max_dim) continue;
    return change_basis(*acc, random_invertible(k, acc->dim(), rng));
  }
}

}  // namespace oracle
