#include "modclass/polynomial.hpp"

#include <algorithm>

#include "modclass/errors.hpp"

namespace modclass {

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(FieldPtr field, Elem c) { return {std::move(field), {c}}; }

Poly Poly::x(FieldPtr field) { return {std::move(field), {0, 1}}; }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Elem> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_->add((*this)[i], o[i]);
  return {field_, std::move(c)};
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Elem> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_->sub((*this)[i], o[i]);
  return {field_, std::move(c)};
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return {field_, {}};
  std::vector<Elem> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::span<Elem> dst(c.data() + i, o.coeffs_.size());
    field_->axpy(dst, coeffs_[i], o.coeffs_);
  }
  return {field_, std::move(c)};
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
  if (o.is_zero()) throw MathError("polynomial division by zero");
  const auto& f = *field_;
  std::vector<Elem> r = coeffs_;
  const std::size_t dd = o.coeffs_.size() - 1;
  if (r.size() <= dd) return {Poly(field_, {}), *this};
  std::vector<Elem> q(r.size() - dd, 0);
  const Elem inv_lead = f.inv(o.lead());
  for (std::size_t k = r.size(); k-- > dd;) {
    const Elem c = f.mul(r[k], inv_lead);
    q[k - dd] = c;
    if (c == 0) continue;
    std::span<Elem> dst(r.data() + (k - dd), dd + 1);
    f.axpy(dst, f.neg(c), o.coeffs_);
  }
  r.resize(dd);
  return {Poly(field_, std::move(q)), Poly(field_, std::move(r))};
}

Poly Poly::operator%(const Poly& o) const { return divmod(o).second; }
Poly Poly::operator/(const Poly& o) const { return divmod(o).first; }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  std::vector<Elem> c = coeffs_;
  field_->scale(c, field_->inv(lead()));
  return {field_, std::move(c)};
}

Poly Poly::derivative() const {
  std::vector<Elem> c;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    c.push_back(field_->mul(field_->from_int(static_cast<std::int64_t>(i)), coeffs_[i]));
  }
  return {field_, std::move(c)};
}

Elem Poly::eval(Elem x) const {
  Elem acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), coeffs_[i]);
  return acc;
}

bool Poly::operator<(const Poly& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
  return std::lexicographical_compare(coeffs_.rbegin(), coeffs_.rend(), o.coeffs_.rbegin(),
                                      o.coeffs_.rend());
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(Poly base, std::uint64_t e, const Poly& mod) {
  Poly result = Poly::constant(mod.field(), 1) % mod;
  base = base % mod;
  while (e != 0) {
    if (e & 1U) result = (result * base) % mod;
    base = (base * base) % mod;
    e >>= 1U;
  }
  return result;
}

namespace {

// p-th root of a polynomial whose exponents are all multiples of p.
Poly pth_root(const Poly& f) {
  const auto& k = *f.field();
  const std::uint32_t p = k.characteristic();
  std::vector<Elem> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) {
    c.push_back(k.frobenius(f.coeffs()[i], k.degree() - 1));
  }
  return {f.field(), std::move(c)};
}

void squarefree(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
  const Poly one = Poly::constant(f.field(), 1);
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  int i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (!fac.is_one()) out.emplace_back(fac.monic(), i * mult);
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) {
    squarefree(pth_root(c.monic()), mult * static_cast<int>(f.field()->characteristic()), out);
  }
}

// Splits a squarefree product of irreducibles all of degree d.
void equal_degree(const Poly& g, int d, Rng& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const auto& k = *g.field();
  const std::uint64_t q = k.order();
  for (;;) {
    std::vector<Elem> rc(static_cast<std::size_t>(g.degree()));
    for (auto& v : rc) v = static_cast<Elem>(rng.below(q));
    Poly a(g.field(), std::move(rc));
    if (a.degree() < 1) continue;
    Poly b;
    if (q % 2 == 1) {
      // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
      Poly norm = Poly::constant(g.field(), 1);
      Poly frob = a;
      for (int i = 0; i < d; ++i) {
        norm = (norm * frob) % g;
        frob = powmod(frob, q, g);
      }
      b = powmod(norm, (q - 1) / 2, g) - Poly::constant(g.field(), 1);
    } else {
      // absolute trace to GF(2)
      const std::uint64_t steps = static_cast<std::uint64_t>(k.degree()) * static_cast<std::uint64_t>(d);
      Poly term = a % g;
      b = term;
      for (std::uint64_t i = 1; i < steps; ++i) {
        term = (term * term) % g;
        b = b + term;
      }
    }
    Poly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& f, Rng& rng) {
  if (f.is_zero()) throw MathError("cannot factor the zero polynomial");
  std::vector<std::pair<Poly, int>> result;
  if (f.degree() == 0) return result;
  std::vector<std::pair<Poly, int>> sqf;
  squarefree(f.monic(), 1, sqf);
  const std::uint64_t q = f.field()->order();
  for (const auto& [part, mult] : sqf) {
    Poly rest = part;
    Poly h = Poly::x(f.field());
    const Poly x = Poly::x(f.field());
    for (int d = 1; 2 * d <= rest.degree(); ++d) {
      h = powmod(h, q, rest);
      Poly g = gcd(rest, h - x);
      if (!g.is_one()) {
        std::vector<Poly> pieces;
        equal_degree(g, d, rng, pieces);
        for (auto& piece : pieces) result.emplace_back(std::move(piece), mult);
        rest = rest / g;
        h = h % rest;
      }
    }
    if (rest.degree() > 0) result.emplace_back(rest.monic(), mult);
  }
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return a.first < b.first;
  });
  // merge equal factors produced by different squarefree layers
  std::vector<std::pair<Poly, int>> merged;
  for (auto& entry : result) {
    if (!merged.empty() && merged.back().first == entry.first) {
      merged.back().second += entry.second;
    } else {
      merged.push_back(std::move(entry));
    }
  }
  return merged;
}

Matrix evaluate(const Poly& f, const Matrix& m) {
  if (!m.square()) throw MathError("polynomial of a non-square matrix");
  Matrix acc(m.field(), m.rows(), m.cols());
  const auto& k = *m.field();
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = acc * m;
    for (std::size_t d = 0; d < m.rows(); ++d) acc(d, d) = k.add(acc(d, d), f.coeffs()[i]);
  }
  return acc;
}

Poly charpoly(const Matrix& m) {
  if (!m.square()) throw MathError("characteristic polynomial of a non-square matrix");
  const auto& k = *m.field();
  const std::size_t n = m.rows();
  Poly result = Poly::constant(m.field(), 1);

  // Basis of the invariant subspace found so far (semi-echelon).
  std::vector<std::vector<Elem>> basis;
  std::vector<std::size_t> pivots;
  auto reduce_fixed = [&](std::vector<Elem>& v) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Elem c = v[pivots[i]];
      if (c != 0) k.axpy(v, k.neg(c), basis[i]);
    }
  };

  for (std::size_t seed = 0; seed < n && basis.size() < n; ++seed) {
    std::vector<Elem> v(n, 0);
    v[seed] = 1;
    reduce_fixed(v);
    if (std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; })) continue;

    // Chain vectors u_j with u_j = t_j(M) applied to the seed, modulo the span.
    std::vector<std::vector<Elem>> chain;
    std::vector<std::size_t> chain_piv;
    std::vector<std::vector<Elem>> tags;  // polynomial coefficients of each chain vector
    std::vector<Elem> cur = v;
    std::vector<Elem> tag{1};
    for (;;) {
      // reduce cur against chain (tracking) — fixed part already reduced
      for (std::size_t j = 0; j < chain.size(); ++j) {
        const Elem c = cur[chain_piv[j]];
        if (c == 0) continue;
        const Elem nc = k.neg(c);
        k.axpy(cur, nc, chain[j]);
        if (tag.size() < tags[j].size()) tag.resize(tags[j].size(), 0);
        k.axpy(std::span<Elem>(tag.data(), tags[j].size()), nc, tags[j]);
      }
      std::size_t piv = 0;
      while (piv < n && cur[piv] == 0) ++piv;
      if (piv == n) {
        result = result * Poly(m.field(), tag).monic();
        break;
      }
      const Elem inv = k.inv(cur[piv]);
      k.scale(cur, inv);
      k.scale(tag, inv);
      chain.push_back(cur);
      chain_piv.push_back(piv);
      tags.push_back(tag);
      // next: x * tag, cur * M, reduced against the fixed part
      std::vector<Elem> next = m.apply(cur);
      reduce_fixed(next);
      std::vector<Elem> next_tag(tag.size() + 1, 0);
      std::copy(tag.begin(), tag.end(), next_tag.begin() + 1);
      cur = std::move(next);
      tag = std::move(next_tag);
    }
    for (std::size_t j = 0; j < chain.size(); ++j) {
      basis.push_back(std::move(chain[j]));
      pivots.push_back(chain_piv[j]);
    }
    // keep the fixed basis semi-echelon: later rows are reduced against earlier ones
    for (std::size_t i = basis.size() - chain.size(); i < basis.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const Elem c = basis[i][pivots[j]];
        if (c != 0) k.axpy(basis[i], k.neg(c), basis[j]);
      }
    }
  }
  return result;
}

}  // namespace modclass
