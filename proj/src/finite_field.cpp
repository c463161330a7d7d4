#include "modclass/finite_field.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "modclass/errors.hpp"
#include "modclass/limits.hpp"

namespace modclass {

Limits& limits() {
  static Limits instance;
  return instance;
}

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

namespace {

using Digits = std::vector<std::uint32_t>;

std::uint32_t pack(const Digits& digits, std::uint32_t p) {
  std::uint32_t value = 0;
  for (std::size_t i = digits.size(); i-- > 0;) value = value * p + digits[i];
  return value;
}

Digits unpack(std::uint32_t value, std::uint32_t p, std::uint32_t n) {
  Digits digits(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    digits[i] = value % p;
    value /= p;
  }
  return digits;
}

// Remainder of `a` modulo the monic polynomial `m` (both constant-first, mod p).
Digits poly_mod(Digits a, const Digits& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t k = a.size(); k-- > dm;) {
    const std::uint32_t c = a[k] % p;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[k - dm + i] = (a[k - dm + i] + (p - c) * m[i]) % p;
    }
  }
  a.resize(std::min(a.size(), dm));
  return a;
}

bool is_zero_poly(const Digits& a) {
  for (auto c : a) {
    if (c != 0) return false;
  }
  return true;
}

// Irreducibility by trial division against every monic polynomial of degree
// 1..n/2.
bool irreducible_by_trial_division(const Digits& f, std::uint32_t p) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t k = 1; 2 * k <= n; ++k) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Digits g = unpack(static_cast<std::uint32_t>(v), p, k);
      g.push_back(1);
      if (is_zero_poly(poly_mod(f, g, p))) return false;
    }
  }
  return true;
}

Digits least_irreducible(std::uint32_t p, std::uint32_t n, std::uint32_t q) {
  for (std::uint32_t v = 0; v < q; ++v) {
    Digits f = unpack(v, p, n);
    f.push_back(1);
    if (irreducible_by_trial_division(f, p)) return f;
  }
  throw ConsistencyError("no irreducible polynomial found");
}

// Slow arithmetic on packed elements, used only while the tables are built.
class SlowArith {
 public:
  SlowArith(std::uint32_t p, std::uint32_t n, Digits min_poly)
      : p_(p), n_(n), min_poly_(std::move(min_poly)) {}

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const Digits da = unpack(a, p_, n_);
    const Digits db = unpack(b, p_, n_);
    Digits prod(2 * n_ - 1, 0);
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (da[i] == 0) continue;
      for (std::uint32_t j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    return pack(poly_mod(std::move(prod), min_poly_, p_), p_);
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1;
    while (e != 0) {
      if (e & 1U) result = mul(result, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return result;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    Digits da = unpack(a, p_, n_);
    const Digits db = unpack(b, p_, n_);
    for (std::uint32_t i = 0; i < n_; ++i) da[i] = (da[i] + db[i]) % p_;
    return pack(da, p_);
  }

  // Evaluates a GF(p)-polynomial (constant first) at x.
  std::uint32_t eval(const Digits& poly, std::uint32_t x) const {
    std::uint32_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = add(mul(acc, x), poly[i] % p_);
    return acc;
  }

 private:
  std::uint32_t p_;
  std::uint32_t n_;
  Digits min_poly_;
};

std::vector<std::uint64_t> prime_factors(std::uint64_t value) {
  std::vector<std::uint64_t> result;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) {
      result.push_back(d);
      while (value % d == 0) value /= d;
    }
  }
  if (value > 1) result.push_back(value);
  return result;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr>& registry() {
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> r;
  return r;
}

}  // namespace

FieldPtr build_field(std::uint32_t p, std::uint32_t n) {
  std::vector<FieldPtr> subfields;
  for (std::uint32_t m = 1; m < n; ++m) {
    if (n % m == 0) subfields.push_back(make_field(p, m));
  }

  auto field = std::shared_ptr<FiniteField>(new FiniteField());
  field->p_ = p;
  field->n_ = n;
  field->q_ = static_cast<std::uint32_t>(ipow(p, n));
  const std::uint32_t q = field->q_;
  field->min_poly_ = least_irreducible(p, n, q);

  const SlowArith slow(p, n, field->min_poly_);
  const auto factors = prime_factors(q - 1);

  // Least-index primitive element compatible with every proper subfield.
  std::uint32_t z = 0;
  for (std::uint32_t candidate = 1; candidate < q && z == 0; ++candidate) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow.pow(candidate, (q - 1) / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (q == 2) primitive = candidate == 1;
    if (!primitive) continue;
    bool compatible = true;
    for (const auto& sub : subfields) {
      const std::uint64_t norm_exp = (q - 1) / (sub->order() - 1);
      const std::uint32_t image = slow.pow(candidate, norm_exp);
      if (slow.eval(sub->primitive_min_poly(), image) != 0) {
        compatible = false;
        break;
      }
    }
    if (compatible) z = candidate;
  }
  if (z == 0) throw ConsistencyError("no compatible primitive element in " + field->name());

  // Multiplication by z is GF(p)-linear; tabulate images of the power basis.
  std::vector<Digits> images(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    images[i] = unpack(slow.mul(static_cast<std::uint32_t>(ipow(p, i)), z), p, n);
  }
  std::vector<std::uint32_t> image_bits(n);
  for (std::uint32_t i = 0; i < n; ++i) image_bits[i] = pack(images[i], p);

  field->exp_.assign(2 * static_cast<std::size_t>(q - 1), 0);
  field->log_.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t k = 0; k < q - 1; ++k) {
    field->exp_[k] = x;
    field->exp_[k + q - 1] = x;
    field->log_[x] = k;
    if (p == 2) {
      std::uint32_t next = 0;
      for (std::uint32_t i = 0; i < n; ++i) {
        if ((x >> i) & 1U) next ^= image_bits[i];
      }
      x = next;
    } else {
      const Digits dx = unpack(x, p, n);
      Digits next(n, 0);
      for (std::uint32_t i = 0; i < n; ++i) {
        if (dx[i] == 0) continue;
        for (std::uint32_t j = 0; j < n; ++j) next[j] = (next[j] + dx[i] * images[i][j]) % p;
      }
      x = pack(next, p);
    }
  }
  if (x != 1) throw ConsistencyError("primitive element has wrong order in " + field->name());

  if (p != 2 && n > 1) {
    field->zech_.assign(q - 1, -1);
    for (std::uint32_t k = 0; k < q - 1; ++k) {
      Digits d = unpack(field->exp_[k], p, n);
      d[0] = (d[0] + 1) % p;
      const std::uint32_t s = pack(d, p);
      field->zech_[k] = s == 0 ? -1 : static_cast<std::int64_t>(field->log_[s]);
    }
  }

  // Minimal polynomial of z over GF(p): product of (x - z^(p^i)).
  std::vector<Elem> poly{1};
  for (std::uint32_t i = 0; i < n; ++i) {
    const Elem root = field->frobenius(field->primitive(), i);
    std::vector<Elem> next(poly.size() + 1, 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] = field->add(next[k + 1], poly[k]);
      next[k] = field->sub(next[k], field->mul(root, poly[k]));
    }
    poly = std::move(next);
  }
  for (auto c : poly) {
    if (c >= p) throw ConsistencyError("primitive minimal polynomial not over the prime field");
    field->prim_min_poly_.push_back(c);
  }
  return field;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw MathError("characteristic " + std::to_string(p) + " is not prime");
  if (n == 0) throw MathError("field degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > limits().max_field_size) {
      throw MathError("GF(" + std::to_string(p) + "^" + std::to_string(n) +
                      ") exceeds the field size cap of " +
                      std::to_string(limits().max_field_size));
    }
  }
  {
    std::lock_guard lock(registry_mutex());
    auto it = registry().find({p, n});
    if (it != registry().end()) return it->second;
  }
  FieldPtr built = build_field(p, n);
  std::lock_guard lock(registry_mutex());
  return registry().try_emplace({p, n}, std::move(built)).first->second;
}

std::string FiniteField::name() const {
  std::ostringstream out;
  out << "GF(" << q_ << ")";
  return out.str();
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw MathError("division by zero in " + name());
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) %
                                         (q_ - 1))];
}

void FiniteField::axpy(std::span<Elem> dst, Elem c, std::span<const Elem> src) const {
  if (c == 0) return;
  const std::size_t len = src.size();
  if (q_ == 2) {
    for (std::size_t i = 0; i < len; ++i) dst[i] ^= src[i];
    return;
  }
  const std::uint32_t lc = log_[c];
  const Elem* exp = exp_.data();
  const std::uint32_t* lg = log_.data();
  if (p_ == 2) {
    for (std::size_t i = 0; i < len; ++i) {
      const Elem s = src[i];
      if (s != 0) dst[i] ^= exp[lc + lg[s]];
    }
    return;
  }
  for (std::size_t i = 0; i < len; ++i) {
    const Elem s = src[i];
    if (s != 0) dst[i] = add(dst[i], exp[lc + lg[s]]);
  }
}

void FiniteField::scale(std::span<Elem> v, Elem c) const {
  if (c == 1) return;
  for (auto& x : v) x = mul(x, c);
}

Elem FiniteField::from_int(std::int64_t value) const {
  const std::int64_t r = ((value % p_) + p_) % p_;
  return static_cast<Elem>(r);
}

Elem FiniteField::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != n_) {
    throw MathError("element of " + name() + " needs " + std::to_string(n_) + " coefficients");
  }
  for (auto c : coeffs) {
    if (c >= p_) throw MathError("coefficient out of range [0, p)");
  }
  return pack(Digits(coeffs.begin(), coeffs.end()), p_);
}

std::vector<std::uint32_t> FiniteField::coeffs(Elem a) const { return unpack(a, p_, n_); }

Elem FiniteField::frobenius(Elem a, std::uint32_t e) const {
  if (a == 0) return 0;
  std::uint64_t k = log_[a];
  for (std::uint32_t i = 0; i < e % n_; ++i) k = (k * p_) % (q_ - 1);
  return exp_[k];
}

// ---- FieldElement ----

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (value_ >= field_->order()) throw MathError("element index out of range");
}

FieldElement FieldElement::from_coeffs(FieldPtr field, std::span<const std::uint32_t> coeffs) {
  const Elem v = field->from_coeffs(coeffs);
  return {std::move(field), v};
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) throw MathError("operands live in different fields");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(*this, o);
  return {field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(*this, o);
  return {field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(*this, o);
  return {field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }

FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op) {
  switch (op) {
    case FieldOp::add:
      return a + b;
    case FieldOp::mul:
      return a * b;
    case FieldOp::inv:
      return a.inverse();
    case FieldOp::pow:
      return a.pow(b.value());
  }
  throw MathError("unknown field operation");
}

// ---- embeddings ----

struct FieldEmbedding::Coordinates {
  std::vector<Elem> basis;                       // powers of the target generator
  std::vector<std::vector<std::uint32_t>> inv;   // n_L x n_L over GF(p)
};

Elem FieldEmbedding::operator()(Elem a) const {
  if (a == 0) return 0;
  const std::uint64_t k = static_cast<std::uint64_t>(source_->log(a)) * exponent_;
  return target_->exp(k);
}

const std::vector<Elem>& FieldEmbedding::relative_basis() const { return coords_->basis; }

std::vector<Elem> FieldEmbedding::coordinates(Elem x) const {
  const std::uint32_t p = target_->characteristic();
  const std::uint32_t m = source_->degree();
  const std::uint32_t nl = target_->degree();
  const std::uint32_t d = nl / m;
  const auto digits = target_->coeffs(x);
  std::vector<std::uint32_t> t(nl, 0);
  for (std::uint32_t i = 0; i < nl; ++i) {
    if (digits[i] == 0) continue;
    for (std::uint32_t j = 0; j < nl; ++j) t[j] = (t[j] + digits[i] * coords_->inv[i][j]) % p;
  }
  std::vector<Elem> result(d);
  for (std::uint32_t j = 0; j < d; ++j) {
    Digits local(t.begin() + j * m, t.begin() + (j + 1) * m);
    result[j] = pack(local, p);
  }
  return result;
}

FieldEmbedding embed(const FieldPtr& source, const FieldPtr& target) {
  if (source->characteristic() != target->characteristic()) {
    throw MathError("not a subfield: characteristics differ");
  }
  if (target->degree() % source->degree() != 0) {
    throw MathError("not a subfield: " + source->name() + " does not embed in " + target->name());
  }
  FieldEmbedding e;
  e.source_ = source;
  e.target_ = target;
  e.exponent_ = (static_cast<std::uint64_t>(target->order()) - 1) / (source->order() - 1);

  const std::uint32_t p = target->characteristic();
  const std::uint32_t m = source->degree();
  const std::uint32_t nl = target->degree();
  const std::uint32_t d = nl / m;
  auto coords = std::make_shared<FieldEmbedding::Coordinates>();
  for (std::uint32_t j = 0; j < d; ++j) coords->basis.push_back(target->pow(target->generator(), j));

  // Rows: GF(p)-digits of emb(alpha_K^s) * a^j at index s + m j.
  std::vector<std::vector<std::uint32_t>> a(nl, std::vector<std::uint32_t>(2 * nl, 0));
  for (std::uint32_t j = 0; j < d; ++j) {
    for (std::uint32_t s = 0; s < m; ++s) {
      const Elem beta = e(source->pow(source->generator(), s));
      const auto row = target->coeffs(target->mul(beta, coords->basis[j]));
      const std::uint32_t r = s + m * j;
      for (std::uint32_t c = 0; c < nl; ++c) a[r][c] = row[c];
      a[r][nl + r] = 1;
    }
  }
  // Gauss-Jordan mod p.
  for (std::uint32_t col = 0; col < nl; ++col) {
    std::uint32_t piv = col;
    while (piv < nl && a[piv][col] == 0) ++piv;
    if (piv == nl) throw ConsistencyError("relative basis is singular");
    std::swap(a[piv], a[col]);
    std::uint32_t inv = 1;
    for (std::uint32_t t = 1; t < p; ++t) {
      if ((a[col][col] * t) % p == 1) inv = t;
    }
    for (auto& v : a[col]) v = (v * inv) % p;
    for (std::uint32_t r = 0; r < nl; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const std::uint32_t f = a[r][col];
      for (std::uint32_t c = 0; c < 2 * nl; ++c) a[r][c] = (a[r][c] + (p - f) * a[col][c]) % p;
    }
  }
  coords->inv.assign(nl, std::vector<std::uint32_t>(nl));
  for (std::uint32_t r = 0; r < nl; ++r) {
    for (std::uint32_t c = 0; c < nl; ++c) coords->inv[r][c] = a[r][nl + c];
  }
  e.coords_ = std::move(coords);
  return e;
}

// ---- automorphisms ----

FieldAutomorphism::FieldAutomorphism(FieldPtr field, std::uint32_t power)
    : field_(std::move(field)), power_(power % field_->degree()) {}

FieldAutomorphism FieldAutomorphism::then(const FieldAutomorphism& next) const {
  if (next.field_ != field_) throw MathError("automorphisms of different fields");
  return {field_, (power_ + next.power_) % field_->degree()};
}

std::vector<FieldAutomorphism> automorphisms(const FieldPtr& field) {
  std::vector<FieldAutomorphism> result;
  for (std::uint32_t e = 0; e < field->degree(); ++e) result.emplace_back(field, e);
  return result;
}

}  // namespace modclass
