#pragma once

// Finite fields GF(p^n) and the lattice of embeddings between them.
//
// An element is stored as its packed coefficient vector: the integer
// sum c_i p^i, where (c_0, ..., c_{n-1}) are its coordinates in the power basis
// of a root of the defining polynomial. Index 0 is zero, index 1 is one, and
// the packed order is the fixed element ordering used wherever a
// deterministic choice is needed.
//
// Each field also fixes a primitive element. These are chosen compatibly
// across the whole lattice (the primitive element of GF(p^m) maps to a power of
// the one of GF(p^n) for m | n), so every embedding is a multiplication of
// discrete logarithms and embeddings commute along towers.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace modclass {

using Elem = std::uint32_t;

bool is_prime(std::uint64_t value);

class FiniteField {
 public:
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return n_; }
  std::uint32_t order() const { return q_; }
  /// Monic, constant term first, length degree()+1.
  const std::vector<std::uint32_t>& min_poly() const { return min_poly_; }
  std::string name() const;

  static constexpr Elem zero() { return 0; }
  static constexpr Elem one() { return 1; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (a == 0) return b;
    if (b == 0) return a;
    if (n_ == 1) {
      const Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    const std::uint32_t la = log_[a];
    std::uint32_t d = log_[b] + (q_ - 1) - la;
    if (d >= q_ - 1) d -= q_ - 1;
    const std::int64_t z = zech_[d];
    if (z < 0) return 0;
    return exp_[la + static_cast<std::uint32_t>(z)];
  }

  Elem neg(Elem a) const {
    if (p_ == 2 || a == 0) return a;
    if (n_ == 1) return p_ - a;
    return exp_[log_[a] + (q_ - 1) / 2];
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// dst[i] += c * src[i].
  void axpy(std::span<Elem> dst, Elem c, std::span<const Elem> src) const;
  /// v[i] *= c.
  void scale(std::span<Elem> v, Elem c) const;

  /// The image of an integer in the prime subfield.
  Elem from_int(std::int64_t value) const;
  Elem from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;

  /// Root of min_poly(): the element "x" of GF(p)[x]/(min_poly).
  Elem generator() const { return n_ == 1 ? 0 : p_; }
  /// The compatible primitive element.
  Elem primitive() const { return exp_[1]; }
  std::uint32_t log(Elem a) const { return log_[a]; }
  Elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

  /// x -> x^(p^e).
  Elem frobenius(Elem a, std::uint32_t e) const;

  /// Minimal polynomial of primitive() over GF(p), constant term first.
  const std::vector<std::uint32_t>& primitive_min_poly() const { return prim_min_poly_; }

 private:
  friend std::shared_ptr<const FiniteField> build_field(std::uint32_t p, std::uint32_t n);
  FiniteField() = default;

  std::uint32_t p_ = 0;
  std::uint32_t n_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> min_poly_;
  std::vector<std::uint32_t> prim_min_poly_;
  std::vector<Elem> exp_;            // length 2(q-1)
  std::vector<std::uint32_t> log_;   // log_[0] unused
  std::vector<std::int64_t> zech_;   // odd p, n > 1: log(1 + z^k) or -1
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// GF(p^n) with the lexicographically least monic irreducible defining
/// polynomial (coefficients compared from x^(n-1) down). Interned: the same
/// (p, n) always returns the same object.
FieldPtr make_field(std::uint32_t p, std::uint32_t n);

/// Value-typed element, for API-level arithmetic. Matrices store raw Elem.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);
  static FieldElement from_coeffs(FieldPtr field, std::span<const std::uint32_t> coeffs);

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  bool operator==(const FieldElement& o) const {
    return field_ == o.field_ && value_ == o.value_;
  }

 private:
  FieldPtr field_;
  Elem value_;
};

enum class FieldOp { add, mul, inv, pow };

/// Single entry point for element arithmetic; `b` is ignored for inv, and for
/// pow its packed value is used as the exponent.
FieldElement field_arith(const FieldElement& a, const FieldElement& b, FieldOp op);

/// K -> L for deg K | deg L.
class FieldEmbedding {
 public:
  const FieldPtr& source() const { return source_; }
  const FieldPtr& target() const { return target_; }
  Elem operator()(Elem a) const;
  Elem image_of_generator() const { return (*this)(source_->generator()); }
  std::uint32_t relative_degree() const { return target_->degree() / source_->degree(); }

  /// Coordinates of x in the target over the image of the source, in the basis
  /// 1, a, ..., a^(d-1) where a is target()->generator().
  std::vector<Elem> coordinates(Elem x) const;
  /// Powers of target()->generator(), the basis used by coordinates().
  const std::vector<Elem>& relative_basis() const;

 private:
  friend FieldEmbedding embed(const FieldPtr& source, const FieldPtr& target);
  FieldPtr source_;
  FieldPtr target_;
  std::uint64_t exponent_ = 0;
  struct Coordinates;
  std::shared_ptr<const Coordinates> coords_;
};

FieldEmbedding embed(const FieldPtr& source, const FieldPtr& target);

/// x -> x^(p^power).
class FieldAutomorphism {
 public:
  FieldAutomorphism(FieldPtr field, std::uint32_t power);
  const FieldPtr& field() const { return field_; }
  std::uint32_t power() const { return power_; }
  Elem operator()(Elem a) const { return field_->frobenius(a, power_); }
  FieldAutomorphism then(const FieldAutomorphism& next) const;
  bool operator==(const FieldAutomorphism& o) const {
    return field_ == o.field_ && power_ == o.power_;
  }

 private:
  FieldPtr field_;
  std::uint32_t power_;
};

std::vector<FieldAutomorphism> automorphisms(const FieldPtr& field);

}  // namespace modclass
