#pragma once

#include <utility>
#include <vector>

#include "modclass/finite_field.hpp"
#include "modclass/matrix.hpp"
#include "modclass/random.hpp"

namespace modclass {

/// Univariate polynomial over a finite field, constant term first, trimmed
/// (no trailing zeros; the zero polynomial is empty).
class Poly {
 public:
  Poly() = default;
  Poly(FieldPtr field, std::vector<Elem> coeffs);
  static Poly constant(FieldPtr field, Elem c);
  static Poly x(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  Elem lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Elem operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator%(const Poly& o) const;
  Poly operator/(const Poly& o) const;
  std::pair<Poly, Poly> divmod(const Poly& o) const;
  Poly monic() const;
  Poly derivative() const;
  Elem eval(Elem x) const;
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  /// Degree first, then coefficients from the top down.
  bool operator<(const Poly& o) const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

Poly gcd(Poly a, Poly b);
Poly powmod(Poly base, std::uint64_t e, const Poly& mod);

/// Monic irreducible factors with multiplicities, sorted. The result does not
/// depend on the generator (only the running time does).
std::vector<std::pair<Poly, int>> factor(const Poly& f, Rng& rng);

/// f(M) for a square matrix.
Matrix evaluate(const Poly& f, const Matrix& m);

/// Characteristic polynomial (Krylov / spinning method).
Poly charpoly(const Matrix& m);

}  // namespace modclass
