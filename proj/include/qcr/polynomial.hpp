#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qcr/scalar.hpp"

namespace qcr {

/// Univariate polynomial in zeta over Q(i); coefficients ascending, no
/// trailing zeros (the zero polynomial has an empty list).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) : Polynomial(GaussianRational(c)) {}  // NOLINT(implicit)
  Polynomial(GaussianRational c);                           // NOLINT(implicit)
  explicit Polynomial(std::vector<GaussianRational> coeffs);

  static Polynomial zeta() { return Polynomial({GaussianRational(0), GaussianRational(1)}); }
  /// c0 + c1 zeta
  static Polynomial linear(GaussianRational c0, GaussianRational c1) {
    return Polynomial({std::move(c0), std::move(c1)});
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  GaussianRational coeff(int power) const;
  const GaussianRational& leading() const { return coeffs_.back(); }

  GaussianRational eval(const GaussianRational& at) const;
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

 private:
  void trim();
  std::vector<GaussianRational> coeffs_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Human-readable form in the variable "zeta", e.g. "zeta^2 + (1/2-1i)*zeta + 3".
std::string to_string(const Polynomial& p);

}  // namespace qcr
