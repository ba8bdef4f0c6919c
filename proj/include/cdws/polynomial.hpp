#pragma once

#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cdws/rational.hpp"

namespace cdws {

/// Dense univariate polynomial with exact rational coefficients. Index i of
/// the coefficient vector is the coefficient of x^i; trailing zeros are never
/// stored, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  /// Constant polynomial (zero when value == 0).
  Polynomial(const Rational& value);  // NOLINT(google-explicit-constructor)
  Polynomial(int value) : Polynomial(Rational(value)) {}  // NOLINT(google-explicit-constructor)

  /// x^power.
  static Polynomial monomial(int power, const Rational& coeff = Rational(1));
  static Polynomial variable() { return monomial(1); }

  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^power; zero outside the stored range.
  Rational coefficient(int power) const;
  Rational leading_coefficient() const { return coefficient(degree()); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  Rational eval(const Rational& x) const;
  /// p(inner(x)).
  Polynomial compose(const Polynomial& inner) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
  Polynomial operator-() const { return *this * Rational(-1); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form in the given variable, e.g. "c^2 - 2*c".
  std::string to_string(const std::string& var = "c") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Unique polynomial of degree < points.size() through the given points.
/// Throws std::invalid_argument on duplicate abscissae.
Polynomial lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points);

/// lambda^{-n} * p(lambda * x): moves a value from the c normalization to the
/// c_lambda normalization. Throws std::invalid_argument when lambda == 0.
Polynomial rescale_lambda(const Polynomial& p, const Rational& lambda, int n);

}  // namespace cdws
