#include "cdws/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdws {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& value) {
  if (value != 0) {
    coeffs_.push_back(value);
  }
}

Polynomial Polynomial::monomial(int power, const Rational& coeff) {
  if (power < 0) {
    throw std::invalid_argument("negative monomial power");
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(power + 1));
  coeffs.back() = coeff;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

Rational Polynomial::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size())) {
    return 0;
  }
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) {
    c *= scalar;
  }
  trim();
  return *this;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  for (int power = degree(); power >= 0; --power) {
    const Rational coeff = coefficient(power);
    if (coeff == 0) {
      continue;
    }
    const bool negative = coeff < 0;
    const Rational magnitude = negative ? Rational(-coeff) : coeff;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = magnitude == 1;
    if (!unit || power == 0) {
      out += cdws::to_string(magnitude);
    }
    if (power > 0) {
      out += unit ? "" : "*";
      out += var;
      if (power > 1) {
        out += "^" + std::to_string(power);
      }
    }
  }
  return out;
}

Polynomial lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].first == points[j].first) {
        throw std::invalid_argument("duplicate interpolation abscissa " +
                                    to_string(points[i].first));
      }
    }
  }
  Polynomial result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Polynomial basis(Rational(1));
    Rational denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) {
        continue;
      }
      basis *= Polynomial(std::vector<Rational>{-points[j].first, Rational(1)});
      denom *= points[i].first - points[j].first;
    }
    result += basis * (points[i].second / denom);
  }
  return result;
}

Polynomial rescale_lambda(const Polynomial& p, const Rational& lambda, int n) {
  if (lambda == 0) {
    throw std::invalid_argument("rescale_lambda: lambda must be nonzero");
  }
  // Coefficient i picks up lambda^{i - n}.
  std::vector<Rational> coeffs(p.coefficients().begin(), p.coefficients().end());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const int shift = static_cast<int>(i) - n;
    Rational factor = 1;
    for (int s = 0; s < std::abs(shift); ++s) {
      factor *= lambda;
    }
    coeffs[i] = shift >= 0 ? coeffs[i] * factor : coeffs[i] / factor;
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace cdws
