#include "qmf/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qmf {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) {
    throw std::invalid_argument("empty rational");
  }
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.find_first_of("+-") != std::string::npos) {
    throw std::invalid_argument("malformed rational: " + s);
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator: " + s);
  }
  Rational r(n, d);
  r.canonicalize();
  return r;
}

QSeries::QSeries(std::size_t precision) : coeffs_(precision) {
  if (precision == 0) {
    throw std::invalid_argument("QSeries precision must be positive");
  }
}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("QSeries precision must be positive");
  }
  for (auto& c : coeffs_) c.canonicalize();
}

QSeries QSeries::constant(const Rational& c, std::size_t precision) {
  QSeries out(precision);
  out.coeffs_[0] = c;
  return out;
}

QSeries QSeries::monomial(std::size_t exponent, const Rational& c, std::size_t precision) {
  QSeries out(precision);
  if (exponent < precision) out.coeffs_[exponent] = c;
  return out;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

std::optional<std::size_t> QSeries::valuation() const {
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n] != 0) return n;
  }
  return std::nullopt;
}

QSeries QSeries::truncated(std::size_t precision) const {
  if (precision > coeffs_.size()) {
    throw std::invalid_argument("cannot extend precision of a truncated series");
  }
  return QSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(precision)));
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

QSeries operator*(const QSeries& lhs, const QSeries& rhs) {
  const std::size_t n = std::min(lhs.precision(), rhs.precision());
  QSeries out(n);
  Rational term;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& a = lhs.coeffs_[i];
    if (a == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      const Rational& b = rhs.coeffs_[j];
      if (b == 0) continue;
      term = a * b;
      out.coeffs_[i + j] += term;
    }
  }
  return out;
}

QSeries derive(const QSeries& a) {
  std::vector<Rational> out(a.precision());
  for (std::size_t n = 1; n < out.size(); ++n) out[n] = a[n] * static_cast<unsigned long>(n);
  return QSeries(std::move(out));
}

QSeries pow(const QSeries& base, unsigned exponent) {
  QSeries result = QSeries::constant(1, base.precision());
  QSeries square = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent > 0) square = square * square;
  }
  return result;
}

SeriesValue evaluate(const QSeries& a, std::complex<double> tau) {
  if (!(tau.imag() > 0.0)) {
    throw std::domain_error("evaluation point must lie in the upper half-plane");
  }
  const std::complex<double> q = std::exp(2.0 * std::numbers::pi * std::complex<double>(0.0, 1.0) * tau);
  const auto coeffs = a.coefficients();
  std::complex<double> acc = 0.0;
  double largest = 1.0;
  for (std::size_t n = coeffs.size(); n-- > 0;) {
    const double c = coeffs[n].get_d();
    largest = std::max(largest, std::abs(c));
    acc = acc * q + c;
  }
  const double r = std::abs(q);
  const double n = static_cast<double>(coeffs.size());
  const double tail = largest * n * n * std::pow(r, n) / (1.0 - r);
  return {acc, tail};
}

}  // namespace qmf
