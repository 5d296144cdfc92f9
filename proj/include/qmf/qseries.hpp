#ifndef QMF_QSERIES_HPP
#define QMF_QSERIES_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qmf/rational.hpp"

namespace qmf {

inline constexpr std::size_t kDefaultPrecision = 64;

/// Truncated q-expansion sum_{n<N} a_n q^n with exact rational coefficients.
///
/// Binary operations on series of different precision truncate to the
/// shorter operand; nothing ever extends precision.
class QSeries {
 public:
  explicit QSeries(std::size_t precision = kDefaultPrecision);
  explicit QSeries(std::vector<Rational> coeffs);

  static QSeries constant(const Rational& c, std::size_t precision = kDefaultPrecision);
  static QSeries monomial(std::size_t exponent, const Rational& c,
                          std::size_t precision = kDefaultPrecision);

  std::size_t precision() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  // Index of the first nonzero coefficient; empty for the zero series.
  std::optional<std::size_t> valuation() const;
  QSeries truncated(std::size_t precision) const;

  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);
  QSeries& operator*=(const Rational& scalar);

  friend QSeries operator+(QSeries lhs, const QSeries& rhs) { return lhs += rhs; }
  friend QSeries operator-(QSeries lhs, const QSeries& rhs) { return lhs -= rhs; }
  friend QSeries operator*(QSeries lhs, const Rational& s) { return lhs *= s; }
  friend QSeries operator*(const Rational& s, QSeries rhs) { return rhs *= s; }
  friend QSeries operator-(QSeries a) { return a *= Rational(-1); }
  friend QSeries operator*(const QSeries& lhs, const QSeries& rhs);

  friend bool operator==(const QSeries& lhs, const QSeries& rhs) = default;

 private:
  std::vector<Rational> coeffs_;
};

// Normalized derivative q d/dq: a_n -> n a_n.
QSeries derive(const QSeries& a);

QSeries pow(const QSeries& base, unsigned exponent);

struct SeriesValue {
  std::complex<double> value;
  // Bound on the neglected tail, max(1, max|a_n|) N^2 |q|^N / (1 - |q|).
  double truncation_error = 0.0;
};

// Sum a_n exp(2 pi i n tau) in double precision. Throws std::domain_error
// unless Im tau > 0.
SeriesValue evaluate(const QSeries& a, std::complex<double> tau);

}  // namespace qmf

#endif
