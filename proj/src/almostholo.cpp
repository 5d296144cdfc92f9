#include "qmf/almostholo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qmf/errors.hpp"

namespace qmf {
namespace {

std::vector<QSeries> trimmed(std::vector<QSeries> coeffs) {
  while (coeffs.size() > 1 && coeffs.back().is_zero()) coeffs.pop_back();
  return coeffs;
}

double reduced_y(std::complex<double> tau) { return -3.0 / (std::numbers::pi * tau.imag()); }

}  // namespace

AlmostHolomorphicForm::AlmostHolomorphicForm(int weight, std::vector<QSeries> coeffs) : weight_(weight) {
  if (coeffs.empty()) throw std::invalid_argument("almost holomorphic form needs a coefficient");
  const std::size_t n = coeffs.front().precision();
  for (const auto& c : coeffs) {
    if (c.precision() != n) throw std::invalid_argument("Y-coefficients must share a precision");
  }
  coeffs_ = trimmed(std::move(coeffs));
}

bool operator==(const AlmostHolomorphicForm& a, const AlmostHolomorphicForm& b) {
  if (a.coeffs_ != b.coeffs_) return false;
  return a.weight_ == b.weight_ || a.is_zero();
}

AlmostHolomorphicForm completion(const QuasiModularForm& f, std::size_t precision) {
  std::vector<QSeries> coeffs;
  for (int r = 0; r <= f.depth(); ++r) coeffs.push_back(qexpansion(reduced_component(f, r), precision));
  return AlmostHolomorphicForm(f.weight(), std::move(coeffs));
}

QSeries constant_term(const AlmostHolomorphicForm& F) { return F.coefficients().front(); }

std::vector<AlmostHolomorphicForm> component_forms(const QuasiModularForm& f, std::size_t precision) {
  std::vector<AlmostHolomorphicForm> out;
  for (int r = 0; r <= f.depth(); ++r) out.push_back(completion(reduced_component(f, r), precision));
  return out;
}

QSeries reconstruct(const std::vector<AlmostHolomorphicForm>& parts, int weight) {
  if (parts.empty()) throw std::invalid_argument("reconstruct needs at least one part");
  const std::size_t n = parts.front().precision();
  int degree = 0;
  for (std::size_t s = 0; s < parts.size(); ++s) {
    const auto& part = parts[s];
    if (part.precision() != n) throw std::invalid_argument("parts must share one precision");
    const int expected = weight - 2 * static_cast<int>(s);
    if (!part.is_zero() && part.weight() != expected) {
      throw std::invalid_argument("part " + std::to_string(s) + " has weight " +
                                  std::to_string(part.weight()) + ", expected " + std::to_string(expected));
    }
    degree = std::max(degree, part.degree() + static_cast<int>(s));
  }

  std::vector<QSeries> total(static_cast<std::size_t>(degree) + 1, QSeries(n));
  for (std::size_t s = 0; s < parts.size(); ++s) {
    const Rational sign = s % 2 == 0 ? 1 : -1;
    const auto& coeffs = parts[s].coefficients();
    for (std::size_t t = 0; t < coeffs.size(); ++t) total[s + t] += coeffs[t] * sign;
  }
  for (std::size_t r = 1; r < total.size(); ++r) {
    if (!total[r].is_zero()) {
      throw NotHolomorphicError("not holomorphic: Y^" + std::to_string(r) + " coefficient does not cancel");
    }
  }
  return total.front();
}

AlmostHolomorphicForm raise(const AlmostHolomorphicForm& F) {
  const auto& c = F.coefficients();
  const int k = F.weight();
  std::vector<QSeries> out;
  for (std::size_t r = 0; r <= c.size(); ++r) {
    QSeries next = r < c.size() ? derive(c[r]) : QSeries(F.precision());
    if (r > 0) next += c[r - 1] * fraction(k - static_cast<long>(r) + 1, 12);
    out.push_back(std::move(next));
  }
  return AlmostHolomorphicForm(k + 2, std::move(out));
}

AlmostHolomorphicForm lower_op(const AlmostHolomorphicForm& F) {
  const auto& c = F.coefficients();
  std::vector<QSeries> out;
  for (std::size_t r = 0; r + 1 < c.size(); ++r) out.push_back(c[r + 1] * Rational(static_cast<long>(r + 1)));
  if (out.empty()) out.emplace_back(F.precision());
  return AlmostHolomorphicForm(F.weight() - 2, std::move(out));
}

std::complex<double> evaluate(const AlmostHolomorphicForm& F, std::complex<double> tau) {
  const double y = reduced_y(tau);
  const auto& c = F.coefficients();
  std::complex<double> acc = 0.0;
  for (std::size_t r = c.size(); r-- > 0;) acc = acc * y + evaluate(c[r], tau).value;
  return acc;
}

double truncation_error(const AlmostHolomorphicForm& F, std::complex<double> tau) {
  const double y = std::abs(reduced_y(tau));
  double err = 0.0;
  double scale = 1.0;
  for (const auto& c : F.coefficients()) {
    err += scale * evaluate(c, tau).truncation_error;
    scale *= y;
  }
  return err;
}

}  // namespace qmf
