#include "qmf/quasimodular.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qmf/eisenstein.hpp"
#include "qmf/errors.hpp"
#include "qmf/linalg.hpp"

namespace qmf {
namespace {

void check_weight(int k) {
  if (k % 2 != 0) {
    throw std::invalid_argument("odd weight " + std::to_string(k) + " is not supported");
  }
}

void add_term(QuasiModularForm::Terms& terms, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

int combined_weight(const QuasiModularForm& a, const QuasiModularForm& b) {
  if (a.is_zero()) return b.weight();
  if (b.is_zero()) return a.weight();
  if (a.weight() != b.weight()) {
    throw std::invalid_argument("cannot add forms of weight " + std::to_string(a.weight()) +
                                " and " + std::to_string(b.weight()));
  }
  return a.weight();
}

}  // namespace

QuasiModularForm::QuasiModularForm(int weight) : weight_(weight) { check_weight(weight); }

QuasiModularForm::QuasiModularForm(int weight, Terms terms) : weight_(weight) {
  check_weight(weight);
  for (auto& [m, c] : terms) {
    if (m.e2 < 0 || m.e4 < 0 || m.e6 < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) continue;
    if (m.weight() != weight) {
      throw std::invalid_argument("monomial of weight " + std::to_string(m.weight()) +
                                  " in form of weight " + std::to_string(weight));
    }
    c.canonicalize();
    terms_.emplace(m, std::move(c));
  }
}

QuasiModularForm QuasiModularForm::constant(const Rational& c) {
  return QuasiModularForm(0, {{Monomial{}, c}});
}

QuasiModularForm QuasiModularForm::monomial(Monomial m, const Rational& c) {
  return QuasiModularForm(m.weight(), {{m, c}});
}

QuasiModularForm QuasiModularForm::Delta() {
  return QuasiModularForm(12, {{{0, 3, 0}, Rational(1, 1728)}, {{0, 0, 2}, Rational(-1, 1728)}});
}

int QuasiModularForm::depth() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.e2);
  return d;
}

Rational QuasiModularForm::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

QuasiModularForm& QuasiModularForm::operator+=(const QuasiModularForm& rhs) {
  weight_ = combined_weight(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(terms_, m, c);
  return *this;
}

QuasiModularForm& QuasiModularForm::operator-=(const QuasiModularForm& rhs) {
  weight_ = combined_weight(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(terms_, m, -c);
  return *this;
}

QuasiModularForm& QuasiModularForm::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

QuasiModularForm operator*(const QuasiModularForm& f, const QuasiModularForm& g) {
  QuasiModularForm out(f.weight() + g.weight());
  for (const auto& [mf, cf] : f.terms_) {
    for (const auto& [mg, cg] : g.terms_) {
      add_term(out.terms_, {mf.e2 + mg.e2, mf.e4 + mg.e4, mf.e6 + mg.e6}, cf * cg);
    }
  }
  return out;
}

bool operator==(const QuasiModularForm& a, const QuasiModularForm& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.weight_ == b.weight_ && a.terms_ == b.terms_;
}

QuasiModularForm reduced_component(const QuasiModularForm& f, int r) {
  if (r < 0) throw std::invalid_argument("component index must be non-negative");
  QuasiModularForm::Terms terms;
  for (const auto& [m, c] : f.terms()) {
    if (m.e2 < r) continue;
    terms.emplace(Monomial{m.e2 - r, m.e4, m.e6}, c * binomial(m.e2, r));
  }
  const int k = f.weight() - 2 * r;
  return terms.empty() ? QuasiModularForm(k) : QuasiModularForm(k, std::move(terms));
}

ComponentTuple components(const QuasiModularForm& f) {
  ComponentTuple out{f.weight(), {}};
  for (int r = 0; r <= f.depth(); ++r) out.entries.push_back(reduced_component(f, r));
  return out;
}

QuasiModularForm derive(const QuasiModularForm& f) {
  // D E2 = (E2^2 - E4)/12, D E4 = (E2 E4 - E6)/3, D E6 = (E2 E6 - E4^2)/2.
  QuasiModularForm::Terms terms;
  for (const auto& [m, c] : f.terms()) {
    const auto [a, b, e] = m;
    if (a > 0) {
      const Rational s = c * fraction(a, 12);
      add_term(terms, {a + 1, b, e}, s);
      add_term(terms, {a - 1, b + 1, e}, -s);
    }
    if (b > 0) {
      const Rational s = c * fraction(b, 3);
      add_term(terms, {a + 1, b, e}, s);
      add_term(terms, {a, b - 1, e + 1}, -s);
    }
    if (e > 0) {
      const Rational s = c * fraction(e, 2);
      add_term(terms, {a + 1, b, e}, s);
      add_term(terms, {a, b + 2, e - 1}, -s);
    }
  }
  return QuasiModularForm(f.weight() + 2, std::move(terms));
}

QuasiModularForm derive(const QuasiModularForm& f, int times) {
  if (times < 0) throw std::invalid_argument("derivative order must be non-negative");
  QuasiModularForm out = f;
  for (int i = 0; i < times; ++i) out = derive(out);
  return out;
}

QuasiModularForm lower(const QuasiModularForm& f) { return reduced_component(f, 1); }

QuasiModularForm weight_op(const QuasiModularForm& f) { return f * Rational(f.weight()); }

ComponentTuple derivative_lift(const QuasiModularForm& g, int p) {
  if (g.depth() > 0) throw std::invalid_argument("derivative_lift needs a modular (depth 0) form");
  if (p < 0) throw std::invalid_argument("derivative order must be non-negative");
  const int l = g.weight();
  ComponentTuple out{l + 2 * p, {}};
  Rational falling = 1;
  for (int r = 0; r <= p; ++r) {
    if (r > 0) falling *= fraction(l + p - r, 12);
    out.entries.push_back(derive(g, p - r) * (binomial(p, r) * falling));
  }
  return out;
}

QSeries qexpansion(const QuasiModularForm& f, std::size_t precision) {
  QSeries out(precision);
  for (const auto& [m, c] : f.terms()) out += eisenstein_monomial(m.e2, m.e4, m.e6, precision) * c;
  return out;
}

std::vector<Monomial> quasimodular_monomials(int k, int depth_bound) {
  std::vector<Monomial> out;
  if (k < 0 || k % 2 != 0) return out;
  for (int a = 0; a <= depth_bound && 2 * a <= k; ++a) {
    for (const auto& [b, c] : monomial_basis(k - 2 * a)) out.push_back({a, b, c});
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuasiModularForm recognize(const QSeries& s, int k, int depth_bound) {
  check_weight(k);
  if (k < 0 || depth_bound < 0) throw std::invalid_argument("weight and depth bound must be non-negative");
  const auto candidates = quasimodular_monomials(k, depth_bound);
  std::vector<std::vector<Rational>> columns;
  columns.reserve(candidates.size());
  for (const auto& m : candidates) {
    const auto series = eisenstein_monomial(m.e2, m.e4, m.e6, s.precision());
    columns.emplace_back(series.coefficients().begin(), series.coefficients().end());
  }
  const std::vector<Rational> rhs(s.coefficients().begin(), s.coefficients().end());
  auto result = solve_columns(columns, rhs);
  switch (result.status) {
    case SolveStatus::Underdetermined:
      throw UnderdeterminedError("candidate expansions of weight " + std::to_string(k) +
                                 " are dependent at precision " + std::to_string(s.precision()));
    case SolveStatus::Inconsistent:
      throw NoMatchError("series is not a quasi-modular form of weight " + std::to_string(k) +
                         " and depth <= " + std::to_string(depth_bound));
    case SolveStatus::Unique:
      break;
  }
  QuasiModularForm::Terms terms;
  for (std::size_t i = 0; i < candidates.size(); ++i) terms.emplace(candidates[i], result.solution[i]);
  return QuasiModularForm(k, std::move(terms));
}

}  // namespace qmf
