#ifndef QMF_QUASIMODULAR_HPP
#define QMF_QUASIMODULAR_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "qmf/qseries.hpp"
#include "qmf/rational.hpp"

namespace qmf {

// Exponents of E2^e2 E4^e4 E6^e6.
struct Monomial {
  int e2 = 0;
  int e4 = 0;
  int e6 = 0;

  int weight() const { return 2 * e2 + 4 * e4 + 6 * e6; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Holomorphic quasi-modular form for SL2(Z) as a weight-homogeneous
/// polynomial in E2, E4, E6 with rational coefficients.
///
/// The depth is the E2-degree. The zero form has depth 0 and takes part in
/// sums of any weight; only the zero form may carry a negative weight label.
class QuasiModularForm {
 public:
  using Terms = std::map<Monomial, Rational>;

  QuasiModularForm() = default;
  explicit QuasiModularForm(int weight);
  // Throws std::invalid_argument on odd weight, negative weight with terms,
  // or a monomial of the wrong weight. Zero coefficients are dropped.
  QuasiModularForm(int weight, Terms terms);

  static QuasiModularForm constant(const Rational& c);
  static QuasiModularForm monomial(Monomial m, const Rational& c = 1);
  static QuasiModularForm E2() { return monomial({1, 0, 0}); }
  static QuasiModularForm E4() { return monomial({0, 1, 0}); }
  static QuasiModularForm E6() { return monomial({0, 0, 1}); }
  // (E4^3 - E6^2) / 1728
  static QuasiModularForm Delta();

  int weight() const { return weight_; }
  int depth() const;
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;

  QuasiModularForm& operator+=(const QuasiModularForm& rhs);
  QuasiModularForm& operator-=(const QuasiModularForm& rhs);
  QuasiModularForm& operator*=(const Rational& s);

  friend QuasiModularForm operator+(QuasiModularForm a, const QuasiModularForm& b) { return a += b; }
  friend QuasiModularForm operator-(QuasiModularForm a, const QuasiModularForm& b) { return a -= b; }
  friend QuasiModularForm operator-(QuasiModularForm a) { return a *= Rational(-1); }
  friend QuasiModularForm operator*(QuasiModularForm a, const Rational& s) { return a *= s; }
  friend QuasiModularForm operator*(const Rational& s, QuasiModularForm a) { return a *= s; }
  friend QuasiModularForm operator*(const QuasiModularForm& f, const QuasiModularForm& g);

  // Zero forms compare equal regardless of weight label.
  friend bool operator==(const QuasiModularForm& a, const QuasiModularForm& b);

 private:
  int weight_ = 0;
  Terms terms_;
};

// f^r := (1/r!) d^r f / dE2^r, weight k - 2r. Zero once r > depth.
QuasiModularForm reduced_component(const QuasiModularForm& f, int r);

// (f^0, ..., f^d); entry r has weight k - 2r and depth <= d - r.
struct ComponentTuple {
  int weight = 0;
  std::vector<QuasiModularForm> entries;

  friend bool operator==(const ComponentTuple&, const ComponentTuple&) = default;
};

ComponentTuple components(const QuasiModularForm& f);

// Normalized derivative D = q d/dq via Ramanujan's identities.
QuasiModularForm derive(const QuasiModularForm& f);
QuasiModularForm derive(const QuasiModularForm& f, int times);

// Lowering operator f -> f^1.
QuasiModularForm lower(const QuasiModularForm& f);

// Multiplication by the weight.
QuasiModularForm weight_op(const QuasiModularForm& f);

// Components of D^p g for modular g of weight l, from the closed form
// binom(p, r) (l+p-1)(l+p-2)...(l+p-r) 12^{-r} D^{p-r} g.
ComponentTuple derivative_lift(const QuasiModularForm& g, int p);

QSeries qexpansion(const QuasiModularForm& f, std::size_t precision = kDefaultPrecision);

// Monomials of weight k with E2-degree <= depth_bound, in map order.
std::vector<Monomial> quasimodular_monomials(int k, int depth_bound);

// Inverse of qexpansion on forms of weight k and depth <= depth_bound.
// Throws UnderdeterminedError if the candidate expansions are dependent at
// s.precision(), NoMatchError if no combination matches.
QuasiModularForm recognize(const QSeries& s, int k, int depth_bound);

}  // namespace qmf

#endif
