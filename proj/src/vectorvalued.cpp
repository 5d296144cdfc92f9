#include "qmf/vectorvalued.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

#include "qmf/eisenstein.hpp"
#include "qmf/linalg.hpp"

namespace qmf {

const std::complex<double>& cocycle_constant() {
  static const std::complex<double> lambda{0.0, -6.0 / std::numbers::pi};
  return lambda;
}

GroupElement::GroupElement(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  if (a * d - b * c != 1) {
    throw std::invalid_argument("group element must have determinant 1");
  }
}

std::complex<double> GroupElement::j(std::complex<double> tau) const {
  return static_cast<double>(c_) * tau + static_cast<double>(d_);
}

Rational GroupElement::j(const Rational& tau) const { return Rational(c_) * tau + Rational(d_); }

std::complex<double> GroupElement::act(std::complex<double> tau) const {
  return (static_cast<double>(a_) * tau + static_cast<double>(b_)) / j(tau);
}

Rational GroupElement::act(const Rational& tau) const {
  const Rational denom = j(tau);
  if (denom == 0) throw std::domain_error("rational point is mapped to the cusp");
  return (Rational(a_) * tau + Rational(b_)) / denom;
}

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
          x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y) {
  if (x.n_ != y.n_) throw std::invalid_argument("matrix size mismatch");
  IntegerMatrix out(x.n_);
  for (std::size_t i = 0; i < x.n_; ++i) {
    for (std::size_t k = 0; k < x.n_; ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < x.n_; ++j) out(i, j) += x(i, k) * y(k, j);
    }
  }
  return out;
}

IntegerMatrix sym_matrix(const GroupElement& g, int m) {
  if (m < 0) throw std::invalid_argument("symmetric power must be non-negative");
  const auto n = static_cast<std::size_t>(m) + 1;
  IntegerMatrix out(n);
  // Column j holds (a + c x)^{m-j} (b + d x)^j with x marking e2.
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<Integer> poly{1};
    auto multiply = [&poly](std::int64_t constant, std::int64_t linear) {
      std::vector<Integer> next(poly.size() + 1);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i] * Integer(static_cast<long>(constant));
        next[i + 1] += poly[i] * Integer(static_cast<long>(linear));
      }
      poly = std::move(next);
    };
    for (std::size_t t = 0; t + col < n - 1; ++t) multiply(g.a(), g.c());
    for (std::size_t t = 0; t < col; ++t) multiply(g.b(), g.d());
    for (std::size_t row = 0; row < n; ++row) out(row, col) = poly[row];
  }
  return out;
}

VectorValuedForm::VectorValuedForm(QuasiModularForm source, int m, int weight_label)
    : source_(std::move(source)), m_(m), k_(weight_label) {
  if (m < 0) throw std::invalid_argument("rank parameter m must be non-negative");
  if (weight_label % 2 != 0) throw std::invalid_argument("weight label must be even");
  if (!source_.is_zero() && source_.weight() != weight_label) {
    throw std::invalid_argument("source weight " + std::to_string(source_.weight()) +
                                " differs from weight label " + std::to_string(weight_label));
  }
  if (source_.depth() > m) {
    throw std::invalid_argument("depth " + std::to_string(source_.depth()) + " exceeds m = " +
                                std::to_string(m));
  }
  if (source_.is_zero()) source_ = QuasiModularForm(weight_label);
}

VectorValuedForm from_quasimodular(const QuasiModularForm& f, int m) {
  return VectorValuedForm(f, m, f.weight());
}

QuasiModularForm to_quasimodular(const VectorValuedForm& F) { return F.source(); }

VectorValuedForm w_form() { return from_quasimodular(QuasiModularForm::E2(), 1); }

std::vector<std::complex<double>> evaluate_components(const std::vector<QSeries>& components, int m,
                                                      std::complex<double> tau) {
  if (static_cast<int>(components.size()) > m + 1) {
    throw std::invalid_argument("more components than V_m admits");
  }
  std::vector<std::complex<double>> out(static_cast<std::size_t>(m) + 1);
  std::vector<std::complex<double>> tau_powers(out.size(), 1.0);
  for (std::size_t i = 1; i < tau_powers.size(); ++i) tau_powers[i] = tau_powers[i - 1] * tau;

  std::complex<double> lambda_power = 1.0;
  for (std::size_t r = 0; r < components.size(); ++r) {
    const std::complex<double> value = lambda_power * evaluate(components[r], tau).value;
    const int free = m - static_cast<int>(r);
    for (int i = 0; i <= free; ++i) {
      out[static_cast<std::size_t>(i)] +=
          value * binomial(free, i).get_d() * tau_powers[static_cast<std::size_t>(free - i)];
    }
    lambda_power *= cocycle_constant();
  }
  return out;
}

std::vector<std::complex<double>> eval_standard(const VectorValuedForm& F, std::complex<double> tau,
                                                std::size_t precision) {
  if (!(tau.imag() > 0.0)) throw std::domain_error("evaluation point must lie in the upper half-plane");
  std::vector<QSeries> comps;
  for (int r = 0; r <= F.source().depth(); ++r) {
    comps.push_back(qexpansion(reduced_component(F.source(), r), precision));
  }
  return evaluate_components(comps, F.rank_parameter(), tau);
}

AlmostHolomorphicForm holwt_component(const VectorValuedForm& F, int s, std::size_t precision) {
  if (s < 0 || s > F.rank_parameter()) {
    throw std::invalid_argument("component index " + std::to_string(s) + " outside 0..m");
  }
  return completion(reduced_component(F.source(), s), precision);
}

VectorValuedForm embed_i(const VectorValuedForm& F) {
  return VectorValuedForm(F.source(), F.rank_parameter() + 1, F.weight_label());
}

bool image_test(const VectorValuedForm& F) {
  if (F.rank_parameter() < 1) throw std::invalid_argument("image_test needs m >= 1");
  return F.source().depth() <= F.rank_parameter() - 1;
}

VectorValuedForm embed_preimage(const VectorValuedForm& F) {
  if (!image_test(F)) throw std::invalid_argument("form is not in the image of embed_i");
  return VectorValuedForm(F.source(), F.rank_parameter() - 1, F.weight_label());
}

std::vector<QuasiModularForm> w_decompose(const VectorValuedForm& F) {
  const int m = F.rank_parameter();
  const int k = F.weight_label();
  std::vector<QuasiModularForm::Terms> terms(static_cast<std::size_t>(m) + 1);
  for (const auto& [mono, c] : F.source().terms()) {
    terms[static_cast<std::size_t>(mono.e2)].emplace(Monomial{0, mono.e4, mono.e6}, c);
  }
  std::vector<QuasiModularForm> out;
  for (int t = 0; t <= m; ++t) {
    auto& part = terms[static_cast<std::size_t>(t)];
    out.push_back(part.empty() ? QuasiModularForm(k - 2 * t) : QuasiModularForm(k - 2 * t, std::move(part)));
  }
  return out;
}

VectorValuedForm w_compose(const std::vector<QuasiModularForm>& parts, int m, int k) {
  if (static_cast<int>(parts.size()) != m + 1) {
    throw std::invalid_argument("w_compose needs m + 1 parts");
  }
  QuasiModularForm source(k);
  QuasiModularForm e2_power = QuasiModularForm::constant(1);
  for (int t = 0; t <= m; ++t) {
    const auto& g = parts[static_cast<std::size_t>(t)];
    if (g.depth() != 0) throw std::invalid_argument("w-basis parts must be modular (depth 0)");
    if (!g.is_zero() && g.weight() != k - 2 * t) {
      throw std::invalid_argument("part " + std::to_string(t) + " has weight " + std::to_string(g.weight()) +
                                  ", expected " + std::to_string(k - 2 * t));
    }
    source += g * e2_power;
    e2_power = e2_power * QuasiModularForm::E2();
  }
  return VectorValuedForm(std::move(source), m, k);
}

VectorValuedForm iota_lift(const QuasiModularForm& g, int p, int m) {
  if (p < 0 || p > m) throw std::invalid_argument("iota_lift needs 0 <= p <= m");
  if (g.depth() != 0) throw std::invalid_argument("iota_lift needs a modular (depth 0) form");
  QuasiModularForm source = g;
  for (int i = 0; i < p; ++i) source = source * QuasiModularForm::E2();
  return VectorValuedForm(std::move(source), m, g.weight() + 2 * p);
}

VectorValuedForm vv_product(const VectorValuedForm& F, const VectorValuedForm& G) {
  return VectorValuedForm(F.source() * G.source(), F.rank_parameter() + G.rank_parameter(),
                          F.weight_label() + G.weight_label());
}

int filtration_degree(const VectorValuedForm& F) { return F.source().depth(); }

int dim_vv(int k, int m) {
  if (k < 0 || m < 0) throw std::invalid_argument("dim_vv needs k, m >= 0");
  int total = 0;
  for (int t = 0; t <= m && k - 2 * t >= 0; ++t) total += dim_modular(k - 2 * t);
  return total;
}

std::vector<VectorValuedForm> w_basis(int k, int m) {
  std::vector<VectorValuedForm> out;
  for (int t = 0; t <= m && k - 2 * t >= 0; ++t) {
    for (const auto& [b, c] : monomial_basis(k - 2 * t)) {
      std::vector<QuasiModularForm> parts;
      for (int s = 0; s <= m; ++s) parts.emplace_back(k - 2 * s);
      parts[static_cast<std::size_t>(t)] = QuasiModularForm::monomial({0, b, c});
      out.push_back(w_compose(parts, m, k));
    }
  }
  return out;
}

std::size_t w_basis_rank(int k, int m, std::size_t precision) {
  RationalMatrix rows;
  for (const auto& F : w_basis(k, m)) {
    std::vector<Rational> row;
    for (int r = 0; r <= m; ++r) {
      const auto series = qexpansion(reduced_component(F.source(), r), precision);
      row.insert(row.end(), series.coefficients().begin(), series.coefficients().end());
    }
    rows.push_back(std::move(row));
  }
  return rank(std::move(rows));
}

}  // namespace qmf
