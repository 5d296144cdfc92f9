#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qmf/almostholo.hpp"
#include "qmf/errors.hpp"
#include "qmf/numverify.hpp"

using namespace qmf;

namespace {

const QuasiModularForm E2 = QuasiModularForm::E2();
const QuasiModularForm E4 = QuasiModularForm::E4();
const QuasiModularForm E6 = QuasiModularForm::E6();
const QuasiModularForm One = QuasiModularForm::constant(1);

AlmostHolomorphicForm holomorphic(const QuasiModularForm& f) {
  return AlmostHolomorphicForm(f.weight(), {qexpansion(f)});
}

}  // namespace

TEST_CASE("construction") {
  CHECK_THROWS_AS(AlmostHolomorphicForm(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(AlmostHolomorphicForm(2, {QSeries(4), QSeries(5)}), std::invalid_argument);
  const AlmostHolomorphicForm trimmed(4, {qexpansion(E4), QSeries(64), QSeries(64)});
  CHECK(trimmed.degree() == 0);
  CHECK(AlmostHolomorphicForm(0, {QSeries(3)}).is_zero());
}

TEST_CASE("completion") {
  const auto e2star = completion(E2);
  REQUIRE(e2star.degree() == 1);
  CHECK(e2star.coefficients()[0] == qexpansion(E2));
  CHECK(e2star.coefficients()[1] == QSeries::constant(1));
  CHECK(completion(E4).degree() == 0);

  const auto sq = completion(E2 * E2);
  REQUIRE(sq.degree() == 2);
  CHECK(sq.coefficients()[0] == qexpansion(E2 * E2));
  CHECK(sq.coefficients()[1] == qexpansion(E2) * Rational(2));
  CHECK(sq.coefficients()[2] == QSeries::constant(1));
}

TEST_CASE("constant term") {
  CHECK(constant_term(completion(E2)) == qexpansion(E2));
  CHECK(constant_term(holomorphic(E4)) == qexpansion(E4));
  CHECK(constant_term(completion(E2 * E4)) == qexpansion(E2 * E4));
}

TEST_CASE("component forms") {
  const auto parts = component_forms(E2);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == completion(E2));
  CHECK(parts[1] == holomorphic(One));
  CHECK(component_forms(E4) == std::vector<AlmostHolomorphicForm>{completion(E4)});
  const auto sq = component_forms(E2 * E2);
  REQUIRE(sq.size() == 3);
  CHECK(sq[1] == completion(Rational(2) * E2));

  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = oracle::random_form(rng, 20, 5);
    const auto forms = component_forms(f, 24);
    for (int r = 0; r <= f.depth(); ++r) {
      const auto& coeffs = forms[static_cast<std::size_t>(r)].coefficients();
      for (int t = 0; t + r <= f.depth(); ++t) {
        const auto expected = qexpansion(reduced_component(f, r + t), 24) * binomial(r + t, r);
        if (static_cast<std::size_t>(t) < coeffs.size()) {
          CHECK(coeffs[static_cast<std::size_t>(t)] == expected);
        } else {
          CHECK(expected.is_zero());
        }
      }
    }
  }
}

TEST_CASE("reconstruct") {
  CHECK(reconstruct(component_forms(E2), 2) == qexpansion(E2));
  CHECK(reconstruct({holomorphic(E4)}, 4) == qexpansion(E4));

  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = oracle::random_form(rng, 20, 5);
    CHECK(reconstruct(component_forms(f, 32), f.weight()) == qexpansion(f, 32));
  }

  SUBCASE("corrupted families are rejected") {
    auto parts = component_forms(E2 * E2);
    parts[1] = completion(Rational(3) * E2);
    CHECK_THROWS_AS(reconstruct(parts, 4), NotHolomorphicError);
  }
  SUBCASE("precision mismatch fails loudly") {
    auto parts = component_forms(E2);
    parts[1] = completion(One, 10);
    CHECK_THROWS_AS(reconstruct(parts, 2), std::invalid_argument);
  }
  SUBCASE("weight mismatch") {
    CHECK_THROWS_AS(reconstruct(component_forms(E2), 4), std::invalid_argument);
  }
}

TEST_CASE("raise") {
  const auto r = raise(holomorphic(E4));
  CHECK(r.weight() == 6);
  REQUIRE(r.degree() == 1);
  CHECK(r.coefficients()[0] == qexpansion(derive(E4)));
  CHECK(r.coefficients()[1] == qexpansion(E4) * Rational(1, 3));

  CHECK(raise(holomorphic(One)).is_zero());
  CHECK(constant_term(raise(completion(E2))) == qexpansion(derive(E2)));

  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = oracle::random_form(rng, 16, 4);
    CHECK(constant_term(raise(completion(f, 32))) == derive(qexpansion(f, 32)));
    CHECK(raise(completion(f, 32)) == completion(derive(f), 32));
  }
}

TEST_CASE("lower_op") {
  CHECK(lower_op(completion(E2)) == holomorphic(One));
  CHECK(lower_op(holomorphic(E6)).is_zero());
  CHECK(lower_op(completion(E2 * E2)) == completion(Rational(2) * E2));

  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = oracle::random_form(rng, 20, 5);
    CHECK(lower_op(completion(f, 24)) == completion(lower(f), 24));
  }
}

TEST_CASE("evaluation") {
  CHECK(evaluate(holomorphic(One), {0.2, 0.8}) == std::complex<double>(1.0, 0.0));
  // E2(i) = 3/pi, so E2*(i) vanishes.
  CHECK(std::abs(evaluate(completion(E2), {0.0, 1.0})) < 1e-14);
  CHECK(evaluate(completion(E2), {0.0, 2.0}).real() ==
        doctest::Approx(evaluate(qexpansion(E2), {0.0, 2.0}).value.real() - 3.0 / (2.0 * std::numbers::pi)));

  const auto F = completion(E2);
  const std::complex<double> tau(0.0, 2.0);
  const auto S = GroupElement::S();
  const auto lhs = evaluate(F, S.act(tau));
  const auto rhs = std::pow(S.j(tau), 2) * evaluate(F, tau);
  CHECK(std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)) < 1e-8);
  CHECK_THROWS_AS(evaluate(F, {0.0, -1.0}), std::domain_error);
}

TEST_CASE("completions are modular on the default plan") {
  const auto plan = default_plan();
  for (const auto& f : {E2, E2 * E2, E2 * E4, E2 * E2 * E2 * E6, E4 * E6}) {
    CHECK(max_relative(check_almost_holomorphic(completion(f), plan)) < 1e-8);
  }
}
