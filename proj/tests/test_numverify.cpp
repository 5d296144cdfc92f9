#include <cmath>

#include "doctest.h"
#include "qmf/numverify.hpp"

using namespace qmf;

namespace {

const QuasiModularForm E2 = QuasiModularForm::E2();
const QuasiModularForm E4 = QuasiModularForm::E4();

ScalarEvaluator series_evaluator(const QSeries& s) {
  return [s](std::complex<double> tau) { return evaluate(s, tau); };
}

}  // namespace

TEST_CASE("default plan") {
  const auto plan = default_plan();
  CHECK(plan.taus.size() == 3);
  CHECK(plan.gammas.size() == 6);
  CHECK(plan.tolerance == 1e-8);
  CHECK(plan.precision == 64);
  const std::complex<double> tau(0.3, 1.1);
  CHECK(GroupElement::S().act(tau).imag() == doctest::Approx(1.1 / std::norm(tau)));
  CHECK(GroupElement::S().act(tau).imag() == doctest::Approx(0.846).epsilon(1e-3));
  for (const auto& g : plan.gammas) CHECK(g.a() * g.d() - g.b() * g.c() == 1);
  for (const auto& t : plan.taus) {
    for (const auto& g : plan.gammas) CHECK(g.act(t).imag() >= kMinImageImaginary);
  }
}

TEST_CASE("plan validation") {
  SamplePlan plan = default_plan();
  plan.taus.push_back({0.0, 0.2});
  CHECK_THROWS_AS(plan.validate(), std::invalid_argument);

  plan = default_plan();
  plan.gammas.push_back(GroupElement(1, -1, 2, -1));
  CHECK_THROWS_AS(plan.validate(), std::invalid_argument);

  plan = default_plan();
  plan.tolerance = 0.0;
  CHECK_THROWS_AS(plan.validate(), std::invalid_argument);
}

TEST_CASE("identity element gives zero residual") {
  SamplePlan plan = default_plan();
  plan.gammas = {GroupElement::identity()};
  for (const auto& r : check_quasimodular(E2 * E2 * E4, plan)) CHECK(r.absolute == 0.0);
}

TEST_CASE("check_scalar") {
  const auto plan = default_plan();
  CHECK(max_relative(check_scalar("E4", series_evaluator(qexpansion(E4)), 4, plan)) < 1e-8);
  const auto one = check_scalar("1", series_evaluator(QSeries::constant(1)), 0, plan);
  CHECK(max_relative(one) < 1e-15);

  const auto e2 = check_scalar("E2", series_evaluator(qexpansion(E2)), 2, plan);
  CHECK(max_relative(e2) > 1e-3);
  CHECK_FALSE(all_within(e2, plan.tolerance));
  for (const auto& r : e2) {
    if (r.gamma.c() != 0) CHECK(r.relative > 1e-3);
  }
}

TEST_CASE("check_quasimodular") {
  const auto plan = default_plan();
  CHECK(max_relative(check_quasimodular(E2, plan)) < 1e-8);
  CHECK(normalization_self_test() < 1e-8);
  CHECK(max_relative(check_quasimodular(E4, plan)) < 1e-8);
  CHECK(max_relative(check_quasimodular(E2 * E2 * E4, plan)) < 1e-8);
  CHECK(max_relative(check_quasimodular(QuasiModularForm::Delta() * E2 * E2 * E2, plan)) < 1e-8);
}

TEST_CASE("check_vv") {
  const auto plan = default_plan();
  CHECK(max_relative(check_vv(w_form(), plan)) < 1e-8);
  CHECK(max_relative(check_vv(from_quasimodular(E4, 0), plan)) < 1e-8);
  CHECK(max_relative(check_vv(from_quasimodular(E2 * E2, 2), plan)) < 1e-8);

  SUBCASE("a corrupted component tuple is caught") {
    std::vector<QSeries> comps{qexpansion(E2 * E2), qexpansion(E2) * Rational(3), QSeries::constant(1)};
    CHECK(max_relative(check_vv_components(comps, 2, 2, plan, "corrupted")) > 1e-3);
  }
}

TEST_CASE("doubling the precision moves residuals by at most the truncation estimate") {
  auto plan = default_plan();
  const auto f = E2 * E2 * E4 * E4;
  plan.precision = 32;
  const auto coarse = check_quasimodular(f, plan);
  plan.precision = 64;
  const auto fine = check_quasimodular(f, plan);
  REQUIRE(coarse.size() == fine.size());
  double worst_coarse = 0.0, worst_fine = 0.0, estimate = 0.0;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    worst_coarse = std::max(worst_coarse, coarse[i].relative);
    worst_fine = std::max(worst_fine, fine[i].relative);
    estimate = std::max(estimate, coarse[i].truncation);
  }
  CHECK(worst_fine <= worst_coarse + estimate);
}

TEST_CASE("residual report") {
  Residual r{"E4", GroupElement::S(), {0.3, 1.1}, 1.5e-16, 1e-16, 0.0};
  const auto line = to_json_line(r);
  CHECK(line.find("\"form\":\"E4\"") != std::string::npos);
  CHECK(line.find("\"gamma\":[0,-1,1,0]") != std::string::npos);
  CHECK(line.find('\n') == std::string::npos);
}
