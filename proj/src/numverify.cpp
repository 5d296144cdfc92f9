#include "qmf/numverify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qmf {
namespace {

double norm(const std::vector<std::complex<double>>& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

Residual make_residual(const std::string& name, const GroupElement& g, std::complex<double> tau,
                       double diff, double rhs, double truncation) {
  return {name, g, tau, diff, diff / std::max(1.0, rhs), truncation};
}

std::string describe(const QuasiModularForm& f) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.get_str() << ")";
    if (m.e2) out << "*E2^" << m.e2;
    if (m.e4) out << "*E4^" << m.e4;
    if (m.e6) out << "*E6^" << m.e6;
  }
  return first ? "0" : out.str();
}

}  // namespace

void SamplePlan::validate() const {
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (precision == 0) throw std::invalid_argument("precision must be positive");
  for (const auto& tau : taus) {
    if (tau.imag() < kMinPlanImaginary) {
      throw std::invalid_argument("sample point has Im tau < 0.3");
    }
    for (const auto& g : gammas) {
      if (g.act(tau).imag() < kMinImageImaginary) {
        throw std::invalid_argument("sample pair has Im(g tau) < 0.25");
      }
    }
  }
}

SamplePlan default_plan() {
  const auto T = GroupElement::T();
  const auto S = GroupElement::S();
  SamplePlan plan{
      {{0.3, 1.1}, {-0.4, 0.9}, {0.1, 1.7}},
      {T, S, S * T, T * S.inverse(), GroupElement(2, 1, 1, 1), GroupElement(1, 2, -1, -1)},
      1e-8,
      kDefaultPrecision,
  };
  plan.validate();
  return plan;
}

std::vector<Residual> check_scalar(const std::string& name, const ScalarEvaluator& f, int k,
                                   const SamplePlan& plan) {
  plan.validate();
  std::vector<Residual> out;
  for (const auto& g : plan.gammas) {
    for (const auto& tau : plan.taus) {
      const auto lhs = f(g.act(tau));
      const auto base = f(tau);
      const auto factor = std::pow(g.j(tau), k);
      const auto rhs = factor * base.value;
      out.push_back(make_residual(name, g, tau, std::abs(lhs.value - rhs), std::abs(rhs),
                                  lhs.truncation_error + std::abs(factor) * base.truncation_error));
    }
  }
  return out;
}

std::vector<Residual> check_quasimodular(const QuasiModularForm& f, const SamplePlan& plan,
                                         const std::string& name) {
  plan.validate();
  const std::string id = name.empty() ? describe(f) : name;
  const int k = f.weight();
  const QSeries whole = qexpansion(f, plan.precision);
  std::vector<QSeries> comps;
  for (int r = 0; r <= f.depth(); ++r) comps.push_back(qexpansion(reduced_component(f, r), plan.precision));

  std::vector<Residual> out;
  for (const auto& g : plan.gammas) {
    for (const auto& tau : plan.taus) {
      const auto lhs = evaluate(whole, g.act(tau));
      const auto j = g.j(tau);
      const std::complex<double> jc = static_cast<double>(g.c()) * cocycle_constant();
      std::complex<double> rhs = 0.0;
      double truncation = lhs.truncation_error;
      std::complex<double> extra = 1.0;
      for (int r = 0; r <= f.depth(); ++r) {
        const auto value = evaluate(comps[static_cast<std::size_t>(r)], tau);
        const auto coeff = std::pow(j, k - r) * extra;
        rhs += coeff * value.value;
        truncation += std::abs(coeff) * value.truncation_error;
        extra *= jc;
      }
      out.push_back(make_residual(id, g, tau, std::abs(lhs.value - rhs), std::abs(rhs), truncation));
    }
  }
  return out;
}

std::vector<Residual> check_almost_holomorphic(const AlmostHolomorphicForm& F, const SamplePlan& plan,
                                               const std::string& name) {
  plan.validate();
  std::vector<Residual> out;
  for (const auto& g : plan.gammas) {
    for (const auto& tau : plan.taus) {
      const auto moved = g.act(tau);
      const auto lhs = evaluate(F, moved);
      const auto factor = std::pow(g.j(tau), F.weight());
      const auto rhs = factor * evaluate(F, tau);
      out.push_back(make_residual(name.empty() ? "almost-holomorphic" : name, g, tau, std::abs(lhs - rhs),
                                  std::abs(rhs),
                                  truncation_error(F, moved) + std::abs(factor) * truncation_error(F, tau)));
    }
  }
  return out;
}

std::vector<Residual> check_vv_components(const std::vector<QSeries>& components, int m, int weight,
                                          const SamplePlan& plan, const std::string& name) {
  plan.validate();
  std::vector<Residual> out;
  for (const auto& g : plan.gammas) {
    const IntegerMatrix rho = sym_matrix(g, m);
    for (const auto& tau : plan.taus) {
      const auto lhs = evaluate_components(components, m, g.act(tau));
      const auto base = evaluate_components(components, m, tau);
      const auto factor = std::pow(g.j(tau), weight);
      std::vector<std::complex<double>> rhs(base.size());
      std::vector<std::complex<double>> diff(base.size());
      for (std::size_t i = 0; i < base.size(); ++i) {
        for (std::size_t j = 0; j < base.size(); ++j) rhs[i] += rho(i, j).get_d() * base[j];
        rhs[i] *= factor;
        diff[i] = lhs[i] - rhs[i];
      }
      double truncation = 0.0;
      for (const auto& c : components) {
        truncation += evaluate(c, g.act(tau)).truncation_error + std::abs(factor) * evaluate(c, tau).truncation_error;
      }
      out.push_back(make_residual(name, g, tau, norm(diff), norm(rhs), truncation));
    }
  }
  return out;
}

std::vector<Residual> check_vv(const VectorValuedForm& F, const SamplePlan& plan, const std::string& name) {
  std::vector<QSeries> comps;
  for (int r = 0; r <= F.source().depth(); ++r) {
    comps.push_back(qexpansion(reduced_component(F.source(), r), plan.precision));
  }
  const std::string id =
      name.empty() ? describe(F.source()) + " @ m=" + std::to_string(F.rank_parameter()) : name;
  return check_vv_components(comps, F.rank_parameter(), F.weight(), plan, id);
}

double max_relative(const std::vector<Residual>& residuals) {
  double worst = 0.0;
  for (const auto& r : residuals) worst = std::max(worst, r.relative);
  return worst;
}

bool all_within(const std::vector<Residual>& residuals, double tolerance) {
  return std::all_of(residuals.begin(), residuals.end(),
                     [tolerance](const Residual& r) { return r.relative < tolerance; });
}

double normalization_self_test() {
  return max_relative(check_quasimodular(QuasiModularForm::E2(), default_plan(), "E2"));
}

std::string to_json_line(const Residual& r) {
  nlohmann::ordered_json j;
  j["form"] = r.form;
  j["gamma"] = {r.gamma.a(), r.gamma.b(), r.gamma.c(), r.gamma.d()};
  j["tau"] = {r.tau.real(), r.tau.imag()};
  j["absolute"] = r.absolute;
  j["relative"] = r.relative;
  j["truncation"] = r.truncation;
  return j.dump();
}

}  // namespace qmf
