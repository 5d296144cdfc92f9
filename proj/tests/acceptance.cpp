// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qmf/almostholo.hpp"
#include "qmf/eisenstein.hpp"
#include "qmf/errors.hpp"
#include "qmf/numverify.hpp"
#include "qmf/vectorvalued.hpp"

using namespace qmf;

namespace {

constexpr double kTolerance = 1e-8;
constexpr double kNegativeControl = 1e-3;
constexpr std::size_t kPrecision = 64;

const QuasiModularForm E2 = QuasiModularForm::E2();
const QuasiModularForm E4 = QuasiModularForm::E4();
const QuasiModularForm E6 = QuasiModularForm::E6();

struct Outcome {
  bool passed;
  std::string detail;
};

int failures = 0;

void run(const char* id, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out{false, ""};
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!out.passed) ++failures;
  std::printf("[%s] %s %s: %s (%.2f s)\n", out.passed ? "PASS" : "FAIL", id, title, out.detail.c_str(), seconds);
  std::fflush(stdout);
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::vector<QuasiModularForm> random_forms(unsigned seed, int count, int max_weight = 24, int max_depth = 6) {
  std::mt19937 rng(seed);
  std::vector<QuasiModularForm> out;
  for (int i = 0; i < count; ++i) out.push_back(oracle::random_form(rng, max_weight, max_depth));
  return out;
}

std::vector<QuasiModularForm> monomials_up_to(int max_weight) {
  std::vector<QuasiModularForm> out;
  for (int k = 0; k <= max_weight; k += 2) {
    for (const auto& m : quasimodular_monomials(k, k / 2)) out.push_back(QuasiModularForm::monomial(m));
  }
  return out;
}

}  // namespace

int main() {
  const SamplePlan plan = default_plan();

  run("AC1", "normalization self-test (E2 cocycle)", [&] {
    const auto start = std::chrono::steady_clock::now();
    const double worst = max_relative(check_quasimodular(E2, plan, "E2"));
    const double seconds = elapsed_since(start);
    return Outcome{worst < kTolerance && seconds < 1.0,
                   "max residual " + sci(worst) + " < 1e-8, runtime " + sci(seconds) + " s < 1 s"};
  });

  run("AC2", "almost holomorphic E2* weight-2 law", [&] {
    const double worst = max_relative(check_almost_holomorphic(completion(E2, kPrecision), plan, "E2*"));
    return Outcome{worst < kTolerance, "max residual " + sci(worst) + " < 1e-8"};
  });

  run("AC3", "vector-valued modularity battery", [&] {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    int forms = 0;
    for (const auto& f : monomials_up_to(16)) {
      for (int m = f.depth(); m <= f.depth() + 2; ++m) {
        worst = std::max(worst, max_relative(check_vv(from_quasimodular(f, m), plan)));
        ++forms;
      }
    }
    const double seconds = elapsed_since(start);
    return Outcome{worst < kTolerance && seconds < 30.0,
                   std::to_string(forms) + " forms, max residual " + sci(worst) + " < 1e-8, runtime " +
                       sci(seconds) + " s < 30 s"};
  });

  run("AC4", "exact round trips", [&] {
    auto forms = random_forms(404, 200);
    for (const auto& f : monomials_up_to(24)) {
      if (f.depth() <= 6) forms.push_back(f);
    }
    int bad = 0;
    for (const auto& f : forms) {
      if (reconstruct(component_forms(f, kPrecision), f.weight()) != qexpansion(f, kPrecision)) ++bad;
      for (int m = f.depth(); m <= f.depth() + 1; ++m) {
        const auto F = from_quasimodular(f, m);
        if (to_quasimodular(F) != f) ++bad;
        if (w_compose(w_decompose(F), m, F.weight_label()) != F) ++bad;
      }
      if (recognize(qexpansion(f, kPrecision), f.weight(), 6) != f) ++bad;
    }
    return Outcome{bad == 0, std::to_string(forms.size()) + " forms, " + std::to_string(bad) + " mismatches"};
  });

  run("AC5", "nested reduced components", [&] {
    int checks = 0, bad = 0;
    for (const auto& f : random_forms(505, 200)) {
      for (int r = 0; r <= f.depth(); ++r) {
        for (int s = 0; r + s <= f.depth() + 1; ++s) {
          ++checks;
          if (reduced_component(reduced_component(f, r), s) != binomial(r + s, r) * reduced_component(f, r + s)) ++bad;
        }
      }
    }
    return Outcome{bad == 0, std::to_string(checks) + " identities, " + std::to_string(bad) + " failures"};
  });

  run("AC6", "product structure", [&] {
    const auto lhs = random_forms(606, 100, 12, 3);
    const auto rhs = random_forms(607, 100, 12, 3);
    int bad = 0;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      const auto& f = lhs[i];
      const auto& g = rhs[i];
      const auto h = f * g;
      for (int t = 0; t <= h.depth(); ++t) {
        QuasiModularForm conv(h.weight() - 2 * t);
        for (int r = 0; r <= t; ++r) conv += reduced_component(f, r) * reduced_component(g, t - r);
        if (reduced_component(h, t) != conv) ++bad;
      }
      const auto F = from_quasimodular(f, f.depth());
      const auto G = from_quasimodular(g, g.depth() + 1);
      if (vv_product(embed_i(F), G) != vv_product(F, embed_i(G))) ++bad;
      if (vv_product(embed_i(F), G) != embed_i(vv_product(F, G))) ++bad;
    }
    return Outcome{bad == 0, "100 pairs, " + std::to_string(bad) + " failures"};
  });

  run("AC7", "sl2 relations and intertwining", [&] {
    // The constant c in [lower, D] = c H, read off from E2, E4 and E2^2.
    std::vector<Rational> constants;
    for (const auto& f : {E2, E4, E2 * E2}) {
      const auto bracket = lower(derive(f)) - derive(lower(f));
      const auto& [mono, coeff] = *bracket.terms().begin();
      constants.push_back(coeff / (Rational(f.weight()) * f.coefficient(mono)));
    }
    const Rational c = constants.front();
    bool ok = constants[1] == c && constants[2] == c;
    int bad = 0;
    for (const auto& f : monomials_up_to(16)) {
      if (weight_op(derive(f)) - derive(weight_op(f)) != Rational(2) * derive(f)) ++bad;
      if (weight_op(lower(f)) - lower(weight_op(f)) != Rational(-2) * lower(f)) ++bad;
      if (lower(derive(f)) - derive(lower(f)) != c * weight_op(f)) ++bad;
    }
    for (const auto& f : random_forms(707, 60, 20, 5)) {
      if (lower_op(completion(f, kPrecision)) != completion(lower(f), kPrecision)) ++bad;
    }
    ok = ok && bad == 0;
    return Outcome{ok, "c = " + c.get_str() + ", " + std::to_string(bad) + " failures"};
  });

  run("AC8", "derivative lift", [&] {
    int bad = 0;
    for (const auto& g : {E4, E6, QuasiModularForm::Delta(), E4 * E6}) {
      for (int p = 0; p <= 3; ++p) {
        if (derivative_lift(g, p) != components(derive(g, p))) ++bad;
      }
    }
    return Outcome{bad == 0, "16 cases, " + std::to_string(bad) + " failures"};
  });

  run("AC9", "dimension formula", [&] {
    int bad = 0;
    for (int k = 0; k <= 24; k += 2) {
      for (int m = 0; m <= 4; ++m) {
        int sum = 0;
        for (int t = 0; t <= m && k - 2 * t >= 0; ++t) sum += dim_modular(k - 2 * t);
        const int dim = dim_vv(k, m);
        if (dim != sum || w_basis_rank(k, m, kPrecision) != static_cast<std::size_t>(dim)) ++bad;
      }
    }
    const int spot = dim_vv(12, 2);
    return Outcome{bad == 0 && spot == 4,
                   "65 cells, " + std::to_string(bad) + " mismatches, dim_vv(12, 2) = " + std::to_string(spot)};
  });

  run("AC10", "i_m image criterion", [&] {
    int bad = 0, in_image = 0;
    std::mt19937 rng(1010);
    for (const auto& f : random_forms(1011, 100, 20, 4)) {
      const int m = std::max(1, f.depth() + static_cast<int>(rng() % 2));
      const auto F = from_quasimodular(f, m);
      bool constructed = false;
      try {
        const VectorValuedForm pre(F.source(), m - 1, F.weight_label());
        constructed = embed_i(pre) == F;
      } catch (const std::invalid_argument&) {
        constructed = false;
      }
      if (image_test(F) != constructed) ++bad;
      in_image += constructed ? 1 : 0;
    }
    const bool w_negative = !image_test(w_form());
    return Outcome{bad == 0 && w_negative, "100 forms (" + std::to_string(in_image) + " in image), " +
                                               std::to_string(bad) + " disagreements, w at m=1 " +
                                               (w_negative ? "not in image" : "WRONGLY in image")};
  });

  run("AC11", "negative controls", [&] {
    const QSeries e2 = qexpansion(E2, kPrecision);
    const double scalar = max_relative(
        check_scalar("E2", [&e2](std::complex<double> tau) { return evaluate(e2, tau); }, 2, plan));
    auto parts = component_forms(E2 * E2, kPrecision);
    parts[1] = completion(Rational(3) * E2, kPrecision);
    bool rejected = false;
    try {
      reconstruct(parts, 4);
    } catch (const NotHolomorphicError&) {
      rejected = true;
    }
    return Outcome{scalar > kNegativeControl && rejected,
                   "E2 as weight 2: residual " + sci(scalar) + " > 1e-3; corrupted tuple " +
                       (rejected ? "rejected as not holomorphic" : "ACCEPTED")};
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
