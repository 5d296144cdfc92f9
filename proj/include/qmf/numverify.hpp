#ifndef QMF_NUMVERIFY_HPP
#define QMF_NUMVERIFY_HPP

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "qmf/almostholo.hpp"
#include "qmf/qseries.hpp"
#include "qmf/quasimodular.hpp"
#include "qmf/vectorvalued.hpp"

namespace qmf {

inline constexpr double kMinPlanImaginary = 0.3;
inline constexpr double kMinImageImaginary = 0.25;

struct SamplePlan {
  std::vector<std::complex<double>> taus;
  std::vector<GroupElement> gammas;
  double tolerance = 1e-8;
  std::size_t precision = kDefaultPrecision;

  // Throws std::invalid_argument when some tau or g tau is too close to the real axis.
  void validate() const;
};

SamplePlan default_plan();

struct Residual {
  std::string form;
  GroupElement gamma = GroupElement::identity();
  std::complex<double> tau;
  double absolute = 0.0;
  // absolute / max(1, |rhs|)
  double relative = 0.0;
  double truncation = 0.0;
};

// Value and tail estimate of a scalar function at tau.
using ScalarEvaluator = std::function<SeriesValue(std::complex<double>)>;

// f(g tau) - j^k f(tau)
std::vector<Residual> check_scalar(const std::string& name, const ScalarEvaluator& f, int k,
                                   const SamplePlan& plan);

// f(g tau) - sum_r j^{k-r} c^r lambda^r f^r(tau)
std::vector<Residual> check_quasimodular(const QuasiModularForm& f, const SamplePlan& plan,
                                         const std::string& name = "");

// F(g tau) - j^k F(tau) for an almost holomorphic form of weight k.
std::vector<Residual> check_almost_holomorphic(const AlmostHolomorphicForm& F, const SamplePlan& plan,
                                               const std::string& name = "");

// F(g tau) - j^{k-m} Sym^m(g) F(tau) for the V_m-valued form with the given
// reduced components, which need not come from one quasi-modular form.
std::vector<Residual> check_vv_components(const std::vector<QSeries>& components, int m, int weight,
                                          const SamplePlan& plan, const std::string& name);
std::vector<Residual> check_vv(const VectorValuedForm& F, const SamplePlan& plan,
                               const std::string& name = "");

double max_relative(const std::vector<Residual>& residuals);
bool all_within(const std::vector<Residual>& residuals, double tolerance);

// Maximum E2 cocycle residual on the default plan; pins the value of lambda.
double normalization_self_test();

// One JSON object per line.
std::string to_json_line(const Residual& r);

}  // namespace qmf

#endif
