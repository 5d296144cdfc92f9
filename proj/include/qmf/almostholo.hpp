#ifndef QMF_ALMOSTHOLO_HPP
#define QMF_ALMOSTHOLO_HPP

#include <complex>
#include <vector>

#include "qmf/qseries.hpp"
#include "qmf/quasimodular.hpp"

namespace qmf {

/// Almost holomorphic modular form sum_r coeffs[r] Y^r in the reduced
/// non-holomorphic variable Y = -3/(pi Im tau).
///
/// The top coefficient is nonzero unless the form is zero, in which case a
/// single zero coefficient is kept to carry the precision.
class AlmostHolomorphicForm {
 public:
  AlmostHolomorphicForm(int weight, std::vector<QSeries> coeffs);

  int weight() const { return weight_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t precision() const { return coeffs_.front().precision(); }
  const std::vector<QSeries>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_.front().is_zero(); }

  friend bool operator==(const AlmostHolomorphicForm& a, const AlmostHolomorphicForm& b);

 private:
  int weight_;
  std::vector<QSeries> coeffs_;
};

AlmostHolomorphicForm completion(const QuasiModularForm& f, std::size_t precision = kDefaultPrecision);

QSeries constant_term(const AlmostHolomorphicForm& F);

// Entry r is completion(f^r), of weight k - 2r.
std::vector<AlmostHolomorphicForm> component_forms(const QuasiModularForm& f,
                                                   std::size_t precision = kDefaultPrecision);

// Forms sum_s parts[s] (-Y)^s and returns its Y^0 coefficient. Throws
// std::invalid_argument on weight or precision mismatch and
// NotHolomorphicError if a positive power of Y survives.
QSeries reconstruct(const std::vector<AlmostHolomorphicForm>& parts, int weight);

// Weight-raising operator: new[r] = D(c_r) + (k - r + 1)/12 c_{r-1}.
AlmostHolomorphicForm raise(const AlmostHolomorphicForm& F);

// Lowering operator: new[r] = (r + 1) c_{r+1}.
AlmostHolomorphicForm lower_op(const AlmostHolomorphicForm& F);

std::complex<double> evaluate(const AlmostHolomorphicForm& F, std::complex<double> tau);

// Sum of the coefficient tail estimates weighted by |Y|^r.
double truncation_error(const AlmostHolomorphicForm& F, std::complex<double> tau);

}  // namespace qmf

#endif
