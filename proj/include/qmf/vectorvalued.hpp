#ifndef QMF_VECTORVALUED_HPP
#define QMF_VECTORVALUED_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "qmf/almostholo.hpp"
#include "qmf/quasimodular.hpp"

namespace qmf {

// 6/(pi i), the constant in E2(g tau) = j^2 E2(tau) + lambda c j.
const std::complex<double>& cocycle_constant();

/// Integer unimodular matrix [[a, b], [c, d]].
class GroupElement {
 public:
  GroupElement(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  static GroupElement identity() { return {1, 0, 0, 1}; }
  static GroupElement T() { return {1, 1, 0, 1}; }
  static GroupElement S() { return {0, -1, 1, 0}; }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t c() const { return c_; }
  std::int64_t d() const { return d_; }

  GroupElement inverse() const { return {d_, -b_, -c_, a_}; }

  // Factor of automorphy c tau + d; its tau-derivative is c().
  std::complex<double> j(std::complex<double> tau) const;
  Rational j(const Rational& tau) const;
  std::complex<double> act(std::complex<double> tau) const;
  // Mobius action on a rational point; throws std::domain_error at the pole.
  Rational act(const Rational& tau) const;

  friend GroupElement operator*(const GroupElement& x, const GroupElement& y);
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::int64_t a_, b_, c_, d_;
};

class IntegerMatrix {
 public:
  explicit IntegerMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  static IntegerMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  friend IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<Integer> entries_;
};

// Sym^m(g) on the basis e1^{m-i} e2^i, where g e1 = a e1 + c e2, g e2 = b e1 + d e2.
IntegerMatrix sym_matrix(const GroupElement& g, int m);

/// Modular form of weight k - m with values in V_m, stored through its
/// quasi-modular source of weight k and depth <= m.
class VectorValuedForm {
 public:
  VectorValuedForm(QuasiModularForm source, int m, int weight_label);

  int rank_parameter() const { return m_; }
  int weight_label() const { return k_; }
  int weight() const { return k_ - m_; }
  const QuasiModularForm& source() const { return source_; }

  friend bool operator==(const VectorValuedForm&, const VectorValuedForm&) = default;

 private:
  QuasiModularForm source_;
  int m_;
  int k_;
};

VectorValuedForm from_quasimodular(const QuasiModularForm& f, int m);
QuasiModularForm to_quasimodular(const VectorValuedForm& F);

// The form with source E2 at m = 1: E2 (tau, 1) + lambda (1, 0).
VectorValuedForm w_form();

// Coordinates on e1^{m-i} e2^i of sum_r lambda^r f^r(tau) (tau, 1)^{m-r} (1, 0)^r
// given the reduced components f^r as series.
std::vector<std::complex<double>> evaluate_components(const std::vector<QSeries>& components, int m,
                                                      std::complex<double> tau);
std::vector<std::complex<double>> eval_standard(const VectorValuedForm& F, std::complex<double> tau,
                                                std::size_t precision = kDefaultPrecision);

// Coefficient of (tau-bar, 1)^s-type basis vector: completion of f^s.
AlmostHolomorphicForm holwt_component(const VectorValuedForm& F, int s,
                                      std::size_t precision = kDefaultPrecision);

VectorValuedForm embed_i(const VectorValuedForm& F);
// True iff F lies in the image of embed_i (depth(source) <= m - 1).
bool image_test(const VectorValuedForm& F);
// Pre-image under embed_i; throws std::invalid_argument if image_test fails.
VectorValuedForm embed_preimage(const VectorValuedForm& F);

// g_t with source = sum_t g_t E2^t; each g_t modular of weight k - 2t.
std::vector<QuasiModularForm> w_decompose(const VectorValuedForm& F);
VectorValuedForm w_compose(const std::vector<QuasiModularForm>& parts, int m, int k);

// Source g E2^p at rank m; the filtration quotient recovers g.
VectorValuedForm iota_lift(const QuasiModularForm& g, int p, int m);

VectorValuedForm vv_product(const VectorValuedForm& F, const VectorValuedForm& G);

int filtration_degree(const VectorValuedForm& F);

// sum_{t=0}^{m} dim M_{k-2t}
int dim_vv(int k, int m);

// w_compose of monomial bases, one form per basis element.
std::vector<VectorValuedForm> w_basis(int k, int m);

// Exact rank of the stacked expansions of all reduced components of w_basis(k, m).
std::size_t w_basis_rank(int k, int m, std::size_t precision = kDefaultPrecision);

}  // namespace qmf

#endif
