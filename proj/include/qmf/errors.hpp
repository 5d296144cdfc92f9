#ifndef QMF_ERRORS_HPP
#define QMF_ERRORS_HPP

#include <stdexcept>

namespace qmf {

// recognize(): the series is not the expansion of any candidate form.
struct NoMatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// recognize(): candidate expansions are dependent at the working precision.
struct UnderdeterminedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// reconstruct(): inputs are not the component family of one quasi-modular form.
struct NotHolomorphicError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qmf

#endif
