#ifndef QMF_EXPRESSION_HPP
#define QMF_EXPRESSION_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "qmf/quasimodular.hpp"

namespace qmf {

struct ExpressionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parses expressions such as "E2^2*E4 + 3*E4^2" or "(E4^3 - E6^2)/1728".
// Atoms are E2, E4, E6, Delta and integers; operators + - * / ^ and
// parentheses. Division is by nonzero constants only. The weight is inferred
// and a sum of different weights is rejected.
QuasiModularForm parse_expression(std::string_view text);

// Inverse of parse_expression up to term order, e.g. "E2^2*E4 + 3/2*E6^2".
std::string format_expression(const QuasiModularForm& f);

}  // namespace qmf

#endif
