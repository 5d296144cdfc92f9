#ifndef QMF_EISENSTEIN_HPP
#define QMF_EISENSTEIN_HPP

#include <string_view>
#include <utility>
#include <vector>

#include "qmf/qseries.hpp"

namespace qmf {

enum class Generator { E2, E4, E6, Delta };

Generator parse_generator(std::string_view name);
std::string_view generator_name(Generator g);

// E2 = 1 - 24 sum sigma_1(n) q^n, E4 = 1 + 240 sum sigma_3(n) q^n,
// E6 = 1 - 504 sum sigma_5(n) q^n, Delta = (E4^3 - E6^2) / 1728.
QSeries generator(Generator g, std::size_t precision = kDefaultPrecision);

// Series of E2^a E4^b E6^c; cached per precision.
QSeries eisenstein_monomial(int e2, int e4, int e6, std::size_t precision = kDefaultPrecision);

// Exponent pairs (a, b) with 4a + 6b = k in lexicographic order.
std::vector<std::pair<int, int>> monomial_basis(int k);

int dim_modular(int k);
int dim_cusp(int k);

}  // namespace qmf

#endif
