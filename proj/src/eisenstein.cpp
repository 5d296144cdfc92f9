#include "qmf/eisenstein.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

namespace qmf {
namespace {

QSeries divisor_series(long scale, unsigned power, std::size_t precision) {
  std::vector<Rational> coeffs(precision);
  coeffs[0] = 1;
  Integer p;
  for (std::size_t d = 1; d < precision; ++d) {
    mpz_ui_pow_ui(p.get_mpz_t(), d, power);
    for (std::size_t n = d; n < precision; n += d) coeffs[n] += Rational(p);
  }
  for (std::size_t n = 1; n < precision; ++n) coeffs[n] *= scale;
  return QSeries(std::move(coeffs));
}

// Powers of E2, E4, E6 at one precision, grown lazily.
struct PowerTable {
  std::vector<QSeries> powers[3];
};

std::mutex cache_mutex;
std::map<std::size_t, PowerTable> power_cache;

const QSeries& cached_power(PowerTable& table, int which, int exponent, std::size_t precision) {
  auto& list = table.powers[which];
  if (list.empty()) list.push_back(QSeries::constant(1, precision));
  while (static_cast<int>(list.size()) <= exponent) {
    static constexpr Generator kGens[] = {Generator::E2, Generator::E4, Generator::E6};
    list.push_back(list.back() * generator(kGens[which], precision));
  }
  return list[static_cast<std::size_t>(exponent)];
}

}  // namespace

Generator parse_generator(std::string_view name) {
  if (name == "E2") return Generator::E2;
  if (name == "E4") return Generator::E4;
  if (name == "E6") return Generator::E6;
  if (name == "Delta") return Generator::Delta;
  throw std::invalid_argument("unknown generator: " + std::string(name));
}

std::string_view generator_name(Generator g) {
  switch (g) {
    case Generator::E2: return "E2";
    case Generator::E4: return "E4";
    case Generator::E6: return "E6";
    case Generator::Delta: return "Delta";
  }
  return "?";
}

QSeries generator(Generator g, std::size_t precision) {
  if (precision == 0) throw std::invalid_argument("precision must be positive");
  switch (g) {
    case Generator::E2: return divisor_series(-24, 1, precision);
    case Generator::E4: return divisor_series(240, 3, precision);
    case Generator::E6: return divisor_series(-504, 5, precision);
    case Generator::Delta: {
      const QSeries e4 = divisor_series(240, 3, precision);
      const QSeries e6 = divisor_series(-504, 5, precision);
      return (e4 * e4 * e4 - e6 * e6) * Rational(1, 1728);
    }
  }
  throw std::invalid_argument("unknown generator");
}

QSeries eisenstein_monomial(int e2, int e4, int e6, std::size_t precision) {
  if (e2 < 0 || e4 < 0 || e6 < 0) throw std::invalid_argument("negative exponent");
  if (precision == 0) throw std::invalid_argument("precision must be positive");
  std::lock_guard lock(cache_mutex);
  auto& table = power_cache[precision];
  QSeries out = cached_power(table, 0, e2, precision);
  if (e4 > 0) out = out * cached_power(table, 1, e4, precision);
  if (e6 > 0) out = out * cached_power(table, 2, e6, precision);
  return out;
}

std::vector<std::pair<int, int>> monomial_basis(int k) {
  if (k < 0) throw std::invalid_argument("weight must be non-negative");
  std::vector<std::pair<int, int>> out;
  for (int b = 0; 6 * b <= k; ++b) {
    const int rest = k - 6 * b;
    if (rest % 4 == 0) out.emplace_back(rest / 4, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int dim_modular(int k) {
  if (k < 0) throw std::invalid_argument("weight must be non-negative");
  return static_cast<int>(monomial_basis(k).size());
}

int dim_cusp(int k) {
  const int d = dim_modular(k);
  return k >= 4 && d > 0 ? d - 1 : 0;
}

}  // namespace qmf
