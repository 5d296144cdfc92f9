// qmf: expand, convert, verify and tabulate quasi-modular and vector-valued
// modular forms for SL2(Z).
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qmf/document.hpp"
#include "qmf/eisenstein.hpp"
#include "qmf/expression.hpp"
#include "qmf/numverify.hpp"

namespace {

using namespace qmf;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FormDocument load_form(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') return parse_document(arg);
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
  }
  return parse_expression(arg);
}

std::string format_series(const QSeries& s) {
  std::string out;
  const auto coeffs = s.coefficients();
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    const Rational& c = coeffs[n];
    if (c == 0) continue;
    const Rational magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (n == 0 || magnitude != 1) out += magnitude.get_str();
    if (n >= 1) out += 'q';
    if (n >= 2) out += '^' + std::to_string(n);
  }
  return out.empty() ? "0" : out;
}

QuasiModularForm as_quasimodular(const FormDocument& doc) {
  struct Visitor {
    QuasiModularForm operator()(const QuasiModularForm& f) const { return f; }
    QuasiModularForm operator()(const VectorValuedForm& F) const { return to_quasimodular(F); }
    QuasiModularForm operator()(const WBasisParts& w) const {
      return to_quasimodular(w_compose(w.parts, w.m, w.weight_label));
    }
    QuasiModularForm operator()(const ComponentTuple& t) const {
      if (t.entries.empty()) throw UsageError("empty component tuple");
      const QuasiModularForm& f = t.entries.front();
      if (!(components(f) == ComponentTuple{t.weight, t.entries})) {
        throw UsageError("component tuple is not the components of its first entry");
      }
      return f;
    }
    QuasiModularForm operator()(const AlmostHolomorphicForm& F) const {
      const QuasiModularForm f = recognize(constant_term(F), F.weight(), F.degree());
      if (!(completion(f, F.precision()) == F)) {
        throw UsageError("almost holomorphic form is not the completion of a quasi-modular form");
      }
      return f;
    }
  };
  return std::visit(Visitor{}, doc);
}

std::optional<int> document_rank(const FormDocument& doc) {
  if (const auto* F = std::get_if<VectorValuedForm>(&doc)) return F->rank_parameter();
  if (const auto* w = std::get_if<WBasisParts>(&doc)) return w->m;
  return std::nullopt;
}

std::complex<double> parse_tau(std::string text) {
  std::erase_if(text, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  if (text.empty() || text.back() != 'i') throw UsageError("tau must look like x+yi: " + text);
  text.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') split = i;
  }
  auto number = [&](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw UsageError("bad number in tau: " + s);
    }
    if (used != s.size()) throw UsageError("bad number in tau: " + s);
    return v;
  };
  if (split == std::string::npos) return {0.0, number(text)};
  return {number(text.substr(0, split)), number(text.substr(split))};
}

GroupElement parse_gamma(const std::string& text) {
  std::vector<std::int64_t> entries;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      entries.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("gamma entries must be integers: " + text);
    }
  }
  if (entries.size() != 4) throw UsageError("gamma must be a,b,c,d: " + text);
  try {
    return GroupElement(entries[0], entries[1], entries[2], entries[3]);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()) + ": " + text);
  }
}

int run_expand(const std::string& arg, std::size_t precision, bool json) {
  const FormDocument doc = load_form(arg);
  std::vector<std::pair<std::string, QSeries>> rows;
  if (const auto* F = std::get_if<AlmostHolomorphicForm>(&doc)) {
    const std::size_t n = std::min(precision, F->precision());
    for (int r = 0; r <= F->degree(); ++r) {
      rows.emplace_back("Y^" + std::to_string(r), F->coefficients()[static_cast<std::size_t>(r)].truncated(n));
    }
  } else if (const auto* t = std::get_if<ComponentTuple>(&doc)) {
    for (std::size_t r = 0; r < t->entries.size(); ++r) {
      rows.emplace_back("f" + std::to_string(r), qexpansion(t->entries[r], precision));
    }
  } else if (const auto* w = std::get_if<WBasisParts>(&doc)) {
    for (std::size_t r = 0; r < w->parts.size(); ++r) {
      rows.emplace_back("g" + std::to_string(r), qexpansion(w->parts[r], precision));
    }
  } else if (const auto* V = std::get_if<VectorValuedForm>(&doc)) {
    for (int r = 0; r <= V->rank_parameter(); ++r) {
      rows.emplace_back("f" + std::to_string(r), qexpansion(reduced_component(V->source(), r), precision));
    }
  } else {
    rows.emplace_back("", qexpansion(std::get<QuasiModularForm>(doc), precision));
  }

  if (json) {
    Json out = Json::array();
    for (const auto& [label, s] : rows) out.push_back(to_json(s));
    std::cout << (rows.size() == 1 && rows.front().first.empty() ? out.front() : out).dump() << "\n";
    return kExitOk;
  }
  for (const auto& [label, s] : rows) {
    if (!label.empty()) std::cout << label << ": ";
    std::cout << format_series(s) << "\n";
  }
  return kExitOk;
}

int run_convert(const std::string& arg, const std::string& target, std::optional<int> rank,
                std::size_t precision) {
  const FormDocument doc = load_form(arg);
  const QuasiModularForm f = as_quasimodular(doc);
  const int m = rank.value_or(document_rank(doc).value_or(f.depth()));
  FormDocument out;
  if (target == "quasimodular") {
    out = f;
  } else if (target == "components") {
    out = components(f);
  } else if (target == "completion") {
    const auto* F = std::get_if<AlmostHolomorphicForm>(&doc);
    out = completion(f, F ? F->precision() : precision);
  } else if (target == "vvmf") {
    out = from_quasimodular(f, m);
  } else if (target == "wbasis") {
    const VectorValuedForm F = from_quasimodular(f, m);
    out = WBasisParts{m, F.weight_label(), w_decompose(F)};
  } else {
    throw UsageError("unknown conversion target: " + target);
  }
  std::cout << serialize(out) << "\n";
  return kExitOk;
}

int run_verify(const std::string& arg, const std::vector<std::string>& taus,
               const std::vector<std::string>& gammas, double tolerance, std::optional<int> as_weight,
               std::size_t precision) {
  const FormDocument doc = load_form(arg);

  SamplePlan plan = default_plan();
  plan.tolerance = tolerance;
  plan.precision = precision;
  if (!taus.empty()) {
    plan.taus.clear();
    for (const auto& t : taus) {
      const auto tau = parse_tau(t);
      if (!(tau.imag() > 0.0)) throw UsageError("tau must have positive imaginary part: " + t);
      plan.taus.push_back(tau);
    }
  }
  if (!gammas.empty()) {
    plan.gammas.clear();
    for (const auto& g : gammas) plan.gammas.push_back(parse_gamma(g));
  }
  try {
    plan.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const double self_test = normalization_self_test();
  if (!(self_test < 1e-8)) {
    std::cerr << "normalization self-test failed: E2 cocycle residual " << self_test << "\n";
    return kExitFailed;
  }

  std::vector<Residual> residuals;
  if (as_weight) {
    ScalarEvaluator eval;
    if (const auto* F = std::get_if<AlmostHolomorphicForm>(&doc)) {
      eval = [F](std::complex<double> tau) {
        return SeriesValue{evaluate(*F, tau), truncation_error(*F, tau)};
      };
    } else {
      const QSeries s = qexpansion(as_quasimodular(doc), plan.precision);
      eval = [s](std::complex<double> tau) { return evaluate(s, tau); };
    }
    residuals = check_scalar(arg, eval, *as_weight, plan);
  } else if (const auto* F = std::get_if<AlmostHolomorphicForm>(&doc)) {
    residuals = check_almost_holomorphic(*F, plan, arg);
  } else if (const auto* V = std::get_if<VectorValuedForm>(&doc)) {
    residuals = check_vv(*V, plan, arg);
  } else if (const auto* w = std::get_if<WBasisParts>(&doc)) {
    residuals = check_vv(w_compose(w->parts, w->m, w->weight_label), plan, arg);
  } else {
    residuals = check_quasimodular(as_quasimodular(doc), plan, arg);
  }

  for (const auto& r : residuals) std::cout << to_json_line(r) << "\n";
  const double worst = max_relative(residuals);
  const bool ok = all_within(residuals, plan.tolerance);
  char summary[128];
  std::snprintf(summary, sizeof summary, "%s: max relative residual %.12g over %zu samples (tolerance %.12g)",
                ok ? "PASS" : "FAIL", worst, residuals.size(), plan.tolerance);
  std::cerr << summary << "\n";
  return ok ? kExitOk : kExitFailed;
}

int run_dims(int kmax, int mmax, bool json) {
  if (kmax < 0 || mmax < 0) throw UsageError("--kmax and --mmax must be non-negative");
  bool consistent = true;
  Json table = Json::array();
  std::ostringstream text;
  text << "k\\m";
  for (int m = 0; m <= mmax; ++m) text << "\t" << m;
  text << "\n";
  for (int k = 0; k <= kmax; k += 2) {
    text << k;
    Json row = Json::array();
    for (int m = 0; m <= mmax; ++m) {
      const int dim = dim_vv(k, m);
      const auto basis_rank = w_basis_rank(k, m);
      if (basis_rank != static_cast<std::size_t>(dim)) {
        consistent = false;
        std::cerr << "dimension mismatch at k=" << k << ", m=" << m << ": formula " << dim << ", basis rank "
                  << basis_rank << "\n";
      }
      text << "\t" << dim;
      row.push_back(dim);
    }
    text << "\n";
    table.push_back({{"k", k}, {"dims", std::move(row)}});
  }
  std::cout << (json ? table.dump() + "\n" : text.str());
  return consistent ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-modular, almost holomorphic and vector-valued modular forms for SL2(Z)"};
  app.require_subcommand(1);

  std::string form;
  std::size_t precision = kDefaultPrecision;
  bool json = false;

  auto* expand = app.add_subcommand("expand", "Print the q-expansion of a form");
  expand->add_option("form", form, "Expression, inline JSON or JSON file")->required();
  expand->add_option("--precision", precision, "Number of q-coefficients")->check(CLI::PositiveNumber);
  expand->add_flag("--json", json, "Print coefficient arrays as JSON");

  std::string target;
  std::optional<int> rank;
  auto* convert = app.add_subcommand("convert", "Convert between representations");
  convert->add_option("form", form, "Expression, inline JSON or JSON file")->required();
  convert->add_option("--to", target, "Target representation")
      ->required()
      ->check(CLI::IsMember({"components", "completion", "vvmf", "wbasis", "quasimodular"}));
  convert->add_option("--rank", rank, "Rank parameter m of V_m")->check(CLI::NonNegativeNumber);
  convert->add_option("--precision", precision, "Number of q-coefficients")->check(CLI::PositiveNumber);

  std::vector<std::string> taus;
  std::vector<std::string> gammas;
  double tolerance = 1e-8;
  std::optional<int> as_weight;
  auto* verify = app.add_subcommand("verify", "Check the transformation law numerically");
  verify->add_option("form", form, "Expression, inline JSON or JSON file")->required();
  verify->add_option("--tau", taus, "Sample point x+yi (repeatable)");
  verify->add_option("--gamma", gammas, "Group element a,b,c,d (repeatable)");
  verify->add_option("--tolerance", tolerance, "Relative residual bound")->check(CLI::PositiveNumber);
  verify->add_option("--as-weight", as_weight, "Check as a scalar modular form of this weight");
  verify->add_option("--precision", precision, "Number of q-coefficients")->check(CLI::PositiveNumber);

  int kmax = 12;
  int mmax = 2;
  auto* dims = app.add_subcommand("dims", "Tabulate dimensions of V_m-valued modular forms");
  dims->add_option("--kmax", kmax, "Largest weight label k");
  dims->add_option("--mmax", mmax, "Largest rank parameter m");
  dims->add_flag("--json", json, "Print the table as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*expand) return run_expand(form, precision, json);
    if (*convert) return run_convert(form, target, rank, precision);
    if (*verify) return run_verify(form, taus, gammas, tolerance, as_weight, precision);
    if (*dims) return run_dims(kmax, mmax, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
