#include "qmf/document.hpp"

#include <string>

namespace qmf {
namespace {

[[noreturn]] void bad(const std::string& what) { throw DocumentError("invalid form document: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Integer integer_string(const Json& v, const char* key) {
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a decimal string");
  const auto& s = v.get_ref<const std::string&>();
  Integer out;
  if (s.empty() || out.set_str(s, 10) != 0) bad(std::string("field '") + key + "' is not an integer: " + s);
  return out;
}

Rational rational_string(const Json& v) {
  if (!v.is_string()) bad("series coefficients must be rational strings");
  try {
    return parse_rational(v.get_ref<const std::string&>());
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

std::vector<QuasiModularForm> form_list(const Json& j, const char* key) {
  const Json& list = field(j, key);
  if (!list.is_array()) bad(std::string("field '") + key + "' must be an array");
  std::vector<QuasiModularForm> out;
  for (const auto& item : list) out.push_back(quasimodular_from_json(item));
  return out;
}

Json form_list_json(const std::vector<QuasiModularForm>& forms) {
  Json list = Json::array();
  for (const auto& f : forms) list.push_back(to_json(f));
  return list;
}

template <class Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const DocumentError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

}  // namespace

std::string_view document_kind(const FormDocument& doc) {
  static constexpr std::string_view kNames[] = {"quasimodular", "almostholo", "vectorvalued", "components",
                                                "wbasis"};
  return kNames[doc.index()];
}

Json to_json(const QuasiModularForm& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    terms.push_back({{"e2", m.e2},
                     {"e4", m.e4},
                     {"e6", m.e6},
                     {"num", c.get_num().get_str()},
                     {"den", c.get_den().get_str()}});
  }
  return {{"weight", f.weight()}, {"terms", std::move(terms)}};
}

QuasiModularForm quasimodular_from_json(const Json& j) {
  return guarded([&] {
    const int k = int_field(j, "weight");
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) bad("field 'terms' must be an array");
    QuasiModularForm out(k);
    for (const auto& t : terms) {
      const Integer den = integer_string(field(t, "den"), "den");
      if (den == 0) bad("zero denominator");
      Rational c(integer_string(field(t, "num"), "num"), den);
      c.canonicalize();
      out += QuasiModularForm(k, {{Monomial{int_field(t, "e2"), int_field(t, "e4"), int_field(t, "e6")}, c}});
    }
    return out;
  });
}

Json to_json(const QSeries& s) {
  Json out = Json::array();
  for (const auto& c : s.coefficients()) out.push_back(c.get_str());
  return out;
}

QSeries qseries_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("series must be a non-empty array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_string(c));
  return QSeries(std::move(coeffs));
}

Json to_json(const AlmostHolomorphicForm& F) {
  Json coeffs = Json::array();
  for (const auto& c : F.coefficients()) coeffs.push_back(to_json(c));
  return {{"weight", F.weight()}, {"ycoeffs", std::move(coeffs)}};
}

AlmostHolomorphicForm almostholo_from_json(const Json& j) {
  return guarded([&] {
    const int k = int_field(j, "weight");
    const Json& list = field(j, "ycoeffs");
    if (!list.is_array()) bad("field 'ycoeffs' must be an array");
    std::vector<QSeries> coeffs;
    for (const auto& c : list) coeffs.push_back(qseries_from_json(c));
    return AlmostHolomorphicForm(k, std::move(coeffs));
  });
}

Json to_json(const VectorValuedForm& F) {
  return {{"m", F.rank_parameter()}, {"weight_label_k", F.weight_label()}, {"source", to_json(F.source())}};
}

VectorValuedForm vectorvalued_from_json(const Json& j) {
  return guarded([&] {
    return VectorValuedForm(quasimodular_from_json(field(j, "source")), int_field(j, "m"),
                            int_field(j, "weight_label_k"));
  });
}

Json to_json(const FormDocument& doc) {
  Json body = std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ComponentTuple>) {
          return {{"weight", v.weight}, {"components", form_list_json(v.entries)}};
        } else if constexpr (std::is_same_v<T, WBasisParts>) {
          return {{"m", v.m}, {"weight_label_k", v.weight_label}, {"parts", form_list_json(v.parts)}};
        } else {
          return to_json(v);
        }
      },
      doc);
  return {{"format_version", kFormatVersion}, {"kind", std::string(document_kind(doc))}, {"form", std::move(body)}};
}

FormDocument document_from_json(const Json& j) {
  return guarded([&]() -> FormDocument {
    if (!j.is_object()) bad("expected an object");
    if (j.contains("kind")) {
      if (int_field(j, "format_version") != kFormatVersion) bad("unsupported format_version");
      const Json& kind = field(j, "kind");
      const Json& body = field(j, "form");
      if (!kind.is_string()) bad("field 'kind' must be a string");
      const auto& name = kind.get_ref<const std::string&>();
      if (name == "quasimodular") return quasimodular_from_json(body);
      if (name == "almostholo") return almostholo_from_json(body);
      if (name == "vectorvalued") return vectorvalued_from_json(body);
      if (name == "components") return ComponentTuple{int_field(body, "weight"), form_list(body, "components")};
      if (name == "wbasis") {
        return WBasisParts{int_field(body, "m"), int_field(body, "weight_label_k"), form_list(body, "parts")};
      }
      bad("unknown kind '" + name + "'");
    }
    if (j.contains("source")) return vectorvalued_from_json(j);
    if (j.contains("ycoeffs")) return almostholo_from_json(j);
    if (j.contains("terms")) return quasimodular_from_json(j);
    bad("unrecognized document shape");
  });
}

std::string serialize(const FormDocument& doc) { return to_json(doc).dump(); }

FormDocument parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return document_from_json(j);
}

}  // namespace qmf
