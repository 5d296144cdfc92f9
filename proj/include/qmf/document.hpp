#ifndef QMF_DOCUMENT_HPP
#define QMF_DOCUMENT_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qmf/almostholo.hpp"
#include "qmf/quasimodular.hpp"
#include "qmf/vectorvalued.hpp"

namespace qmf {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// Malformed JSON or a document that does not match any schema.
struct DocumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parts g_0..g_m of a vector-valued form in the w-basis.
struct WBasisParts {
  int m = 0;
  int weight_label = 0;
  std::vector<QuasiModularForm> parts;
};

using FormDocument =
    std::variant<QuasiModularForm, AlmostHolomorphicForm, VectorValuedForm, ComponentTuple, WBasisParts>;

std::string_view document_kind(const FormDocument& doc);

// {"weight": k, "terms": [{"e2": a, "e4": b, "e6": c, "num": "...", "den": "..."}]}
Json to_json(const QuasiModularForm& f);
QuasiModularForm quasimodular_from_json(const Json& j);

// Coefficient array of rational strings "p" or "p/q".
Json to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

// {"weight": k, "ycoeffs": [[...], ...]}
Json to_json(const AlmostHolomorphicForm& F);
AlmostHolomorphicForm almostholo_from_json(const Json& j);

// {"m": m, "weight_label_k": k, "source": {...}}
Json to_json(const VectorValuedForm& F);
VectorValuedForm vectorvalued_from_json(const Json& j);

// {"format_version": 1, "kind": "...", "form": {...}}
Json to_json(const FormDocument& doc);
// Accepts wrapped documents and bare module objects (detected by their keys).
FormDocument document_from_json(const Json& j);

std::string serialize(const FormDocument& doc);
// Throws DocumentError; JSON syntax errors report the byte position.
FormDocument parse_document(std::string_view text);

}  // namespace qmf

#endif
