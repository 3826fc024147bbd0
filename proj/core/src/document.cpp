#include "quatype/document.hpp"

#include <cmath>
#include <nlohmann/json.hpp>

#include "quatype/error.hpp"
#include "quatype/expression.hpp"

namespace quatype {

using Json = nlohmann::ordered_json;

std::string to_document(const Multivector& u, int indent) {
  Json doc;
  doc["p"] = u.signature().p();
  doc["q"] = u.signature().q();
  doc["field"] = u.field() == Field::Real ? "R" : "C";
  Json terms = Json::array();
  for (const Term& t : display_order(u)) {
    Json term;
    term["blade"] = t.blade.indices();
    term["re"] = t.coef.real();
    // A real multivector has no imaginary part, not even a negative zero.
    term["im"] = u.field() == Field::Real ? 0.0 : t.coef.imag();
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  return doc.dump(indent);
}

namespace {

[[noreturn]] void schema_error(const std::string& message) {
  throw ParseError("document: " + message, 0);
}

int integer_field(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    schema_error(std::string("'") + key + "' must be an integer");
  }
  return doc[key].get<int>();
}

double number_field(const Json& term, const char* key) {
  if (!term.contains(key)) return 0.0;
  if (!term[key].is_number()) schema_error(std::string("'") + key + "' must be a number");
  const double v = term[key].get<double>();
  if (!std::isfinite(v)) schema_error("non-finite coefficient");
  return v;
}

}  // namespace

Multivector parse_document(std::string_view json) {
  Json doc;
  try {
    doc = Json::parse(json.begin(), json.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("document: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) schema_error("top level must be an object");

  const int p = integer_field(doc, "p");
  const int q = integer_field(doc, "q");
  Signature sig = [&] {
    try {
      return Signature(p, q);
    } catch (const SignatureError& e) {
      schema_error(e.what());
    }
  }();

  if (!doc.contains("field") || !doc["field"].is_string()) schema_error("'field' must be \"R\" or \"C\"");
  const std::string field_text = doc["field"].get<std::string>();
  if (field_text != "R" && field_text != "C") schema_error("'field' must be \"R\" or \"C\"");
  const Field field = field_text == "R" ? Field::Real : Field::Complex;

  if (!doc.contains("terms") || !doc["terms"].is_array()) schema_error("'terms' must be an array");
  std::vector<Term> terms;
  for (const Json& item : doc["terms"]) {
    if (!item.is_object() || !item.contains("blade") || !item["blade"].is_array()) {
      schema_error("each term needs a 'blade' index list");
    }
    std::vector<int> indices;
    for (const Json& idx : item["blade"]) {
      if (!idx.is_number_integer()) schema_error("blade indices must be integers");
      indices.push_back(idx.get<int>());
    }
    Blade blade;
    try {
      blade = Blade::from_indices(indices);
    } catch (const InvalidBlade& e) {
      schema_error(e.what());
    }
    if (!blade.valid_for(sig)) schema_error("blade index exceeds p+q");
    const double re = number_field(item, "re");
    const double im = number_field(item, "im");
    if (field == Field::Real && im != 0.0) schema_error("field \"R\" requires im = 0");
    terms.push_back({blade, Scalar(re, im)});
  }
  try {
    return Multivector(sig, field, std::move(terms));
  } catch (const Error& e) {
    schema_error(e.what());
  }
}

}  // namespace quatype
