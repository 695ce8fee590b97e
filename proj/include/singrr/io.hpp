#pragma once

// Basket JSON documents and table rendering (csv, json, markdown).
//
// Basket document: {"entries": [{"r": 2, "b": 1, "v": 1}, ...]}. Unknown keys
// are rejected at both levels.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "singrr/basket.hpp"
#include "singrr/classify.hpp"

namespace singrr {

/// Malformed or invalid basket document.
class BasketFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::int64_t require_int(const nlohmann::json& obj, const char* key, std::size_t index) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw BasketFormatError("entries[" + std::to_string(index) + "]: missing key \"" + key + "\"");
  if (!it->is_number_integer())
    throw BasketFormatError("entries[" + std::to_string(index) + "]: \"" + key + "\" must be an integer");
  return it->get<std::int64_t>();
}

}  // namespace detail

/// Parses and normalizes a basket document. Normalization notices are appended
/// to `notices`. Throws BasketFormatError.
inline Basket parse_basket_json(std::string_view text, std::vector<std::string>& notices) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw BasketFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw BasketFormatError("basket document must be a JSON object");
  for (const auto& item : doc.items())
    if (item.key() != "entries") throw BasketFormatError("unknown key \"" + item.key() + "\"");
  auto entries = doc.find("entries");
  if (entries == doc.end()) throw BasketFormatError("missing key \"entries\"");
  if (!entries->is_array()) throw BasketFormatError("\"entries\" must be an array");

  std::vector<RawEntry> raw;
  for (std::size_t k = 0; k < entries->size(); ++k) {
    const auto& obj = (*entries)[k];
    if (!obj.is_object()) throw BasketFormatError("entries[" + std::to_string(k) + "] must be an object");
    for (const auto& item : obj.items())
      if (item.key() != "r" && item.key() != "b" && item.key() != "v")
        throw BasketFormatError("entries[" + std::to_string(k) + "]: unknown key \"" + item.key() + "\"");
    raw.push_back({detail::require_int(obj, "r", k), detail::require_int(obj, "b", k),
                   detail::require_int(obj, "v", k)});
  }
  try {
    return normalize_basket(raw, notices);
  } catch (const std::invalid_argument& e) {
    throw BasketFormatError(e.what());
  }
}

inline Basket read_basket_file(const std::string& path, std::vector<std::string>& notices) {
  std::ifstream in(path);
  if (!in) throw BasketFormatError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_basket_json(buf.str(), notices);
}

inline nlohmann::json to_json(const Basket& basket) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : basket) entries.push_back({{"r", e.r()}, {"b", e.b()}, {"v", e.v()}});
  return {{"entries", entries}};
}

/// Stage-J rows carry no b, so their entries are {"r", "v"} only.
inline nlohmann::json to_json(const JPairs& pairs) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& p : pairs) entries.push_back({{"r", p.r}, {"v", p.v}});
  return {{"entries", entries}};
}

enum class Stage { J, JTilde };

enum class OutputFormat { Json, Csv, Markdown };

inline std::string stage_name(Stage stage) { return stage == Stage::J ? "J" : "Jtilde"; }

/// Table rendering. Tuples are written (r,v) or (r,v,b).
inline std::string render_table(const std::vector<ClassificationRow>& rows, Stage stage, OutputFormat format) {
  auto tuples = [&](const ClassificationRow& row, std::string_view sep) {
    std::string out;
    if (stage == Stage::JTilde && row.basket) {
      for (const auto& e : *row.basket) {
        if (!out.empty()) out += sep;
        out += to_string(e);
      }
    } else {
      for (const auto& p : row.pairs) {
        if (!out.empty()) out += sep;
        out += to_string(p);
      }
    }
    return out;
  };

  std::ostringstream os;
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::json doc = {{"stage", stage_name(stage)}, {"rows", nlohmann::json::array()}};
      for (const auto& row : rows) {
        doc["rows"].push_back({{"type", row.label},
                               {"r_P", row.r_p},
                               {"verified", row.verified},
                               {"basket", stage == Stage::JTilde && row.basket ? to_json(*row.basket)
                                                                               : to_json(row.pairs)}});
      }
      os << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      os << "type,basket,r_P\n";
      for (const auto& row : rows) os << row.label << ",\"" << tuples(row, ";") << "\"," << row.r_p << '\n';
      break;
    case OutputFormat::Markdown: {
      os << "| type | " << (stage == Stage::J ? "J" : "J~") << " | r_P |\n";
      os << "|---|---|---|\n";
      for (const auto& row : rows) {
        const std::string cell = tuples(row, ", ");
        os << "| " << row.label << " | " << (cell.empty() ? "\xE2\x88\x85" : cell) << " | " << row.r_p << " |\n";
      }
      break;
    }
  }
  return os.str();
}

}  // namespace singrr
