#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "knotwork/knot/seifert.hpp"

namespace knotwork {

struct KnotTableEntry {
  std::string name;
  std::optional<BraidWord> braid;
  std::optional<SeifertMatrix> seifert;
  nlohmann::json expected = nlohmann::json::object();

  /// Seifert matrix for this entry, from the explicit matrix if present.
  SeifertMatrix seifert_matrix() const {
    if (seifert) return *seifert;
    return seifert_matrix_from_braid(*braid);
  }
};

namespace detail {

inline std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

inline BraidWord braid_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("strands") || !j.contains("word"))
    throw ParseError("braid needs 'strands' and 'word'");
  BraidWord b;
  b.strands = j.at("strands").get<int>();
  for (const auto& e : j.at("word")) b.letters.push_back(e.get<int>());
  b.validate();
  return b;
}

inline SeifertMatrix seifert_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("seifert must be an array of rows");
  SeifertMatrix::Rows rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ParseError("seifert row is not an array");
    rows.emplace_back();
    for (const auto& x : r) rows.back().push_back(x.get<std::int64_t>());
  }
  return SeifertMatrix(std::move(rows));
}

}  // namespace detail

/// One entry from a JSON object; `fallback_name` is used when "name" is absent.
inline KnotTableEntry knot_entry_from_json(const nlohmann::json& j, const std::string& fallback_name = "knot") {
  if (!j.is_object()) throw ParseError("knot entry is not an object");
  KnotTableEntry e;
  e.name = j.value("name", fallback_name);
  try {
    if (j.contains("braid")) e.braid = detail::braid_from_json(j.at("braid"));
    if (j.contains("seifert")) e.seifert = detail::seifert_from_json(j.at("seifert"));
    if (!e.braid && !e.seifert) throw ParseError("needs 'braid' or 'seifert'");
    if (e.braid && !e.seifert) {
      if (!closure_is_knot(*e.braid)) throw PreconditionError("closure is a link");
    }
    if (j.contains("expected")) e.expected = j.at("expected");
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError("entry '" + e.name + "': " + ex.what());
  } catch (const ParseError& ex) {
    throw ParseError("entry '" + e.name + "': " + ex.what());
  } catch (const PreconditionError& ex) {
    throw PreconditionError("entry '" + e.name + "': " + ex.what());
  }
  return e;
}

inline std::vector<KnotTableEntry> parse_knot_table_json(const std::string& text) {
  std::vector<KnotTableEntry> out;
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return out;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError("line " + std::to_string(detail::line_of(text, ex.byte)) + ": " + ex.what());
  }
  if (!j.is_array()) throw ParseError("line 1: knot table must be a JSON array");
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(knot_entry_from_json(j[i], "entry" + std::to_string(i)));
  return out;
}

/// CSV with header "name,strands,word"; word is space-separated letters.
inline std::vector<KnotTableEntry> parse_knot_table_csv(const std::string& text) {
  std::vector<KnotTableEntry> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    if (!header) {
      header = true;
      if (line.rfind("name", 0) == 0) continue;
    }
    std::vector<std::string> cols;
    std::stringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ',')) cols.push_back(c);
    if (cols.size() != 3) throw ParseError("line " + std::to_string(lineno) + ": expected 3 columns");
    KnotTableEntry e;
    e.name = cols[0];
    try {
      e.braid = parse_braid("n=" + cols[1] + "; " + cols[2]);
    } catch (const ParseError& ex) {
      throw ParseError("line " + std::to_string(lineno) + ": " + ex.what());
    } catch (const PreconditionError& ex) {
      throw PreconditionError("entry '" + e.name + "': " + ex.what());
    }
    if (!closure_is_knot(*e.braid)) throw PreconditionError("entry '" + e.name + "': closure is a link");
    out.push_back(std::move(e));
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open '" + path + "'");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

/// Loads a knot table; ".csv" files use the CSV layout, everything else JSON.
inline std::vector<KnotTableEntry> load_knot_table(const std::string& path) {
  std::string text = read_file(path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return parse_knot_table_csv(text);
  return parse_knot_table_json(text);
}

}  // namespace knotwork
