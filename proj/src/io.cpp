#include "rcq/io.hpp"

#include <fstream>
#include <sstream>

#include "rcq/error.hpp"

namespace rcq {

namespace {

ordered_json rows_json(std::vector<Elem> const& data, std::size_t n) {
  ordered_json rows = ordered_json::array();
  for (std::size_t s = 0; s < n; ++s) {
    ordered_json row = ordered_json::array();
    for (std::size_t t = 0; t < n; ++t) {
      row.push_back(data[s * n + t]);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> names_from(nlohmann::json const& j) {
  if (!j.is_object() || !j.contains("names") || !j["names"].is_array()) {
    throw ParseError("expected an object with a \"names\" array");
  }
  std::vector<std::string> names;
  for (auto const& x : j["names"]) {
    if (!x.is_string()) {
      throw ParseError("element labels must be strings");
    }
    names.push_back(x.get<std::string>());
  }
  return names;
}

std::vector<Elem> rows_from(nlohmann::json const& j, char const* key, std::size_t n) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("missing \"") + key + "\" array");
  }
  auto const& rows = j[key];
  if (rows.size() != n) {
    throw StructuralError(std::string("\"") + key + "\" has " + std::to_string(rows.size())
                          + " rows, expected " + std::to_string(n));
  }
  std::vector<Elem> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (!rows[s].is_array() || rows[s].size() != n) {
      throw StructuralError(std::string("\"") + key + "\" row " + std::to_string(s)
                            + " does not have " + std::to_string(n) + " entries");
    }
    for (auto const& v : rows[s]) {
      if (!v.is_number_integer() || v.get<long long>() < 0
          || v.get<long long>() >= static_cast<long long>(n)) {
        throw StructuralError(std::string("\"") + key + "\" row " + std::to_string(s)
                              + " has an entry outside 0.." + std::to_string(n - 1));
      }
      out.push_back(v.get<Elem>());
    }
  }
  return out;
}

}  // namespace

ordered_json table_to_json(OpTable const& table, bool include_lop) {
  ordered_json j;
  j["names"] = table.names();
  j["op"] = rows_json(table.op_data(), table.size());
  if (include_lop && table.has_lop()) {
    j["lop"] = rows_json(table.lop_data(), table.size());
  }
  return j;
}

OpTable table_from_json(nlohmann::json const& j) {
  auto names = names_from(j);
  std::size_t n = names.size();
  auto op = rows_from(j, "op", n);
  OpTable t(std::move(names), std::move(op));
  if (j.contains("lop")) {
    t = t.with_lop(rows_from(j, "lop", n));
  }
  return t;
}

OpTable read_table_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (nlohmann::json::parse_error const& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
  return table_from_json(j);
}

ordered_json ybe_to_json(YbeSolution const& rho) {
  ordered_json j;
  j["names"] = rho.names;
  j["rho1"] = rows_json(rho.rho1, rho.size());
  j["rho2"] = rows_json(rho.rho2, rho.size());
  return j;
}

YbeSolution ybe_from_json(nlohmann::json const& j) {
  auto names = names_from(j);
  std::size_t n = names.size();
  return YbeSolution{names, rows_from(j, "rho1", n), rows_from(j, "rho2", n)};
}

ordered_json birack_to_json(Birack const& b) {
  ordered_json j;
  j["names"] = b.names;
  j["up"] = rows_json(b.up, b.size());
  j["down"] = rows_json(b.down, b.size());
  return j;
}

Birack birack_from_json(nlohmann::json const& j) {
  auto names = names_from(j);
  std::size_t n = names.size();
  return Birack{names, rows_from(j, "up", n), rows_from(j, "down", n)};
}

Word parse_word(OpTable const& table, std::string_view text) {
  Word w;
  for (auto const& l : parse_group_word(table, text)) {
    if (l.inverse) {
      throw ParseError("inverse letters are not allowed in monoid words");
    }
    w.push_back(l.gen);
  }
  return w;
}

std::string format_word(OpTable const& table, Word const& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += table.name(w[i]);
  }
  return out;
}

GroupWord parse_group_word(OpTable const& table, std::string_view text) {
  GroupWord w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "1") {
      continue;
    }
    bool inv = false;
    if (tok.size() > 1 && tok.back() == '\'') {
      inv = true;
      tok.pop_back();
    }
    try {
      w.push_back({table.index_of(tok), inv});
    } catch (StructuralError const&) {
      throw ParseError("unknown letter '" + tok + "'");
    }
  }
  return w;
}

}  // namespace rcq
