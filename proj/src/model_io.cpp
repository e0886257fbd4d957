#include "picardlab/model_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace picardlab::model_io {

using json = nlohmann::ordered_json;
using zlin::Int;
using zlin::IntMatrix;
using zlin::IntVec;

namespace {

Int int_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ModelParseError(where + ": expected an integer");
}

IntVec vec_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw ModelParseError(where + ": expected an array of integers");
  IntVec v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(int_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

IntMatrix matrix_from_json(const json& j, int rows, int cols, const std::string& where) {
  if (!j.is_array()) throw ModelParseError(where + ": expected an array of rows");
  if (static_cast<int>(j.size()) != rows)
    throw ModelParseError(where + ": expected " + std::to_string(rows) + " rows, got " +
                          std::to_string(j.size()));
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto row = vec_from_json(j[static_cast<std::size_t>(i)],
                                   where + "[" + std::to_string(i) + "]");
    if (static_cast<int>(row.size()) != cols)
      throw ModelParseError(where + "[" + std::to_string(i) + "]: expected " +
                            std::to_string(cols) + " entries, got " +
                            std::to_string(row.size()));
    for (int k = 0; k < cols; ++k) m.at(i, k) = row[static_cast<std::size_t>(k)];
  }
  return m;
}

zlin::FgAbelianGroup group_from_json(const json& j, const std::string& where) {
  const auto factors = vec_from_json(j, where);
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i] < 0 || factors[i] == 1)
      throw ModelParseError(where + "[" + std::to_string(i) +
                            "]: invariant factors are 0 or >= 2");
  try {
    return zlin::FgAbelianGroup(factors);
  } catch (const std::exception& e) {
    throw ModelParseError(where + ": " + e.what());
  }
}

}  // namespace

ModelFile parse_model_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ModelParseError("top level: expected an object");
  for (const auto& [key, _] : j.items())
    if (key != "A" && key != "B" && key != "d" && key != "skeletal" && key != "seed")
      throw ModelParseError("unknown field \"" + key + "\"");
  if (!j.contains("A")) throw ModelParseError("missing field \"A\"");
  if (!j.contains("B")) throw ModelParseError("missing field \"B\"");
  if (!j.contains("d")) throw ModelParseError("missing field \"d\"");

  ModelFile out;
  const auto a = group_from_json(j["A"], "A");
  const auto b = group_from_json(j["B"], "B");
  const auto d = matrix_from_json(j["d"], b.size(), a.size(), "d");
  try {
    out.complex = complexes::make_complex(a, b, d);
  } catch (const std::exception& e) {
    throw ModelParseError(std::string("d: ") + e.what());
  }

  if (j.contains("skeletal")) {
    const auto& sk = j["skeletal"];
    if (!sk.is_object()) throw ModelParseError("skeletal: expected an object");
    for (const auto& [key, _] : sk.items())
      if (key != "section" && key != "g")
        throw ModelParseError("unknown field \"skeletal." + key + "\"");
    picard::SkeletalConfig cfg;
    if (sk.contains("section") && !(sk["section"].is_string() && sk["section"] == "auto")) {
      const auto& sec = sk["section"];
      if (!sec.is_array()) throw ModelParseError("skeletal.section: expected \"auto\" or an array");
      std::vector<std::pair<IntVec, IntVec>> table;
      for (std::size_t i = 0; i < sec.size(); ++i) {
        const std::string where = "skeletal.section[" + std::to_string(i) + "]";
        if (!sec[i].is_array() || sec[i].size() != 2)
          throw ModelParseError(where + ": expected a [pi0-coords, B-coords] pair");
        table.emplace_back(vec_from_json(sec[i][0], where + "[0]"),
                           vec_from_json(sec[i][1], where + "[1]"));
      }
      cfg.section = std::move(table);
    }
    if (sk.contains("g")) {
      const auto& g = sk["g"];
      if (!g.is_array()) throw ModelParseError("skeletal.g: expected an array of entries");
      for (std::size_t i = 0; i < g.size(); ++i) {
        const std::string where = "skeletal.g[" + std::to_string(i) + "]";
        if (!g[i].is_array() || g[i].size() != 3)
          throw ModelParseError(where + ": expected an [x, y, value] triple");
        cfg.cochain.push_back({{vec_from_json(g[i][0], where + "[0]"),
                                vec_from_json(g[i][1], where + "[1]")},
                               vec_from_json(g[i][2], where + "[2]")});
      }
    }
    out.skeletal = std::move(cfg);
  }

  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned())
      throw ModelParseError("seed: expected an unsigned integer");
    out.seed = j["seed"].get<std::uint64_t>();
  }
  return out;
}

ModelFile load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelParseError("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_file(buf.str());
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

Int parse_int(const std::string& s, const std::string& where) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw ModelParseError(where + ": empty integer");
  try {
    return Int(t);
  } catch (const std::exception&) {
    throw ModelParseError(where + ": bad integer \"" + s + "\"");
  }
}

}  // namespace

IntMatrix parse_matrix_literal(const std::string& s) {
  const auto rows = split(s, ';');
  std::vector<IntVec> parsed;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    IntVec row;
    for (const auto& cell : split(rows[i], ','))
      row.push_back(parse_int(cell, "matrix row " + std::to_string(i)));
    parsed.push_back(std::move(row));
  }
  const int cols = static_cast<int>(parsed[0].size());
  IntMatrix m(static_cast<int>(parsed.size()), cols);
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    if (static_cast<int>(parsed[i].size()) != cols)
      throw ModelParseError("matrix rows have unequal lengths");
    for (int k = 0; k < cols; ++k) m.at(static_cast<int>(i), k) = parsed[i][static_cast<std::size_t>(k)];
  }
  return m;
}

std::vector<IntVec> parse_objects_literal(const std::string& s) {
  std::vector<IntVec> out;
  const auto objs = split(s, ';');
  for (std::size_t i = 0; i < objs.size(); ++i) {
    IntVec coords;
    for (const auto& cell : split(objs[i], ','))
      coords.push_back(parse_int(cell, "object " + std::to_string(i)));
    out.push_back(std::move(coords));
  }
  return out;
}

std::string report_to_jsonl(const Report& report) {
  std::string out;
  for (const auto& r : report.records) {
    json line;
    line["check"] = r.name;
    line["status"] = status_name(r.status);
    if (!r.counterexample.empty()) line["counterexample"] = r.counterexample;
    out += line.dump();
    out += '\n';
  }
  return out;
}

}  // namespace picardlab::model_io
