#include "ckdual/document.hpp"

#include <fstream>

#include "ckdual/errors.hpp"

namespace ckdual {

using nlohmann::json;

namespace {

std::vector<std::vector<int>> read_rows(const json& j, const char* what) {
  if (!j.is_array()) throw MalformedDocument(std::string(what) + " must be an array of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw MalformedDocument(std::string(what) + " rows must be arrays");
    std::vector<int> row;
    for (const auto& x : r) {
      if (!x.is_number_integer() || (x.get<long>() != 0 && x.get<long>() != 1))
        throw MalformedDocument(std::string(what) + " entries must be 0 or 1");
      row.push_back(x.get<int>());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> read_bits(const json& j, const char* what) {
  if (!j.is_array()) throw MalformedDocument(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer() || (x.get<long>() != 0 && x.get<long>() != 1))
      throw MalformedDocument(std::string(what) + " entries must be 0 or 1");
    out.push_back(x.get<int>());
  }
  return out;
}

ZeroOneMatrix read_matrix(const json& j, const char* what) {
  const auto rows = read_rows(j, what);
  if (rows.empty()) throw MalformedDocument(std::string(what) + " is empty");
  return ZeroOneMatrix::from_rows(rows);
}

TailRule read_tail(const json& j) {
  std::string type;
  if (j.is_string()) {
    type = j.get<std::string>();
  } else if (j.is_object() && j.contains("type") && j["type"].is_string()) {
    type = j["type"].get<std::string>();
  } else {
    throw MalformedDocument("tail must be a string or an object with a \"type\"");
  }
  if (type == "all-ones") return AllOnesTail{};
  if (type == "p-infinity") return PInfinityTail{};
  if (type == "hat") {
    if (!j.is_object() || !j.contains("base")) throw MalformedDocument("hat tail needs \"base\"");
    return HatTail{read_matrix(j["base"], "tail base")};
  }
  if (type == "explicit") {
    if (!j.is_object() || !j.contains("rows") || !j.contains("c"))
      throw MalformedDocument("explicit tail needs \"rows\" and \"c\"");
    ExplicitTail ex;
    ex.rows = read_rows(j["rows"], "tail rows");
    ex.c = read_bits(j["c"], "tail c");
    if (j.contains("assumed_drs")) {
      if (!j["assumed_drs"].is_boolean()) throw MalformedDocument("assumed_drs must be a boolean");
      ex.assumed_drs = j["assumed_drs"].get<bool>();
    }
    return ex;
  }
  throw MalformedDocument("unknown tail type \"" + type + "\"");
}

StableSeed read_seed(const json& j) {
  if (!j.contains("tail")) throw MalformedDocument("seed document needs \"tail\"");
  TailRule tail = read_tail(j["tail"]);

  std::optional<std::size_t> k;
  if (j.contains("K")) {
    if (!j["K"].is_number_unsigned() || j["K"].get<long>() < 1)
      throw MalformedDocument("K must be a positive integer");
    k = j["K"].get<std::size_t>();
  }

  if (!std::holds_alternative<ExplicitTail>(tail) && (!j.contains("matrix") || !j.contains("c"))) {
    // Closed forms can generate their own block.
    StableSeed canonical = std::holds_alternative<AllOnesTail>(tail)  ? StableSeed::all_ones()
                           : std::holds_alternative<PInfinityTail>(tail) ? StableSeed::p_infinity()
                                                                         : StableSeed::hat(std::get<HatTail>(tail).base);
    const std::size_t level = k.value_or(canonical.k());
    if (level < canonical.k())
      throw InvalidSeed(tail_name(tail) + " tail is right stable only from K = " +
                        std::to_string(canonical.k()));
    SeedLevel lv = expand_seed(canonical, level);
    if (j.contains("matrix")) lv.a = read_matrix(j["matrix"], "matrix");
    if (j.contains("c")) lv.c = read_bits(j["c"], "c");
    return StableSeed(level, lv.a, lv.c, tail);
  }

  if (!j.contains("matrix") || !j.contains("c"))
    throw MalformedDocument("seed document needs \"matrix\" and \"c\"");
  const ZeroOneMatrix a = read_matrix(j["matrix"], "matrix");
  const std::vector<int> c = read_bits(j["c"], "c");
  if (k && *k != a.size())
    throw DimensionMismatch("K = " + std::to_string(*k) + " but matrix is " +
                            std::to_string(a.size()) + "x" + std::to_string(a.size()));
  return StableSeed(a.size(), a, c, tail);
}

}  // namespace

InputDocument parse_document(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw MalformedDocument("document must be an object with a string \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  InputDocument doc;
  if (kind == "ck") {
    if (!j.contains("matrix")) throw MalformedDocument("ck document needs \"matrix\"");
    doc.kind = InputDocument::Kind::Ck;
    doc.matrix = read_matrix(j["matrix"], "matrix");
  } else if (kind == "seed") {
    doc.kind = InputDocument::Kind::Seed;
    doc.seed = read_seed(j);
  } else {
    throw MalformedDocument("unknown document kind \"" + kind + "\"");
  }
  return doc;
}

InputDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedDocument("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw MalformedDocument(path + ": " + e.what());
  }
  return parse_document(j);
}

json matrix_to_json(const ZeroOneMatrix& m) { return m.to_rows(); }

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_to_json(m.row(i)));
  return rows;
}

json vector_to_json(const IntVector& v) {
  json out = json::array();
  for (const Int& x : v) {
    if (x.fits_slong_p())
      out.push_back(x.get_si());
    else
      out.push_back(x.get_str());
  }
  return out;
}

json seed_to_json(const StableSeed& s) {
  json j;
  j["kind"] = "seed";
  j["K"] = s.k();
  j["matrix"] = matrix_to_json(s.block());
  j["c"] = s.c();
  json tail;
  tail["type"] = tail_name(s.tail());
  if (const auto* hat = std::get_if<HatTail>(&s.tail())) tail["base"] = matrix_to_json(hat->base);
  if (const auto* ex = std::get_if<ExplicitTail>(&s.tail())) {
    tail["rows"] = ex->rows;
    tail["c"] = ex->c;
    tail["assumed_drs"] = ex->assumed_drs;
  }
  j["tail"] = tail;
  return j;
}

json document_to_json(const InputDocument& doc) {
  if (doc.kind == InputDocument::Kind::Seed) return seed_to_json(*doc.seed);
  return json{{"kind", "ck"}, {"matrix", matrix_to_json(*doc.matrix)}};
}

}  // namespace ckdual
