#include "braidsep/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace braidsep {

namespace {

using Json = nlohmann::ordered_json;

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error("parse", std::string(what) + " must be a [re, im] pair");
  const Complex z(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw Error("parse", std::string(what) + " has a non-finite component");
  return z;
}

template <int N>
Json matrix_json(const Mat<N>& m) {
  Json j;
  j["rows"] = N;
  j["cols"] = N;
  Json entries = Json::array();
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k) entries.push_back(complex_to_json(m(i, k)));
  j["entries"] = std::move(entries);
  return j;
}

template <int N>
Mat<N> matrix_from_json_value(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw Error("parse", "matrix JSON needs rows, cols and entries");
  if (j["rows"].get<int>() != N || j["cols"].get<int>() != N)
    throw Error("parse", "matrix JSON has the wrong shape, expected " +
                             std::to_string(N) + "x" + std::to_string(N));
  const Json& entries = j["entries"];
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(N * N))
    throw Error("parse", "matrix JSON needs " + std::to_string(N * N) +
                             " entries in row-major order");
  Mat<N> m;
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k)
      m(i, k) = complex_from_json(entries[static_cast<std::size_t>(i) * N + k],
                                  "matrix entry");
  return m;
}

Json params_to_json(const RepParams& p) {
  Json j;
  j["condition"] = p.condition;
  j["branch"] = p.branch;
  j["a"] = complex_to_json(p.a);
  j["f"] = complex_to_json(p.f);
  j["d"] = complex_to_json(p.d);
  j["g"] = complex_to_json(p.g);
  return j;
}

Json provenance_to_json(const Provenance& p) {
  Json j;
  j["kind"] = to_string(p.kind);
  if (p.params) j["params"] = params_to_json(*p.params);
  if (p.lambda) j["lambda"] = complex_to_json(*p.lambda);
  return j;
}

Provenance provenance_from_json(const Json& j) {
  Provenance p;
  const std::string kind = j.value("kind", "blocks");
  if (kind == "family")
    p.kind = Provenance::Kind::family;
  else if (kind == "lambda")
    p.kind = Provenance::Kind::lambda;
  else if (kind == "builtin")
    p.kind = Provenance::Kind::builtin;
  else
    p.kind = Provenance::Kind::blocks;
  if (j.contains("params")) {
    const Json& q = j["params"];
    p.params = family_params(q.at("condition").get<int>(),
                             q.at("branch").get<int>(),
                             complex_from_json(q.at("a"), "a"),
                             complex_from_json(q.at("f"), "f"));
  }
  if (j.contains("lambda"))
    p.lambda = complex_from_json(j["lambda"], "lambda");
  return p;
}

Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error("parse", std::string("invalid ") + what + " JSON: " +
                             e.what());
  }
}

std::string csv_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string matrix_to_json(const Mat3& m) { return matrix_json(m).dump(2); }
std::string matrix_to_json(const Mat6& m) { return matrix_json(m).dump(2); }

Mat3 mat3_from_json(const std::string& text) {
  return matrix_from_json_value<3>(parse_json(text, "matrix"));
}

Mat6 mat6_from_json(const std::string& text) {
  return matrix_from_json_value<6>(parse_json(text, "matrix"));
}

std::string rep_to_json(const Rep& r) {
  Json j;
  j["sigma1"] = matrix_json(r.sigma1());
  j["sigma2"] = matrix_json(r.sigma2());
  j["provenance"] = provenance_to_json(r.provenance());
  j["residual"] = r.relation_residual();
  return j.dump(2);
}

Rep rep_from_json(const std::string& text) {
  const Json j = parse_json(text, "representation");
  if (!j.contains("sigma1") || !j.contains("sigma2"))
    throw Error("parse", "representation JSON needs sigma1 and sigma2");
  const Mat6 sigma1 = matrix_from_json_value<6>(j["sigma1"]);
  const Mat6 sigma2 = matrix_from_json_value<6>(j["sigma2"]);
  Provenance provenance;
  if (j.contains("provenance"))
    provenance = provenance_from_json(j["provenance"]);

  const auto [A, B, C, D] = block_split(sigma1);
  Rep rep = make_block_rep({A, B, C, D}, kRepTol, std::move(provenance));
  const double scale = std::max(1.0, max_abs(sigma2));
  if (max_abs_diff(rep.sigma2(), sigma2) > 1e-12 * scale)
    throw NotARepresentationError(
        "sigma2 does not carry the sign pattern implied by sigma1's blocks");
  return rep;
}

std::vector<KnotEntry> catalog_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw CatalogError(std::string("invalid catalog JSON: ") + e.what());
  }
  if (!j.is_array()) throw CatalogError("catalog JSON must be an array");
  std::vector<KnotEntry> entries;
  entries.reserve(j.size());
  for (const Json& item : j) {
    KnotEntry entry;
    try {
      entry.name = item.at("name").get<std::string>();
      entry.crossings = item.at("crossings").get<int>();
      entry.word = parse_word(item.at("word").get<std::string>());
      for (const Json& alias : item.value("aliases", Json::array()))
        entry.aliases.push_back(parse_word(alias.get<std::string>()));
    } catch (const Json::exception& e) {
      throw CatalogError(std::string("malformed catalog entry: ") + e.what());
    } catch (const ParseError& e) {
      throw CatalogError("malformed braid word in catalog entry '" +
                         entry.name + "': " + e.what());
    }
    if (entry.name.empty())
      throw CatalogError("catalog entry with empty name");
    if (entry.crossings <= 0)
      throw CatalogError("catalog entry '" + entry.name +
                         "' needs a positive crossing number");
    if (lookup(entries, entry.name) != nullptr)
      throw CatalogError("duplicate catalog entry '" + entry.name + "'");
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<KnotEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return catalog_from_json(buffer.str());
}

std::string gap_table_to_json(const GapTable& table) {
  Json rows = Json::array();
  for (const GapResult& r : table.rows) {
    Json row;
    row["knot"] = r.knot;
    row["word"] = r.word;
    row["condition"] = r.params.condition;
    row["branch"] = r.params.branch;
    row["a"] = complex_to_json(r.params.a);
    row["f"] = complex_to_json(r.params.f);
    row["gap"] = complex_to_json(r.gap);
    row["separated"] = r.separated;
    row["tolerance"] = r.tolerance_used;
    if (r.matches_reference)
      row["matches_reference"] = *r.matches_reference;
    rows.push_back(std::move(row));
  }
  Json j;
  j["rows"] = std::move(rows);
  if (table.has_reference) {
    j["reference_matches"] = table.match_count();
    j["reference_cells"] = table.reference_count();
    j["all_match"] = table.all_match();
  }
  return j.dump(2);
}

std::string gap_table_to_csv(const GapTable& table) {
  std::string out =
      "knot,a,f,condition,branch,gap_re,gap_im,separated,matches_reference\n";
  for (const GapResult& r : table.rows) {
    out += r.knot;
    out += ',' + format_complex(r.params.a, 17);
    out += ',' + format_complex(r.params.f, 17);
    out += ',' + std::to_string(r.params.condition);
    out += ',' + std::to_string(r.params.branch);
    out += ',' + csv_double(r.gap.real());
    out += ',' + csv_double(r.gap.imag());
    out += r.separated ? ",true" : ",false";
    if (r.matches_reference)
      out += *r.matches_reference ? ",true" : ",false";
    else
      out += ",";
    out += '\n';
  }
  return out;
}

}  // namespace braidsep
