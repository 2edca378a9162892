#include "grdlog/serial.hpp"

#include <fstream>

#include "grdlog/errors.hpp"

namespace grdlog {

using nlohmann::json;

namespace {

void require_version(const json& j, const char* what) {
  if (!j.is_object()) throw MalformedInputError(std::string(what) + ": not a JSON object");
  if (!j.contains("format_version") || !j["format_version"].is_number_integer() ||
      j["format_version"].get<int>() != kFormatVersion)
    throw MalformedInputError(std::string(what) + ": missing or unsupported format_version");
}

uint8_t checked_digit(const json& v, const char* what) {
  if (!v.is_number_integer()) throw MalformedInputError(std::string(what) + ": non-integer coefficient");
  const int64_t x = v.get<int64_t>();
  if (x < 0 || x > 6) throw MalformedInputError(std::string(what) + ": coefficient outside 0..6");
  return static_cast<uint8_t>(x);
}

}  // namespace

json grmat_to_json(const GRMat3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) {
      json coeffs = json::array();
      for (uint8_t v : m.at(i, j).a) coeffs.push_back(v);
      row.push_back(std::move(coeffs));
    }
    rows.push_back(std::move(row));
  }
  return json{{"format_version", kFormatVersion}, {"entries", std::move(rows)}};
}

GRMat3 grmat_from_json(const json& j) {
  require_version(j, "group-ring matrix");
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != 3)
    throw MalformedInputError("group-ring matrix: expected 3 rows of entries");
  GRMat3 m;
  for (int r = 0; r < 3; ++r) {
    const json& row = j["entries"][static_cast<size_t>(r)];
    if (!row.is_array() || row.size() != 3)
      throw MalformedInputError("group-ring matrix: expected 3 entries per row");
    for (int c = 0; c < 3; ++c) {
      const json& coeffs = row[static_cast<size_t>(c)];
      if (!coeffs.is_array() || coeffs.size() != S5::kOrder)
        throw MalformedInputError("group-ring matrix: each entry needs 120 coefficients");
      for (int i = 0; i < S5::kOrder; ++i)
        m.at(r, c).a[static_cast<size_t>(i)] = checked_digit(coeffs[static_cast<size_t>(i)], "group-ring matrix");
    }
  }
  return m;
}

json blockmat_to_json(const BlockMat& m) {
  json blocks = json::array();
  for (int c = 0; c < 7; ++c) {
    const FMat& b = m.blocks[static_cast<size_t>(c)];
    json rows = json::array();
    for (int i = 0; i < b.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < b.cols(); ++j) row.push_back(b.at(i, j).val());
      rows.push_back(std::move(row));
    }
    blocks.push_back(json{{"size", BlockMat::kSizes[static_cast<size_t>(c)]}, {"rows", std::move(rows)}});
  }
  return json{{"format_version", kFormatVersion}, {"blocks", std::move(blocks)}};
}

BlockMat blockmat_from_json(const json& j) {
  require_version(j, "block matrix");
  if (!j.contains("blocks") || !j["blocks"].is_array() || j["blocks"].size() != 7)
    throw MalformedInputError("block matrix: expected 7 blocks");
  const F7Field k;
  BlockMat m;
  for (int c = 0; c < 7; ++c) {
    const json& entry = j["blocks"][static_cast<size_t>(c)];
    const int size = BlockMat::kSizes[static_cast<size_t>(c)];
    if (entry.value("size", -1) != size)
      throw MalformedInputError("block matrix: block " + std::to_string(c) + " has wrong declared size");
    const json& rows = entry["rows"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != size)
      throw MalformedInputError("block matrix: block " + std::to_string(c) + " has wrong row count");
    FMat b(size, size, k.zero());
    for (int i = 0; i < size; ++i) {
      const json& row = rows[static_cast<size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != size)
        throw MalformedInputError("block matrix: ragged row in block " + std::to_string(c));
      for (int jj = 0; jj < size; ++jj)
        b.at(i, jj) = F7::from_raw(checked_digit(row[static_cast<size_t>(jj)], "block matrix"));
    }
    m.blocks[static_cast<size_t>(c)] = std::move(b);
  }
  return m;
}

json fqelem_to_json(const FqField& field, const FqElem& e) {
  json coeffs = json::array();
  for (uint8_t v : e.c) coeffs.push_back(v);
  return json{{"degree", field.degree()}, {"coeffs", std::move(coeffs)}};
}

const FqField& fqelem_field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j["degree"].is_number_integer())
    throw MalformedInputError("field element: missing degree");
  const int d = j["degree"].get<int>();
  if (d < 1 || d > 20) throw MalformedInputError("field element: degree outside 1..20");
  return FqField::canonical(d);
}

FqElem fqelem_from_json(const json& j) {
  const FqField& field = fqelem_field_from_json(j);
  const json& coeffs = j["coeffs"];
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != field.degree())
    throw MalformedInputError("field element: coefficient count does not match degree");
  FqElem e = field.zero();
  for (int i = 0; i < field.degree(); ++i)
    e.c[static_cast<size_t>(i)] = checked_digit(coeffs[static_cast<size_t>(i)], "field element");
  return e;
}

json challenge_to_json(const Challenge& c) {
  return json{{"format_version", kFormatVersion},
              {"kind", "challenge"},
              {"base", grmat_to_json(c.base)},
              {"alice_public", grmat_to_json(c.alice_public)},
              {"bob_public", grmat_to_json(c.bob_public)}};
}

Challenge challenge_from_json(const json& j) {
  require_version(j, "challenge");
  if (j.value("kind", "") != "challenge") throw MalformedInputError("challenge: wrong kind tag");
  for (const char* key : {"base", "alice_public", "bob_public"})
    if (!j.contains(key)) throw MalformedInputError(std::string("challenge: missing ") + key);
  return Challenge{grmat_from_json(j["base"]), grmat_from_json(j["alice_public"]),
                   grmat_from_json(j["bob_public"])};
}

json solution_to_json(const Solution& s) {
  return json{{"format_version", kFormatVersion},
              {"kind", "solution"},
              {"alice_secret", s.alice_secret},
              {"bob_secret", s.bob_secret},
              {"shared_key", grmat_to_json(s.shared_key)}};
}

Solution solution_from_json(const json& j) {
  require_version(j, "solution");
  if (j.value("kind", "") != "solution") throw MalformedInputError("solution: wrong kind tag");
  if (!j.contains("alice_secret") || !j.contains("bob_secret") || !j.contains("shared_key"))
    throw MalformedInputError("solution: missing fields");
  return Solution{j["alice_secret"].get<uint64_t>(), j["bob_secret"].get<uint64_t>(),
                  grmat_from_json(j["shared_key"])};
}

json transcript_to_json(const AttackTranscript& t, const BlockMat* lifted_base,
                        const BlockMat* lifted_challenge) {
  json blocks = json::array();
  for (const BlockRecord& rec : t.blocks) {
    json factors = json::array();
    for (const FactorConstraint& f : rec.factors) {
      json fc;
      fc["degree"] = f.degree;
      fc["multiplicity"] = f.multiplicity;
      fc["eigenvalue_order"] = f.eigenvalue_order;
      fc["residue"] = f.constraint.residue.str();
      fc["modulus"] = f.constraint.modulus.str();
      json coeffs = json::array();
      for (F7 v : f.factor.coeffs()) coeffs.push_back(v.val());
      fc["factor_coeffs"] = std::move(coeffs);
      factors.push_back(std::move(fc));
    }
    blocks.push_back(json{{"block_index", rec.block_index},
                          {"size", rec.size},
                          {"fitting_index", rec.fitting_index},
                          {"core_dim", rec.core_dim},
                          {"factors", std::move(factors)},
                          {"millis", rec.millis}});
  }
  json out{{"format_version", kFormatVersion},
           {"kind", "attack_transcript"},
           {"blocks", std::move(blocks)},
           {"combined_residue", t.combined.residue.str()},
           {"combined_modulus", t.combined.modulus.str()},
           {"max_fitting_index", t.max_fitting_index},
           {"p_adic_exponent", t.p_adic_exponent},
           {"search_limit", t.search_limit.str()},
           {"candidates_tried", t.candidates_tried},
           {"period", t.period.str()},
           {"recovered_exponent", t.recovered_exponent.str()},
           {"total_millis", t.total_millis}};
  if (lifted_base) out["lifted_base"] = blockmat_to_json(*lifted_base);
  if (lifted_challenge) out["lifted_challenge"] = blockmat_to_json(*lifted_challenge);
  return out;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedInputError("cannot open for writing: " + path);
  out << j.dump() << '\n';
  if (!out) throw MalformedInputError("write failed: " + path);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInputError("cannot open: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw MalformedInputError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace grdlog
