#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "grdlog/attack.hpp"
#include "grdlog/blocklift.hpp"
#include "grdlog/fq.hpp"
#include "grdlog/groupring.hpp"
#include "grdlog/protocol.hpp"

namespace grdlog {

// All on-disk formats carry this version; readers reject anything else.
inline constexpr int kFormatVersion = 1;

nlohmann::json grmat_to_json(const GRMat3& m);
GRMat3 grmat_from_json(const nlohmann::json& j);

nlohmann::json blockmat_to_json(const BlockMat& m);
BlockMat blockmat_from_json(const nlohmann::json& j);

/// Coefficients of the reduced representative plus the field degree; the
/// modulus is implied by find_irreducible determinism, so decoding targets
/// FqField::canonical(degree).
nlohmann::json fqelem_to_json(const FqField& field, const FqElem& e);
FqElem fqelem_from_json(const nlohmann::json& j);
const FqField& fqelem_field_from_json(const nlohmann::json& j);

nlohmann::json challenge_to_json(const Challenge& c);
Challenge challenge_from_json(const nlohmann::json& j);
nlohmann::json solution_to_json(const Solution& s);
Solution solution_from_json(const nlohmann::json& j);

nlohmann::json transcript_to_json(const AttackTranscript& t, const BlockMat* lifted_base = nullptr,
                                  const BlockMat* lifted_challenge = nullptr);

/// Compact dump with sorted keys and a trailing newline: byte-stable for a
/// fixed value, so golden-file tests compare exact bytes.
void write_json_file(const std::string& path, const nlohmann::json& j);
/// Throws MalformedInputError on unreadable or invalid JSON.
nlohmann::json read_json_file(const std::string& path);

}  // namespace grdlog
