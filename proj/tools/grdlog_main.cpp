// Command-line front end: selftest | keygen | attack | verify.
//
// Exit codes: 0 success, 2 verification mismatch, 3 not a power pair,
// 4 malformed input, 5 internal invariant violation.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grdlog/attack.hpp"
#include "grdlog/blocklift.hpp"
#include "grdlog/dlog.hpp"
#include "grdlog/errors.hpp"
#include "grdlog/intfactor.hpp"
#include "grdlog/irreps.hpp"
#include "grdlog/protocol.hpp"
#include "grdlog/serial.hpp"

namespace {

using namespace grdlog;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitNotPowerPair = 3;
constexpr int kExitMalformed = 4;
constexpr int kExitInternal = 5;

struct CheckList {
  nlohmann::json entries = nlohmann::json::array();
  bool all_ok = true;

  void add(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << '\n';
    entries.push_back({{"name", name}, {"ok", ok}, {"detail", detail}});
    all_ok = all_ok && ok;
  }
};

int run_selftest(uint64_t seed, const std::string& json_report) {
  CheckList checks;

  const std::string data_file = default_generator_data_file();
  uint64_t hash = 0;
  bool hash_ok = false;
  try {
    hash = file_content_hash(data_file);
    hash_ok = hash == kGeneratorDataHash;
  } catch (const DataFileError& e) {
    checks.add("generator data file readable", false, e.what());
  }
  checks.add("generator data file content hash", hash_ok,
             data_file + (hash_ok ? "" : " does not match the pinned hash"));
  if (!hash_ok) {
    if (!json_report.empty())
      write_json_file(json_report, {{"all_ok", false}, {"checks", checks.entries}});
    return kExitInternal;
  }

  const IrrepTable& table = IrrepTable::standard();

  const RelationReport relations = verify_relations(table);
  int rel_passed = 0;
  for (const auto& c : relations.checks)
    if (c.ok) ++rel_passed;
  checks.add("defining relations on permutations and all 7 components", relations.all_ok(),
             std::to_string(rel_passed) + "/" + std::to_string(relations.checks.size()) +
                 " relation checks passed, closure over all 120 elements");

  const CharacterReport chars = character_check(table);
  checks.add("trace vectors pairwise distinct on the 7 conjugacy classes", chars.pairwise_distinct);
  checks.add("character orthogonality mod 7 (49 pairs)", chars.orthogonality_ok);

  const IsoReport iso = verify_iso(table, seed);
  checks.add("dimension identity 1+1+16+16+25+25+36=120", iso.dimension_identity);
  checks.add("linear map of the decomposition has full rank", iso.full_rank,
             "rank " + std::to_string(iso.rank) + " of 120");
  checks.add("f multiplicative on 500 random pairs", iso.f_multiplicative);
  checks.add("block lift multiplicative on 100 random pairs", iso.phi_multiplicative);

  // Number-theory kernel spot checks.
  {
    bool ok = true;
    std::string detail;
    for (int d = 1; d <= 18 && ok; ++d) {
      uint64_t n = 1;
      for (int i = 0; i < d; ++i) n *= 7;
      n -= 1;
      uint64_t prod = 1;
      for (auto [p, e] : int_factor(n)) {
        if (!is_prime_u64(p)) {
          ok = false;
          detail = "non-prime factor reported for 7^" + std::to_string(d) + "-1";
        }
        for (int i = 0; i < e; ++i) prod *= p;
      }
      if (prod != n) {
        ok = false;
        detail = "factor product mismatch for 7^" + std::to_string(d) + "-1";
      }
    }
    checks.add("integer factorization certified on 7^d-1, d=1..18", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    Rng rng(seed ^ 0xd15c010ULL);
    for (int d = 1; d <= 6 && ok; ++d) {
      const FqField& K = FqField::canonical(d);
      for (int t = 0; t < 10 && ok; ++t) {
        const FqElem base = K.random_nonzero(rng);
        const uint64_t e = uniform_below(rng, K.group_order());
        const CrtConstraint c = discrete_log(K, base, K.pow(base, e));
        const BigInt em = BigInt(e) % c.modulus;
        if (c.residue != em) {
          ok = false;
          detail = "wrong residue in degree " + std::to_string(d);
        }
      }
    }
    checks.add("discrete log on 60 random instances, degrees 1..6", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    Rng rng(seed ^ 0xfac707ULL);
    for (int t = 0; t < 25 && ok; ++t) {
      const int deg = 1 + static_cast<int>(uniform_below(rng, 12));
      std::vector<F7> cs(static_cast<size_t>(deg) + 1);
      for (auto& v : cs) v = random_f7(rng);
      cs.back() = F7(1);
      const PolyF7 p{std::move(cs)};
      PolyF7 prod = PolyF7::constant(F7(1));
      for (const auto& [g, m] : poly_factor(p))
        for (int i = 0; i < m; ++i) prod = prod * g;
      if (!(prod == p)) {
        ok = false;
        detail = "factor product differs from input at trial " + std::to_string(t);
      }
    }
    checks.add("polynomial factorization round-trip on 25 random monic polynomials", ok, detail);
  }

  if (!json_report.empty())
    write_json_file(json_report, {{"all_ok", checks.all_ok}, {"checks", checks.entries}});
  return checks.all_ok ? kExitOk : kExitInternal;
}

int run_keygen(uint64_t seed, uint64_t bound, bool singular, const std::string& out,
               const std::string& solution_out) {
  const Session s = new_session(seed, bound, /*invertible=*/!singular);
  write_json_file(out, challenge_to_json(challenge_of(s)));
  write_json_file(solution_out, solution_to_json(solution_of(s)));
  std::cout << "challenge written to " << out << "\nsolution written to " << solution_out << '\n';
  return kExitOk;
}

int run_attack(const std::string& in, const std::string& out, const std::string& transcript_path) {
  const Challenge ch = challenge_from_json(read_json_file(in));
  const IrrepTable& table = IrrepTable::standard();
  AttackTranscript transcript;
  const GRMat3 key = break_dh(table, ch.base, ch.alice_public, ch.bob_public, &transcript);
  write_json_file(out, grmat_to_json(key));
  if (!transcript_path.empty()) {
    const BlockMat lifted_base = lift_phi(table, ch.base);
    const BlockMat lifted_challenge = lift_phi(table, ch.alice_public);
    write_json_file(transcript_path, transcript_to_json(transcript, &lifted_base, &lifted_challenge));
  }
  std::cout << "recovered exponent " << transcript.recovered_exponent.str() << " (period "
            << transcript.period.str() << ", " << transcript.total_millis << " ms)\n"
            << "shared key written to " << out << '\n';
  return kExitOk;
}

int run_verify(const std::string& in, const std::string& solution_path) {
  const nlohmann::json key_json = read_json_file(in);
  const GRMat3 recovered = grmat_from_json(key_json);
  const Solution sol = solution_from_json(read_json_file(solution_path));
  if (recovered == sol.shared_key) {
    std::cout << "recovered key matches the session's shared key\n";
    return kExitOk;
  }
  int differing = 0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (!(recovered.at(r, c) == sol.shared_key.at(r, c))) ++differing;
  std::cout << "MISMATCH: recovered key differs from the session key in " << differing
            << " of 9 entries\n";
  return kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Key-exchange cryptanalysis toolkit for 3x3 matrices over F7[S5]"};
  app.require_subcommand(1);

  uint64_t seed = 1;
  uint64_t bound = 1'000'000'000'000ULL;
  bool singular = false, invertible = false;
  std::string in_path, out_path, transcript_path, solution_path, json_report;

  CLI::App* selftest = app.add_subcommand("selftest", "verify representations, decomposition and kernels");
  selftest->add_option("--seed", seed, "seed for the randomized checks");
  selftest->add_option("--json-report", json_report, "write a machine-readable report here");

  CLI::App* keygen = app.add_subcommand("keygen", "generate a key-exchange challenge and its solution");
  keygen->add_option("--seed", seed, "session seed")->required();
  keygen->add_option("--bound", bound, "secret exponents are uniform in [2, bound]");
  keygen->add_flag("--singular", singular, "sample a base with at least one singular block");
  keygen->add_flag("--invertible", invertible, "sample a base with all blocks invertible (default)");
  keygen->add_option("--out", out_path, "challenge file")->required();
  keygen->add_option("--solution", solution_path, "solution file (defaults to <out>.solution.json)");

  CLI::App* attack = app.add_subcommand("attack", "recover the shared key from a challenge");
  attack->add_option("--in", in_path, "challenge file")->required();
  attack->add_option("--out", out_path, "recovered key file")->required();
  attack->add_option("--transcript", transcript_path, "attack transcript file");

  CLI::App* verify = app.add_subcommand("verify", "compare a recovered key against a solution file");
  verify->add_option("--in", in_path, "recovered key file")->required();
  verify->add_option("--solution", solution_path, "solution file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (selftest->parsed()) return run_selftest(seed, json_report);
    if (keygen->parsed()) {
      if (singular && invertible) {
        std::cerr << "error: --singular and --invertible are mutually exclusive\n";
        return kExitMalformed;
      }
      if (solution_path.empty()) solution_path = out_path + ".solution.json";
      return run_keygen(seed, bound, singular, out_path, solution_path);
    }
    if (attack->parsed()) return run_attack(in_path, out_path, transcript_path);
    if (verify->parsed()) return run_verify(in_path, solution_path);
  } catch (const NotPowerPairError& e) {
    std::cerr << "not a power pair: " << e.what() << '\n';
    return kExitNotPowerPair;
  } catch (const MalformedInputError& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const DataFileError& e) {
    std::cerr << "data file problem: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
