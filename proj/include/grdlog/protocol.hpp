#pragma once

#include <cstdint>

#include "grdlog/groupring.hpp"

namespace grdlog {

struct KeyPair {
  uint64_t secret = 0;      // exponent
  GRMat3 public_value;      // base^secret
};

/// One honest key-exchange run: public base M, both parties' key pairs, and
/// the shared key M^(n_a * n_b), computed both ways and checked equal.
struct Session {
  uint64_t seed = 0;
  uint64_t exponent_bound = 0;
  bool invertible_regime = true;
  GRMat3 base;
  KeyPair alice;
  KeyPair bob;
  GRMat3 shared_key;
};

/// Samples a session: base via random_grmat (all lifted blocks invertible
/// when `invertible`, at least one singular block otherwise, so the singular
/// regime genuinely exercises the Fitting machinery), secrets uniform in
/// [2, exponent_bound].
Session new_session(uint64_t seed, uint64_t exponent_bound, bool invertible);

/// What an eavesdropper sees.
struct Challenge {
  GRMat3 base;
  GRMat3 alice_public;
  GRMat3 bob_public;
};

/// What the test harness keeps aside.
struct Solution {
  uint64_t alice_secret = 0;
  uint64_t bob_secret = 0;
  GRMat3 shared_key;
};

Challenge challenge_of(const Session& s);
Solution solution_of(const Session& s);

}  // namespace grdlog
