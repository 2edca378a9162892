#include "grdlog/protocol.hpp"

#include <stdexcept>

#include "grdlog/errors.hpp"

namespace grdlog {

Session new_session(uint64_t seed, uint64_t exponent_bound, bool invertible) {
  if (exponent_bound < 2) throw std::invalid_argument("new_session: exponent bound must be >= 2");
  Session s;
  s.seed = seed;
  s.exponent_bound = exponent_bound;
  s.invertible_regime = invertible;

  Rng rng(seed);
  s.base = random_grmat(rng, invertible ? GRSampleMode::kAllBlocksInvertible
                                        : GRSampleMode::kSomeSingularBlock);
  s.alice.secret = 2 + uniform_below(rng, exponent_bound - 1);
  s.bob.secret = 2 + uniform_below(rng, exponent_bound - 1);
  s.alice.public_value = grmat_pow(s.base, s.alice.secret);
  s.bob.public_value = grmat_pow(s.base, s.bob.secret);

  const GRMat3 alice_view = grmat_pow(s.bob.public_value, s.alice.secret);
  const GRMat3 bob_view = grmat_pow(s.alice.public_value, s.bob.secret);
  if (!(alice_view == bob_view))
    throw InternalError("new_session: the two shared-key computations disagree");
  s.shared_key = alice_view;
  return s;
}

Challenge challenge_of(const Session& s) {
  return Challenge{s.base, s.alice.public_value, s.bob.public_value};
}

Solution solution_of(const Session& s) {
  return Solution{s.alice.secret, s.bob.secret, s.shared_key};
}

}  // namespace grdlog
