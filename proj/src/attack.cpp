#include "grdlog/attack.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <string>

#include "grdlog/errors.hpp"
#include "grdlog/matlin.hpp"

namespace grdlog {

namespace {

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

BlockRecord analyze_block(int index, const FMat& b, const FMat& t) {
  const auto start = std::chrono::steady_clock::now();
  const F7Field k;
  BlockRecord rec;
  rec.block_index = index;
  rec.size = b.rows();

  const FittingSplit<F7Field> split = fitting_split(k, b);
  rec.fitting_index = split.index;
  rec.core_dim = split.core_dim;
  if (split.core_dim == 0) {
    // Nilpotent block: no multiplicative information, only the preperiod.
    rec.millis = millis_since(start);
    return rec;
  }

  const auto tc = restrict_to(k, t, split);
  if (!tc)
    throw NotPowerPairError("block " + std::to_string(index) +
                            ": core subspace is not invariant under the challenge matrix");
  const FMat& bc = split.core_matrix;

  const PolyF7 cp{char_poly(k, bc)};
  for (const auto& [g, mult] : poly_factor(cp)) {
    // Work in F7[x]/(g); the canonical root of g is the class of x.
    const FqField field(g);
    const FqElem lambda = field.gen();

    const auto v = eigenvector(field, lift_mat(field, bc), lambda);
    if (!v) throw InternalError("analyze_block: factor root is not an eigenvalue of the core");
    const auto w = mat_vec(field, lift_mat(field, *tc), *v);

    // T = B^n forces T v = lambda^n v; read off mu and demand proportionality.
    size_t piv = 0;
    while (piv < v->size() && field.is_zero((*v)[piv])) ++piv;
    const FqElem mu = field.mul(w[piv], field.inv((*v)[piv]));
    for (size_t i = 0; i < v->size(); ++i)
      if (!field.eq(w[i], field.mul(mu, (*v)[i])))
        throw NotPowerPairError("block " + std::to_string(index) +
                                ": challenge does not act as a scalar on an eigenvector");
    if (field.is_zero(mu))
      throw NotPowerPairError("block " + std::to_string(index) +
                              ": challenge annihilates an eigenvector of the invertible core");

    FactorConstraint fc;
    fc.factor = g;
    fc.degree = g.degree();
    fc.multiplicity = mult;
    fc.eigenvalue_order = element_order(field, lambda);
    try {
      fc.constraint = discrete_log(field, lambda, mu);
    } catch (const NotInSubgroupError& e) {
      throw NotPowerPairError("block " + std::to_string(index) +
                              ": eigenvalue of the challenge is not a power of the base eigenvalue (" +
                              e.what() + ")");
    }
    rec.factors.push_back(std::move(fc));
  }
  rec.millis = millis_since(start);
  return rec;
}

}  // namespace

std::vector<CrtConstraint> block_constraints(const FMat& b, const FMat& t) {
  if (b.rows() != t.rows() || b.cols() != t.cols())
    throw std::invalid_argument("block_constraints: size mismatch");
  std::vector<CrtConstraint> out;
  for (const auto& f : analyze_block(0, b, t).factors) out.push_back(f.constraint);
  return out;
}

RecoveryResult recover_exponent(const IrrepTable& table, const GRMat3& m, const GRMat3& c) {
  const auto start = std::chrono::steady_clock::now();
  const BlockMat bm = lift_phi(table, m);
  const BlockMat tm = lift_phi(table, c);

  // The seven blocks are independent; work them concurrently, largest first
  // so the most constraining moduli are in flight from the start.
  std::array<int, 7> order{0, 1, 2, 3, 4, 5, 6};
  std::sort(order.begin(), order.end(),
            [](int a, int b) { return BlockMat::kSizes[static_cast<size_t>(a)] > BlockMat::kSizes[static_cast<size_t>(b)]; });
  std::array<std::future<BlockRecord>, 7> futures;
  for (int i : order)
    futures[static_cast<size_t>(i)] = std::async(std::launch::async, [&, i] {
      return analyze_block(i, bm.blocks[static_cast<size_t>(i)], tm.blocks[static_cast<size_t>(i)]);
    });

  AttackTranscript transcript;
  transcript.blocks.reserve(7);
  for (int i = 0; i < 7; ++i) transcript.blocks.push_back(futures[static_cast<size_t>(i)].get());

  // CRT across all factor constraints, folding block by block so an
  // inconsistency can name the block that exposed it.
  CrtConstraint acc{BigInt(0), BigInt(1)};
  int max_fitting = 0, max_mult = 0;
  for (const BlockRecord& rec : transcript.blocks) {
    max_fitting = std::max(max_fitting, rec.fitting_index);
    for (const FactorConstraint& f : rec.factors) {
      max_mult = std::max(max_mult, f.multiplicity);
      try {
        const CrtConstraint pair[] = {acc, f.constraint};
        acc = crt_combine(pair);
      } catch (const InconsistentSystemError&) {
        throw NotPowerPairError("block " + std::to_string(rec.block_index) +
                                ": eigenvalue exponents are inconsistent across blocks "
                                "(inconsistent system)");
      }
    }
  }
  transcript.combined = acc;
  transcript.max_fitting_index = max_fitting;
  transcript.period = acc.modulus;

  // Characteristic-7 part: eigenvalue orders are coprime to 7, so the scan
  // must cover 7^s periods where 7^s bounds the largest generalized
  // eigenvalue multiplicity (s <= 2 since no block exceeds size 18), plus
  // enough headroom to clear the preperiod k*.
  int s = 0;
  BigInt seven_s = 1;
  while (seven_s < max_mult) {
    seven_s *= 7;
    ++s;
  }
  transcript.p_adic_exponent = s;
  const BigInt n0 = acc.residue, big_l = acc.modulus;
  transcript.search_limit = seven_s * big_l + max_fitting;

  const BlockMat step = block_pow(bm, big_l);
  BlockMat probe = block_pow(bm, n0);
  BigInt candidate = n0;
  bool found = false;
  uint64_t tried = 0;
  while (candidate <= transcript.search_limit) {
    ++tried;
    if (probe == tm) {
      found = true;
      break;
    }
    probe = block_mul(probe, step);
    candidate += big_l;
  }
  transcript.candidates_tried = tried;
  if (!found)
    throw NotPowerPairError(
        "candidate search exhausted: no exponent reproduces the challenge blocks "
        "(the pair is not a genuine power pair)");

  // Never trust the block domain alone: confirm in the native group ring.
  if (!(grmat_pow(m, candidate) == c))
    throw InternalError("recover_exponent: block equality did not transfer to the group ring");

  transcript.recovered_exponent = candidate;
  transcript.total_millis = millis_since(start);
  return RecoveryResult{candidate, big_l, std::move(transcript)};
}

GRMat3 break_dh(const IrrepTable& table, const GRMat3& m, const GRMat3& alice_public,
                const GRMat3& bob_public, AttackTranscript* transcript) {
  RecoveryResult rec = recover_exponent(table, m, alice_public);
  if (transcript) *transcript = std::move(rec.transcript);
  return grmat_pow(bob_public, rec.exponent);
}

}  // namespace grdlog
