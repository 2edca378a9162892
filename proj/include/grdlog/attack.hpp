#pragma once

#include <cstdint>
#include <vector>

#include "grdlog/blocklift.hpp"
#include "grdlog/dlog.hpp"
#include "grdlog/poly.hpp"

namespace grdlog {

/// One eigenvalue constraint: for an irreducible factor g of the core
/// characteristic polynomial, the exponent is pinned modulo the order of g's
/// canonical root.
struct FactorConstraint {
  PolyF7 factor;
  int degree = 0;
  int multiplicity = 0;
  uint64_t eigenvalue_order = 0;
  CrtConstraint constraint;
};

struct BlockRecord {
  int block_index = 0;
  int size = 0;
  int fitting_index = 0;
  int core_dim = 0;
  std::vector<FactorConstraint> factors;
  double millis = 0.0;
};

struct AttackTranscript {
  std::vector<BlockRecord> blocks;
  CrtConstraint combined;     // (n0, L): exponent residue modulo the lcm of eigenvalue orders
  int max_fitting_index = 0;  // preperiod bound k*
  int p_adic_exponent = 0;    // s: the candidate scan covers 7^s periods
  BigInt search_limit;        // candidates stop at this exponent value
  uint64_t candidates_tried = 0;
  BigInt period;              // L
  BigInt recovered_exponent;  // n'
  double total_millis = 0.0;
};

/// Per-block reduction: Fitting split of B, restriction of both matrices to
/// the invertible core, characteristic polynomial, then one eigenvalue DLP
/// per distinct irreducible factor. Since T = B^n acts on each lambda
/// eigenspace as lambda^n, a single eigenvector per factor suffices.
/// Throws NotPowerPairError when T is provably not a power of B.
std::vector<CrtConstraint> block_constraints(const FMat& b, const FMat& t);

struct RecoveryResult {
  BigInt exponent;  // n' with M^n' = C
  BigInt period;    // L; any other solution is congruent mod L (up to the 7-part)
  AttackTranscript transcript;
};

/// The full discrete-logarithm attack: lift both matrices to blocks, gather
/// eigenvalue constraints from all seven blocks (concurrently), recombine by
/// CRT, and resolve the characteristic-7 part of the period by a bounded
/// candidate scan. The returned exponent is verified in the group-ring
/// domain: grmat_pow(m, n') == c exactly.
RecoveryResult recover_exponent(const IrrepTable& table, const GRMat3& m, const GRMat3& c);

/// Breaks a Diffie-Hellman session: recovers an exponent a' for alice_public
/// and returns bob_public^a', which equals the honest parties' shared key
/// (M^a' = M^a implies M^(b a') = M^(b a)).
GRMat3 break_dh(const IrrepTable& table, const GRMat3& m, const GRMat3& alice_public,
                const GRMat3& bob_public, AttackTranscript* transcript = nullptr);

}  // namespace grdlog
