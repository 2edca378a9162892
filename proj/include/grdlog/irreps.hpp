#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "grdlog/matlin.hpp"
#include "grdlog/perm.hpp"

namespace grdlog {

using FMat = Mat<F7Field>;

/// Component dimensions of the seven irreducible representations of S5
/// over F7 (two of dimension 1, two of 4, two of 5, one of 6).
inline constexpr std::array<int, 7> kIrrepDims = {1, 1, 4, 4, 5, 5, 6};
inline constexpr std::array<const char*, 7> kIrrepLabels = {"1a", "1b", "4a", "4b", "5a", "5b", "6"};

/// Image of a group-ring element under all seven representations at once.
using DSum7 = std::array<FMat, 7>;

/// The generator images (w and z per component) exactly as shipped in the
/// checked-in data file, reduced mod 7.
struct GeneratorImages {
  DSum7 w;
  DSum7 z;
};

/// Pinned FNV-1a64 of the data file bytes; guards against transcription
/// drift. Asserted by selftest and the unit tests.
inline constexpr uint64_t kGeneratorDataHash = 0x6fa674c15d71448cULL;

std::string default_generator_data_file();
uint64_t file_content_hash(const std::string& path);
GeneratorImages load_generator_images(const std::string& path);

/// Representation matrices for all 120 group elements, built once by
/// breadth-first closure from the generator images and immutable afterwards.
class IrrepTable {
 public:
  static IrrepTable build(const GeneratorImages& gen);
  /// Table built from the default data file; cached.
  static const IrrepTable& standard();

  const DSum7& at(int group_index) const { return table_[static_cast<size_t>(group_index)]; }
  const DSum7& at(const Perm5& g) const { return at(S5::instance().index_of(g)); }

 private:
  IrrepTable() = default;
  std::vector<DSum7> table_;
};

struct RelationCheck {
  std::string relation;
  std::string component;  // "perm" or an irrep label
  bool ok;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool bfs_closure_ok = false;  // all 120 elements reached consistently
  bool all_ok() const;
};

/// Evaluates the six defining relations of S5 on the permutations themselves
/// and on every representation component.
RelationReport verify_relations(const IrrepTable& table);

struct CharacterReport {
  // traces[component][conjugacy class], entries in F7
  std::array<std::array<uint8_t, 7>, 7> traces{};
  bool pairwise_distinct = false;
  // orthogonality[i][j] holds iff sum_g chi_i(g) chi_j(g^-1) = 120 * delta_ij mod 7
  bool orthogonality_ok = false;
  std::vector<std::string> failures;
  bool all_ok() const { return pairwise_distinct && orthogonality_ok; }
};

/// Compares the component traces against what the character table of S5
/// demands mod 7: pairwise distinct columns and full orthogonality.
CharacterReport character_check(const IrrepTable& table);

}  // namespace grdlog
