#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace grdlog {

/// Permutation of {1,...,5}; img[i] is the image of i+1.
struct Perm5 {
  std::array<uint8_t, 5> img;

  static Perm5 identity() { return Perm5{{1, 2, 3, 4, 5}}; }
  bool operator==(const Perm5&) const = default;
};

/// (g o h)(x) = g(h(x)); h is applied first.
Perm5 perm_compose(const Perm5& g, const Perm5& h);
Perm5 perm_inverse(const Perm5& g);
bool perm_is_valid(const Perm5& g);

inline Perm5 perm_w() { return Perm5{{2, 1, 3, 4, 5}}; }  // (1 2)
inline Perm5 perm_z() { return Perm5{{2, 3, 4, 5, 1}}; }  // (1 2 3 4 5)

/// The group S5: all 120 permutations in lexicographic order of their image
/// arrays, with composition and inverse as precomputed index tables. Built
/// once, immutable, freely shareable.
class S5 {
 public:
  static constexpr int kOrder = 120;

  static const S5& instance();

  const Perm5& element(int idx) const { return elements_[static_cast<size_t>(idx)]; }
  int index_of(const Perm5& g) const;
  int compose(int g, int h) const { return comp_[static_cast<size_t>(g)][static_cast<size_t>(h)]; }
  int inverse(int g) const { return inv_[static_cast<size_t>(g)]; }
  /// Row of the composition table: comp_row(g)[h] = index of g o h.
  const std::array<uint8_t, kOrder>& comp_row(int g) const { return comp_[static_cast<size_t>(g)]; }

  int identity_index() const { return 0; }  // [1,2,3,4,5] is lexicographically first
  int w_index() const { return w_idx_; }
  int z_index() const { return z_idx_; }

  /// Canonical representatives of the 7 conjugacy classes, one per cycle
  /// type: id, (12), (12)(34), (123), (123)(45), (1234), (12345).
  static std::array<Perm5, 7> conjugacy_class_representatives();

 private:
  S5();

  std::vector<Perm5> elements_;
  std::array<std::array<uint8_t, kOrder>, kOrder> comp_{};
  std::array<uint8_t, kOrder> inv_{};
  std::array<int16_t, 3126> encode_to_index_{};  // base-5 encoding of image arrays
  int w_idx_ = -1, z_idx_ = -1;
};

}  // namespace grdlog
