#include "grdlog/perm.hpp"

#include <algorithm>
#include <stdexcept>

namespace grdlog {

Perm5 perm_compose(const Perm5& g, const Perm5& h) {
  Perm5 r;
  for (int i = 0; i < 5; ++i) r.img[static_cast<size_t>(i)] = g.img[h.img[static_cast<size_t>(i)] - 1];
  return r;
}

Perm5 perm_inverse(const Perm5& g) {
  Perm5 r;
  for (int i = 0; i < 5; ++i) r.img[g.img[static_cast<size_t>(i)] - 1] = static_cast<uint8_t>(i + 1);
  return r;
}

bool perm_is_valid(const Perm5& g) {
  std::array<bool, 5> seen{};
  for (uint8_t v : g.img) {
    if (v < 1 || v > 5 || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

namespace {

int encode(const Perm5& g) {
  int e = 0;
  for (int i = 4; i >= 0; --i) e = e * 5 + (g.img[static_cast<size_t>(i)] - 1);
  return e;
}

}  // namespace

S5::S5() {
  Perm5 p = Perm5::identity();
  elements_.reserve(kOrder);
  do {
    elements_.push_back(p);
  } while (std::next_permutation(p.img.begin(), p.img.end()));
  if (elements_.size() != kOrder) throw std::logic_error("S5: enumeration did not yield 120 elements");

  encode_to_index_.fill(-1);
  for (int i = 0; i < kOrder; ++i) encode_to_index_[static_cast<size_t>(encode(elements_[static_cast<size_t>(i)]))] = static_cast<int16_t>(i);

  for (int g = 0; g < kOrder; ++g) {
    for (int h = 0; h < kOrder; ++h)
      comp_[static_cast<size_t>(g)][static_cast<size_t>(h)] = static_cast<uint8_t>(
          index_of(perm_compose(elements_[static_cast<size_t>(g)], elements_[static_cast<size_t>(h)])));
    inv_[static_cast<size_t>(g)] = static_cast<uint8_t>(index_of(perm_inverse(elements_[static_cast<size_t>(g)])));
  }
  w_idx_ = index_of(perm_w());
  z_idx_ = index_of(perm_z());
}

const S5& S5::instance() {
  static const S5 s5;
  return s5;
}

int S5::index_of(const Perm5& g) const {
  if (!perm_is_valid(g)) throw std::invalid_argument("S5::index_of: not a permutation");
  return encode_to_index_[static_cast<size_t>(encode(g))];
}

std::array<Perm5, 7> S5::conjugacy_class_representatives() {
  return {
      Perm5{{1, 2, 3, 4, 5}},  // id
      Perm5{{2, 1, 3, 4, 5}},  // (1 2)
      Perm5{{2, 1, 4, 3, 5}},  // (1 2)(3 4)
      Perm5{{2, 3, 1, 4, 5}},  // (1 2 3)
      Perm5{{2, 3, 1, 5, 4}},  // (1 2 3)(4 5)
      Perm5{{2, 3, 4, 1, 5}},  // (1 2 3 4)
      Perm5{{2, 3, 4, 5, 1}},  // (1 2 3 4 5)
  };
}

}  // namespace grdlog
