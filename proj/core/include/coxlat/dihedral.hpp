#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace coxlat {

// Combinatorial model of a finite dihedral group of order 2m and its root
// system.  The 2m roots sit at positions 0..2m-1 on a circle, step pi/m
// apart; positions 0..m-1 are the positive roots listed in one of the two
// reflection orders, with the simple roots at positions 0 and m-1, and the
// negative of the root at p sits at p+m.  Group elements are the circle
// isometries p -> p+c (rotations, c even) and p -> c-p (reflections).
//
// The model needs no scalar arithmetic, so it covers bond labels such as
// m = 7 whose cosine lies outside the supported field.  Masks are 32-bit,
// which caps m at 15.
class DihedralModel {
 public:
  explicit DihedralModel(int m);

  int m() const { return m_; }
  int root_count() const { return 2 * m_; }
  int positive_count() const { return m_; }

  bool positive(int p) const { return p >= 0 && p < m_; }
  int negate(int p) const { return (p + m_) % (2 * m_); }

  // Elements: ids 0..m-1 are rotations by 2*id, ids m..2m-1 are the
  // reflections whose axis passes through root position id-m.
  int element_count() const { return 2 * m_; }
  int identity() const { return 0; }
  bool is_reflection(int e) const { return e >= m_; }
  int reflection_at(int q) const;
  int generator(int i) const;  // 0 -> reflection at 0, 1 -> at m-1
  int longest() const;

  int act(int e, int p) const;       // image position of root p
  int mult(int a, int b) const;      // composition, b applied first
  int inverse(int e) const;
  int length(int e) const;
  std::vector<int> word(int e) const;     // reduced word over {0, 1}
  int from_word(const std::vector<int>& w) const;

  // Inversion sets as masks over positive positions 0..m-1.
  uint32_t inversion_mask(int e) const;
  // The element whose inversion set is the given mask, or -1 if the mask
  // is not biclosed (not a prefix or suffix of the reflection order).
  int element_with_inversions(uint32_t mask) const;

  bool weak_le(int a, int b) const;
  int join(int a, int b) const;
  int meet(int a, int b) const;

  // Closure on circle positions: two positions less than half a turn
  // apart pull in everything on the short arc between them.  Antipodal
  // pairs span only a line and force nothing.
  uint32_t closure(uint32_t mask) const;
  bool closed_in(uint32_t mask, uint32_t ambient) const;
  bool biclosed_in(uint32_t mask, uint32_t ambient) const;

  uint32_t positive_mask() const { return (1u << m_) - 1; }
  uint32_t full_mask() const { return (1u << (2 * m_)) - 1; }

  // Both maximal chains of the weak order, as element lists from the
  // identity to the longest element.
  std::vector<std::vector<int>> weak_order_maximal_chains() const;

 private:
  int m_;
  std::vector<uint32_t> between_;   // strict short-arc interiors, p*2m+q
  std::vector<uint32_t> inv_mask_;  // per element
  std::vector<int> mask_to_elt_;    // dense map, index = mask
};

// Stable pairs of the connection induced by the relation "z fixes the
// inversion set of x pointwise as a set".  Each pair lists a stable
// subgroup together with its partner subsemilattice, both as sorted
// element ids.
struct DihedralGaloisCensus {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
};
DihedralGaloisCensus dihedral_stable_pairs(const DihedralModel& dm);

// Census of a poset of subsets ordered by inclusion: the member masks,
// the cover relation on their indices, and the multiset of maximal chain
// lengths counted in edges from the minimum to a maximal element.
struct DihedralPosetCensus {
  std::vector<uint32_t> elements;
  std::vector<std::pair<int, int>> covers;
  std::vector<int> chain_lengths;  // sorted ascending
};

// The finite biclosed subsets of the standard parabolic subset with
// j_count generators: j_count = 0 gives the positive system (weak
// order), 1 adjoins the negative of the simple root at position 0, and
// 2 takes the whole root system.
DihedralPosetCensus dihedral_parabolic_census(const DihedralModel& dm,
                                              int j_count);

}  // namespace coxlat
