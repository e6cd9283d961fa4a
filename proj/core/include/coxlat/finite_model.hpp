#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "coxlat/rootsys.hpp"

namespace coxlat {

// Breadth-first enumeration of a finite group, by length then ShortLex.
// Throws input_error once more than max_elements appear.
std::vector<GroupElement> all_elements(SystemPtr sys, int max_elements);

/*
  Dense model of a finite W over a complete root table: every element
  with its inversion bitmask and its signed action on the positive
  roots.  Turns order tests into word-sized bit operations, and carries
  the brute-force lattice oracles the harness checks against.
*/
class FiniteModel {
 public:
  static FiniteModel build(const RootTable& t, int max_elements = 20000);

  const RootTable& table() const { return *table_; }
  int size() const { return (int)elements_.size(); }
  const GroupElement& element(int i) const { return elements_[(size_t)i]; }
  int index_of(const GroupElement& g) const;
  int longest() const { return longest_; }
  int inverse(int i) const { return inverse_[(size_t)i]; }
  int mult(int i, int j) const;

  uint64_t inversion_mask(int i) const { return mask_[(size_t)i]; }
  uint64_t complement_mask(int i) const { return all_mask_ & ~mask_[(size_t)i]; }
  RootSet mask_to_set(uint64_t m) const;
  uint64_t set_to_mask(const RootSet& s) const;

  // Signed image of signed root r under element i.
  int act(int i, int r) const;
  bool weak_le(int i, int j) const {
    return (mask_[(size_t)i] & ~mask_[(size_t)j]) == 0;
  }

  // Least upper / greatest lower bounds found by scanning all of W.
  int oracle_join(int i, int j) const;
  int oracle_meet(int i, int j) const;

 private:
  const RootTable* table_ = nullptr;
  std::vector<GroupElement> elements_;
  std::map<std::vector<int>, int> index_;
  std::vector<uint64_t> mask_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> act_;  // [element][root] signed
  uint64_t all_mask_ = 0;
  int longest_ = 0;
};

}  // namespace coxlat
