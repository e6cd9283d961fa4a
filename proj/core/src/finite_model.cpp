#include "coxlat/finite_model.hpp"

#include <algorithm>
#include <cassert>

#include "coxlat/errors.hpp"

namespace coxlat {

std::vector<GroupElement> all_elements(SystemPtr sys, int max_elements) {
  std::vector<GroupElement> out;
  std::map<std::vector<int>, int> seen;
  out.push_back(GroupElement::identity(sys));
  seen.emplace(out[0].word(), 0);
  size_t frontier_begin = 0;
  while (frontier_begin < out.size()) {
    size_t frontier_end = out.size();
    std::vector<GroupElement> next;
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      for (int s = 0; s < sys->rank(); ++s) {
        GroupElement g = out[i] * GroupElement::generator(sys, s);
        if (g.length() <= out[i].length()) continue;
        if (seen.count(g.word())) continue;
        seen.emplace(g.word(), 0);
        next.push_back(std::move(g));
      }
    }
    std::sort(next.begin(), next.end());
    for (auto& g : next) {
      if ((int)out.size() >= max_elements) {
        throw truncation_error("group larger than the element limit",
                               max_elements);
      }
      out.push_back(std::move(g));
    }
    frontier_begin = frontier_end;
  }
  return out;
}

FiniteModel FiniteModel::build(const RootTable& t, int max_elements) {
  if (!t.complete()) {
    throw truncation_error("finite model needs the full positive system",
                           t.depth_cap());
  }
  if (t.size() > 64) {
    throw input_error("finite model is limited to 64 positive roots");
  }
  FiniteModel m;
  m.table_ = &t;
  m.elements_ = all_elements(t.system(), max_elements);
  m.all_mask_ = t.size() == 64 ? ~uint64_t{0} : (uint64_t{1} << t.size()) - 1;
  for (int i = 0; i < (int)m.elements_.size(); ++i) {
    m.index_.emplace(m.elements_[(size_t)i].word(), i);
  }
  m.mask_.resize(m.elements_.size());
  m.inverse_.resize(m.elements_.size());
  m.act_.resize(m.elements_.size());
  for (int i = 0; i < (int)m.elements_.size(); ++i) {
    const GroupElement& g = m.elements_[(size_t)i];
    uint64_t mask = 0;
    for (int r : inversion_set(t, g)) mask |= uint64_t{1} << r;
    m.mask_[(size_t)i] = mask;
    auto inv_it = m.index_.find(g.inverse().word());
    assert(inv_it != m.index_.end());
    m.inverse_[(size_t)i] = inv_it->second;
    auto& row = m.act_[(size_t)i];
    row.resize((size_t)t.size());
    for (int k = 0; k < t.size(); ++k) row[(size_t)k] = t.apply(g, k);
    if (g.length() > m.elements_[(size_t)m.longest_].length()) m.longest_ = i;
  }
  return m;
}

int FiniteModel::index_of(const GroupElement& g) const {
  auto it = index_.find(g.word());
  if (it == index_.end()) throw input_error("element outside the model");
  return it->second;
}

int FiniteModel::mult(int i, int j) const {
  return index_of(elements_[(size_t)i] * elements_[(size_t)j]);
}

RootSet FiniteModel::mask_to_set(uint64_t m) const {
  RootSet s(*table_);
  for (int k = 0; k < table_->size(); ++k) {
    if (m & (uint64_t{1} << k)) s.insert(k);
  }
  return s;
}

uint64_t FiniteModel::set_to_mask(const RootSet& s) const {
  uint64_t m = 0;
  for (int r : s) {
    assert(r >= 0);
    m |= uint64_t{1} << r;
  }
  return m;
}

int FiniteModel::act(int i, int r) const {
  int k = RootTable::abs_index(r);
  int img = act_[(size_t)i][(size_t)k];
  return r >= 0 ? img : ~img;
}

int FiniteModel::oracle_join(int i, int j) const {
  uint64_t need = mask_[(size_t)i] | mask_[(size_t)j];
  int best = -1;
  for (int w = 0; w < size(); ++w) {
    if ((need & ~mask_[(size_t)w]) != 0) continue;
    if (best < 0 || weak_le(w, best)) best = w;
  }
  assert(best >= 0);
  // A least upper bound, not merely a minimal one.
  for (int w = 0; w < size(); ++w) {
    if ((need & ~mask_[(size_t)w]) == 0) assert(weak_le(best, w));
  }
  return best;
}

int FiniteModel::oracle_meet(int i, int j) const {
  uint64_t cap = mask_[(size_t)i] & mask_[(size_t)j];
  int best = 0;
  for (int w = 0; w < size(); ++w) {
    if ((mask_[(size_t)w] & ~cap) != 0) continue;
    if (weak_le(best, w)) best = w;
  }
  for (int w = 0; w < size(); ++w) {
    if ((mask_[(size_t)w] & ~cap) == 0) assert(weak_le(w, best));
  }
  return best;
}

}  // namespace coxlat
