#include "coxlat/orders.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "coxlat/closure.hpp"
#include "coxlat/errors.hpp"

namespace coxlat {

std::vector<std::vector<int>> reduced_words(const GroupElement& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  auto rec = [&](auto&& self, const GroupElement& x) -> void {
    if (x.length() == 0) {
      out.push_back(acc);
      return;
    }
    // left_descents() is ascending, so the words come out lexicographic.
    for (int s : x.left_descents()) {
      acc.push_back(s);
      self(self, GroupElement::generator(x.system(), s) * x);
      acc.pop_back();
    }
  };
  rec(rec, w);
  return out;
}

std::vector<std::vector<int>> admissible_orders_of(const RootTable& t,
                                                   const GroupElement& w) {
  std::vector<std::vector<int>> out;
  for (const std::vector<int>& word : reduced_words(w)) {
    GroupElement prefix = GroupElement::identity(t.system());
    std::vector<int> seq;
    seq.reserve(word.size());
    for (int s : word) {
      seq.push_back(t.apply(prefix, t.simple(s)));
      prefix = prefix * GroupElement::generator(t.system(), s);
    }
    out.push_back(std::move(seq));
  }
  return out;
}

std::vector<std::vector<int>> enumerate_reflection_orders(const RootTable& t) {
  if (!t.complete()) {
    throw truncation_error("reflection orders need the full positive system",
                           t.depth_cap());
  }
  RootSet pos(t);
  for (int k = 0; k < t.size(); ++k) pos.insert(k);

  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  RootSet prefix(t);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(seq.size()) == t.size()) {
      out.push_back(seq);
      return;
    }
    for (int k = 0; k < t.size(); ++k) {
      if (prefix.contains(k)) continue;
      prefix.insert(k);
      if (is_biclosed(t, ClosureKind::two, prefix, pos)) {
        seq.push_back(k);
        self(self);
        seq.pop_back();
      }
      prefix.erase(k);
    }
  };
  rec(rec);
  return out;
}

std::vector<GroupElement> tau_bruhat(const RootTable& t, const RootSet& gamma,
                                     int max_length) {
  if (max_length < 0 && !t.complete()) {
    throw truncation_error("unbounded reachability needs the full positive system",
                           t.depth_cap());
  }
  std::vector<int> labels;
  for (int r : gamma.indices()) {
    if (!RootTable::positive_index(r)) {
      throw input_error("reachability labels must be positive roots");
    }
    labels.push_back(r);
  }

  std::set<GroupElement> seen;
  std::vector<GroupElement> frontier{GroupElement::identity(t.system())};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const GroupElement& x : frontier) {
      for (int r : labels) {
        GroupElement y = x * t.reflection_element(r);
        if (y.length() <= x.length()) continue;
        if (max_length >= 0 && y.length() > max_length) continue;
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return std::vector<GroupElement>(seen.begin(), seen.end());
}

}  // namespace coxlat
