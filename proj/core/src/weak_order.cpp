#include "coxlat/weak_order.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "coxlat/errors.hpp"

namespace coxlat {

namespace {

std::mutex g_research_mutex;
std::vector<std::string> g_research_events;

void require_same_system(const RootTable& t,
                         const std::vector<GroupElement>& xs) {
  if (xs.empty()) throw input_error("need at least one element");
  for (const GroupElement& x : xs) {
    if (x.system() != t.system()) {
      throw input_error("elements come from different systems");
    }
  }
}

void require_complete(const RootTable& t, const char* what) {
  if (!t.complete()) {
    throw truncation_error(std::string(what) +
                               " needs the complete root table",
                           t.depth_cap());
  }
}

}  // namespace

void log_research_event(const std::string& line) {
  std::lock_guard<std::mutex> lock(g_research_mutex);
  g_research_events.push_back(line);
}

std::vector<std::string> research_events() {
  std::lock_guard<std::mutex> lock(g_research_mutex);
  return g_research_events;
}

void clear_research_events() {
  std::lock_guard<std::mutex> lock(g_research_mutex);
  g_research_events.clear();
}

JoinOutcome JoinOutcome::found(GroupElement y) {
  JoinOutcome o;
  o.element_ = std::move(y);
  return o;
}

JoinOutcome JoinOutcome::infinite(std::pair<int, int> witness) {
  JoinOutcome o;
  o.reason_ = NoJoinReason::infinite_closure;
  o.witness_ = witness;
  return o;
}

JoinOutcome JoinOutcome::not_biclosed(RootSet residue) {
  JoinOutcome o;
  o.reason_ = NoJoinReason::not_biclosed_closure;
  o.residue_ = std::move(residue);
  return o;
}

const GroupElement& JoinOutcome::element() const {
  if (!element_) throw std::logic_error("no join to return");
  return *element_;
}

NoJoinReason JoinOutcome::reason() const {
  if (!reason_) throw std::logic_error("join exists, no failure reason");
  return *reason_;
}

const std::pair<int, int>& JoinOutcome::infinite_witness() const {
  if (reason_ != NoJoinReason::infinite_closure) {
    throw std::logic_error("no infinite witness");
  }
  return witness_;
}

const RootSet& JoinOutcome::residue() const {
  if (!residue_) throw std::logic_error("no residue");
  return *residue_;
}

JoinOutcome join(const RootTable& t, const std::vector<GroupElement>& xs) {
  require_same_system(t, xs);
  RootSet gamma(t);
  for (const GroupElement& x : xs) {
    gamma = gamma.unite(inversion_set(t, x));
  }
  ClosureResult c = closure(t, ClosureKind::two, gamma, full_positive(t));
  if (c.is_infinite()) return JoinOutcome::infinite(c.witness());
  StripResult s = strip_simple(t, c.set());
  if (!s.element) {
    std::string line = "finite closure is not biclosed: system=" +
                       t.system()->describe() + " residue=" +
                       s.residue.str();
    log_research_event(line);
    return JoinOutcome::not_biclosed(s.residue);
  }
  return JoinOutcome::found(*s.element);
}

GroupElement meet(const std::vector<GroupElement>& xs) {
  if (xs.empty()) throw input_error("need at least one element");
  SystemPtr sys = xs.front().system();
  for (const GroupElement& x : xs) {
    if (x.system() != sys) {
      throw input_error("elements come from different systems");
    }
  }
  std::vector<GroupElement> cur = xs;
  std::vector<int> prefix;
  for (;;) {
    int descent = -1;
    for (int s = 0; s < sys->rank() && descent < 0; ++s) {
      bool common = true;
      for (const GroupElement& x : cur) {
        if (!x.has_left_descent(s)) {
          common = false;
          break;
        }
      }
      if (common) descent = s;
    }
    if (descent < 0) break;
    prefix.push_back(descent);
    GroupElement g = GroupElement::generator(sys, descent);
    for (GroupElement& x : cur) x = g * x;
  }
  return GroupElement::from_word(sys, prefix);
}

bool meet_complement_check(const RootTable& t,
                           const std::vector<GroupElement>& xs) {
  require_same_system(t, xs);
  require_complete(t, "complement formula");
  GroupElement m = meet(xs);
  RootSet gamma(t);
  for (const GroupElement& x : xs) {
    gamma = gamma.unite(inversion_complement(t, x));
  }
  ClosureResult c = closure(t, ClosureKind::two, gamma, full_positive(t));
  return !c.is_infinite() && c.set() == inversion_complement(t, m);
}

JoinOutcome join_adjoin_root(const RootTable& t, const GroupElement& x,
                             int a) {
  if (x.system() != t.system()) {
    throw input_error("element comes from a different system");
  }
  if (a < 0 || a >= t.size()) throw input_error("root index out of range");
  GroupElement s = t.reflection_element(a);
  GroupElement sx = s * x;
  RootSet all = full_positive(t);

  if (sx.length() == x.length() + 1) {
    RootSet gamma = inversion_set(t, x);
    gamma.insert(a);
    ClosureResult c = closure(t, ClosureKind::two, gamma, all);
    if (c.is_infinite()) return JoinOutcome::infinite(c.witness());
    StripResult st = strip_simple(t, c.set());
    if (!st.element) return JoinOutcome::not_biclosed(st.residue);
    GroupElement y = *st.element;
    GroupElement sy = s * y;
    if (sy.length() + 1 != y.length() || !weak_le(sy, y)) {
      throw std::logic_error("adjoined join does not cover its reflection");
    }
    RootSet expected = c.set();
    expected.erase(a);
    if (inversion_set(t, sy) != expected) {
      throw std::logic_error("adjoined join drop identity failed");
    }
    RootSet both = inversion_set(t, x).unite(inversion_set(t, sx));
    both.erase(a);
    if (closure(t, ClosureKind::two, both, all).set() != expected) {
      throw std::logic_error("adjoined join residual closure failed");
    }
    return JoinOutcome::found(y);
  }

  if (sx.length() + 1 == x.length()) {
    GroupElement y = meet({x, sx});
    if (t.complete()) {
      GroupElement sy = s * y;
      if (y.length() + 1 != sy.length() || !weak_le(y, sy)) {
        throw std::logic_error("adjoined meet is not covered as stated");
      }
      RootSet gamma = inversion_complement(t, x);
      gamma.insert(a);
      RootSet delta = closure(t, ClosureKind::two, gamma, all).set();
      if (inversion_complement(t, y) != delta) {
        throw std::logic_error("adjoined meet complement identity failed");
      }
      RootSet expected = delta;
      expected.erase(a);
      if (inversion_complement(t, sy) != expected) {
        throw std::logic_error("adjoined meet drop identity failed");
      }
      RootSet both =
          inversion_complement(t, x).unite(inversion_complement(t, sx));
      both.erase(a);
      if (closure(t, ClosureKind::two, both, all).set() != expected) {
        throw std::logic_error("adjoined meet residual closure failed");
      }
    }
    return JoinOutcome::found(y);
  }

  throw input_error("reflection must change the length by exactly one");
}

GroupElement max_below_avoiding(const RootTable& t, const GroupElement& x,
                                const GroupElement& y) {
  if (x.system() != t.system() || y.system() != t.system()) {
    throw input_error("elements come from different systems");
  }
  require_complete(t, "complement computation");
  RootSet all = full_positive(t);
  RootSet gamma = inversion_set(t, x).unite(inversion_complement(t, y));
  ClosureResult c = closure(t, ClosureKind::two, gamma, all);
  if (c.is_infinite()) throw std::logic_error("cofinite closure is infinite");
  StripResult st = strip_simple(t, all.difference(c.set()));
  if (!st.element) {
    throw std::logic_error("closure complement is not an inversion set");
  }
  return *st.element;
}

GroupElement cofinite_coclosed_closure(const RootTable& t,
                                       const RootSet& gamma) {
  require_complete(t, "complement computation");
  RootSet all = full_positive(t);
  if (!is_coclosed(t, ClosureKind::two, gamma, all)) {
    throw input_error("set is not coclosed");
  }
  ClosureResult c = closure(t, ClosureKind::two, gamma, all);
  if (c.is_infinite()) throw std::logic_error("cofinite closure is infinite");
  StripResult st = strip_simple(t, all.difference(c.set()));
  if (!st.element) {
    throw std::logic_error("closure complement is not an inversion set");
  }
  return *st.element;
}

std::vector<GroupElement> parabolic_elements(const RootTable& t,
                                             const std::vector<int>& gens,
                                             int max_elements) {
  SystemPtr sys = t.system();
  for (int s : gens) {
    if (s < 0 || s >= sys->rank()) throw input_error("generator out of range");
  }
  std::vector<GroupElement> out{GroupElement::identity(sys)};
  std::map<std::vector<int>, int> seen;
  seen.emplace(out.front().word(), 0);
  size_t frontier_begin = 0;
  while (frontier_begin < out.size()) {
    size_t frontier_end = out.size();
    std::vector<GroupElement> next;
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      for (int s : gens) {
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
        throw truncation_error("parabolic subgroup larger than the limit",
                               max_elements);
      }
      out.push_back(std::move(g));
    }
    frontier_begin = frontier_end;
  }
  return out;
}

GroupElement longest_in_parabolic(const RootTable& t,
                                  const std::vector<int>& gens) {
  GroupElement w = GroupElement::identity(t.system());
  // Greedy ascent inside the subgroup; ends at the longest element when
  // the subgroup is finite, whose length is at most the table size.
  for (int steps = 0; steps <= t.size(); ++steps) {
    int up = -1;
    for (int s : gens) {
      GroupElement g = w * GroupElement::generator(t.system(), s);
      if (g.length() > w.length()) {
        up = s;
        break;
      }
    }
    if (up < 0) return w;
    w = w * GroupElement::generator(t.system(), up);
  }
  throw truncation_error("parabolic subgroup is not finite within the table",
                         t.depth_cap());
}

bool parabolic_fibering_check(const RootTable& t, const std::vector<int>& J,
                              const GroupElement& x) {
  if (x.system() != t.system()) {
    throw input_error("element comes from a different system");
  }
  GroupElement wj = longest_in_parabolic(t, J);
  GroupElement wjx = wj * x;
  if (wjx.length() != wj.length() + x.length()) {
    throw input_error("element is not minimal in its coset");
  }
  JoinOutcome jo = join(t, {wj, x});
  if (!jo.has_join()) throw input_error("join with the parabolic is missing");
  GroupElement y = jo.element();
  GroupElement z = wj.inverse() * y;
  if (y.length() != wj.length() + z.length()) return false;

  RootSet phi_z = inversion_set(t, z);
  for (const GroupElement& u : parabolic_elements(t, J)) {
    JoinOutcome uo = join(t, {u, z});
    if (!uo.has_join()) return false;
    if (uo.element() != u * z) return false;
    RootSet phi_u = inversion_set(t, u);
    if (!phi_u.intersect(phi_z).empty()) return false;
    if (inversion_set(t, uo.element()) != phi_u.unite(phi_z)) return false;
  }

  RootSet phi_y = inversion_set(t, y);
  for (int alpha : inversion_set(t, wj)) {
    for (const PlaneSubsystem& p : maximal_dihedral_containing(t, alpha)) {
      RootSet plane(t, p.positive);
      RootSet met = plane.intersect(phi_y);
      if (met == plane) continue;
      if (met == RootSet(t, {alpha})) continue;
      return false;
    }
  }
  return true;
}

}  // namespace coxlat
