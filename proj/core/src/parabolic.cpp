#include "coxlat/parabolic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "coxlat/errors.hpp"

namespace coxlat {

namespace {

bool supported_on(const Vec& v, const std::vector<int>& J) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!std::binary_search(J.begin(), J.end(), (int)i)) return false;
  }
  return true;
}

void require_members(const RootSet& lambda, const std::vector<RootSet>& gs) {
  if (gs.empty()) throw input_error("need at least one set");
  for (const RootSet& g : gs) {
    if (!g.subset_of(lambda)) {
      throw input_error("argument escapes the ambient set");
    }
  }
}

// Deficit fixpoint for closures of co-finite subsets of lambda: the
// complement of `deficit` in lambda is closed up by pulling a deficit
// root over once it is a strictly positive combination of two
// complement roots.  Returns the final deficit, i.e. lambda minus the
// closure.
RootSet close_complement(const RootTable& t, const RootSet& lambda,
                         const RootSet& deficit) {
  RootSet out(t);
  for (int r : deficit) out.insert(r);
  RootSet comp(t);
  for (int r : lambda) {
    if (!out.contains(r)) comp.insert(r);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int r : out.indices()) {
      Vec rv = t.coords(r);
      bool pulled = false;
      const auto& members = comp.indices();
      for (size_t i = 0; !pulled && i < members.size(); ++i) {
        for (size_t j = i + 1; !pulled && j < members.size(); ++j) {
          int u = members[(size_t)i], v = members[(size_t)j];
          if (RootTable::abs_index(u) == RootTable::abs_index(v)) continue;
          auto xy = solve_in_plane(t.coords(u), t.coords(v), rv);
          if (!xy) continue;
          pulled = xy->first > Scalar::rational(0, 1) &&
                   xy->second > Scalar::rational(0, 1);
        }
      }
      if (pulled) {
        out.erase(r);
        comp.insert(r);
        grew = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace

ParabolicSet lambda_j(const RootTable& t, const std::vector<int>& J) {
  ParabolicSet p;
  p.J = J;
  std::sort(p.J.begin(), p.J.end());
  p.J.erase(std::unique(p.J.begin(), p.J.end()), p.J.end());
  for (int j : p.J) {
    if (j < 0 || j >= t.system()->rank()) {
      throw input_error("generator index out of range");
    }
  }
  p.lambda = RootSet(t);
  p.core = RootSet(t);
  for (int k = 0; k < t.size(); ++k) {
    p.lambda.insert(k);
    if (supported_on(t.coords(k), p.J)) {
      p.lambda.insert(RootTable::negate(k));
      p.core.insert(k);
      p.core.insert(RootTable::negate(k));
    }
  }
  return p;
}

RootSet type_of(const ParabolicSet& p, const RootSet& gamma) {
  return gamma.intersect(p.core);
}

std::vector<RootSet> biclosed_in_lambda(const RootTable& t,
                                        const ParabolicSet& p) {
  if (!t.complete()) {
    throw truncation_error("subset brute force needs the full positive system",
                           t.depth_cap());
  }
  int n = p.lambda.size();
  if (n > 22) {
    throw truncation_error("subset brute force is limited to 22 roots", 22);
  }
  const std::vector<int>& roots = p.lambda.indices();
  std::vector<RootSet> out;
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    RootSet g(t);
    for (int i = 0; i < n; ++i) {
      if (mask & (uint32_t{1} << i)) g.insert(roots[(size_t)i]);
    }
    if (is_biclosed(t, ClosureKind::two, g, p.lambda)) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [](const RootSet& a, const RootSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<RootSet> biclosed_in_lambda_rank1(const RootTable& t,
                                              const ParabolicSet& p,
                                              int max_length) {
  if (p.J.size() != 1) {
    throw input_error("type-class enumeration needs exactly one generator");
  }
  int s = p.J[0];
  int alpha = t.simple(s);
  auto reflected = [&](const RootSet& g) {
    RootSet img(t);
    for (int r : g) img.insert(t.reflect(alpha, r));
    return img;
  };

  std::set<RootSet> found;
  std::map<std::vector<int>, int> seen;
  std::vector<GroupElement> frontier = {GroupElement::identity(t.system())};
  seen.emplace(frontier[0].word(), 0);
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const GroupElement& x : frontier) {
      RootSet phi = inversion_set(t, x);
      RootSet away = phi;
      away.erase(alpha);
      if (reflected(phi) == phi) found.insert(phi);
      if (phi.contains(alpha)) {
        found.insert(phi);
        found.insert(reflected(phi));
        if (reflected(away) == away) {
          RootSet adj = phi;
          adj.insert(RootTable::negate(alpha));
          found.insert(adj);
        }
      }
      if (x.length() == max_length) continue;
      for (int g = 0; g < t.system()->rank(); ++g) {
        GroupElement y = x * GroupElement::generator(t.system(), g);
        if (y.length() <= x.length()) continue;
        if (seen.emplace(y.word(), 0).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  std::vector<RootSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const RootSet& a, const RootSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

PosetCensus poset_census(std::vector<RootSet> elements) {
  PosetCensus c;
  std::sort(elements.begin(), elements.end(),
            [](const RootSet& a, const RootSet& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  c.elements = std::move(elements);
  int n = (int)c.elements.size();
  std::vector<std::vector<bool>> le((size_t)n, std::vector<bool>((size_t)n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      le[(size_t)i][(size_t)j] = c.elements[(size_t)i].subset_of(
          c.elements[(size_t)j]);
    }
  }
  std::vector<std::vector<int>> up((size_t)n);
  std::vector<bool> has_lower((size_t)n, false);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !le[(size_t)i][(size_t)j]) continue;
      bool cover = true;
      for (int k = 0; cover && k < n; ++k) {
        if (k == i || k == j) continue;
        cover = !(le[(size_t)i][(size_t)k] && le[(size_t)k][(size_t)j]);
      }
      if (cover) {
        c.covers.emplace_back(i, j);
        up[(size_t)i].push_back(j);
        has_lower[(size_t)j] = true;
      }
    }
  }
  std::sort(c.covers.begin(), c.covers.end());
  auto descend = [&](auto&& self, int at, int edges) -> void {
    if (up[(size_t)at].empty()) {
      c.chain_lengths.push_back(edges);
      return;
    }
    for (int nxt : up[(size_t)at]) self(self, nxt, edges + 1);
  };
  for (int i = 0; i < n; ++i) {
    if (!has_lower[(size_t)i]) descend(descend, i, 0);
  }
  std::sort(c.chain_lengths.begin(), c.chain_lengths.end());
  return c;
}

SetJoin SetJoin::found(RootSet g) {
  SetJoin j;
  j.found_ = std::move(g);
  return j;
}

SetJoin SetJoin::infinite(std::pair<int, int> witness) {
  SetJoin j;
  j.reason_ = NoJoinReason::infinite_closure;
  j.witness_ = witness;
  return j;
}

SetJoin SetJoin::not_biclosed(RootSet closed_union) {
  SetJoin j;
  j.reason_ = NoJoinReason::not_biclosed_closure;
  j.closed_ = std::move(closed_union);
  return j;
}

const RootSet& SetJoin::set() const {
  if (!found_) throw std::logic_error("no join to return");
  return *found_;
}

NoJoinReason SetJoin::reason() const {
  if (!reason_) throw std::logic_error("join exists, no failure reason");
  return *reason_;
}

const std::pair<int, int>& SetJoin::infinite_witness() const {
  if (!reason_ || *reason_ != NoJoinReason::infinite_closure) {
    throw std::logic_error("no infinite witness");
  }
  return witness_;
}

const RootSet& SetJoin::closed_union() const {
  if (!closed_) throw std::logic_error("no closed union");
  return *closed_;
}

SetJoin pjoin(const RootTable& t, const RootSet& lambda,
              const std::vector<RootSet>& gammas) {
  require_members(lambda, gammas);
  RootSet u(t);
  for (const RootSet& g : gammas) {
    for (int r : g) u.insert(r);
  }
  ClosureResult cl = closure(t, ClosureKind::two, u, lambda);
  if (cl.is_infinite()) return SetJoin::infinite(cl.witness());
  if (!is_biclosed(t, ClosureKind::two, cl.set(), lambda)) {
    return SetJoin::not_biclosed(cl.set());
  }
  return SetJoin::found(cl.set());
}

RootSet pmeet(const RootTable& t, const RootSet& lambda,
              const std::vector<RootSet>& gammas) {
  require_members(lambda, gammas);
  RootSet deficit = gammas[0];
  for (const RootSet& g : gammas) deficit = deficit.intersect(g);
  return close_complement(t, lambda, deficit);
}

std::optional<RootSet> complement_closure(const RootTable& t,
                                          const RootSet& lambda,
                                          const RootSet& gamma,
                                          const RootSet& xi) {
  require_members(lambda, {gamma, xi});
  RootSet deficit = gamma.difference(xi);
  RootSet delta = close_complement(t, lambda, deficit);
  if (!is_biclosed(t, ClosureKind::two, delta, lambda)) return std::nullopt;
  return delta;
}

QuasiparabolicData quasiparabolic_data(const RootTable& t,
                                       const RootSet& lambda) {
  RootSet everything(t);
  for (int k = 0; k < t.size(); ++k) {
    everything.insert(k);
    everything.insert(RootTable::negate(k));
    if (!lambda.contains(k) && !lambda.contains(RootTable::negate(k))) {
      throw input_error("set misses a root pair entirely");
    }
  }
  if (!is_closed(t, ClosureKind::two, lambda, everything)) {
    throw input_error("set is not closed");
  }
  QuasiparabolicData q;
  q.psi = lambda.intersect(lambda.negated());
  std::vector<int> pos;
  for (int r : q.psi) {
    if (RootTable::positive_index(r)) pos.push_back(r);
  }
  q.group = canonical_generators(t, pos);
  for (int b : q.group.chi) {
    for (int r : lambda) {
      if (!lambda.contains(t.reflect(b, r))) {
        throw input_error("set is not stable under its two-sided part");
      }
    }
  }
  return q;
}

}  // namespace coxlat
