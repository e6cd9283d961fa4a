#include "coxlat/closure.hpp"

#include <algorithm>
#include <cassert>
#include <memory>
#include <mutex>
#include <set>

#include "coxlat/errors.hpp"

namespace coxlat {

namespace {

/*
  Per-table memo of certified pair cones.  A cone's root membership is
  a fact about the table alone, so it is cached across calls; entries
  hold the full signed member list (nullopt for infinite cones) and
  results are intersected with the caller's ambient on the way out.
*/
struct PairMemo {
  std::mutex mutex;
  std::map<std::pair<int, int>, std::optional<std::vector<int>>> cone;
};

PairMemo& memo_for(const RootTable& t) {
  static std::mutex registry_mutex;
  static std::map<uint64_t, std::unique_ptr<PairMemo>> registry;
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto& slot = registry[t.uid()];
  if (!slot) slot = std::make_unique<PairMemo>();
  return *slot;
}

}  // namespace

RootSet full_positive(const RootTable& t) {
  RootSet out(t);
  for (int k = 0; k < t.size(); ++k) out.insert(k);
  return out;
}

namespace {

Vec add_scaled(const Vec& u, const Scalar& f, const Vec& v) {
  Vec out(u.size(), Scalar(0));
  for (size_t i = 0; i < u.size(); ++i) out[i] = u[i] + f * v[i];
  return out;
}

// Continue a ray of the plane recurrence past the table edge and prove
// that no further ray root lies in the cone {p >= 0, q >= 0} of (a,b),
// where (p,q) are plane coordinates.  Uses that once a coordinate
// sequence is negative and non-increasing it stays so: the recurrence
// x' = 2|c| x - x_prev with 2|c| >= 2 preserves that property.
void certify_ray_leaves_cone(const RootTable& t, const Vec& va, const Vec& vb,
                             const Scalar& c, Vec prev, Vec cur,
                             int max_steps) {
  auto pq = [&](const Vec& r) {
    auto s = solve_in_plane(va, vb, r);
    assert(s.has_value());
    return *s;
  };
  auto [pp, pq2] = pq(prev);
  auto [cp, cq] = pq(cur);
  Scalar f = Scalar(0) - Scalar(2) * c;
  for (int step = 0; step < max_steps; ++step) {
    if (cp.sign() < 0 && (cp - pp).sign() <= 0) return;
    if (cq.sign() < 0 && (cq - pq2).sign() <= 0) return;
    Vec nxt(cur.size(), Scalar(0));
    for (size_t i = 0; i < cur.size(); ++i) nxt[i] = f * cur[i] - prev[i];
    Scalar np = f * cp - pp, nq = f * cq - pq2;
    if (np.sign() >= 0 && nq.sign() >= 0 && !t.find(nxt)) {
      throw truncation_error("pair cone holds roots beyond the depth cap",
                             t.depth_cap());
    }
    prev = std::move(cur);
    cur = std::move(nxt);
    pp = cp;
    pq2 = cq;
    cp = np;
    cq = nq;
  }
  throw truncation_error("pair cone tail did not settle", t.depth_cap());
}

}  // namespace

ClosureResult pair_closure_two(const RootTable& t, int a, int b,
                               const RootSet& ambient) {
  RootSet out(t);
  if (a == b) {
    if (ambient.contains(a)) out.insert(a);
    return ClosureResult::finite(out);
  }
  if (a == ~b) {
    // The cone degenerates to a line, which meets Phi in just the pair.
    if (ambient.contains(a)) out.insert(a);
    if (ambient.contains(b)) out.insert(b);
    return ClosureResult::finite(out);
  }
  PairMemo& memo = memo_for(t);
  std::pair<int, int> key{std::min(a, b), std::max(a, b)};
  {
    std::lock_guard<std::mutex> lock(memo.mutex);
    auto it = memo.cone.find(key);
    if (it != memo.cone.end()) {
      if (!it->second) return ClosureResult::infinite(a, b);
      for (int r : *it->second) {
        if (ambient.contains(r)) out.insert(r);
      }
      return ClosureResult::finite(out);
    }
  }

  Scalar c = t.bilinear(a, b);
  if ((c + Scalar(1)).sign() <= 0) {
    std::lock_guard<std::mutex> lock(memo.mutex);
    memo.cone.emplace(key, std::nullopt);
    return ClosureResult::infinite(a, b);
  }

  PlaneSubsystem p = plane_subsystem(t, a, b);
  Vec va = t.coords(a), vb = t.coords(b);
  std::vector<int> members;
  for (int k : p.positive) {
    for (int r : {k, ~k}) {
      auto xy = solve_in_plane(va, vb, t.coords(r));
      assert(xy.has_value());
      if (xy->first.sign() >= 0 && xy->second.sign() >= 0) {
        members.push_back(r);
        if (ambient.contains(r)) out.insert(r);
      }
    }
  }
  if (!p.finite) {
    // Finite cone inside an infinite plane: show each of the four ray
    // tails leaves the cone for good.
    Vec vu = t.positive(p.simple_u).coords;
    Vec vv = t.positive(p.simple_v).coords;
    Scalar cc = t.bilinear(p.simple_u, p.simple_v);
    int max_steps = 4 * t.size() + 16;
    Vec mu = add_scaled(Vec(vu.size(), Scalar(0)), Scalar(-1), vu);
    Vec mv = add_scaled(Vec(vv.size(), Scalar(0)), Scalar(-1), vv);
    certify_ray_leaves_cone(t, va, vb, cc, mv, vu, max_steps);
    certify_ray_leaves_cone(t, va, vb, cc, mu, vv, max_steps);
    certify_ray_leaves_cone(t, va, vb, cc, vv, mu, max_steps);
    certify_ray_leaves_cone(t, va, vb, cc, vu, mv, max_steps);
  }
  {
    std::lock_guard<std::mutex> lock(memo.mutex);
    memo.cone.emplace(key, std::move(members));
  }
  return ClosureResult::finite(out);
}

namespace {

ClosureResult closure_two(const RootTable& t, const RootSet& gamma,
                          const RootSet& ambient) {
  RootSet cur = gamma;
  std::set<std::pair<int, int>> done;
  for (;;) {
    bool grew = false;
    std::vector<int> snapshot = cur.indices();
    for (size_t i = 0; i < snapshot.size() && !grew; ++i) {
      for (size_t j = i; j < snapshot.size() && !grew; ++j) {
        std::pair<int, int> key{std::min(snapshot[i], snapshot[j]),
                                std::max(snapshot[i], snapshot[j])};
        if (!done.insert(key).second) continue;
        ClosureResult r =
            pair_closure_two(t, snapshot[i], snapshot[j], ambient);
        if (r.is_infinite()) return r;
        for (int x : r.set()) {
          if (!cur.contains(x)) {
            cur.insert(x);
            grew = true;
          }
        }
      }
    }
    if (!grew) return ClosureResult::finite(cur);
  }
}

// Cone extremes of a finite generating set: the pair whose cone holds
// all the others.
std::optional<std::pair<int, int>> cone_extremes(const RootTable& t,
                                                const std::vector<int>& g) {
  for (size_t i = 0; i < g.size(); ++i) {
    for (size_t j = i + 1; j < g.size(); ++j) {
      Vec vi = t.coords(g[i]), vj = t.coords(g[j]);
      bool all = true;
      for (int r : g) {
        if (r == g[i] || r == g[j]) continue;
        auto xy = solve_in_plane(vi, vj, t.coords(r));
        if (!xy || xy->first.sign() < 0 || xy->second.sign() < 0) {
          all = false;
          break;
        }
      }
      if (all) return std::make_pair(g[i], g[j]);
    }
  }
  return std::nullopt;
}

ClosureResult closure_cone(const RootTable& t, const RootSet& gamma,
                           const RootSet& ambient) {
  const auto& g = gamma.indices();
  for (size_t i = 0; i < g.size(); ++i) {
    for (size_t j = i + 1; j < g.size(); ++j) {
      if (g[i] == ~g[j]) continue;  // a line holds no isotropic direction
      if ((t.bilinear(g[i], g[j]) + Scalar(1)).sign() <= 0) {
        return ClosureResult::infinite(g[i], g[j]);
      }
    }
  }
  if (gamma.size() <= 1) return ClosureResult::finite(gamma);
  if (!t.complete()) {
    // Without the full positive system, membership is only certifiable
    // inside a single certified plane.
    auto ext = cone_extremes(t, g);
    if (ext) {
      auto in_plane = [&](int r) {
        return solve_in_plane(t.coords(ext->first), t.coords(ext->second),
                              t.coords(r))
            .has_value();
      };
      if (std::all_of(g.begin(), g.end(), in_plane)) {
        return pair_closure_two(t, ext->first, ext->second, ambient);
      }
    }
    throw truncation_error(
        "cone closure outside one plane needs the full positive system",
        t.depth_cap());
  }
  std::vector<Vec> gens;
  for (int r : g) gens.push_back(t.coords(r));
  RootSet out(t);
  for (int r : ambient) {
    if (gamma.contains(r) || in_nonneg_span(gens, t.coords(r))) out.insert(r);
  }
  return ClosureResult::finite(out);
}

ClosureResult closure_zsum(const RootTable& t, const RootSet& gamma,
                           const RootSet& ambient) {
  CrystalRealization crys = CrystalRealization::build(t);
  auto crystal = [&](int r) {
    std::vector<long> v = crys.coords(RootTable::abs_index(r));
    if (r < 0) {
      for (long& x : v) x = -x;
    }
    return v;
  };
  RootSet cur = gamma;
  std::set<std::pair<int, int>> done;
  for (;;) {
    bool grew = false;
    std::vector<int> snapshot = cur.indices();
    for (size_t i = 0; i < snapshot.size() && !grew; ++i) {
      for (size_t j = i; j < snapshot.size() && !grew; ++j) {
        std::pair<int, int> key{std::min(snapshot[i], snapshot[j]),
                                std::max(snapshot[i], snapshot[j])};
        if (!done.insert(key).second) continue;
        std::vector<long> va = crystal(snapshot[i]), vb = crystal(snapshot[j]);
        for (size_t x = 0; x < va.size(); ++x) va[x] += vb[x];
        auto idx = crys.find_certified(va);
        if (idx && !cur.contains(*idx)) {
          cur.insert(*idx);
          grew = true;
        }
      }
    }
    if (!grew) break;
  }
  return ClosureResult::finite(cur.intersect(ambient));
}

}  // namespace

ClosureResult closure(const RootTable& t, ClosureKind kind,
                      const RootSet& gamma, const RootSet& ambient) {
  if (!gamma.subset_of(ambient)) {
    throw input_error("closure input must lie in the ambient set");
  }
  switch (kind) {
    case ClosureKind::two:
      return closure_two(t, gamma, ambient);
    case ClosureKind::cone:
      return closure_cone(t, gamma, ambient);
    case ClosureKind::zsum:
      return closure_zsum(t, gamma, ambient);
  }
  throw input_error("unknown closure kind");
}

bool is_closed(const RootTable& t, ClosureKind kind, const RootSet& gamma,
               const RootSet& lambda) {
  if (!gamma.subset_of(lambda)) {
    throw input_error("is_closed input must lie in lambda");
  }
  const auto& g = gamma.indices();
  switch (kind) {
    case ClosureKind::two: {
      for (size_t i = 0; i < g.size(); ++i) {
        for (size_t j = i + 1; j < g.size(); ++j) {
          Vec va = t.coords(g[i]), vb = t.coords(g[j]);
          for (int r : lambda) {
            if (gamma.contains(r)) continue;
            auto xy = solve_in_plane(va, vb, t.coords(r));
            if (xy && xy->first.sign() >= 0 && xy->second.sign() >= 0) {
              return false;
            }
          }
        }
      }
      return true;
    }
    case ClosureKind::cone: {
      if (g.empty()) return true;
      std::vector<Vec> gens;
      for (int r : g) gens.push_back(t.coords(r));
      for (int r : lambda) {
        if (!gamma.contains(r) && in_nonneg_span(gens, t.coords(r))) {
          return false;
        }
      }
      return true;
    }
    case ClosureKind::zsum: {
      CrystalRealization crys = CrystalRealization::build(t);
      auto crystal = [&](int r) {
        std::vector<long> v = crys.coords(RootTable::abs_index(r));
        if (r < 0) {
          for (long& x : v) x = -x;
        }
        return v;
      };
      for (size_t i = 0; i < g.size(); ++i) {
        for (size_t j = i; j < g.size(); ++j) {
          std::vector<long> va = crystal(g[i]), vb = crystal(g[j]);
          for (size_t x = 0; x < va.size(); ++x) va[x] += vb[x];
          auto idx = crys.find(va);
          if (idx && lambda.contains(*idx) && !gamma.contains(*idx)) {
            return false;
          }
        }
      }
      return true;
    }
  }
  throw input_error("unknown closure kind");
}

bool is_coclosed(const RootTable& t, ClosureKind kind, const RootSet& gamma,
                 const RootSet& lambda) {
  return is_closed(t, kind, lambda.difference(gamma), lambda);
}

bool is_biclosed(const RootTable& t, ClosureKind kind, const RootSet& gamma,
                 const RootSet& lambda) {
  return is_closed(t, kind, gamma, lambda) &&
         is_coclosed(t, kind, gamma, lambda);
}

StripResult strip_simple(const RootTable& t, const RootSet& delta) {
  if (!delta.all_positive()) {
    throw input_error("strip operates on positive root sets");
  }
  auto sys = t.system();
  RootSet cur = delta;
  std::vector<int> word;
  for (;;) {
    if (cur.empty()) {
      return StripResult{GroupElement::from_word(sys, word), RootSet(t)};
    }
    int s = -1;
    for (int gen = 0; gen < sys->rank(); ++gen) {
      if (cur.contains(t.simple(gen))) {
        s = gen;
        break;
      }
    }
    if (s < 0) return StripResult{std::nullopt, cur};
    word.push_back(s);
    GroupElement sg = GroupElement::generator(sys, s);
    RootSet next(t);
    for (int r : cur) {
      if (r == t.simple(s)) continue;
      int img = t.apply(sg, r);
      assert(img >= 0);
      next.insert(img);
    }
    cur = next;
  }
}

bool is_unipodal(const RootTable& t, const RootSet& gamma) {
  if (!gamma.all_positive()) {
    throw input_error("unipodal test operates on positive root sets");
  }
  for (int r : gamma) {
    for (const PlaneSubsystem& p : maximal_dihedral_containing(t, r)) {
      if (!gamma.contains(p.simple_u) && !gamma.contains(p.simple_v)) {
        return false;
      }
    }
  }
  return true;
}

bool in_nonneg_span(const std::vector<Vec>& gens, const Vec& target) {
  const size_t k = gens.size();
  const size_t n = target.size();
  if (k == 0) {
    return std::all_of(target.begin(), target.end(),
                       [](const Scalar& x) { return x.is_zero(); });
  }
  // Row-reduce the system sum lambda_i gens_i = target.
  std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(k + 1, Scalar(0)));
  for (size_t row = 0; row < n; ++row) {
    for (size_t i = 0; i < k; ++i) rows[row][i] = gens[i][row];
    rows[row][k] = target[row];
  }
  std::vector<size_t> pivot_of_row;
  size_t rank = 0;
  for (size_t col = 0; col < k && rank < n; ++col) {
    size_t pr = rank;
    while (pr < n && rows[pr][col].is_zero()) ++pr;
    if (pr == n) continue;
    std::swap(rows[rank], rows[pr]);
    Scalar inv = rows[rank][col].inverse();
    for (size_t c = col; c <= k; ++c) rows[rank][c] = rows[rank][c] * inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      Scalar f = rows[r][col];
      for (size_t c = col; c <= k; ++c) {
        rows[r][c] = rows[r][c] - f * rows[rank][c];
      }
    }
    pivot_of_row.push_back(col);
    ++rank;
  }
  for (size_t r = rank; r < n; ++r) {
    if (!rows[r][k].is_zero()) return false;  // target outside the span
  }
  std::vector<size_t> free_cols;
  {
    std::vector<bool> is_pivot(k, false);
    for (size_t c : pivot_of_row) is_pivot[c] = true;
    for (size_t c = 0; c < k; ++c) {
      if (!is_pivot[c]) free_cols.push_back(c);
    }
  }
  const size_t f = free_cols.size();
  // Constraints sum c_i mu_i + d >= 0 over the free variables.
  std::vector<std::vector<Scalar>> cons;
  for (size_t r = 0; r < rank; ++r) {
    std::vector<Scalar> c(f + 1, Scalar(0));
    for (size_t i = 0; i < f; ++i) {
      c[i] = Scalar(0) - rows[r][free_cols[i]];
    }
    c[f] = rows[r][k];
    cons.push_back(std::move(c));
  }
  for (size_t i = 0; i < f; ++i) {
    std::vector<Scalar> c(f + 1, Scalar(0));
    c[i] = Scalar(1);
    cons.push_back(std::move(c));
  }
  // Fourier-Motzkin elimination, one free variable at a time.
  for (size_t v = 0; v < f; ++v) {
    std::vector<std::vector<Scalar>> pos, neg, rest;
    for (auto& c : cons) {
      int s = c[v].sign();
      if (s > 0) {
        pos.push_back(std::move(c));
      } else if (s < 0) {
        neg.push_back(std::move(c));
      } else {
        rest.push_back(std::move(c));
      }
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        std::vector<Scalar> c(f + 1, Scalar(0));
        Scalar fp = Scalar(0) - q[v], fq = p[v];
        for (size_t i = 0; i <= f; ++i) c[i] = fp * p[i] + fq * q[i];
        rest.push_back(std::move(c));
      }
    }
    cons = std::move(rest);
  }
  for (const auto& c : cons) {
    if (c[f].sign() < 0) return false;
  }
  return true;
}

CrystalRealization CrystalRealization::build(const RootTable& t) {
  auto sys = t.system();
  if (!sys->crystallographic()) {
    throw unsupported_error(
        "integer realization needs labels in {2,3,4,6,inf}");
  }
  const int n = sys->rank();
  // Integer Cartan entries c[j][i] = <alpha_j, alpha_i-check>; on an
  // asymmetric edge the lower-numbered simple takes the long root.
  std::vector<std::vector<long>> cartan((size_t)n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) cartan[(size_t)i][(size_t)i] = 2;
  for (int s = 0; s < n; ++s) {
    for (int u = s + 1; u < n; ++u) {
      int m = sys->label(s, u);
      long cs = 0, cu = 0;  // cartan[s][u], cartan[u][s]
      switch (m) {
        case 2:
          break;
        case 3:
          cs = cu = -1;
          break;
        case 4:
          cs = -2;
          cu = -1;
          break;
        case 6:
          cs = -3;
          cu = -1;
          break;
        default:  // infinite label
          if (sys->form(s, u) != Scalar(-1)) {
            throw unsupported_error(
                "integer realization needs unit bonds on infinite edges");
          }
          cs = cu = -2;
          break;
      }
      cartan[(size_t)s][(size_t)u] = cs;
      cartan[(size_t)u][(size_t)s] = cu;
    }
  }
  CrystalRealization c;
  c.table_ = &t;
  c.coords_.resize((size_t)t.size());
  for (int k = 0; k < t.size(); ++k) {
    const Root& r = t.positive(k);
    if (r.depth == 1) {
      std::vector<long> e((size_t)n, 0);
      e[(size_t)r.via] = 1;
      c.coords_[(size_t)k] = std::move(e);
    } else {
      // Reflect the parent's integer vector in alpha_via.
      std::vector<long> v = c.coords_[(size_t)r.parent];
      long pairing = 0;
      for (int j = 0; j < n; ++j) {
        pairing += v[(size_t)j] * cartan[(size_t)j][(size_t)r.via];
      }
      v[(size_t)r.via] -= pairing;
      c.coords_[(size_t)k] = std::move(v);
    }
    c.index_.emplace(c.coords_[(size_t)k], k);
  }
  return c;
}

std::optional<int> CrystalRealization::find(const std::vector<long>& v) const {
  auto it = index_.find(v);
  if (it != index_.end()) return it->second;
  std::vector<long> neg(v);
  for (long& x : neg) x = -x;
  it = index_.find(neg);
  if (it != index_.end()) return ~it->second;
  return std::nullopt;
}

std::optional<int> CrystalRealization::find_certified(
    const std::vector<long>& v) const {
  auto idx = find(v);
  if (idx) return idx;
  bool nonneg = std::all_of(v.begin(), v.end(), [](long x) { return x >= 0; });
  bool nonpos = std::all_of(v.begin(), v.end(), [](long x) { return x <= 0; });
  if (!nonneg && !nonpos) return std::nullopt;  // roots have uniform sign
  if (table_->complete()) return std::nullopt;
  long h = 0;
  for (long x : v) h += nonneg ? x : -x;
  // A positive root of height h has depth at most h, so absence below
  // the cap certifies "not a root".
  if (h <= table_->depth_cap()) return std::nullopt;
  throw truncation_error("root-sum membership unresolved at this depth",
                         table_->depth_cap());
}

}  // namespace coxlat
