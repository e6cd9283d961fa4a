#include "coxlat/rootsys.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <numeric>
#include <sstream>

#include "coxlat/errors.hpp"

namespace coxlat {

bool VecLess::operator()(const Vec& a, const Vec& b) const {
  assert(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    int c = (a[i] - b[i]).sign();
    if (c < 0) return true;
    if (c > 0) return false;
  }
  return false;
}

static Vec negate_vec(const Vec& v) {
  Vec r;
  r.reserve(v.size());
  for (const Scalar& x : v) r.push_back(Scalar(0) - x);
  return r;
}

RootTable RootTable::generate(SystemPtr sys, int depth_cap) {
  if (depth_cap < 1) throw input_error("depth cap must be at least 1");
  static std::atomic<uint64_t> next_uid{1};
  RootTable t;
  t.sys_ = sys;
  t.cap_ = depth_cap;
  t.uid_ = next_uid.fetch_add(1);
  const int n = sys->rank();

  // Depth level 1: the simple roots, in coordinate order.
  std::map<Vec, std::pair<int, int>, VecLess> level;  // coords -> parent, via
  for (int s = 0; s < n; ++s) {
    Vec e(n, Scalar(0));
    e[(size_t)s] = Scalar(1);
    level.emplace(std::move(e), std::make_pair(-1, s));
  }

  t.simple_idx_.assign((size_t)n, -1);
  int depth = 1;
  while (!level.empty()) {
    std::vector<int> assigned;
    for (auto& [v, pv] : level) {
      int k = (int)t.roots_.size();
      t.roots_.push_back(Root{v, depth, pv.first, pv.second});
      t.index_.emplace(v, k);
      if (depth == 1) t.simple_idx_[(size_t)pv.second] = k;
      assigned.push_back(k);
    }
    level.clear();
    std::map<Vec, std::pair<int, int>, VecLess> next;
    for (int k : assigned) {
      for (int s = 0; s < n; ++s) {
        Vec img = sys->reflection(s).apply(t.roots_[(size_t)k].coords);
        if (is_negative_vec(img)) continue;  // only alpha_s maps negative
        if (t.index_.count(img) || next.count(img)) continue;
        next.emplace(std::move(img), std::make_pair(k, s));
      }
    }
    if (depth == depth_cap) {
      t.complete_ = next.empty();
      break;
    }
    if (next.empty()) {
      t.complete_ = true;
      break;
    }
    level = std::move(next);
    ++depth;
  }

  // Canonical rank over signed indices: depth first, then the
  // coordinate order of the signed vector.
  const int nn = (int)t.roots_.size();
  std::vector<int> signed_all;
  signed_all.reserve(2 * (size_t)nn);
  for (int k = 0; k < nn; ++k) {
    signed_all.push_back(k);
    signed_all.push_back(~k);
  }
  VecLess less;
  std::sort(signed_all.begin(), signed_all.end(), [&](int x, int y) {
    int dx = t.roots_[(size_t)abs_index(x)].depth;
    int dy = t.roots_[(size_t)abs_index(y)].depth;
    if (dx != dy) return dx < dy;
    return less(t.coords(x), t.coords(y));
  });
  t.rank_signed_.assign(2 * (size_t)nn, 0);
  for (int pos = 0; pos < (int)signed_all.size(); ++pos) {
    int r = signed_all[(size_t)pos];
    size_t slot = r >= 0 ? 2 * (size_t)r : 2 * (size_t)(~r) + 1;
    t.rank_signed_[slot] = pos;
  }
  return t;
}

Vec RootTable::coords(int r) const {
  const Vec& v = roots_[(size_t)abs_index(r)].coords;
  return r >= 0 ? v : negate_vec(v);
}

std::optional<int> RootTable::find(const Vec& v) const {
  auto it = index_.find(v);
  if (it != index_.end()) return it->second;
  it = index_.find(negate_vec(v));
  if (it != index_.end()) return ~it->second;
  return std::nullopt;
}

int RootTable::find_or_throw(const Vec& v) const {
  auto r = find(v);
  if (!r) {
    throw truncation_error(
        "root outside the generated table; raise the depth cap", cap_);
  }
  return *r;
}

bool RootTable::is_simple(int r) const {
  return r >= 0 && roots_[(size_t)r].depth == 1;
}

int RootTable::apply(const GroupElement& g, int r) const {
  return find_or_throw(g.matrix().apply(coords(r)));
}

int RootTable::reflect(int a, int r) const {
  // Roots have unit norm here, so s_a(x) = x - 2 B(a,x) a.
  Vec av = coords(abs_index(a));
  Vec x = coords(r);
  Scalar c = sys_->bilinear(av, x);
  if (c.is_zero()) return r;
  Scalar f = Scalar(2) * c;
  for (size_t i = 0; i < x.size(); ++i) x[i] = x[i] - f * av[i];
  return find_or_throw(x);
}

GroupElement RootTable::reflection_element(int k) const {
  std::vector<int> wrap;
  int cur = k;
  while (roots_[(size_t)cur].depth > 1) {
    wrap.push_back(roots_[(size_t)cur].via);
    cur = roots_[(size_t)cur].parent;
  }
  std::vector<int> word(wrap);
  word.push_back(roots_[(size_t)cur].via);
  for (auto it = wrap.rbegin(); it != wrap.rend(); ++it) word.push_back(*it);
  return GroupElement::from_word(sys_, word);
}

Scalar RootTable::bilinear(int a, int b) const {
  return sys_->bilinear(coords(a), coords(b));
}

int RootTable::order_rank(int r) const {
  size_t slot = r >= 0 ? 2 * (size_t)r : 2 * (size_t)(~r) + 1;
  return rank_signed_[slot];
}

std::string RootTable::root_str(int r) const {
  if (r >= 0) return "#" + std::to_string(r + 1);
  return "-#" + std::to_string(~r + 1);
}

std::string RootTable::coords_str(int r) const {
  Vec v = coords(r);
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + "]";
}

RootSet::RootSet(const RootTable& t, std::initializer_list<int> rs)
    : table_(&t) {
  for (int r : rs) insert(r);
}

RootSet::RootSet(const RootTable& t, const std::vector<int>& rs) : table_(&t) {
  for (int r : rs) insert(r);
}

bool RootSet::contains(int r) const {
  auto it = std::lower_bound(idx_.begin(), idx_.end(), r, [&](int x, int y) {
    return table_->order_rank(x) < table_->order_rank(y);
  });
  return it != idx_.end() && *it == r;
}

void RootSet::insert(int r) {
  auto it = std::lower_bound(idx_.begin(), idx_.end(), r, [&](int x, int y) {
    return table_->order_rank(x) < table_->order_rank(y);
  });
  if (it != idx_.end() && *it == r) return;
  idx_.insert(it, r);
}

void RootSet::erase(int r) {
  auto it = std::lower_bound(idx_.begin(), idx_.end(), r, [&](int x, int y) {
    return table_->order_rank(x) < table_->order_rank(y);
  });
  if (it != idx_.end() && *it == r) idx_.erase(it);
}

bool RootSet::subset_of(const RootSet& o) const {
  for (int r : idx_) {
    if (!o.contains(r)) return false;
  }
  return true;
}

RootSet RootSet::unite(const RootSet& o) const {
  RootSet r(*table_);
  r.idx_ = idx_;
  for (int x : o.idx_) r.insert(x);
  return r;
}

RootSet RootSet::intersect(const RootSet& o) const {
  RootSet r(*table_);
  for (int x : idx_) {
    if (o.contains(x)) r.idx_.push_back(x);
  }
  return r;
}

RootSet RootSet::difference(const RootSet& o) const {
  RootSet r(*table_);
  for (int x : idx_) {
    if (!o.contains(x)) r.idx_.push_back(x);
  }
  return r;
}

RootSet RootSet::symdiff(const RootSet& o) const {
  return unite(o).difference(intersect(o));
}

RootSet RootSet::negated() const {
  RootSet r(*table_);
  for (int x : idx_) r.insert(~x);
  return r;
}

bool RootSet::all_positive() const {
  return std::all_of(idx_.begin(), idx_.end(), [](int r) { return r >= 0; });
}

std::string RootSet::str() const {
  std::string out = "{";
  for (size_t i = 0; i < idx_.size(); ++i) {
    if (i) out += ",";
    out += table_->root_str(idx_[(size_t)i]);
  }
  return out + "}";
}

RootSet inversion_set(const RootTable& t, const GroupElement& g) {
  // Walk prefixes of the canonical word; the i-th inversion is
  // s1...s(i-1) applied to alpha_{s_i}.
  RootSet out(t);
  const auto& w = g.word();
  GroupElement pre = GroupElement::identity(t.system());
  for (size_t i = 0; i < w.size(); ++i) {
    int r = t.apply(pre, t.simple(w[i]));
    assert(r >= 0);
    out.insert(r);
    pre = pre * GroupElement::generator(t.system(), w[i]);
  }
  assert(out.size() == (int)w.size());
  return out;
}

RootSet inversion_complement(const RootTable& t, const GroupElement& g) {
  if (!t.complete()) {
    throw truncation_error(
        "inversion complement needs the full positive system", t.depth_cap());
  }
  RootSet inv = inversion_set(t, g);
  RootSet out(t);
  for (int k = 0; k < t.size(); ++k) {
    if (!inv.contains(k)) out.insert(k);
  }
  return out;
}

RootSet dot_action(const RootTable& t, const GroupElement& w,
                   const RootSet& gamma) {
  assert(gamma.all_positive());
  RootSet folded(t);
  for (int r : gamma) folded.insert(RootTable::abs_index(t.apply(w, r)));
  return inversion_set(t, w).symdiff(folded);
}

std::vector<Reflection> n_set(const RootTable& t, const GroupElement& g) {
  std::vector<Reflection> out;
  for (int r : inversion_set(t, g)) {
    out.push_back(Reflection{r, t.reflection_element(r)});
  }
  return out;
}

ReflectionSubgroup canonical_generators(const RootTable& t,
                                        const std::vector<int>& gen_roots) {
  std::vector<int> pos;
  std::vector<int> queue;
  auto add = [&](int k) {
    if (!std::binary_search(pos.begin(), pos.end(), k)) {
      pos.insert(std::lower_bound(pos.begin(), pos.end(), k), k);
      queue.push_back(k);
    }
  };
  for (int r : gen_roots) add(RootTable::abs_index(r));
  while (!queue.empty()) {
    int a = queue.back();
    queue.pop_back();
    for (size_t i = 0; i < pos.size(); ++i) {
      int b = pos[i];
      add(RootTable::abs_index(t.reflect(a, b)));
      add(RootTable::abs_index(t.reflect(b, a)));
    }
  }
  ReflectionSubgroup sub;
  sub.positive = pos;
  for (int b : pos) {
    // Canonical generator test: s_b sends exactly one subgroup-positive
    // root negative, namely b itself.
    int down = 0;
    for (int d : pos) {
      if (t.reflect(b, d) < 0) ++down;
      if (down > 1) break;
    }
    if (down == 1) sub.chi.push_back(b);
  }
  return sub;
}

std::optional<std::pair<Scalar, Scalar>> solve_in_plane(const Vec& a,
                                                        const Vec& b,
                                                        const Vec& r) {
  const size_t n = a.size();
  size_t pi = n, pj = n;
  Scalar det(0);
  for (size_t i = 0; i < n && pi == n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      Scalar d = a[i] * b[j] - a[j] * b[i];
      if (!d.is_zero()) {
        pi = i;
        pj = j;
        det = d;
        break;
      }
    }
  }
  if (pi == n) return std::nullopt;  // a, b dependent
  Scalar x = (r[pi] * b[pj] - r[pj] * b[pi]) / det;
  Scalar y = (a[pi] * r[pj] - a[pj] * r[pi]) / det;
  for (size_t i = 0; i < n; ++i) {
    if (!(r[i] - x * a[i] - y * b[i]).is_zero()) return std::nullopt;
  }
  return std::make_pair(x, y);
}

namespace {

// One step of the rank-2 root recurrence with Gram value c = B(u,v):
// next = -2c * cur - prev.
Vec ray_step(const Scalar& c, const Vec& prev, const Vec& cur) {
  Vec out(cur.size(), Scalar(0));
  Scalar f = Scalar(0) - Scalar(2) * c;
  for (size_t i = 0; i < cur.size(); ++i) out[i] = f * cur[i] - prev[i];
  return out;
}

}  // namespace

PlaneSubsystem plane_subsystem(const RootTable& t, int a, int b) {
  int ka = RootTable::abs_index(a), kb = RootTable::abs_index(b);
  if (ka == kb) throw input_error("roots do not span a plane");
  Vec va = t.positive(ka).coords;
  Vec vb = t.positive(kb).coords;

  std::vector<int> members;
  for (int k = 0; k < t.size(); ++k) {
    if (solve_in_plane(va, vb, t.positive(k).coords)) members.push_back(k);
  }
  if (members.size() < 2) throw input_error("roots do not span a plane");

  // The cone-extreme pair: every other member is a nonnegative
  // combination of the two.  For a full dihedral positive system these
  // are its simple roots; certification below rejects truncations where
  // the extremes of the visible part are not the true simples.
  int u = -1, v = -1;
  for (size_t i = 0; i < members.size() && u < 0; ++i) {
    for (size_t j = i + 1; j < members.size() && u < 0; ++j) {
      Vec vi = t.positive(members[i]).coords;
      Vec vj = t.positive(members[j]).coords;
      bool all = true;
      for (int k : members) {
        if (k == members[i] || k == members[j]) continue;
        auto xy = solve_in_plane(vi, vj, t.positive(k).coords);
        if (!xy || xy->first.sign() < 0 || xy->second.sign() < 0) {
          all = false;
          break;
        }
      }
      if (all) {
        u = members[i];
        v = members[j];
      }
    }
  }
  if (u < 0) {
    throw truncation_error("plane has no extreme pair at this depth",
                           t.depth_cap());
  }

  Vec vu = t.positive(u).coords;
  Vec vv = t.positive(v).coords;
  Scalar c = t.bilinear(u, v);
  std::vector<int> walked;
  walked.push_back(u);

  // Walk the ray u, s_u(v), s_u s_v(u), ... ; for a finite dihedral
  // plane it ends exactly at v after m_hat steps.  Seeding the
  // recurrence with -v makes the first step land on s_u(v).
  bool reached_v = false;
  {
    Vec prev = negate_vec(vv), cur = vu;
    for (int step = 1; step <= (int)members.size(); ++step) {
      Vec nxt = ray_step(c, prev, cur);
      auto idx = t.find(nxt);
      if (!idx) break;
      assert(*idx >= 0);
      walked.push_back(*idx);
      if (*idx == v) {
        reached_v = true;
        break;
      }
      prev = std::move(cur);
      cur = std::move(nxt);
    }
  }

  PlaneSubsystem out;
  out.a = a;
  out.b = b;
  if (reached_v) {
    out.finite = true;
    out.m_hat = (int)walked.size();
  } else {
    // Not a finite plane visible in full.  The infinite case is
    // certain only when the cone carries an isotropic direction, i.e.
    // B(u,v) <= -1; anything else is a truncation artifact.
    if ((c + Scalar(1)).sign() > 0) {
      throw truncation_error("finite plane cut off by the depth cap",
                             t.depth_cap());
    }
    out.finite = false;
    out.m_hat = 0;
    // The other ray: v, s_v(u), s_v s_u(v), ...
    Vec prev = negate_vec(vu), cur = vv;
    for (;;) {
      walked.push_back(RootTable::abs_index(t.find(cur).value()));
      Vec nxt = ray_step(c, prev, cur);
      if (!t.find(nxt)) break;
      prev = std::move(cur);
      cur = std::move(nxt);
    }
  }

  std::sort(walked.begin(), walked.end());
  walked.erase(std::unique(walked.begin(), walked.end()), walked.end());
  if (walked != members) {
    throw truncation_error("plane membership does not match its rays",
                           t.depth_cap());
  }
  out.positive = members;
  if (t.order_rank(u) > t.order_rank(v)) std::swap(u, v);
  out.simple_u = u;
  out.simple_v = v;
  return out;
}

std::vector<PlaneSubsystem> maximal_dihedral_containing(const RootTable& t,
                                                        int a) {
  int ka = RootTable::abs_index(a);
  std::vector<PlaneSubsystem> out;
  std::vector<bool> seen((size_t)t.size(), false);
  seen[(size_t)ka] = true;
  for (int k = 0; k < t.size(); ++k) {
    if (seen[(size_t)k]) continue;
    PlaneSubsystem p = plane_subsystem(t, ka, k);
    for (int m : p.positive) seen[(size_t)m] = true;
    out.push_back(std::move(p));
  }
  return out;
}

GroupElement coset_min_rep(const RootTable& t, const ReflectionSubgroup& sub,
                           const GroupElement& x) {
  GroupElement cur = x;
  for (;;) {
    RootSet inv = inversion_set(t, cur);
    int found = -1;
    for (int b : sub.positive) {
      if (inv.contains(b)) {
        found = b;
        break;
      }
    }
    if (found < 0) return cur;
    cur = t.reflection_element(found) * cur;
  }
}

RootSet bruhat_stratum(const RootTable& t, const GroupElement& x, int n) {
  RootSet out(t);
  if (((n % 2) + 2) % 2 == 0) return out;  // length parity rules out even n
  for (int k = 0; k < t.size(); ++k) {
    GroupElement tx = t.reflection_element(k) * x;
    if (tx.length() - x.length() == n) out.insert(k);
  }
  return out;
}

}  // namespace coxlat
