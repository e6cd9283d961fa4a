#include "coxlat/dihedral.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "coxlat/errors.hpp"

namespace coxlat {

namespace {

// Element as a circle isometry p -> sign*p + shift.
struct Iso {
  int sign;   // +1 rotation, -1 reflection
  int shift;  // taken mod 2m
};

Iso decode(int e, int m) {
  if (e < m) return {1, 2 * e};
  return {-1, (2 * (e - m) + m) % (2 * m)};
}

int encode(const Iso& iso, int m) {
  int n = 2 * m;
  int c = ((iso.shift % n) + n) % n;
  if (iso.sign > 0) return c / 2;
  return m + (((c - m) % n + n) % n) / 2;
}

}  // namespace

DihedralModel::DihedralModel(int m) : m_(m) {
  if (m < 2) throw input_error("dihedral model needs a bond label of at least 2");
  if (m > 15) throw unsupported_error("dihedral model masks cap the bond label at 15");
  int n = 2 * m_;
  between_.assign(n * n, 0);
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      int d = ((q - p) % n + n) % n;
      if (d == 0 || d >= m_) continue;
      uint32_t arc = 0;
      for (int k = 1; k < d; ++k) arc |= 1u << ((p + k) % n);
      between_[p * n + q] = arc;
    }
  }
  inv_mask_.assign(n, 0);
  mask_to_elt_.assign(1u << m_, -1);
  for (int e = 0; e < n; ++e) {
    int inv = inverse(e);
    uint32_t mask = 0;
    for (int p = 0; p < m_; ++p)
      if (act(inv, p) >= m_) mask |= 1u << p;
    inv_mask_[e] = mask;
    mask_to_elt_[mask] = e;
  }
}

int DihedralModel::reflection_at(int q) const {
  if (q < 0 || q >= m_) throw input_error("reflection axis outside the positive positions");
  return m_ + q;
}

int DihedralModel::generator(int i) const {
  if (i == 0) return reflection_at(0);
  if (i == 1) return reflection_at(m_ - 1);
  throw input_error("dihedral generator index must be 0 or 1");
}

int DihedralModel::longest() const {
  if (m_ % 2 == 0) return m_ / 2;            // rotation by a half turn
  return reflection_at((m_ - 1) / 2);
}

int DihedralModel::act(int e, int p) const {
  int n = 2 * m_;
  Iso iso = decode(e, m_);
  return ((iso.sign * p + iso.shift) % n + n) % n;
}

int DihedralModel::mult(int a, int b) const {
  Iso x = decode(a, m_), y = decode(b, m_);
  return encode({x.sign * y.sign, x.sign * y.shift + x.shift}, m_);
}

int DihedralModel::inverse(int e) const {
  Iso iso = decode(e, m_);
  if (iso.sign < 0) return e;
  return encode({1, -iso.shift}, m_);
}

int DihedralModel::length(int e) const {
  return std::popcount(inv_mask_[e]);
}

std::vector<int> DihedralModel::word(int e) const {
  std::vector<int> out;
  while (e != identity()) {
    int g = (inv_mask_[e] & 1u) ? 0 : 1;
    out.push_back(g);
    e = mult(generator(g), e);
  }
  return out;
}

int DihedralModel::from_word(const std::vector<int>& w) const {
  int e = identity();
  for (int g : w) e = mult(e, generator(g));
  return e;
}

uint32_t DihedralModel::inversion_mask(int e) const { return inv_mask_[e]; }

int DihedralModel::element_with_inversions(uint32_t mask) const {
  if (mask >= mask_to_elt_.size()) return -1;
  return mask_to_elt_[mask];
}

bool DihedralModel::weak_le(int a, int b) const {
  return (inv_mask_[a] & ~inv_mask_[b]) == 0;
}

int DihedralModel::join(int a, int b) const {
  uint32_t c = closure(inv_mask_[a] | inv_mask_[b]);
  int e = element_with_inversions(c);
  if (e < 0) throw std::logic_error("dihedral join closure is not an inversion set");
  return e;
}

int DihedralModel::meet(int a, int b) const {
  std::vector<int> prefix;
  while (true) {
    uint32_t common = inv_mask_[a] & inv_mask_[b];
    int g;
    if (common & 1u)
      g = 0;
    else if (common & (1u << (m_ - 1)))
      g = 1;
    else
      break;
    prefix.push_back(g);
    a = mult(generator(g), a);
    b = mult(generator(g), b);
  }
  return from_word(prefix);
}

uint32_t DihedralModel::closure(uint32_t mask) const {
  int n = 2 * m_;
  bool grew = true;
  while (grew) {
    grew = false;
    uint32_t next = mask;
    for (int p = 0; p < n; ++p) {
      if (!(mask & (1u << p))) continue;
      for (int q = 0; q < n; ++q) {
        if (q == p || !(mask & (1u << q))) continue;
        next |= between_[p * n + q];
      }
    }
    if (next != mask) {
      mask = next;
      grew = true;
    }
  }
  return mask;
}

bool DihedralModel::closed_in(uint32_t mask, uint32_t ambient) const {
  return (closure(mask) & ambient) == mask;
}

bool DihedralModel::biclosed_in(uint32_t mask, uint32_t ambient) const {
  return closed_in(mask, ambient) && closed_in(ambient & ~mask, ambient);
}

std::vector<std::vector<int>> DihedralModel::weak_order_maximal_chains() const {
  int n = 2 * m_;
  std::vector<std::vector<int>> chains;
  std::vector<int> path{identity()};
  // Weak order covers add one inversion, so walk by length.
  auto dfs = [&](auto&& self, int e) -> void {
    if (e == longest()) {
      chains.push_back(path);
      return;
    }
    for (int f = 0; f < n; ++f) {
      if (length(f) == length(e) + 1 && weak_le(e, f)) {
        path.push_back(f);
        self(self, f);
        path.pop_back();
      }
    }
  };
  dfs(dfs, identity());
  return chains;
}

DihedralGaloisCensus dihedral_stable_pairs(const DihedralModel& dm) {
  int n = dm.element_count();
  // stab[x] = set of z fixing the inversion set of x, as an element mask.
  std::vector<uint64_t> stab(n, 0);
  for (int x = 0; x < n; ++x) {
    uint32_t phi = dm.inversion_mask(x);
    for (int z = 0; z < n; ++z) {
      uint32_t image = 0;
      bool ok = true;
      for (int p = 0; p < dm.positive_count() && ok; ++p) {
        if (!(phi & (1u << p))) continue;
        int q = dm.act(z, p);
        if (q >= dm.positive_count())
          ok = false;
        else
          image |= 1u << q;
      }
      if (ok && image == phi) stab[x] |= uint64_t{1} << z;
    }
  }
  // The stable subgroups are the intersections of the pointwise
  // stabilizers; the family already contains the full group via x = 1.
  std::vector<uint64_t> groups(stab);
  std::sort(groups.begin(), groups.end());
  groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
  bool grew = true;
  while (grew) {
    grew = false;
    size_t count = groups.size();
    for (size_t i = 0; i < count; ++i) {
      for (size_t j = i + 1; j < count; ++j) {
        uint64_t meet = groups[i] & groups[j];
        if (std::find(groups.begin(), groups.end(), meet) == groups.end()) {
          groups.push_back(meet);
          grew = true;
        }
      }
    }
    if (grew) {
      std::sort(groups.begin(), groups.end());
      groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
    }
  }
  DihedralGaloisCensus census;
  for (uint64_t g : groups) {
    std::vector<int> members, star;
    for (int z = 0; z < n; ++z)
      if (g & (uint64_t{1} << z)) members.push_back(z);
    for (int x = 0; x < n; ++x)
      if ((g & stab[x]) == g) star.push_back(x);
    census.pairs.emplace_back(std::move(members), std::move(star));
  }
  std::sort(census.pairs.begin(), census.pairs.end());
  return census;
}

DihedralPosetCensus dihedral_parabolic_census(const DihedralModel& dm,
                                              int j_count) {
  uint32_t ambient;
  switch (j_count) {
    case 0: ambient = dm.positive_mask(); break;
    case 1: ambient = dm.positive_mask() | (1u << dm.positive_count()); break;
    case 2: ambient = dm.full_mask(); break;
    default: throw input_error("parabolic census takes 0, 1 or 2 generators");
  }
  DihedralPosetCensus census;
  uint32_t sub = ambient;
  while (true) {
    if (dm.biclosed_in(sub, ambient)) census.elements.push_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & ambient;
  }
  std::sort(census.elements.begin(), census.elements.end(),
            [](uint32_t a, uint32_t b) {
              int pa = std::popcount(a), pb = std::popcount(b);
              return pa != pb ? pa < pb : a < b;
            });
  int n = static_cast<int>(census.elements.size());
  auto leq = [&](int i, int j) {
    return (census.elements[i] & ~census.elements[j]) == 0;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (k != i && k != j && leq(i, k) && leq(k, j)) cover = false;
      if (cover) census.covers.emplace_back(i, j);
    }
  }
  std::vector<std::vector<int>> up(n);
  for (auto& [i, j] : census.covers) up[i].push_back(j);
  auto dfs = [&](auto&& self, int i, int depth) -> void {
    if (up[i].empty()) {
      census.chain_lengths.push_back(depth);
      return;
    }
    for (int j : up[i]) self(self, j, depth + 1);
  };
  dfs(dfs, 0, 0);  // elements[0] is the empty set after the sort
  std::sort(census.chain_lengths.begin(), census.chain_lengths.end());
  return census;
}

}  // namespace coxlat
