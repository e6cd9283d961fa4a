#include "coxlat/galois.hpp"

#include <algorithm>
#include <set>

#include "coxlat/errors.hpp"

namespace coxlat {

bool fixes_inversion_set(const RootTable& t, const GroupElement& x,
                         const GroupElement& z) {
  RootSet phi = inversion_set(t, x);
  for (int r : phi) {
    int img = t.apply(z, r);
    if (img < 0 || !phi.contains(img)) return false;
  }
  return true;
}

uint64_t GaloisConnection::chosen_mask(int x) const {
  return flavor_ == GaloisFlavor::inversions ? fm_->inversion_mask(x)
                                             : fm_->complement_mask(x);
}

uint64_t GaloisConnection::image_mask(int z, uint64_t mask) const {
  uint64_t out = 0;
  for (int r = 0; r < fm_->table().size(); ++r) {
    if (!(mask & (uint64_t{1} << r))) continue;
    int img = fm_->act(z, r);
    if (img < 0) return ~uint64_t{0};
    out |= uint64_t{1} << img;
  }
  return out;
}

GaloisConnection GaloisConnection::build(const FiniteModel& fm,
                                         GaloisFlavor flavor) {
  GaloisConnection c;
  c.fm_ = &fm;
  c.flavor_ = flavor;
  c.n_ = fm.size();
  c.words_ = (c.n_ + 63) / 64;
  c.rel_.assign((size_t)c.n_ * (size_t)c.words_, 0);
  for (int x = 0; x < c.n_; ++x) {
    uint64_t mask = c.chosen_mask(x);
    for (int z = 0; z < c.n_; ++z) {
      if (c.image_mask(z, mask) == mask) {
        c.rel_[(size_t)x * (size_t)c.words_ + (size_t)(z / 64)] |=
            uint64_t{1} << (z % 64);
      }
    }
  }
  return c;
}

bool GaloisConnection::related(int x, int z) const {
  return (rel_[(size_t)x * (size_t)words_ + (size_t)(z / 64)] >> (z % 64)) & 1;
}

std::vector<int> GaloisConnection::dagger(const std::vector<int>& xs) const {
  std::vector<uint64_t> acc((size_t)words_, ~uint64_t{0});
  for (int x : xs) {
    for (int k = 0; k < words_; ++k) {
      acc[(size_t)k] &= rel_[(size_t)x * (size_t)words_ + (size_t)k];
    }
  }
  std::vector<int> out;
  for (int z = 0; z < n_; ++z) {
    if ((acc[(size_t)(z / 64)] >> (z % 64)) & 1) out.push_back(z);
  }
  return out;
}

std::vector<int> GaloisConnection::star(const std::vector<int>& zs) const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x) {
    bool all = true;
    for (int z : zs) all = all && related(x, z);
    if (all) out.push_back(x);
  }
  return out;
}

std::vector<StablePair> GaloisConnection::stable_pairs() const {
  // Every stable subgroup is an intersection of single-element daggers,
  // with the empty intersection contributing W itself.
  std::set<std::vector<uint64_t>> family;
  std::vector<uint64_t> whole((size_t)words_, 0);
  for (int z = 0; z < n_; ++z) {
    whole[(size_t)(z / 64)] |= uint64_t{1} << (z % 64);
  }
  family.insert(whole);
  for (int x = 0; x < n_; ++x) {
    std::vector<uint64_t> row(rel_.begin() + (size_t)x * (size_t)words_,
                              rel_.begin() + (size_t)(x + 1) * (size_t)words_);
    family.insert(row);
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<uint64_t>> snapshot(family.begin(), family.end());
    for (size_t i = 0; i < snapshot.size(); ++i) {
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<uint64_t> cap((size_t)words_);
        for (int k = 0; k < words_; ++k) {
          cap[(size_t)k] = snapshot[i][(size_t)k] & snapshot[j][(size_t)k];
        }
        grew = family.insert(cap).second || grew;
      }
    }
  }
  std::vector<StablePair> out;
  for (const auto& bits : family) {
    StablePair p;
    p.flavor = flavor_;
    for (int z = 0; z < n_; ++z) {
      if ((bits[(size_t)(z / 64)] >> (z % 64)) & 1) p.subgroup.push_back(z);
    }
    p.subsemilattice = star(p.subgroup);
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const StablePair& a, const StablePair& b) {
    if (a.subgroup.size() != b.subgroup.size()) {
      return a.subgroup.size() < b.subgroup.size();
    }
    return a.subgroup < b.subgroup;
  });
  return out;
}

std::vector<int> GaloisConnection::hom(const std::vector<int>& xs,
                                       const std::vector<int>& ys) const {
  if (xs.size() != ys.size()) {
    throw input_error("hom needs families of equal length");
  }
  std::vector<int> out;
  for (int z = 0; z < n_; ++z) {
    bool ok = true;
    for (size_t i = 0; ok && i < xs.size(); ++i) {
      ok = image_mask(z, chosen_mask(xs[i])) == chosen_mask(ys[i]);
    }
    if (ok) out.push_back(z);
  }
  return out;
}

StablePair GaloisConnection::involution_pair(int w) const {
  if (flavor_ != GaloisFlavor::complement) {
    throw input_error("involution pairs live under the complement flavor");
  }
  if (fm_->inverse(w) != w) {
    throw input_error("not an involution");
  }
  StablePair p;
  p.flavor = flavor_;
  p.subsemilattice = star({w});
  p.subgroup = dagger(p.subsemilattice);
  return p;
}

}  // namespace coxlat
