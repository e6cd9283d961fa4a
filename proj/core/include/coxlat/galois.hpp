#pragma once

#include <cstdint>
#include <vector>

#include "coxlat/coxeter.hpp"
#include "coxlat/finite_model.hpp"
#include "coxlat/rootsys.hpp"

namespace coxlat {

// Which root set attached to x the partner z must permute: the
// inversion set of x, or its complement among the positive roots.
// The complement flavor only makes sense exhaustively in finite W.
enum class GaloisFlavor { inversions, complement };

// Pointwise relation test available in any system: does z map the
// inversion set of x onto itself?  The table must be deep enough to
// hold the images of those roots.
bool fixes_inversion_set(const RootTable& t, const GroupElement& x,
                         const GroupElement& z);

/*
  A fixed point of the connection: the subgroup holds the elements
  related to everything in the subsemilattice and conversely.  Members
  are sorted model indices.
*/
struct StablePair {
  GaloisFlavor flavor;
  std::vector<int> subgroup;
  std::vector<int> subsemilattice;

  bool operator==(const StablePair& o) const {
    return flavor == o.flavor && subgroup == o.subgroup &&
           subsemilattice == o.subsemilattice;
  }
};

/*
  The connection induced on subsets of a finite W by the relation
  "z permutes the chosen root set of x".  dagger(X) collects the
  elements related to all of X and is always a subgroup; star(Z)
  collects the elements everything in Z is related to and is a meet
  subsemilattice closed under existing joins.  Stable pairs are the
  mutually determining (dagger, star) fixed points.
*/
class GaloisConnection {
 public:
  static GaloisConnection build(const FiniteModel& fm, GaloisFlavor flavor);

  const FiniteModel& model() const { return *fm_; }
  GaloisFlavor flavor() const { return flavor_; }

  bool related(int x, int z) const;
  std::vector<int> dagger(const std::vector<int>& xs) const;
  std::vector<int> star(const std::vector<int>& zs) const;

  // Every stable pair, sorted by subgroup size then contents.
  std::vector<StablePair> stable_pairs() const;

  // Elements carrying the chosen root set of xs[i] onto that of ys[i]
  // for every i: the hom-set from xs to ys in the transport groupoid.
  // hom(X, X) coincides with dagger(X).  Throws input_error when the
  // families have different lengths.
  std::vector<int> hom(const std::vector<int>& xs,
                       const std::vector<int>& ys) const;

  // For an involution w under the complement flavor, the stable pair
  // generated by {w}: w is the weak-order maximum of the subgroup and
  // the minimum of the subsemilattice.  Throws input_error unless the
  // flavor is complement and w squares to the identity.
  StablePair involution_pair(int w) const;

 private:
  GaloisConnection() = default;
  uint64_t chosen_mask(int x) const;
  // Image of a positive-root mask under element z, or ~0 when some
  // root lands negative (so the image cannot equal a positive mask).
  uint64_t image_mask(int z, uint64_t mask) const;

  const FiniteModel* fm_ = nullptr;
  GaloisFlavor flavor_ = GaloisFlavor::inversions;
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> rel_;  // row x, bit z: x related to z
};

}  // namespace coxlat
