#pragma once

#include <optional>
#include <vector>

#include "coxlat/rootsys.hpp"

namespace coxlat {

enum class ClosureKind { two, cone, zsum };

// Result of a closure computation: either a finite closed set, or a
// marker that the closure meets an infinite dihedral positive system,
// with the pair whose cone carries an isotropic direction as witness.
class ClosureResult {
 public:
  static ClosureResult finite(RootSet s) {
    ClosureResult r;
    r.set_ = std::move(s);
    return r;
  }
  static ClosureResult infinite(int a, int b) {
    ClosureResult r;
    r.infinite_ = true;
    r.wa_ = a;
    r.wb_ = b;
    return r;
  }
  bool is_infinite() const { return infinite_; }
  const RootSet& set() const { return set_; }
  std::pair<int, int> witness() const { return {wa_, wb_}; }

 private:
  bool infinite_ = false;
  RootSet set_;
  int wa_ = 0, wb_ = 0;
};

// All signed roots in the closed nonnegative cone of a and b, cut to
// the ambient set.  Infinite when that cone holds an isotropic
// direction of the form, which for unit roots is exactly B(a,b) <= -1.
ClosureResult pair_closure_two(const RootTable& t, int a, int b,
                               const RootSet& ambient);

ClosureResult closure(const RootTable& t, ClosureKind kind,
                      const RootSet& gamma, const RootSet& ambient);

bool is_closed(const RootTable& t, ClosureKind kind, const RootSet& gamma,
               const RootSet& lambda);
bool is_coclosed(const RootTable& t, ClosureKind kind, const RootSet& gamma,
                 const RootSet& lambda);
bool is_biclosed(const RootTable& t, ClosureKind kind, const RootSet& gamma,
                 const RootSet& lambda);

struct StripResult {
  std::optional<GroupElement> element;  // set iff the strip emptied Delta
  RootSet residue;                      // the stuck set otherwise
};

// Repeatedly remove a simple root alpha_s from Delta and replace the
// rest by its s-image.  Succeeds exactly when Delta is an inversion
// set, and then Phi of the returned element equals Delta.
StripResult strip_simple(const RootTable& t, const RootSet& delta);

// Every maximal dihedral plane through a member of gamma must have one
// of its two extreme roots in gamma.
bool is_unipodal(const RootTable& t, const RootSet& gamma);

// Exact feasibility of target = sum lambda_i gens_i with lambda >= 0,
// by Gaussian elimination plus Fourier-Motzkin.
bool in_nonneg_span(const std::vector<Vec>& gens, const Vec& target);

// Integer realization of a crystallographic system over the simple
// basis, mirroring the root table index for index.
class CrystalRealization {
 public:
  static CrystalRealization build(const RootTable& t);
  const std::vector<long>& coords(int k) const { return coords_[(size_t)k]; }
  // Signed table index of an integer vector, if it is in the table.
  std::optional<int> find(const std::vector<long>& v) const;
  // Same, but certifies "not a root" against the height bound and
  // throws truncation_error when it cannot.
  std::optional<int> find_certified(const std::vector<long>& v) const;

 private:
  const RootTable* table_ = nullptr;
  std::vector<std::vector<long>> coords_;
  std::map<std::vector<long>, int> index_;
};

RootSet full_positive(const RootTable& t);

}  // namespace coxlat
