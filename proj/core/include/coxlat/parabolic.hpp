#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coxlat/closure.hpp"
#include "coxlat/rootsys.hpp"
#include "coxlat/weak_order.hpp"

namespace coxlat {

/*
  Standard parabolic subset: every positive root together with both
  signs of the roots supported on the chosen generators.  On a
  truncated table the sets hold the in-table slice and the depth cap
  acts as the truncation budget.
*/
struct ParabolicSet {
  std::vector<int> J;  // sorted generator indices
  RootSet lambda;      // positive roots plus the negated core
  RootSet core;        // two-sided part: lambda meets its negation
};

ParabolicSet lambda_j(const RootTable& t, const std::vector<int>& J);

// The type of a subset: its trace on the two-sided core.
RootSet type_of(const ParabolicSet& p, const RootSet& gamma);

// All finite subsets of p.lambda biclosed in it, by subset brute
// force.  Needs a complete table and at most 22 ambient roots; sorted
// by size then canonical order.
std::vector<RootSet> biclosed_in_lambda(const RootTable& t,
                                        const ParabolicSet& p);

/*
  Rank-one enumeration through the four type classes: inversion sets
  fixed by the chosen reflection, inversion sets containing its root,
  their reflected images, and inversion sets with the negated root
  adjoined.  Elements run up to the length bound, so this also works
  in infinite systems, where the brute force cannot.
*/
std::vector<RootSet> biclosed_in_lambda_rank1(const RootTable& t,
                                              const ParabolicSet& p,
                                              int max_length);

/*
  Covers and maximal chains of a family of sets ordered by inclusion.
  Elements are re-sorted by size then canonical order; chains start at
  elements with no lower cover and extend upward maximally, recorded
  as sorted edge counts.
*/
struct PosetCensus {
  std::vector<RootSet> elements;
  std::vector<std::pair<int, int>> covers;  // (lower, upper) indices
  std::vector<int> chain_lengths;
};

PosetCensus poset_census(std::vector<RootSet> elements);

// Join or meet outcome over an ambient set of roots: either the bound
// or the reason none exists (the closure of the union escaped to an
// infinite set, or it is not biclosed in the ambient).
class SetJoin {
 public:
  static SetJoin found(RootSet g);
  static SetJoin infinite(std::pair<int, int> witness);
  static SetJoin not_biclosed(RootSet closed_union);

  bool has_join() const { return found_.has_value(); }
  const RootSet& set() const;
  NoJoinReason reason() const;
  const std::pair<int, int>& infinite_witness() const;
  // The closure of the union when it exists but is not biclosed.
  const RootSet& closed_union() const;

 private:
  SetJoin() = default;
  std::optional<RootSet> found_;
  std::optional<NoJoinReason> reason_;
  std::pair<int, int> witness_{-1, -1};
  std::optional<RootSet> closed_;
};

/*
  Join in the inclusion order on finite biclosed subsets of lambda:
  the closure of the union when that is finite and biclosed.  For
  rank-one parabolic ambients a failure certifies that no upper bound
  exists; for wider ambients the failure is reported as-is and feeds
  the conjecture probes.
*/
SetJoin pjoin(const RootTable& t, const RootSet& lambda,
              const std::vector<RootSet>& gammas);

/*
  Meet through the complement identity: lambda minus the meet is the
  closure of the union of the in-lambda complements.  Complements are
  handled co-finitely: only the finite deficit (the intersection of
  the inputs) is tracked, and a deficit root moves over once it is a
  strictly positive combination of two complement roots, so the
  computation runs unchanged when lambda is infinite.
*/
RootSet pmeet(const RootTable& t, const RootSet& lambda,
              const std::vector<RootSet>& gammas);

// Closure of (lambda minus gamma) with xi adjoined, expected to be
// the complement of another biclosed set; returns that set, or
// nothing when the expectation fails.
std::optional<RootSet> complement_closure(const RootTable& t,
                                          const RootSet& lambda,
                                          const RootSet& gamma,
                                          const RootSet& xi);

/*
  The two-sided part of a closed set covering the root system together
  with the reflection subgroup it spans.  Verifies the defining
  conditions and the stability of lambda under the subgroup's
  canonical reflections; throws input_error when they fail.
*/
struct QuasiparabolicData {
  RootSet psi;
  ReflectionSubgroup group;
};

QuasiparabolicData quasiparabolic_data(const RootTable& t,
                                       const RootSet& lambda);

}  // namespace coxlat
