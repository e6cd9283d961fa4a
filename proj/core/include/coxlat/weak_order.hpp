#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxlat/closure.hpp"
#include "coxlat/coxeter.hpp"
#include "coxlat/rootsys.hpp"

namespace coxlat {

enum class NoJoinReason { infinite_closure, not_biclosed_closure };

/*
  Outcome of a join computation: either the least upper bound, or a
  proof that none exists.  Both failure reasons are definitive: an
  infinite closure can never be an inversion set, and a finite closure
  realized by no element rules out upper bounds as well, since any
  upper bound's inversion set would contain the closure and the least
  such element would realize it.
*/
class JoinOutcome {
 public:
  static JoinOutcome found(GroupElement y);
  static JoinOutcome infinite(std::pair<int, int> witness);
  static JoinOutcome not_biclosed(RootSet residue);

  bool has_join() const { return element_.has_value(); }
  const GroupElement& element() const;
  NoJoinReason reason() const;
  // Positive index pair spanning an infinite plane inside the closure.
  const std::pair<int, int>& infinite_witness() const;
  // Roots left over when stripping stalled.
  const RootSet& residue() const;

 private:
  JoinOutcome() = default;
  std::optional<GroupElement> element_;
  std::optional<NoJoinReason> reason_;
  std::pair<int, int> witness_{-1, -1};
  std::optional<RootSet> residue_;
};

/*
  Least upper bound in weak order.  The inversion set of the join,
  when it exists, is the two-closure of the union of the inputs'
  inversion sets; stripping that closure either recovers the element
  or certifies that no upper bound exists.  The table's depth cap acts
  as the truncation budget: closures that cannot be certified inside
  it raise truncation_error.
*/
JoinOutcome join(const RootTable& t, const std::vector<GroupElement>& xs);

/*
  Greatest lower bound in weak order; always exists.  Computed by
  peeling common left descents, which works uniformly in infinite
  systems where inversion complements are infinite.
*/
GroupElement meet(const std::vector<GroupElement>& xs);

// Finite cross-check of the complement formula: the inversion
// complement of meet(xs) equals the two-closure of the union of the
// inputs' inversion complements.  Requires a complete table.
bool meet_complement_check(const RootTable& t,
                           const std::vector<GroupElement>& xs);

/*
  Join or meet of x with s_a x for a positive root a shifting the
  length of x by exactly one.
    l(s_a x) = l(x)+1: least z with x <= z and a in Phi_z, when an
      upper bound exists; the closure of Phi_x with a adjoined.
    l(s_a x) = l(x)-1: greatest z <= x with a outside Phi_z; always
      exists, computed as the meet of x and s_a x.
  The companion identities for s_a y are verified internally whenever
  the table is complete.
*/
JoinOutcome join_adjoin_root(const RootTable& t, const GroupElement& x, int a);

// Greatest w <= y with l(x^-1 w) = l(x) + l(w).  The result z
// satisfies: the inversion complement of z is the two-closure of
// Phi_x united with the inversion complement of y.  Requires a
// complete table.
GroupElement max_below_avoiding(const RootTable& t, const GroupElement& x,
                                const GroupElement& y);

// For coclosed gamma, the closure of gamma with finite complement is
// the inversion complement of a unique element, which is returned.
// Requires a complete table; throws input_error if gamma is not
// coclosed.
GroupElement cofinite_coclosed_closure(const RootTable& t,
                                       const RootSet& gamma);

// Elements of the standard parabolic subgroup generated by gens,
// enumerated by length then ShortLex.
std::vector<GroupElement> parabolic_elements(const RootTable& t,
                                             const std::vector<int>& gens,
                                             int max_elements = 20000);

// Longest element of a finite standard parabolic subgroup.
GroupElement longest_in_parabolic(const RootTable& t,
                                  const std::vector<int>& gens);

/*
  For finite W_J with longest element w_J and x of minimal length in
  its coset (l(w_J x) = l(w_J) + l(x)) such that y = w_J v x exists:
  writing y = w_J z, checks that
    (a) every u in W_J satisfies u v z = u z with disjoint-union
        inversion sets, and
    (b) every maximal dihedral plane through a positive root of W_J
        meets Phi_y in either all its positive roots or just that one
        root.
*/
bool parabolic_fibering_check(const RootTable& t, const std::vector<int>& J,
                              const GroupElement& x);

// Join outcomes where the closure is finite but not an inversion set
// are recorded here; whether that can happen at all is open, so the
// harness surfaces any occurrence.
void log_research_event(const std::string& line);
std::vector<std::string> research_events();
void clear_research_events();

}  // namespace coxlat
