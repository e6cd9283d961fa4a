#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxlat/coxeter.hpp"

namespace coxlat {

struct Root {
  Vec coords;      // positive representative, over the simple-root basis
  int depth = 0;   // minimal n with root = w(alpha_s), l(w) = n-1
  int parent = -1; // table index of the depth-(d-1) root this came from
  int via = -1;    // generator mapping parent to this root
};

// Lexicographic compare of coordinate vectors in the field's real order.
struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const;
};

/*
  All positive roots of depth <= depth_cap, generated breadth-first and
  indexed in canonical order (depth, then coordinate-lex).  Signed roots
  are addressed by an integer: k >= 0 is positive root number k, and ~k
  is its negative.  Operations that would need a root beyond the cap
  throw truncation_error rather than answering.
*/
class RootTable {
 public:
  static RootTable generate(SystemPtr sys, int depth_cap);

  const SystemPtr& system() const { return sys_; }
  int depth_cap() const { return cap_; }
  bool complete() const { return complete_; }
  // Process-unique identity, never recycled; lets computations keyed on
  // a table cache results safely across table lifetimes.
  uint64_t uid() const { return uid_; }
  int size() const { return (int)roots_.size(); }
  const Root& positive(int k) const { return roots_[(size_t)k]; }

  static int negate(int r) { return ~r; }
  static int abs_index(int r) { return r >= 0 ? r : ~r; }
  static bool positive_index(int r) { return r >= 0; }

  Vec coords(int r) const;
  int depth(int r) const { return roots_[(size_t)abs_index(r)].depth; }
  std::optional<int> find(const Vec& v) const;
  int find_or_throw(const Vec& v) const;
  int simple(int s) const { return simple_idx_[(size_t)s]; }
  bool is_simple(int r) const;

  // g(root); throws truncation_error if the image is beyond the cap.
  int apply(const GroupElement& g, int r) const;
  // s_{|a|}(root) computed directly from the form.
  int reflect(int a, int r) const;
  GroupElement reflection_element(int k) const;
  Scalar bilinear(int a, int b) const;

  // Position in the canonical order over all signed roots of the table.
  int order_rank(int r) const;
  std::string root_str(int r) const;    // "#k" / "-#k", 1-based
  std::string coords_str(int r) const;  // "[c1,...,cn]"

 private:
  SystemPtr sys_;
  int cap_ = 0;
  bool complete_ = false;
  uint64_t uid_ = 0;
  std::vector<Root> roots_;
  std::map<Vec, int, VecLess> index_;
  std::vector<int> simple_idx_;
  std::vector<int> rank_signed_;  // slot 2k for +k, 2k+1 for ~k
};

// Finite set of signed roots of one table, kept in canonical order.
class RootSet {
 public:
  RootSet() = default;
  explicit RootSet(const RootTable& t) : table_(&t) {}
  RootSet(const RootTable& t, std::initializer_list<int> rs);
  RootSet(const RootTable& t, const std::vector<int>& rs);

  const RootTable* table() const { return table_; }
  int size() const { return (int)idx_.size(); }
  bool empty() const { return idx_.empty(); }
  bool contains(int r) const;
  void insert(int r);
  void erase(int r);
  const std::vector<int>& indices() const { return idx_; }
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }

  bool subset_of(const RootSet& o) const;
  bool operator==(const RootSet& o) const { return idx_ == o.idx_; }
  bool operator!=(const RootSet& o) const { return !(*this == o); }
  bool operator<(const RootSet& o) const { return idx_ < o.idx_; }

  RootSet unite(const RootSet& o) const;
  RootSet intersect(const RootSet& o) const;
  RootSet difference(const RootSet& o) const;
  RootSet symdiff(const RootSet& o) const;
  RootSet negated() const;
  bool all_positive() const;

  std::string str() const;  // "{#1,-#2,...}" in canonical order

 private:
  const RootTable* table_ = nullptr;
  std::vector<int> idx_;  // sorted by table->order_rank, unique
};

struct Reflection {
  int root;  // positive table index
  GroupElement element;
};

// Phi_g per eq-style prefix construction from the canonical word.
RootSet inversion_set(const RootTable& t, const GroupElement& g);
// Phi_+ minus Phi_g; requires a complete table.
RootSet inversion_complement(const RootTable& t, const GroupElement& g);
// Lemma-style twisted action on subsets of Phi_+.
RootSet dot_action(const RootTable& t, const GroupElement& w,
                   const RootSet& gamma);
std::vector<Reflection> n_set(const RootTable& t, const GroupElement& g);

struct ReflectionSubgroup {
  std::vector<int> positive;  // positive table indices, ascending
  std::vector<int> chi;       // canonical generator roots, ascending
};

// Closes the given positive roots under mutual reflection within the
// table, then selects the canonical generators chi by the condition
// that s_beta inverts exactly one subgroup-positive root.
ReflectionSubgroup canonical_generators(const RootTable& t,
                                        const std::vector<int>& gen_roots);

struct PlaneSubsystem {
  int a = 0, b = 0;           // defining signed roots
  std::vector<int> positive;  // positive table indices in the plane
  int simple_u = 0, simple_v = 0;  // cone-extreme pair (positive indices)
  bool finite = true;
  int m_hat = 0;  // dihedral order when finite
};

PlaneSubsystem plane_subsystem(const RootTable& t, int a, int b);
std::vector<PlaneSubsystem> maximal_dihedral_containing(const RootTable& t,
                                                        int a);
GroupElement coset_min_rep(const RootTable& t, const ReflectionSubgroup& sub,
                           const GroupElement& x);
// Stratum of positive roots alpha with l(s_alpha x) = l(x) + n.
RootSet bruhat_stratum(const RootTable& t, const GroupElement& x, int n);

// Solve r = x*a + y*b in the plane of independent vectors a, b; nullopt
// when r lies outside their span.
std::optional<std::pair<Scalar, Scalar>> solve_in_plane(const Vec& a,
                                                        const Vec& b,
                                                        const Vec& r);

}  // namespace coxlat
