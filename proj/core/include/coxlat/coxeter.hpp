#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "coxlat/scalar.hpp"

namespace coxlat {

using Vec = std::vector<Scalar>;  // coordinates over the simple roots

struct Mat {
  int n = 0;
  std::vector<Scalar> a;  // row-major, a[i*n+j]

  static Mat identity(int n);
  Scalar& at(int i, int j) { return a[i * n + j]; }
  const Scalar& at(int i, int j) const { return a[i * n + j]; }
  Vec apply(const Vec& v) const;
  Mat operator*(const Mat& o) const;
  bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
  bool is_identity() const;
};

/*
  A Coxeter system given by its matrix of labels m_st, realized on the
  standard geometric representation: B(a_s, a_t) = -cos(pi/m_st) with
  B(a_s, a_s) = 1.  Labels are restricted to {2,3,4,5,6} and infinity so
  that every form entry lies in Q(r2,r3,r5); an infinite bond may carry
  a configured rational value q <= -1 instead of the default -1.
  Rank-2 systems with other finite labels live in dihedral.hpp, which
  models them combinatorially.
*/
class CoxeterSystem {
 public:
  static constexpr int kInfinite = 0;  // label value for m_st = infinity

  // labels: flattened upper triangle (s < t) in row order, or use the
  // factory helpers below.  bonds maps an infinite-labeled pair (s,t),
  // s < t, to its form value.
  static std::shared_ptr<const CoxeterSystem> make(
      int rank, const std::map<std::pair<int, int>, int>& labels,
      const std::map<std::pair<int, int>, Rational>& bonds = {});

  // Linear chain s1 - s2 - ... with the given consecutive labels;
  // non-consecutive pairs commute.  type_a(n) is the chain of 3s.
  static std::shared_ptr<const CoxeterSystem> chain(
      const std::vector<int>& consecutive_labels);
  static std::shared_ptr<const CoxeterSystem> type_a(int n);
  static std::shared_ptr<const CoxeterSystem> type_b(int n);
  static std::shared_ptr<const CoxeterSystem> dihedral(int m);
  static std::shared_ptr<const CoxeterSystem> dihedral_infinite(
      const Rational& bond = Rational(-1));

  int rank() const { return rank_; }
  int label(int s, int t) const { return labels_[s * rank_ + t]; }
  const Scalar& form(int i, int j) const { return form_[i * rank_ + j]; }
  const Mat& reflection(int s) const { return refl_[s]; }
  Scalar bilinear(const Vec& u, const Vec& v) const;
  bool finite_labels_only() const;  // no infinite bonds anywhere
  bool crystallographic() const;    // labels within {2,3,4,6,inf}
  std::string describe() const;

 private:
  CoxeterSystem() = default;
  int rank_ = 0;
  std::vector<int> labels_;
  std::vector<Scalar> form_;
  std::vector<Mat> refl_;
  std::map<std::pair<int, int>, Rational> bonds_;
};

using SystemPtr = std::shared_ptr<const CoxeterSystem>;

/*
  Group element carrying its ShortLex-least reduced word (generators
  0-based ascending) together with the matrices of the element and of
  its inverse in the geometric representation.  Two elements are equal
  iff their canonical words agree; the matrices make descent tests and
  root actions cheap.
*/
class GroupElement {
 public:
  static GroupElement identity(SystemPtr sys);
  static GroupElement generator(SystemPtr sys, int s);
  // Arbitrary word; the result is reduced and canonicalized.
  static GroupElement from_word(SystemPtr sys, const std::vector<int>& word);

  const SystemPtr& system() const { return sys_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return (int)word_.size(); }
  const Mat& matrix() const { return mat_; }
  const Mat& inverse_matrix() const { return inv_; }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;
  Vec apply(const Vec& v) const { return mat_.apply(v); }

  // Generators s with l(s*g) < l(g), ascending.
  std::vector<int> left_descents() const;
  // Generators s with l(g*s) < l(g), ascending.
  std::vector<int> right_descents() const;
  bool has_left_descent(int s) const;

  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  // ShortLex order on canonical words; total, usable as map key compare.
  bool operator<(const GroupElement& o) const;

  // "1.2.1" with 1-based generator indices, "e" for the identity.
  std::string str() const;

 private:
  SystemPtr sys_;
  std::vector<int> word_;
  Mat mat_, inv_;
};

// ShortLex-least reduced word of the element given by an arbitrary word.
std::vector<int> reduce_word(const SystemPtr& sys,
                             const std::vector<int>& word);

// True if every coordinate is <= 0 and some coordinate is < 0.
bool is_negative_vec(const Vec& v);
bool is_positive_vec(const Vec& v);

// Weak (right) order x <= y, decided by length additivity
// l(x) + l(x^{-1} y) = l(y); works in infinite systems too.
bool weak_le(const GroupElement& x, const GroupElement& y);

}  // namespace coxlat
