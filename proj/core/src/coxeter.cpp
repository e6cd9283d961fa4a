#include "coxlat/coxeter.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "coxlat/errors.hpp"

namespace coxlat {

Mat Mat::identity(int n) {
  Mat m;
  m.n = n;
  m.a.assign((size_t)n * n, Scalar());
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Vec Mat::apply(const Vec& v) const {
  Vec r((size_t)n, Scalar());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      r[i] += at(i, j) * v[j];
    }
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  Mat r;
  r.n = n;
  r.a.assign((size_t)n * n, Scalar());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += at(i, k) * o.at(k, j);
      }
    }
  return r;
}

bool Mat::is_identity() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar& want = (i == j) ? Scalar(1) : Scalar();
      if (!(at(i, j) == want)) return false;
    }
  return true;
}

namespace {

bool label_supported(int m) {
  return m == CoxeterSystem::kInfinite || (m >= 2 && m <= 6);
}

// g <- g * R_s, where R_s = I - 2 e_s b_s^T (b_s = row s of the form).
// Only an outer-product update: col_j -= 2 B(s,j) col_s for j != s,
// col_s flips sign.
void mul_reflection_right(const CoxeterSystem& sys, Mat& g, int s) {
  int n = g.n;
  Vec col_s((size_t)n);
  for (int i = 0; i < n; ++i) col_s[i] = g.at(i, s);
  for (int j = 0; j < n; ++j) {
    const Scalar& b = sys.form(s, j);
    if (b.is_zero()) continue;
    Scalar f = Scalar(2) * b;
    for (int i = 0; i < n; ++i) {
      if (col_s[i].is_zero()) continue;
      g.at(i, j) -= f * col_s[i];
    }
  }
}

}  // namespace

std::shared_ptr<const CoxeterSystem> CoxeterSystem::make(
    int rank, const std::map<std::pair<int, int>, int>& labels,
    const std::map<std::pair<int, int>, Rational>& bonds) {
  if (rank < 1) throw input_error("rank must be >= 1");
  auto sys = std::shared_ptr<CoxeterSystem>(new CoxeterSystem());
  sys->rank_ = rank;
  sys->labels_.assign((size_t)rank * rank, 2);
  for (int i = 0; i < rank; ++i) sys->labels_[i * rank + i] = 1;
  for (const auto& [st, m] : labels) {
    auto [s, t] = st;
    if (s < 0 || t < 0 || s >= rank || t >= rank || s == t)
      throw input_error("label index out of range");
    if (m != kInfinite && m < 2)
      throw input_error("label m = " + std::to_string(m) +
                        " is not a Coxeter matrix entry");
    if (!label_supported(m))
      throw unsupported_error("unsupported label m = " + std::to_string(m) +
                              " (use the dihedral model for other rank-2 "
                              "labels)");
    sys->labels_[s * rank + t] = m;
    sys->labels_[t * rank + s] = m;
  }
  sys->form_.assign((size_t)rank * rank, Scalar());
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      int m = sys->labels_[i * rank + j];
      if (i == j)
        sys->form_[i * rank + j] = Scalar(1);
      else if (m == kInfinite)
        sys->form_[i * rank + j] = Scalar(Rational(-1));
      else
        sys->form_[i * rank + j] = -Scalar::cos_pi_over(m);
    }
  for (const auto& [st, q] : bonds) {
    auto [s, t] = st;
    if (s < 0 || t < 0 || s >= rank || t >= rank ||
        sys->labels_[s * rank + t] != kInfinite)
      throw input_error("bond value allowed only on infinite-labeled pairs");
    if (q > -1) throw input_error("bond value must be <= -1");
    sys->form_[s * rank + t] = Scalar(q);
    sys->form_[t * rank + s] = Scalar(q);
    sys->bonds_[{std::min(s, t), std::max(s, t)}] = q;
  }
  sys->refl_.reserve(rank);
  for (int s = 0; s < rank; ++s) {
    Mat r = Mat::identity(rank);
    mul_reflection_right(*sys, r, s);
    sys->refl_.push_back(std::move(r));
  }
  return sys;
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::chain(
    const std::vector<int>& consecutive_labels) {
  int rank = (int)consecutive_labels.size() + 1;
  std::map<std::pair<int, int>, int> labels;
  for (int i = 0; i + 1 < rank; ++i)
    labels[{i, i + 1}] = consecutive_labels[i];
  return make(rank, labels);
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::type_a(int n) {
  return chain(std::vector<int>((size_t)std::max(0, n - 1), 3));
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::type_b(int n) {
  std::vector<int> ls((size_t)std::max(0, n - 1), 3);
  if (!ls.empty()) ls[0] = 4;
  return chain(ls);
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::dihedral(int m) {
  return make(2, {{{0, 1}, m}});
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::dihedral_infinite(
    const Rational& bond) {
  return make(2, {{{0, 1}, kInfinite}}, {{{0, 1}, bond}});
}

Scalar CoxeterSystem::bilinear(const Vec& u, const Vec& v) const {
  Scalar out;
  for (int i = 0; i < rank_; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < rank_; ++j) {
      if (v[j].is_zero()) continue;
      out += u[i] * form(i, j) * v[j];
    }
  }
  return out;
}

bool CoxeterSystem::finite_labels_only() const {
  for (int x : labels_)
    if (x == kInfinite) return false;
  return true;
}

bool CoxeterSystem::crystallographic() const {
  for (int x : labels_)
    if (x == 5) return false;
  return true;
}

std::string CoxeterSystem::describe() const {
  std::ostringstream os;
  os << "r" << rank_ << "[";
  bool first = true;
  for (int s = 0; s < rank_; ++s)
    for (int t = s + 1; t < rank_; ++t) {
      int m = label(s, t);
      if (m == 2) continue;
      if (!first) os << ",";
      first = false;
      os << "m" << (s + 1) << (t + 1) << "=";
      if (m == kInfinite)
        os << "inf";
      else
        os << m;
    }
  for (const auto& [st, q] : bonds_) {
    if (q == -1) continue;
    if (!first) os << ",";
    first = false;
    os << "b" << (st.first + 1) << (st.second + 1) << "=" << q.get_str();
  }
  os << "]";
  return os.str();
}

bool is_negative_vec(const Vec& v) {
  bool strict = false;
  for (const Scalar& x : v) {
    int s = x.sign();
    if (s > 0) return false;
    if (s < 0) strict = true;
  }
  return strict;
}

bool is_positive_vec(const Vec& v) {
  bool strict = false;
  for (const Scalar& x : v) {
    int s = x.sign();
    if (s < 0) return false;
    if (s > 0) strict = true;
  }
  return strict;
}

namespace {

// Column s of m is the coordinate vector of g^{-1}(alpha_s) when m is
// the matrix of g^{-1}.
bool column_negative(const Mat& m, int s) {
  bool strict = false;
  for (int i = 0; i < m.n; ++i) {
    int sg = m.at(i, s).sign();
    if (sg > 0) return false;
    if (sg < 0) strict = true;
  }
  return strict;
}

// Consumes the matrix of g^{-1}, producing the ShortLex-least reduced
// word of g by repeatedly stripping the smallest left descent.
std::vector<int> strip_canonical(const CoxeterSystem& sys, Mat minv) {
  std::vector<int> out;
  for (;;) {
    int s = -1;
    for (int t = 0; t < sys.rank(); ++t)
      if (column_negative(minv, t)) {
        s = t;
        break;
      }
    if (s < 0) break;
    out.push_back(s);
    mul_reflection_right(sys, minv, s);  // (s g)^{-1} = g^{-1} s
  }
  if (!minv.is_identity()) {
    std::fprintf(stderr, "coxlat: descent stripping did not reach identity\n");
    std::abort();
  }
  return out;
}

}  // namespace

std::vector<int> reduce_word(const SystemPtr& sys,
                             const std::vector<int>& word) {
  Mat minv = Mat::identity(sys->rank());
  // (s_{i1}...s_{il})^{-1} = s_{il}...s_{i1}; build by right products.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= sys->rank())
      throw input_error("generator index out of range");
    mul_reflection_right(*sys, minv, *it);
  }
  return strip_canonical(*sys, std::move(minv));
}

GroupElement GroupElement::identity(SystemPtr sys) {
  GroupElement g;
  g.sys_ = std::move(sys);
  g.mat_ = Mat::identity(g.sys_->rank());
  g.inv_ = g.mat_;
  return g;
}

GroupElement GroupElement::generator(SystemPtr sys, int s) {
  return from_word(std::move(sys), {s});
}

GroupElement GroupElement::from_word(SystemPtr sys,
                                     const std::vector<int>& word) {
  GroupElement g;
  g.sys_ = std::move(sys);
  g.word_ = reduce_word(g.sys_, word);
  g.mat_ = Mat::identity(g.sys_->rank());
  for (int s : g.word_) mul_reflection_right(*g.sys_, g.mat_, s);
  g.inv_ = Mat::identity(g.sys_->rank());
  for (auto it = g.word_.rbegin(); it != g.word_.rend(); ++it)
    mul_reflection_right(*g.sys_, g.inv_, *it);
  return g;
}

GroupElement GroupElement::operator*(const GroupElement& o) const {
  if (sys_ != o.sys_) throw input_error("elements of different systems");
  std::vector<int> w = word_;
  w.insert(w.end(), o.word_.begin(), o.word_.end());
  return from_word(sys_, w);
}

GroupElement GroupElement::inverse() const {
  std::vector<int> w(word_.rbegin(), word_.rend());
  return from_word(sys_, w);
}

std::vector<int> GroupElement::left_descents() const {
  std::vector<int> out;
  for (int s = 0; s < sys_->rank(); ++s)
    if (column_negative(inv_, s)) out.push_back(s);
  return out;
}

std::vector<int> GroupElement::right_descents() const {
  std::vector<int> out;
  for (int s = 0; s < sys_->rank(); ++s)
    if (column_negative(mat_, s)) out.push_back(s);
  return out;
}

bool GroupElement::has_left_descent(int s) const {
  return column_negative(inv_, s);
}

bool GroupElement::operator==(const GroupElement& o) const {
  return sys_ == o.sys_ && word_ == o.word_;
}

bool GroupElement::operator<(const GroupElement& o) const {
  if (word_.size() != o.word_.size()) return word_.size() < o.word_.size();
  return word_ < o.word_;
}

std::string GroupElement::str() const {
  if (word_.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(word_[i] + 1);
  }
  return out;
}

bool weak_le(const GroupElement& x, const GroupElement& y) {
  if (x.system() != y.system())
    throw input_error("elements of different systems");
  std::vector<int> w(x.word().rbegin(), x.word().rend());
  w.insert(w.end(), y.word().begin(), y.word().end());
  return x.length() + (int)reduce_word(x.system(), w).size() == y.length();
}

}  // namespace coxlat
