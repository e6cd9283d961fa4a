#include "coxlat/rootsys.hpp"

#include <random>

#include "coxlat/errors.hpp"
#include "doctest.h"

using namespace coxlat;

namespace {

Vec vec_of(const std::vector<int>& ints) {
  Vec v;
  for (int x : ints) v.push_back(Scalar(x));
  return v;
}

int must_find(const RootTable& t, const Vec& v) {
  auto r = t.find(v);
  REQUIRE(r.has_value());
  return *r;
}

}  // namespace

TEST_CASE("positive root counts for the small finite types") {
  CHECK(RootTable::generate(CoxeterSystem::type_a(2), 10).size() == 3);
  CHECK(RootTable::generate(CoxeterSystem::type_b(2), 10).size() == 4);
  CHECK(RootTable::generate(CoxeterSystem::dihedral(6), 10).size() == 6);
  CHECK(RootTable::generate(CoxeterSystem::type_a(3), 10).size() == 6);
  CHECK(RootTable::generate(CoxeterSystem::type_b(3), 10).size() == 9);
  CHECK(RootTable::generate(CoxeterSystem::chain({5, 3}), 20).size() == 15);
  auto a2 = RootTable::generate(CoxeterSystem::type_a(2), 10);
  CHECK(a2.complete());
}

TEST_CASE("canonical order is depth then coordinate-lex") {
  auto b2 = RootTable::generate(CoxeterSystem::type_b(2), 10);
  Scalar r2 = Scalar::radical(2);
  CHECK(b2.positive(0).coords == Vec{Scalar(0), Scalar(1)});
  CHECK(b2.positive(1).coords == Vec{Scalar(1), Scalar(0)});
  CHECK(b2.positive(2).coords == Vec{Scalar(1), r2});
  CHECK(b2.positive(3).coords == Vec{r2, Scalar(1)});
  CHECK(b2.positive(2).depth == 2);
  CHECK(b2.root_str(2) == "#3");
  CHECK(b2.root_str(~2) == "-#3");
  // Negatives sort before positives inside a depth level.
  CHECK(b2.order_rank(~0) < b2.order_rank(0));
  CHECK(b2.order_rank(0) < b2.order_rank(~2));
}

TEST_CASE("infinite dihedral truncates at the cap") {
  auto t = RootTable::generate(CoxeterSystem::dihedral_infinite(), 7);
  CHECK(t.size() == 14);  // two roots per depth level
  CHECK_FALSE(t.complete());
  for (int d = 1; d <= 7; ++d) {
    int count = 0;
    for (int k = 0; k < t.size(); ++k) {
      if (t.positive(k).depth == d) ++count;
    }
    CHECK(count == 2);
  }
  // Pushing a deep root out of the table is refused, not approximated.
  GroupElement far =
      GroupElement::from_word(t.system(), {0, 1, 0, 1, 0, 1, 0});
  CHECK_THROWS_AS((void)t.apply(far, t.simple(1)), truncation_error);
}

TEST_CASE("inversion sets grow with length") {
  auto t = RootTable::generate(CoxeterSystem::type_b(3), 12);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> gen(0, 2);
  for (int iter = 0; iter < 40; ++iter) {
    std::vector<int> w;
    for (int i = 0; i < 8; ++i) w.push_back(gen(rng));
    GroupElement g = GroupElement::from_word(t.system(), w);
    RootSet inv = inversion_set(t, g);
    CHECK(inv.size() == g.length());
    CHECK(inv.all_positive());
    // beta in Phi_g exactly when g^{-1} sends it negative.
    for (int k = 0; k < t.size(); ++k) {
      Vec img = g.inverse_matrix().apply(t.positive(k).coords);
      CHECK(inv.contains(k) == is_negative_vec(img));
    }
  }
}

TEST_CASE("inversion complement needs a complete table") {
  auto t = RootTable::generate(CoxeterSystem::type_a(2), 10);
  GroupElement s = GroupElement::generator(t.system(), 0);
  RootSet co = inversion_complement(t, s);
  CHECK(co.size() == 2);
  CHECK_FALSE(co.contains(must_find(t, vec_of({1, 0}))));

  auto inf = RootTable::generate(CoxeterSystem::dihedral_infinite(), 5);
  GroupElement u = GroupElement::generator(inf.system(), 0);
  CHECK_THROWS_AS((void)inversion_complement(inf, u), truncation_error);
}

TEST_CASE("twisted action composes like the group") {
  auto t = RootTable::generate(CoxeterSystem::type_b(2), 10);
  auto sys = t.system();
  GroupElement s = GroupElement::generator(sys, 0);
  RootSet single(t, {t.simple(0)});
  CHECK(dot_action(t, s, single).empty());

  std::mt19937 rng(21);
  std::uniform_int_distribution<int> gen(0, 1), pick(0, 1);
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<int> wx, wy;
    for (int i = 0; i < 3; ++i) wx.push_back(gen(rng));
    for (int i = 0; i < 3; ++i) wy.push_back(gen(rng));
    GroupElement x = GroupElement::from_word(sys, wx);
    GroupElement y = GroupElement::from_word(sys, wy);
    RootSet gamma(t);
    for (int k = 0; k < t.size(); ++k) {
      if (pick(rng)) gamma.insert(k);
    }
    CHECK(dot_action(t, x * y, gamma) ==
          dot_action(t, x, dot_action(t, y, gamma)));
  }
}

TEST_CASE("reflection elements invert their root") {
  auto t = RootTable::generate(CoxeterSystem::type_b(3), 12);
  for (int k = 0; k < t.size(); ++k) {
    GroupElement r = t.reflection_element(k);
    CHECK(r == r.inverse());
    CHECK(r.length() % 2 == 1);
    CHECK(t.apply(r, k) == ~k);
  }
}

TEST_CASE("reflections below an element") {
  auto t = RootTable::generate(CoxeterSystem::type_a(3), 10);
  GroupElement w = GroupElement::from_word(t.system(), {0, 1, 2, 0, 1, 0});
  auto refl = n_set(t, w);
  CHECK(refl.size() == 6);
  for (const auto& r : refl) {
    CHECK((r.element * w).length() < w.length());
  }
}

TEST_CASE("canonical generators of reflection subgroups") {
  auto a3 = RootTable::generate(CoxeterSystem::type_a(3), 10);
  int e3 = must_find(a3, vec_of({0, 0, 1}));
  int e1 = must_find(a3, vec_of({1, 0, 0}));
  auto comm = canonical_generators(a3, {e3, e1});
  CHECK(comm.positive == std::vector<int>{e3, e1});
  CHECK(comm.chi == std::vector<int>{e3, e1});

  // A non-simple generating pair can close up to the whole group; the
  // canonical generators come back out as the simple roots.
  auto b2 = RootTable::generate(CoxeterSystem::type_b(2), 10);
  auto whole = canonical_generators(b2, {2, 3});
  CHECK(whole.positive == std::vector<int>{0, 1, 2, 3});
  CHECK(whole.chi == std::vector<int>{0, 1});
}

TEST_CASE("plane subsystems certify finite closure") {
  auto b2 = RootTable::generate(CoxeterSystem::type_b(2), 10);
  PlaneSubsystem p = plane_subsystem(b2, 0, 1);
  CHECK(p.finite);
  CHECK(p.m_hat == 4);
  CHECK(p.positive == std::vector<int>{0, 1, 2, 3});
  CHECK(p.simple_u == 0);
  CHECK(p.simple_v == 1);

  auto a3 = RootTable::generate(CoxeterSystem::type_a(3), 10);
  int e3 = must_find(a3, vec_of({0, 0, 1}));
  int e12 = must_find(a3, vec_of({1, 1, 0}));
  int e123 = must_find(a3, vec_of({1, 1, 1}));
  PlaneSubsystem q = plane_subsystem(a3, e3, e123);
  CHECK(q.finite);
  CHECK(q.m_hat == 3);
  CHECK(q.positive == std::vector<int>{e3, e12, e123});
  CHECK(q.simple_u == e3);
  CHECK(q.simple_v == e12);

  int e1 = must_find(a3, vec_of({1, 0, 0}));
  PlaneSubsystem c = plane_subsystem(a3, e3, e1);
  CHECK(c.m_hat == 2);
  CHECK(c.positive == std::vector<int>{e3, e1});
}

TEST_CASE("plane subsystems detect infinite planes exactly") {
  auto t = RootTable::generate(CoxeterSystem::dihedral_infinite(), 6);
  PlaneSubsystem p = plane_subsystem(t, 0, 1);
  CHECK_FALSE(p.finite);
  CHECK(p.m_hat == 0);
  CHECK((int)p.positive.size() == t.size());

  auto hyp = RootTable::generate(
      CoxeterSystem::dihedral_infinite(Rational(-3, 2)), 6);
  CHECK_FALSE(plane_subsystem(hyp, 0, 1).finite);
}

TEST_CASE("shallow tables refuse uncertifiable planes") {
  auto t = RootTable::generate(CoxeterSystem::type_b(3), 2);
  CHECK_FALSE(t.complete());
  int e1 = must_find(t, vec_of({1, 0, 0}));
  int e23 = must_find(t, vec_of({0, 1, 1}));
  CHECK_THROWS_AS((void)plane_subsystem(t, e1, e23), truncation_error);
}

TEST_CASE("maximal dihedral planes through a root") {
  auto a3 = RootTable::generate(CoxeterSystem::type_a(3), 10);
  int e3 = must_find(a3, vec_of({0, 0, 1}));
  auto planes = maximal_dihedral_containing(a3, e3);
  CHECK(planes.size() == 3);
  std::vector<int> sizes;
  for (const auto& p : planes) sizes.push_back((int)p.positive.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{2, 3, 3});
}

TEST_CASE("minimal coset representatives") {
  auto a3 = RootTable::generate(CoxeterSystem::type_a(3), 10);
  auto sub = canonical_generators(a3, {a3.simple(0), a3.simple(1)});
  GroupElement w0 = GroupElement::from_word(a3.system(), {0, 1, 2, 0, 1, 0});
  GroupElement u = coset_min_rep(a3, sub, w0);
  CHECK(u.length() == 3);
  RootSet inv = inversion_set(a3, u);
  for (int b : sub.positive) CHECK_FALSE(inv.contains(b));
  // u differs from w0 by a subgroup element.
  GroupElement d = u * w0.inverse();
  RootSet dinv = inversion_set(a3, d);
  for (int b : dinv) {
    CHECK(std::binary_search(sub.positive.begin(), sub.positive.end(), b));
  }
  // Already-minimal elements pass through unchanged.
  CHECK(coset_min_rep(a3, sub, u) == u);
}

TEST_CASE("strata of reflections around an element") {
  auto a3 = RootTable::generate(CoxeterSystem::type_a(3), 10);
  GroupElement e = GroupElement::identity(a3.system());
  CHECK(bruhat_stratum(a3, e, 1).size() == 3);
  CHECK(bruhat_stratum(a3, e, 3).size() == 2);
  CHECK(bruhat_stratum(a3, e, 5).size() == 1);
  CHECK(bruhat_stratum(a3, e, 2).empty());
  GroupElement s = GroupElement::generator(a3.system(), 0);
  RootSet down = bruhat_stratum(a3, s, -1);
  CHECK(down.size() == 1);
  CHECK(down.contains(must_find(a3, vec_of({1, 0, 0}))));
}

TEST_CASE("plane solver") {
  Vec a = {Scalar(1), Scalar(0), Scalar(2)};
  Vec b = {Scalar(0), Scalar(1), Scalar(1)};
  Vec r = {Scalar(3), Scalar(2), Scalar(8)};
  auto xy = solve_in_plane(a, b, r);
  REQUIRE(xy.has_value());
  CHECK(xy->first == Scalar(3));
  CHECK(xy->second == Scalar(2));
  Vec off = {Scalar(3), Scalar(2), Scalar(9)};
  CHECK_FALSE(solve_in_plane(a, b, off).has_value());
  CHECK_FALSE(solve_in_plane(a, a, r).has_value());
}
