#include "coxlat/weak_order.hpp"

#include <random>

#include "coxlat/errors.hpp"
#include "coxlat/finite_model.hpp"
#include "doctest.h"

using namespace coxlat;

TEST_CASE("join of a pair of simple reflections") {
  auto a2 = RootTable::generate(CoxeterSystem::type_a(2), 10);
  auto sys = a2.system();
  GroupElement s0 = GroupElement::generator(sys, 0);
  GroupElement s1 = GroupElement::generator(sys, 1);
  JoinOutcome j = join(a2, {s0, s1});
  REQUIRE(j.has_join());
  CHECK(j.element() == GroupElement::from_word(sys, {0, 1, 0}));
  CHECK(inversion_set(a2, j.element()) == full_positive(a2));

  for (const GroupElement& x : all_elements(sys, 100)) {
    JoinOutcome single = join(a2, {x});
    REQUIRE(single.has_join());
    CHECK(single.element() == x);
  }
}

TEST_CASE("join fails with an infinite closure witness") {
  auto t = RootTable::generate(CoxeterSystem::dihedral_infinite(), 6);
  auto sys = t.system();
  JoinOutcome j = join(t, {GroupElement::generator(sys, 0),
                           GroupElement::generator(sys, 1)});
  REQUIRE_FALSE(j.has_join());
  CHECK(j.reason() == NoJoinReason::infinite_closure);
  CHECK(j.infinite_witness() == std::pair<int, int>{0, 1});
}

TEST_CASE("join input validation") {
  auto a2 = RootTable::generate(CoxeterSystem::type_a(2), 10);
  auto a3 = RootTable::generate(CoxeterSystem::type_a(3), 10);
  CHECK_THROWS_AS((void)join(a2, {}), input_error);
  CHECK_THROWS_AS(
      (void)join(a2, {GroupElement::generator(a3.system(), 0)}),
      input_error);
}

TEST_CASE("meet by common descents") {
  auto sys = CoxeterSystem::type_a(2);
  GroupElement e = GroupElement::identity(sys);
  GroupElement s0 = GroupElement::generator(sys, 0);
  GroupElement s01 = GroupElement::from_word(sys, {0, 1});
  GroupElement s10 = GroupElement::from_word(sys, {1, 0});
  CHECK(meet({s01, s10}) == e);
  CHECK(meet({s01, s0}) == s0);
  CHECK(meet({s01}) == s01);

  // The descent recursion never needs a root table, so it runs in
  // infinite systems as well.
  auto inf = CoxeterSystem::dihedral_infinite();
  GroupElement a = GroupElement::from_word(inf, {0, 1, 0});
  GroupElement b = GroupElement::from_word(inf, {0, 1, 0, 1});
  CHECK(meet({a, b}) == a);
  CHECK(meet({a, GroupElement::from_word(inf, {1, 0})}) ==
        GroupElement::identity(inf));
}

TEST_CASE("join and meet agree with the brute-force oracle") {
  for (bool use_b3 : {false, true}) {
    auto t = use_b3 ? RootTable::generate(CoxeterSystem::type_b(3), 12)
                    : RootTable::generate(CoxeterSystem::type_a(3), 10);
    FiniteModel m = FiniteModel::build(t);
    for (int i = 0; i < m.size(); ++i) {
      for (int j = 0; j < m.size(); ++j) {
        JoinOutcome jo = join(t, {m.element(i), m.element(j)});
        REQUIRE(jo.has_join());
        CHECK(m.index_of(jo.element()) == m.oracle_join(i, j));
        CHECK(m.index_of(meet({m.element(i), m.element(j)})) ==
              m.oracle_meet(i, j));
      }
    }
  }
}

TEST_CASE("semilattice laws") {
  auto t = RootTable::generate(CoxeterSystem::type_b(2), 10);
  auto elements = all_elements(t.system(), 100);
  for (const GroupElement& x : elements) {
    for (const GroupElement& y : elements) {
      CHECK(join(t, {x, y}).element() == join(t, {y, x}).element());
      CHECK(meet({x, y}) == meet({y, x}));
      for (const GroupElement& z : elements) {
        GroupElement xy_z = join(t, {join(t, {x, y}).element(), z}).element();
        CHECK(xy_z == join(t, {x, join(t, {y, z}).element()}).element());
        CHECK(xy_z == join(t, {x, y, z}).element());
        CHECK(meet({meet({x, y}), z}) == meet({x, y, z}));
      }
    }
  }
}

TEST_CASE("length-additive sets are closed under join") {
  std::mt19937 rng(401);
  auto t = RootTable::generate(CoxeterSystem::type_a(3), 10);
  auto elements = all_elements(t.system(), 100);
  std::uniform_int_distribution<int> pick(0, (int)elements.size() - 1);
  for (int iter = 0; iter < 60; ++iter) {
    const GroupElement& x = elements[(size_t)pick(rng)];
    RootSet block = inversion_set(t, x.inverse());
    std::vector<GroupElement> u;
    for (int tries = 0; tries < 30 && u.size() < 3; ++tries) {
      const GroupElement& cand = elements[(size_t)pick(rng)];
      if (inversion_set(t, cand).intersect(block).empty()) u.push_back(cand);
    }
    if (u.empty()) continue;
    JoinOutcome jo = join(t, u);
    REQUIRE(jo.has_join());
    CHECK(inversion_set(t, jo.element()).intersect(block).empty());
  }
}

TEST_CASE("join over a common lower bound splits off its inversions") {
  std::mt19937 rng(409);
  auto t = RootTable::generate(CoxeterSystem::type_a(3), 10);
  RootSet all = full_positive(t);
  FiniteModel m = FiniteModel::build(t);
  std::uniform_int_distribution<int> pick(0, m.size() - 1);
  int tested = 0;
  while (tested < 80) {
    int u = pick(rng), y = pick(rng), z = pick(rng), x = pick(rng);
    if (!m.weak_le(y, u) || !m.weak_le(z, u)) continue;
    if (!m.weak_le(x, y) || !m.weak_le(x, z)) continue;
    ++tested;
    RootSet phi_x = m.mask_to_set(m.inversion_mask(x));
    RootSet phi_y = m.mask_to_set(m.inversion_mask(y));
    RootSet phi_z = m.mask_to_set(m.inversion_mask(z));
    JoinOutcome jo = join(t, {m.element(y), m.element(z)});
    REQUIRE(jo.has_join());
    RootSet lhs = inversion_set(t, jo.element());
    RootSet tail = closure(t, ClosureKind::two,
                           phi_y.difference(phi_x).unite(
                               phi_z.difference(phi_x)),
                           all)
                       .set();
    CHECK(tail.intersect(phi_x).empty());
    CHECK(lhs == phi_x.unite(tail));
    CHECK(lhs == closure(t, ClosureKind::two, phi_y.unite(phi_z), all).set());
  }
}

TEST_CASE("meet complement formula in finite groups") {
  auto a3 = RootTable::generate(CoxeterSystem::type_a(3), 10);
  auto a3_elements = all_elements(a3.system(), 100);
  for (const GroupElement& x : a3_elements) {
    CHECK(meet_complement_check(a3, {x}));
  }
  for (const GroupElement& x : a3_elements) {
    for (const GroupElement& y : a3_elements) {
      CHECK(meet_complement_check(a3, {x, y}));
    }
  }
  auto b2 = RootTable::generate(CoxeterSystem::type_b(2), 10);
  auto b2_elements = all_elements(b2.system(), 100);
  for (const GroupElement& x : b2_elements) {
    for (const GroupElement& y : b2_elements) {
      CHECK(meet_complement_check(b2, {x, y}));
    }
  }
}

TEST_CASE("adjoining a root above") {
  auto a2 = RootTable::generate(CoxeterSystem::type_a(2), 10);
  auto sys = a2.system();
  int alpha = *a2.find(Vec{Scalar(1), Scalar(0)});
  GroupElement s_gamma = GroupElement::generator(sys, 1);
  JoinOutcome j = join_adjoin_root(a2, s_gamma, alpha);
  REQUIRE(j.has_join());
  CHECK(j.element() == GroupElement::from_word(sys, {0, 1, 0}));

  for (int a : {0, 1}) {
    JoinOutcome id = join_adjoin_root(a2, GroupElement::identity(sys), a);
    REQUIRE(id.has_join());
    CHECK(id.element() == a2.reflection_element(a));
  }

  int beta = *a2.find(Vec{Scalar(1), Scalar(1)});
  CHECK_THROWS_AS(
      (void)join_adjoin_root(a2, GroupElement::identity(sys), beta),
      input_error);
}

TEST_CASE("adjoining a root below") {
  auto b2 = RootTable::generate(CoxeterSystem::type_b(2), 10);
  auto sys = b2.system();
  GroupElement x = GroupElement::from_word(sys, {0, 1, 0, 1});
  int a = *b2.find(Vec{Scalar(0), Scalar(1)});
  REQUIRE(inversion_set(b2, x).contains(a));
  JoinOutcome j = join_adjoin_root(b2, x, a);
  REQUIRE(j.has_join());
  CHECK(j.element() == GroupElement::from_word(sys, {0, 1, 0}));

  // Brute force: greatest element below x avoiding a.
  FiniteModel m = FiniteModel::build(b2);
  for (int xi = 0; xi < m.size(); ++xi) {
    for (int r = 0; r < b2.size(); ++r) {
      GroupElement sx = b2.reflection_element(r) * m.element(xi);
      if (sx.length() + 1 != m.element(xi).length()) continue;
      GroupElement got = join_adjoin_root(b2, m.element(xi), r).element();
      int best = -1;
      for (int z = 0; z < m.size(); ++z) {
        if (!m.weak_le(z, xi)) continue;
        if (m.mask_to_set(m.inversion_mask(z)).contains(r)) continue;
        if (best < 0 || m.weak_le(best, z)) best = z;
      }
      CHECK(m.index_of(got) == best);
    }
  }
}

TEST_CASE("adjoined joins match plain joins") {
  auto t = RootTable::generate(CoxeterSystem::type_a(3), 10);
  FiniteModel m = FiniteModel::build(t);
  for (int xi = 0; xi < m.size(); ++xi) {
    for (int r = 0; r < t.size(); ++r) {
      GroupElement sx = t.reflection_element(r) * m.element(xi);
      if (sx.length() != m.element(xi).length() + 1) continue;
      JoinOutcome a = join_adjoin_root(t, m.element(xi), r);
      JoinOutcome b = join(t, {m.element(xi), sx});
      REQUIRE(a.has_join());
      REQUIRE(b.has_join());
      CHECK(a.element() == b.element());
    }
  }
}

TEST_CASE("greatest length-additive element below") {
  auto a2 = RootTable::generate(CoxeterSystem::type_a(2), 10);
  auto sys = a2.system();
  GroupElement e = GroupElement::identity(sys);
  GroupElement w0 = GroupElement::from_word(sys, {0, 1, 0});
  CHECK(max_below_avoiding(a2, GroupElement::generator(sys, 0), w0) ==
        GroupElement::from_word(sys, {1, 0}));
  CHECK(max_below_avoiding(a2, w0, w0) == e);
  for (const GroupElement& y : all_elements(sys, 100)) {
    CHECK(max_below_avoiding(a2, e, y) == y);
  }

  auto t = RootTable::generate(CoxeterSystem::type_a(3), 10);
  FiniteModel m = FiniteModel::build(t);
  for (int xi = 0; xi < m.size(); ++xi) {
    for (int yi = 0; yi < m.size(); ++yi) {
      GroupElement z = max_below_avoiding(t, m.element(xi), m.element(yi));
      int best = -1;
      for (int w = 0; w < m.size(); ++w) {
        if (!m.weak_le(w, yi)) continue;
        GroupElement prod = m.element(xi).inverse() * m.element(w);
        if (prod.length() !=
            m.element(xi).length() + m.element(w).length()) {
          continue;
        }
        if (best < 0 || m.weak_le(best, w)) best = w;
      }
      CHECK(m.index_of(z) == best);
    }
  }
}

TEST_CASE("closures of coclosed sets with finite complement are biclosed") {
  auto a2 = RootTable::generate(CoxeterSystem::type_a(2), 10);
  CHECK(cofinite_coclosed_closure(a2, full_positive(a2)) ==
        GroupElement::identity(a2.system()));
  int gamma_root = *a2.find(Vec{Scalar(0), Scalar(1)});
  int beta = *a2.find(Vec{Scalar(1), Scalar(1)});
  CHECK(cofinite_coclosed_closure(a2, RootSet(a2, {gamma_root, beta})) ==
        GroupElement::generator(a2.system(), 0));
  CHECK_THROWS_AS(
      (void)cofinite_coclosed_closure(a2, RootSet(a2, {beta})),
      input_error);

  auto t = RootTable::generate(CoxeterSystem::type_a(3), 10);
  RootSet all = full_positive(t);
  // Exhaustive: every coclosed subset closes to an inversion complement.
  int hits = 0;
  for (uint64_t bits = 0; bits < (uint64_t{1} << t.size()); ++bits) {
    RootSet g(t);
    for (int k = 0; k < t.size(); ++k) {
      if (bits & (uint64_t{1} << k)) g.insert(k);
    }
    if (!is_coclosed(t, ClosureKind::two, g, all)) continue;
    ++hits;
    GroupElement x = cofinite_coclosed_closure(t, g);
    CHECK(closure(t, ClosureKind::two, g, all).set() ==
          inversion_complement(t, x));
  }
  CHECK(hits > 10);

  // The meet complement formula is the special case of unions of
  // inversion complements.
  std::mt19937 rng(431);
  auto elements = all_elements(t.system(), 100);
  std::uniform_int_distribution<int> pick(0, (int)elements.size() - 1);
  for (int iter = 0; iter < 30; ++iter) {
    const GroupElement& u = elements[(size_t)pick(rng)];
    const GroupElement& v = elements[(size_t)pick(rng)];
    RootSet g = inversion_complement(t, u).unite(inversion_complement(t, v));
    CHECK(cofinite_coclosed_closure(t, g) == meet({u, v}));
  }
}

TEST_CASE("sampled coclosed sets in a larger group") {
  std::mt19937 rng(433);
  auto t = RootTable::generate(CoxeterSystem::type_b(3), 12);
  RootSet all = full_positive(t);
  std::uniform_int_distribution<int> coin(0, 1);
  int hits = 0;
  for (int iter = 0; iter < 2000 && hits < 60; ++iter) {
    RootSet g(t);
    for (int k = 0; k < t.size(); ++k) {
      if (coin(rng)) g.insert(k);
    }
    if (!is_coclosed(t, ClosureKind::two, g, all)) continue;
    ++hits;
    GroupElement x = cofinite_coclosed_closure(t, g);
    CHECK(closure(t, ClosureKind::two, g, all).set() ==
          inversion_complement(t, x));
  }
  CHECK(hits >= 30);
}

TEST_CASE("parabolic subgroup helpers") {
  auto t = RootTable::generate(CoxeterSystem::type_a(3), 10);
  auto sys = t.system();
  CHECK(parabolic_elements(t, {}).size() == 1);
  CHECK(parabolic_elements(t, {0, 1}).size() == 6);
  CHECK(parabolic_elements(t, {0, 2}).size() == 4);
  CHECK(longest_in_parabolic(t, {0, 1}) ==
        GroupElement::from_word(sys, {0, 1, 0}));
  CHECK(longest_in_parabolic(t, {}) == GroupElement::identity(sys));

  auto inf = RootTable::generate(CoxeterSystem::dihedral_infinite(), 6);
  CHECK_THROWS_AS((void)longest_in_parabolic(inf, {0, 1}),
                  truncation_error);
}

TEST_CASE("join with a full parabolic fibers over its planes") {
  auto a2 = RootTable::generate(CoxeterSystem::type_a(2), 10);
  CHECK(parabolic_fibering_check(a2, {0}, GroupElement::generator(
                                              a2.system(), 1)));

  auto t = RootTable::generate(CoxeterSystem::type_a(3), 10);
  for (const GroupElement& x : all_elements(t.system(), 100)) {
    CHECK(parabolic_fibering_check(t, {}, x));
  }
  GroupElement wj = longest_in_parabolic(t, {1, 2});
  int reps = 0;
  for (const GroupElement& x : all_elements(t.system(), 100)) {
    if ((wj * x).length() != wj.length() + x.length()) continue;
    ++reps;
    CHECK(parabolic_fibering_check(t, {1, 2}, x));
  }
  CHECK(reps == 4);
  CHECK_THROWS_AS(
      (void)parabolic_fibering_check(t, {1, 2},
                                     GroupElement::generator(t.system(), 1)),
      input_error);
}

TEST_CASE("research event log") {
  clear_research_events();
  CHECK(research_events().empty());
  log_research_event("probe");
  REQUIRE(research_events().size() == 1);
  CHECK(research_events().front() == "probe");
  clear_research_events();
}
