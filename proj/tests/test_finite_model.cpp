#include "coxlat/finite_model.hpp"

#include "coxlat/errors.hpp"
#include "doctest.h"

using namespace coxlat;

TEST_CASE("element enumeration counts") {
  CHECK(all_elements(CoxeterSystem::type_a(2), 100).size() == 6);
  CHECK(all_elements(CoxeterSystem::type_a(3), 100).size() == 24);
  CHECK(all_elements(CoxeterSystem::type_b(3), 100).size() == 48);
  CHECK(all_elements(CoxeterSystem::dihedral(5), 100).size() == 10);
  CHECK_THROWS_AS((void)all_elements(CoxeterSystem::dihedral_infinite(), 50),
                  truncation_error);
}

TEST_CASE("model masks agree with inversion sets") {
  auto t = RootTable::generate(CoxeterSystem::type_b(3), 12);
  FiniteModel m = FiniteModel::build(t);
  REQUIRE(m.size() == 48);
  for (int i = 0; i < m.size(); ++i) {
    const GroupElement& w = m.element(i);
    CHECK(m.mask_to_set(m.inversion_mask(i)) == inversion_set(t, w));
    CHECK((m.inversion_mask(i) & m.complement_mask(i)) == 0);
    CHECK(__builtin_popcountll(m.inversion_mask(i)) == w.length());
  }
  CHECK(m.element(m.longest()).length() == 9);
}

TEST_CASE("model arithmetic matches group arithmetic") {
  auto t = RootTable::generate(CoxeterSystem::type_a(3), 10);
  FiniteModel m = FiniteModel::build(t);
  for (int i = 0; i < m.size(); ++i) {
    CHECK(m.element(m.inverse(i)) == m.element(i).inverse());
    for (int j = 0; j < m.size(); ++j) {
      CHECK(m.element(m.mult(i, j)) == m.element(i) * m.element(j));
    }
    for (int r = 0; r < t.size(); ++r) {
      CHECK(m.act(i, r) == t.apply(m.element(i), r));
    }
  }
}

TEST_CASE("mask order is the weak order") {
  auto t = RootTable::generate(CoxeterSystem::type_a(3), 10);
  FiniteModel m = FiniteModel::build(t);
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      CHECK(m.weak_le(i, j) ==
            coxlat::weak_le(m.element(i), m.element(j)));
    }
  }
}

TEST_CASE("brute-force join and meet on a small lattice") {
  auto t = RootTable::generate(CoxeterSystem::type_a(2), 10);
  FiniteModel m = FiniteModel::build(t);
  int s0 = m.index_of(GroupElement::from_word(t.system(), {0}));
  int s1 = m.index_of(GroupElement::from_word(t.system(), {1}));
  int e = m.index_of(GroupElement::identity(t.system()));
  CHECK(m.oracle_join(s0, s1) == m.longest());
  CHECK(m.oracle_meet(s0, s1) == e);
  for (int i = 0; i < m.size(); ++i) {
    CHECK(m.oracle_join(i, i) == i);
    CHECK(m.oracle_meet(i, i) == i);
    CHECK(m.oracle_join(i, e) == i);
    CHECK(m.oracle_meet(i, m.longest()) == i);
  }
}
