#include <algorithm>
#include <bit>
#include <set>
#include <vector>

#include "coxlat/closure.hpp"
#include "coxlat/coxeter.hpp"
#include "coxlat/dihedral.hpp"
#include "coxlat/errors.hpp"
#include "coxlat/rootsys.hpp"
#include "doctest.h"

using namespace coxlat;

namespace {

// Table indices of the circle positions: positive positions follow the
// reflection order alpha, s_a(gamma), s_a s_g(alpha), ..., gamma, and
// position p+m holds the negative of position p.
std::vector<int> circle_to_table(const DihedralModel& dm, const RootTable& t) {
  const SystemPtr& sys = t.system();
  int m = dm.m();
  std::vector<int> idx(2 * m, -1);
  for (int p = 0; p < m; ++p) {
    std::vector<int> word;
    for (int k = 0; k < p; ++k) word.push_back(k % 2);
    GroupElement g = GroupElement::from_word(sys, word);
    int root = t.simple(p % 2 == 0 ? 0 : 1);
    idx[p] = t.find_or_throw(g.apply(t.coords(root)));
    idx[p + m] = t.negate(idx[p]);
  }
  return idx;
}

}  // namespace

TEST_CASE("dihedral model group law") {
  for (int m : {2, 3, 4, 5, 6, 7}) {
    DihedralModel dm(m);
    int n = dm.element_count();
    REQUIRE(n == 2 * m);
    for (int a = 0; a < n; ++a) {
      CHECK(dm.mult(a, dm.identity()) == a);
      CHECK(dm.mult(dm.identity(), a) == a);
      CHECK(dm.mult(a, dm.inverse(a)) == dm.identity());
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          CHECK(dm.mult(dm.mult(a, b), c) == dm.mult(a, dm.mult(b, c)));
    }
    CHECK(dm.length(dm.longest()) == m);
    CHECK(dm.length(dm.generator(0)) == 1);
    CHECK(dm.length(dm.generator(1)) == 1);
    for (int e = 0; e < n; ++e) {
      std::vector<int> w = dm.word(e);
      CHECK(static_cast<int>(w.size()) == dm.length(e));
      CHECK(dm.from_word(w) == e);
    }
  }
}

TEST_CASE("dihedral inversion masks are prefixes and suffixes") {
  for (int m : {2, 3, 5, 7}) {
    DihedralModel dm(m);
    std::set<uint32_t> masks;
    for (int e = 0; e < dm.element_count(); ++e) {
      uint32_t mask = dm.inversion_mask(e);
      masks.insert(mask);
      CHECK(dm.element_with_inversions(mask) == e);
      // A biclosed mask is a run of low bits or a run of high bits.
      uint32_t full = dm.positive_mask();
      bool prefix = (mask & (mask + 1)) == 0;
      uint32_t rev = full & ~mask;
      bool suffix = (rev & (rev + 1)) == 0;
      CHECK((prefix || suffix));
    }
    CHECK(masks.size() == static_cast<size_t>(2 * m));
    CHECK(dm.element_with_inversions(0b101) == -1);
  }
}

TEST_CASE("dihedral join and meet laws") {
  for (int m : {3, 4, 7}) {
    DihedralModel dm(m);
    int n = dm.element_count();
    for (int a = 0; a < n; ++a) {
      CHECK(dm.join(a, a) == a);
      CHECK(dm.meet(a, a) == a);
      CHECK(dm.join(a, dm.identity()) == a);
      CHECK(dm.meet(a, dm.longest()) == a);
      for (int b = 0; b < n; ++b) {
        int j = dm.join(a, b);
        int w = dm.meet(a, b);
        CHECK(j == dm.join(b, a));
        CHECK(w == dm.meet(b, a));
        CHECK(dm.weak_le(a, j));
        CHECK(dm.weak_le(w, a));
        // Least upper and greatest lower against every element.
        for (int c = 0; c < n; ++c) {
          if (dm.weak_le(a, c) && dm.weak_le(b, c)) CHECK(dm.weak_le(j, c));
          if (dm.weak_le(c, a) && dm.weak_le(c, b)) CHECK(dm.weak_le(c, w));
        }
      }
    }
  }
}

TEST_CASE("dihedral model matches the scalar root systems") {
  for (int m : {2, 3, 4, 5, 6}) {
    CAPTURE(m);
    DihedralModel dm(m);
    auto sys = CoxeterSystem::dihedral(m);
    RootTable t = RootTable::generate(sys, 2 * m + 2);
    REQUIRE(t.complete());
    std::vector<int> idx = circle_to_table(dm, t);

    std::set<int> seen(idx.begin(), idx.end());
    REQUIRE(seen.size() == idx.size());
    REQUIRE(t.size() == m);
    for (int p = 0; p < 2 * m; ++p) {
      CHECK(RootTable::positive_index(idx[p]) == dm.positive(p));
      CHECK(idx[dm.negate(p)] == RootTable::negate(idx[p]));
    }

    // Actions and inversion sets agree element by element.
    for (int e = 0; e < dm.element_count(); ++e) {
      GroupElement g = GroupElement::from_word(sys, dm.word(e));
      CHECK(g.length() == dm.length(e));
      for (int p = 0; p < 2 * m; ++p)
        CHECK(t.apply(g, idx[p]) == idx[dm.act(e, p)]);
      RootSet inv = inversion_set(t, g);
      uint32_t mask = 0;
      for (int p = 0; p < m; ++p)
        if (inv.contains(idx[p])) mask |= 1u << p;
      CHECK(mask == dm.inversion_mask(e));
    }

    // Closure agrees on every subset of the circle.
    RootSet everything(t);
    for (int r = 0; r < t.size(); ++r) {
      everything.insert(r);
      everything.insert(RootTable::negate(r));
    }
    for (uint32_t sub = 0; sub < (1u << (2 * m)); ++sub) {
      RootSet gamma(t);
      for (int p = 0; p < 2 * m; ++p)
        if (sub & (1u << p)) gamma.insert(idx[p]);
      ClosureResult res = closure(t, ClosureKind::two, gamma, everything);
      REQUIRE_FALSE(res.is_infinite());
      uint32_t got = 0;
      for (int p = 0; p < 2 * m; ++p)
        if (res.set().contains(idx[p])) got |= 1u << p;
      CHECK(got == dm.closure(sub));
    }
  }
}

TEST_CASE("dihedral stable pairs match the table relation") {
  for (int m : {2, 3, 4, 5, 6}) {
    CAPTURE(m);
    DihedralModel dm(m);
    auto sys = CoxeterSystem::dihedral(m);
    RootTable t = RootTable::generate(sys, 2 * m + 2);
    std::vector<GroupElement> elts;
    for (int e = 0; e < dm.element_count(); ++e)
      elts.push_back(GroupElement::from_word(sys, dm.word(e)));
    // Ground truth for the relation, straight from the table action.
    auto related = [&](int x, int z) {
      RootSet phi = inversion_set(t, elts[x]);
      RootSet image(t);
      for (int r : phi.indices()) image.insert(t.apply(elts[z], r));
      return image == phi;
    };
    DihedralGaloisCensus census = dihedral_stable_pairs(dm);
    for (auto& [group, star] : census.pairs) {
      for (int z : group)
        for (int x : star) CHECK(related(x, z));
      // Stability: nothing outside star relates to all of group.
      for (int x = 0; x < dm.element_count(); ++x) {
        bool all = true;
        for (int z : group) all = all && related(x, z);
        CHECK(all == std::binary_search(star.begin(), star.end(), x));
      }
    }
  }
}

TEST_CASE("dihedral golden censuses") {
  for (int m : {3, 4, 5, 6, 7}) {
    CAPTURE(m);
    DihedralModel dm(m);

    auto chains = dm.weak_order_maximal_chains();
    REQUIRE(chains.size() == 2);
    for (auto& ch : chains) CHECK(static_cast<int>(ch.size()) == m + 1);
    CHECK(chains[0].front() == dm.identity());
    CHECK(chains[0].back() == dm.longest());

    DihedralGaloisCensus galois = dihedral_stable_pairs(dm);
    size_t expected = m % 2 == 1 ? m + 1 : m + 2;
    CHECK(galois.pairs.size() == expected);
    int singles = 0;
    for (auto& [group, star] : galois.pairs) {
      if (group.size() == 1) {
        CHECK(star.size() == static_cast<size_t>(2 * m));
      } else if (group.size() == static_cast<size_t>(2 * m)) {
        CHECK(star == std::vector<int>{dm.identity()});
      } else {
        // Middle pairs: a reflection other than the longest element,
        // paired with that reflection times the longest element.
        REQUIRE(group.size() == 2);
        int r = group[0] == dm.identity() ? group[1] : group[0];
        CHECK(dm.is_reflection(r));
        CHECK(r != dm.longest());
        std::vector<int> want{dm.identity(), dm.mult(r, dm.longest())};
        std::sort(want.begin(), want.end());
        CHECK(star == want);
        ++singles;
      }
    }
    CHECK(singles == static_cast<int>(expected) - 2);

    DihedralPosetCensus weak = dihedral_parabolic_census(dm, 0);
    CHECK(weak.elements.size() == static_cast<size_t>(2 * m));
    CHECK(weak.chain_lengths == std::vector<int>{m, m});

    DihedralPosetCensus rank1 = dihedral_parabolic_census(dm, 1);
    CHECK(rank1.elements.size() == static_cast<size_t>(2 * m + 4));
    std::vector<int> want{3, 3, 3, 3, m + 1, m + 1};
    CHECK(rank1.chain_lengths == want);

    DihedralPosetCensus full = dihedral_parabolic_census(dm, 2);
    CHECK(full.elements.size() == static_cast<size_t>(6 * m + 2));
    CHECK(full.chain_lengths.size() == static_cast<size_t>(8 * m));
    for (int len : full.chain_lengths) CHECK(len == 4);
  }
}
