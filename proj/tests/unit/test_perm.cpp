#include <algorithm>
#include <random>
#include <set>

#include "../oracles.hpp"
#include "doctest.h"
#include "ybe/constructions.hpp"
#include "ybe/error.hpp"
#include "ybe/perm.hpp"
#include "ybe/table_group.hpp"

using namespace ybe;

namespace {

// Orbits by breadth-first search over the generator graphs.
std::vector<std::set<Elem>> bfs_orbits(const std::vector<Perm>& gens, std::size_t n) {
  std::vector<int> comp(n, -1);
  std::vector<std::set<Elem>> out;
  for (Elem s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<Elem> queue{s};
    comp[s] = static_cast<int>(out.size());
    std::set<Elem> orb{s};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const Perm& g : gens)
        for (Elem t : {g[queue[i]], g.inverse()[queue[i]]})
          if (comp[t] < 0) {
            comp[t] = comp[s];
            orb.insert(t);
            queue.push_back(t);
          }
    out.push_back(orb);
  }
  return out;
}

// A non-trivial block system exists among all set partitions.
bool has_block_system(const GenGroup& g) {
  const std::size_t n = g.degree();
  bool found = false;
  oracle::for_each_partition(n, [&](const std::vector<int>& cls) {
    const int blocks = *std::max_element(cls.begin(), cls.end()) + 1;
    if (blocks == 1 || blocks == static_cast<int>(n)) return false;
    for (const Perm& p : g.gens())
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          if (cls[a] == cls[b] && cls[p[a]] != cls[p[b]]) return false;
    found = true;
    return true;
  });
  return found;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_SUITE("perm") {
  TEST_CASE("construction and cycle notation") {
    CHECK_THROWS_AS(Perm({0, 0, 1}), InvalidInput);
    CHECK_THROWS_AS(Perm({0, 3, 1}), InvalidInput);
    const Perm p = Perm::from_cycles(5, "(1 2)(3 4 5)");
    CHECK(p.images() == std::vector<Elem>{1, 0, 3, 4, 2});
    CHECK(p.to_cycles() == "(1 2)(3 4 5)");
    CHECK(Perm::identity(4).to_cycles() == "()");
    CHECK(p.order() == 6);
    CHECK((p * p.inverse()).is_identity());
    CHECK_THROWS_AS(Perm::from_cycles(3, "(1 4)"), InvalidInput);
  }

  TEST_CASE("composition applies the right factor first") {
    const Perm f = Perm::from_cycles(3, "(1 2)");
    const Perm g = Perm::from_cycles(3, "(2 3)");
    // (f * g)(0) = f(g(0)) = f(0) = 1
    CHECK((f * g)[0] == 1);
    CHECK((f * g)[1] == 2);
  }

  TEST_CASE("closure") {
    CHECK(closure({Perm({1, 0, 2}), Perm({0, 2, 1})}, 3).order() == 6);
    CHECK(closure({}, 3).order() == 1);
    CHECK(closure({Perm({1, 2, 3, 0})}, 4).order() == 4);
    CHECK_THROWS_AS(closure({Perm({1, 0, 2, 3, 4}), Perm({1, 2, 3, 4, 0})}, 5, 50), CapExceeded);
  }

  TEST_CASE("closure is a group whose order divides n!") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 3 + trial % 4;
      std::vector<Perm> gens;
      for (int k = 0; k < 1 + trial % 2; ++k) {
        std::vector<Elem> img(n);
        std::iota(img.begin(), img.end(), Elem{0});
        std::shuffle(img.begin(), img.end(), rng);
        gens.emplace_back(img);
      }
      const GenGroup g = closure(gens, n);
      CHECK(factorial(n) % g.order() == 0);
      CHECK(g.contains(Perm::identity(n)));
      for (const Perm& a : g.elements()) {
        CHECK(g.contains(a.inverse()));
        for (const Perm& b : gens) CHECK(g.contains(a * b));
      }
      CHECK(std::is_sorted(g.elements().begin(), g.elements().end()));
    }
  }

  TEST_CASE("orbits") {
    CHECK(orbits({Perm({1, 2, 0})}, 3).is_full());
    CHECK(orbits({}, 3).is_discrete());
    const Partition p = orbits({Perm({1, 0, 2})}, 3);
    CHECK(p.same(0, 1));
    CHECK_FALSE(p.same(0, 2));
  }

  TEST_CASE("orbits match breadth-first search") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 2 + trial % 8;
      std::vector<Perm> gens;
      for (int k = 0; k < trial % 3; ++k) {
        std::vector<Elem> img(n);
        std::iota(img.begin(), img.end(), Elem{0});
        // Only a few transpositions so that orbits stay small.
        std::uniform_int_distribution<Elem> d(0, static_cast<Elem>(n - 1));
        std::swap(img[d(rng)], img[d(rng)]);
        gens.emplace_back(img);
      }
      const Partition p = orbits(gens, n);
      for (const auto& orb : bfs_orbits(gens, n))
        for (Elem a : orb)
          for (Elem b = 0; b < n; ++b) CHECK(p.same(a, b) == (orb.count(b) > 0));
    }
  }

  TEST_CASE("primitivity") {
    CHECK(is_primitive({Perm({1, 2, 3, 4, 0})}, 5).primitive);
    CHECK_FALSE(is_primitive({Perm({1, 2, 3, 0})}, 4).primitive);
    CHECK(is_primitive({Perm({1, 2, 3, 0})}, 4).transitive);
    CHECK(is_primitive({Perm({1, 0, 2}), Perm({0, 2, 1})}, 3).primitive);
    CHECK_FALSE(is_primitive({Perm({1, 0, 2})}, 3).transitive);
  }

  TEST_CASE("primitivity agrees with block enumeration on small degrees") {
    std::vector<std::pair<std::vector<Perm>, std::size_t>> cases = {
        {{Perm::from_cycles(6, "(1 2 3 4 5 6)")}, 6},
        {{Perm::from_cycles(6, "(1 2 3 4 5 6)"), Perm::from_cycles(6, "(2 6)(3 5)")}, 6},
        {{Perm::from_cycles(6, "(1 2 3 4 5 6)"), Perm::from_cycles(6, "(1 2)")}, 6},
        {{Perm::from_cycles(7, "(1 2 3 4 5 6 7)")}, 7},
        {{Perm::from_cycles(8, "(1 2 3 4)(5 6 7 8)"), Perm::from_cycles(8, "(1 5)(2 6)(3 7)(4 8)")}, 8},
        {{Perm::from_cycles(5, "(1 2 3)"), Perm::from_cycles(5, "(3 4 5)")}, 5},
        {{Perm::from_cycles(8, "(1 2 3 4 5 6 7)"), Perm::from_cycles(8, "(1 8)(2 3)(4 7)(5 6)")}, 8},
    };
    for (const auto& [gens, n] : cases) {
      const GenGroup g = closure(gens, n);
      const Primitivity pr = is_primitive(g);
      REQUIRE(pr.transitive);
      CHECK(pr.primitive == !has_block_system(g));
    }
  }

  TEST_CASE("partitions and union-find") {
    const Partition p = Partition::from_labels({7, 3, 7, 3, 9});
    CHECK(p.reps() == std::vector<Elem>{0, 1, 0, 1, 4});
    CHECK(p.class_count() == 3);
    CHECK(p.class_index() == std::vector<Elem>{0, 1, 0, 1, 2});
    UnionFind uf(5);
    CHECK(uf.unite(4, 2));
    CHECK_FALSE(uf.unite(2, 4));
    CHECK(uf.partition().reps() == std::vector<Elem>{0, 1, 2, 3, 2});
    for (Elem i = 0; i < 5; ++i) CHECK(p.rep(p.rep(i)) == p.rep(i));
  }
}

TEST_SUITE("table_group") {
  TEST_CASE("invariants of small groups") {
    const TableGroup s3 = named_group("S3").group;
    const GroupInvariants i = group_invariants(s3);
    CHECK(i.center == std::vector<Elem>{0});
    CHECK(i.commutator.size() == 3);
    CHECK_FALSE(i.is_abelian);
    const GroupInvariants c = group_invariants(TableGroup::cyclic(4));
    CHECK(c.center.size() == 4);
    CHECK(c.commutator == std::vector<Elem>{0});
    CHECK(c.is_cyclic);
  }

  TEST_CASE("semidirect product of F3 by negation") {
    const TableGroup v = TableGroup::cyclic(3);
    const TableGroup d = semidirect_product(v, 2, Perm({0, 2, 1}));
    CHECK(d.order() == 6);
    CHECK_FALSE(group_invariants(d).is_abelian);
    // Centre by a direct table scan.
    std::vector<Elem> z;
    for (Elem a = 0; a < 6; ++a) {
      bool central = true;
      for (Elem b = 0; b < 6; ++b) central = central && d.op(a, b) == d.op(b, a);
      if (central) z.push_back(a);
    }
    CHECK(z == std::vector<Elem>{0});
    CHECK(center(d) == z);
  }

  TEST_CASE("semidirect product of F2^2 by an order-3 automorphism") {
    const PowerGroup v(TableGroup::cyclic(2), 2);
    // (a,b) -> (b, a+b) encoded as a + 2b
    const Perm a({0, 3, 1, 2});
    const TableGroup g = semidirect_product(v.as_table(), 3, a);
    CHECK(g.order() == 12);
    CHECK(center(g) == std::vector<Elem>{0});
    for (Elem x = 0; x < 12; ++x) CHECK(g.element_order(x) != 6);
  }

  TEST_CASE("semidirect product with k = 1 and with trivial action") {
    const TableGroup v = TableGroup::cyclic(5);
    CHECK(semidirect_product(v, 1, Perm::identity(5)).table() == v.table());
    const TableGroup d = semidirect_product(v, 2, Perm::identity(5));
    // V x C2 with index i |V| + v; compare against the direct product table.
    for (Elem a = 0; a < 10; ++a)
      for (Elem b = 0; b < 10; ++b) {
        const Elem expect = static_cast<Elem>(((a / 5 + b / 5) % 2) * 5 + (a % 5 + b % 5) % 5);
        CHECK(d.op(a, b) == expect);
      }
  }

  TEST_CASE("quotients") {
    const TableGroup s3 = named_group("S3").group;
    const Quotient q = quotient_group(s3, commutator_subgroup(s3));
    CHECK(q.group.order() == 2);
    const Quotient same = quotient_group(s3, {0});
    CHECK(find_isomorphism(same.group, s3).has_value());
    const std::vector<Elem> not_normal{0, s3.generators().front()};
    if (!is_normal_subgroup(s3, not_normal)) CHECK_THROWS_AS(quotient_group(s3, not_normal), InvalidInput);
  }

  TEST_CASE("A5 extended by a 4-cycle modulo its centre") {
    const NamedGroup a5 = named_group("A5");
    const Perm c = Perm::from_cycles(5, "(1 2 3 4)");
    std::vector<Elem> img(60);
    for (Elem s = 0; s < 60; ++s) img[s] = a5.conj(c, s);
    const TableGroup d = semidirect_product(a5.group, 4, Perm(img));
    REQUIRE(d.order() == 240);
    // c^2 is even, so (c^{-2}, 2) is central.
    const std::vector<Elem> z = center(d);
    CHECK(z.size() == 2);
    CHECK(quotient_group(d, z).group.order() == 120);
  }

  TEST_CASE("isomorphism search") {
    const TableGroup s3 = named_group("S3").group;
    const TableGroup d6 = named_group("D6").group;
    const auto f = find_isomorphism(s3, d6);
    REQUIRE(f.has_value());
    for (Elem a = 0; a < 6; ++a)
      for (Elem b = 0; b < 6; ++b) CHECK((*f)[s3.op(a, b)] == d6.op((*f)[a], (*f)[b]));
    CHECK_FALSE(find_isomorphism(s3, TableGroup::cyclic(6)).has_value());
  }

  TEST_CASE("table validation") {
    std::vector<Elem> t = TableGroup::cyclic(3).table();
    std::swap(t[4], t[5]);
    CHECK_THROWS_AS(TableGroup::from_table(3, t), InvalidInput);
  }

  TEST_CASE("power groups") {
    const PowerGroup v(named_group("S3").group, 2);
    CHECK(v.order() == 36);
    const Elem a = v.compose({1, 2});
    CHECK(v.component(a, 0) == 1);
    CHECK(v.component(a, 1) == 2);
    CHECK(v.op(a, v.inv(a)) == 0);
    std::vector<Elem> swap(36);
    for (Elem e = 0; e < 36; ++e) swap[e] = v.compose({v.component(e, 1), v.component(e, 0)});
    CHECK(v.is_automorphism(Perm(swap)));
  }

  TEST_CASE("named groups") {
    CHECK(named_group("A5").group.order() == 60);
    CHECK(named_group("S5").group.order() == 120);
    CHECK(named_group("PSL27").group.order() == 168);
    CHECK(named_group("D10").group.order() == 10);
    CHECK(group_invariants(named_group("PSL27").group).commutator.size() == 168);
    CHECK_THROWS_AS(named_group("Q8x"), InvalidInput);
  }
}
