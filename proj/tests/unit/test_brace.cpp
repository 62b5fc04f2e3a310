#include <algorithm>
#include <numeric>
#include <random>

#include "../oracles.hpp"
#include "doctest.h"
#include "ybe/brace.hpp"
#include "ybe/constructions.hpp"

using namespace ybe;

namespace {

CyclicBrace small_cyclic() {
  return coro1_build({3, 1, 2, FpMatrix::scalar(3, 1, -1), FpMatrix::scalar(3, 1, -1), FpVec{0}});
}

std::function<Elem(Elem, Elem)> adder(const SkewBrace& b) {
  return [&b](Elem x, Elem y) { return b.add(x, y); };
}
std::function<Elem(Elem, Elem)> multiplier(const SkewBrace& b) {
  return [&b](Elem x, Elem y) { return b.mul(x, y); };
}

SkewBrace relabel(const SkewBrace& b, const std::vector<Elem>& phi) {
  const std::size_t n = b.order();
  std::vector<Elem> add(n * n), mul(n * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      add[phi[x] * n + phi[y]] = phi[b.add(x, y)];
      mul[phi[x] * n + phi[y]] = phi[b.mul(x, y)];
    }
  return SkewBrace::from_tables(n, add, mul);
}

// Ideal by definition: normal additive subgroup, lambda-invariant, and a o I = a + I.
bool ideal_oracle(const SkewBrace& b, const std::vector<Elem>& s) {
  std::vector<char> in(b.order(), 0);
  for (Elem e : s) in[e] = 1;
  if (!in[0]) return false;
  for (Elem a : s)
    for (Elem c : s)
      if (!in[b.add(a, b.neg(c))]) return false;
  for (Elem a = 0; a < b.order(); ++a)
    for (Elem i : s) {
      if (!in[b.add(b.add(a, i), b.neg(a))]) return false;
      if (!in[b.lam(a, i)]) return false;
      if (!in[b.add(b.neg(a), b.mul(a, i))]) return false;
      if (!in[b.mul(b.mul(a, i), b.inv(a))]) return false;
    }
  return true;
}

}  // namespace

TEST_SUITE("brace") {
  TEST_CASE("trivial braces") {
    const TableGroup s3 = named_group("S3").group;
    const SkewBrace t = trivial_brace(s3);
    for (Elem a = 0; a < 6; ++a)
      for (Elem c = 0; c < 6; ++c) {
        CHECK(t.lam(a, c) == c);
        CHECK(t.star(a, c) == 0);
      }
    CHECK(oracle::brace_axioms(6, adder(t), multiplier(t)));
  }

  TEST_CASE("validation rejects a corrupted table") {
    std::vector<Elem> add = TableGroup::cyclic(3).table(), mul = add;
    std::swap(mul[4], mul[5]);
    CHECK_THROWS_AS(SkewBrace::from_tables(3, add, mul), InvalidInput);
    CHECK(check_brace(3, add, mul).has_value());
    const ByottBrace by = byott_build(2, 3);
    std::vector<Elem> a12(144), m12(144);
    for (Elem x = 0; x < 12; ++x)
      for (Elem y = 0; y < 12; ++y) {
        a12[x * 12 + y] = by.brace.add(x, y);
        m12[x * 12 + y] = by.brace.mul(x, y);
      }
    CHECK_FALSE(check_brace(12, a12, m12).has_value());
    CHECK(oracle::brace_axioms(12, adder(by.brace), multiplier(by.brace)));
  }

  TEST_CASE("associated solutions of trivial and almost trivial braces") {
    const TableGroup g = named_group("S3").group;
    const FinSolution t = associated_solution(trivial_brace(g));
    const FinSolution a = associated_solution(almost_trivial_brace(g));
    for (Elem x = 0; x < 6; ++x)
      for (Elem y = 0; y < 6; ++y) {
        // r(a, b) = (b, b^{-1} a b)
        CHECK(t.lambda(x, y) == y);
        CHECK(t.rho(y, x) == g.op(g.op(g.inv(y), x), y));
        // r(a, b) = (a b a^{-1}, a)
        CHECK(a.lambda(x, y) == g.op(g.op(x, y), g.inv(x)));
        CHECK(a.rho(y, x) == x);
      }
  }

  TEST_CASE("restriction of the smallest abelian construction") {
    const CyclicBrace c = small_cyclic();
    CHECK(c.brace.order() == 6);
    CHECK(c.x == std::vector<Elem>{3, 4, 5});
    CHECK(restricted_solution(c.brace, c.x) == c.formula);
    CHECK(is_simple_bruteforce(c.solution));
    CHECK(check_invariant_subset(c.brace, {3}).has_value());
    CHECK_THROWS_AS(restricted_solution(c.brace, {3}), InvalidInput);
  }

  TEST_CASE("restriction to transpositions of Sym(5)") {
    const NamedGroup s5 = named_group("S5");
    const SkewBrace t = trivial_brace(s5.group);
    const Elem tr = s5.find(Perm::from_cycles(5, "(1 2)"));
    std::vector<Elem> x = conjugacy_class(s5.group, tr);
    CHECK(x.size() == 10);
    const FinSolution r = restricted_solution(t, x);
    CHECK(r.size() == 10);
    CHECK(profile(r).quandle);
  }

  TEST_CASE("ideal closure") {
    const NamedGroup s3 = named_group("S3");
    const SkewBrace t = trivial_brace(s3.group);
    const Elem c3 = s3.find(Perm::from_cycles(3, "(1 2 3)"));
    const Ideal i = ideal_closure(t, {c3});
    CHECK(i.size() == 3);
    CHECK(is_normal_subgroup(s3.group, i.elements()));
    const CyclicBrace c = small_cyclic();
    CHECK(ideal_closure(c.brace, {1}).elements() == std::vector<Elem>{0, 1, 2});
    CHECK(ideal_closure(c.brace, {0}).size() == 1);
  }

  TEST_CASE("ideal recognition against the definition") {
    std::vector<SkewBrace> braces{small_cyclic().brace, trivial_brace(named_group("S3").group),
                                  trivial_brace(TableGroup::cyclic(6)), byott_build(2, 3).brace,
                                  almost_trivial_brace(named_group("D8").group)};
    for (const SkewBrace& b : braces) {
      const std::size_t n = b.order();
      // Every subset of size dividing n that is an additive subgroup.
      for (Elem a = 0; a < n; ++a)
        for (Elem c = a; c < n; ++c) {
          const Subset s = additive_closure(b, {a, c});
          CHECK(is_ideal(b, s) == ideal_oracle(b, s.elements()));
          const Ideal cl = ideal_closure(b, {a, c});
          CHECK(ideal_oracle(b, cl.elements()));
        }
    }
  }

  TEST_CASE("brace invariants") {
    const SkewBrace tc = trivial_brace(TableGroup::cyclic(4));
    const BraceInvariants ti = brace_invariants(tc);
    CHECK(ti.socle.size() == 4);
    CHECK(ti.b2.size() == 1);
    CHECK(ti.is_trivial);
    const CyclicBrace c = small_cyclic();
    const BraceInvariants ci = brace_invariants(c.brace);
    CHECK(ci.socle.size() == 1);
    CHECK(ci.b2.elements() == std::vector<Elem>{0, 1, 2});
    CHECK(ci.b3.size() == 1);
    CHECK(brace_invariants(byott_build(2, 3).brace).b2.size() == 12);
  }

  TEST_CASE("smallest nonzero ideal") {
    const CyclicBrace c = small_cyclic();
    const auto v = smallest_nonzero_ideal(c.brace);
    REQUIRE(v.has_value());
    CHECK(v->size() == 3);
    CHECK(is_smallest_nonzero_ideal(c.brace, *v));
    CHECK_FALSE(smallest_nonzero_ideal(trivial_brace(TableGroup::cyclic(6))).has_value());
    const auto s = smallest_nonzero_ideal(trivial_brace(named_group("S3").group));
    REQUIRE(s.has_value());
    CHECK(s->size() == 3);
  }

  TEST_CASE("quotient braces") {
    const CyclicBrace c = small_cyclic();
    const BraceQuotient q = quotient_brace(c.brace, Ideal(6, {0, 1, 2}));
    CHECK(q.brace.order() == 2);
    CHECK(brace_invariants(q.brace).is_trivial);
    CHECK(brace_invariants(q.brace).additive_cyclic);
    CHECK(quotient_brace(c.brace, Ideal(6, {0})).brace.order() == 6);
    CHECK(brace_isomorphic(quotient_brace(c.brace, Ideal(6, {0})).brace, c.brace).has_value());
    std::vector<Elem> all(6);
    std::iota(all.begin(), all.end(), Elem{0});
    CHECK(quotient_brace(c.brace, Ideal(6, all)).brace.order() == 1);
  }

  TEST_CASE("permutation brace") {
    const FinSolution q = conj_quandle("S3", "(1 2)").solution;
    const PermutationBrace pb = permutation_brace(q);
    CHECK(pb.brace.order() == 6);
    CHECK(brace_invariants(pb.brace).is_trivial);
    CHECK_FALSE(brace_invariants(pb.brace).additive_abelian);
    const PermutationBrace l = permutation_brace(lyubashenko_build(3, 1, 0));
    CHECK(l.brace.order() == 3);
    CHECK(brace_invariants(l.brace).is_trivial);
    CHECK(brace_invariants(l.brace).additive_cyclic);
    const CyclicBrace c = small_cyclic();
    const PermutationBrace cb = permutation_brace(c.solution);
    const auto f = brace_isomorphic(c.brace, cb.brace);
    REQUIRE(f.has_value());
    CHECK(oracle::is_brace_iso(6, *f, adder(c.brace), multiplier(c.brace), adder(cb.brace), multiplier(cb.brace)));
  }

  TEST_CASE("simpleNL") {
    const SimpleNLReport q = simpleNL_check(conj_quandle("S3", "(1 2)").solution);
    CHECK(q.applies);
    CHECK(q.irretractable);
    CHECK(q.d_is_min_ideal);
    CHECK(q.dd_transitive);
    CHECK(q.verdict);
    CHECK_FALSE(simpleNL_check(lyubashenko_build(3, 1, 0)).applies);
    const SimpleNLReport f = simpleNL_check(lyubashenko_build(3, 0, 0));
    CHECK_FALSE(f.irretractable);
    CHECK_FALSE(f.verdict);
  }

  TEST_CASE("simpleGEN") {
    const CyclicBrace c = small_cyclic();
    CHECK(simpleGEN_check(c.brace, c.x).verdict);
    const NamedGroup s3 = named_group("S3");
    const SkewBrace t = trivial_brace(s3.group);
    const std::vector<Elem> tr = conjugacy_class(s3.group, s3.find(Perm::from_cycles(3, "(1 2)")));
    CHECK(simpleGEN_check(t, tr).verdict);
    const SimpleGENReport c4 = simpleGEN_check(trivial_brace(TableGroup::cyclic(4)), {1, 3});
    CHECK(c4.v_is_min_ideal);
    CHECK(c4.v_size == 2);
    CHECK_FALSE(c4.v_transitive_on_x);
    CHECK_FALSE(c4.verdict);
  }

  TEST_CASE("brace isomorphism") {
    std::mt19937 rng(23);
    for (const SkewBrace& b : {small_cyclic().brace, byott_build(2, 3).brace}) {
      std::vector<Elem> phi(b.order());
      std::iota(phi.begin(), phi.end(), Elem{0});
      std::shuffle(phi.begin() + 1, phi.end(), rng);
      const SkewBrace r = relabel(b, phi);
      const auto f = brace_isomorphic(b, r);
      REQUIRE(f.has_value());
      CHECK(oracle::is_brace_iso(b.order(), *f, adder(b), multiplier(b), adder(r), multiplier(r)));
    }
    CHECK_FALSE(brace_isomorphic(trivial_brace(TableGroup::cyclic(6)), trivial_brace(named_group("S3").group))
                    .has_value());
  }

  TEST_CASE("sampled checks on a structured carrier") {
    const Example e = an_pr(5, 2);
    CHECK_FALSE(e.brace.tabled());
    CHECK(e.brace.order() == 14400);
    CHECK_FALSE(sampled_check(e.brace, 500, 99).has_value());
  }
}
