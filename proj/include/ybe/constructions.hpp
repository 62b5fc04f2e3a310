#pragma once

/** @file constructions.hpp
 *  @brief Builders for simple solutions: cyclic extensions of abelian and
 *  non-abelian groups, the prime-power Byott family, Lyubashenko solutions
 *  and a registry of named examples.
 */

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/fp_matrix.hpp"
#include "ybe/solution.hpp"
#include "ybe/table_group.hpp"

namespace ybe {

struct HypothesisCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct HypothesisLedger {
  std::vector<HypothesisCheck> checks;
  void record(std::string name, bool passed, std::string detail = {});
  bool all_passed() const;
  const HypothesisCheck* find(const std::string& name) const;
  std::string to_string() const;
};

class HypothesisFailure : public InvalidInput {
 public:
  explicit HypothesisFailure(HypothesisLedger l);
  const HypothesisLedger& ledger() const { return ledger_; }

 private:
  HypothesisLedger ledger_;
};

/// A brace B with (B, +) = V + <x>, |B / V| = k, and lambda(v + ix) =
/// A'v + u0 - A^i u0 + ix. Element v + ix has carrier index i |V| + v.
struct CyclicBrace {
  SkewBrace brace;
  PowerGroup v;
  std::size_t k = 0;
  Perm a, a2;        // conjugation by x on V, and lambda restricted to V
  Elem u0 = 0;
  Elem kx = 0;       // k x, an element of V
  std::vector<Elem> x;       // conjugacy class of x, sorted
  FinSolution solution;      // r_B restricted to x
  FinSolution formula;       // the closed formula on the same points
  HypothesisLedger ledger;
  std::optional<bool> solution_simple_bruteforce;  // run when |X| <= 64

  Elem embed(Elem vv, std::size_t i) const { return static_cast<Elem>(i * v.order() + vv); }
  Elem generator() const { return embed(0, 1); }
};

struct Coro1Data {
  std::size_t p = 0, n = 0, k = 0;
  FpMatrix a, a2;
  FpVec u0;
};

// Every hypothesis is evaluated and recorded, whether or not others fail.
HypothesisLedger coro1_hypotheses(const Coro1Data& d);
CyclicBrace coro1_build(const Coro1Data& d);  // throws HypothesisFailure

struct Coro2Data {
  PowerGroup v;
  std::size_t m = 0;  // order of the acting cyclic group
  Perm a, a2;         // automorphisms of V as carrier permutations
  Elem u0 = 0;
};

HypothesisLedger coro2_hypotheses(const Coro2Data& d);
CyclicBrace coro2_build(const Coro2Data& d);  // throws HypothesisFailure

// Whether there is a group isomorphism f: V -> V~ and a generator x~ of B~
// over V~ matching k x, u0, A and A' as in the isomorphism criterion.
bool iso_criterion(const CyclicBrace& b1, const CyclicBrace& b2);

struct ByottBrace {
  std::size_t p = 0, q = 0;
  FpMatrix m;  // order q with J M J^{-1} = M^p
  SkewBrace brace;
  std::vector<Elem> x;  // elements whose additive order is not a power of p
  FinSolution solution;
  bool brace_simple = false;
  std::optional<bool> solution_simple_bruteforce;  // run when |X| <= 64
};

ByottBrace byott_build(std::size_t p, std::size_t q);

// r(x, y) = (y + a, x + b) on Z_n.
FinSolution lyubashenko_build(std::size_t n, long long a, long long b);

/// A permutation group with its table and element labels.
struct NamedGroup {
  std::string name;
  std::size_t degree = 0;
  TableGroup group;
  std::vector<Perm> labels;
  std::unordered_map<Perm, Elem, PermHash> index;

  Elem find(const Perm& p) const;
  Elem conj(const Perm& c, Elem s) const;  // c s c^{-1}, c in the ambient Sym
};

// "S3".."S5", "A4".."A6", "D<2m>", "C<n>", "PSL27".
NamedGroup named_group(const std::string& name);

// Automorphism of S^n: new coordinate i is conj[i] . s_{source[i]} . conj[i]^{-1}.
Perm power_automorphism(const PowerGroup& v, const NamedGroup& s, const std::vector<std::size_t>& source,
                        const std::vector<Perm>& conj);

struct Example {
  std::string name;
  SkewBrace brace;
  std::vector<Elem> x;
  FinSolution solution;
  std::optional<CyclicBrace> cyclic;
  std::string provenance;
};

// conj_quandle: group name and representative in cycle notation.
Example conj_quandle(const std::string& group, const std::string& rep);
Example dihedral_example(std::size_t p);
Example ex_ab(std::size_t p, std::size_t n);
Example field_example(std::size_t p, std::size_t n);
Example sym_n(std::size_t n);
Example an_pr(std::size_t m, std::size_t copies);
Example ex1(const std::string& group, std::size_t copies);

// Dispatch by name with integer parameters (see README for the list).
Example example_registry(const std::string& name, const std::vector<std::string>& args);
std::vector<std::string> example_names();

// A matrix of order p^n - 1: companion matrix of the first primitive
// polynomial in lexicographic order.
FpMatrix primitive_companion(std::size_t p, std::size_t n);
// (s_1..s_n) -> (s_n, -s_1, s_2, ..., s_{n-1})
FpMatrix rotation_matrix(std::size_t p, std::size_t n);

}  // namespace ybe
