#pragma once

/** @file brace.hpp
 *  @brief Finite skew left braces (B, +, o), their ideals and the solutions
 *  they produce.
 */

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ybe/perm.hpp"
#include "ybe/solution.hpp"
#include "ybe/table_group.hpp"

namespace ybe {

/// Operations of a brace too large to tabulate. Element 0 is the common
/// identity of both groups.
class BraceOps {
 public:
  virtual ~BraceOps() = default;
  virtual std::size_t order() const = 0;
  virtual Elem add(Elem a, Elem b) const = 0;
  virtual Elem neg(Elem a) const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual Elem inv(Elem a) const = 0;
};

// Braces up to this order are stored as tables.
inline constexpr std::size_t kBraceTableLimit = 512;

struct BraceDefect {
  std::array<Elem, 3> witness{};
  std::string message;
};

class SkewBrace {
 public:
  SkewBrace() = default;

  // Validates both groups (identity 0 in each) and the compatibility
  // a o (b + c) = a o b - a + a o c. Throws InvalidInput with a witness.
  static SkewBrace from_tables(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul,
                               bool trusted = false);
  // A structured carrier; the axioms are not checked here (see sampled_check).
  static SkewBrace structured(std::shared_ptr<const BraceOps> ops);

  std::size_t order() const { return n_; }
  bool tabled() const { return ops_ == nullptr; }

  Elem add(Elem a, Elem b) const { return ops_ ? ops_->add(a, b) : add_.op(a, b); }
  Elem neg(Elem a) const { return ops_ ? ops_->neg(a) : add_.inv(a); }
  Elem mul(Elem a, Elem b) const { return ops_ ? ops_->mul(a, b) : mul_.op(a, b); }
  Elem inv(Elem a) const { return ops_ ? ops_->inv(a) : mul_.inv(a); }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  // lambda_a(b) = -a + a o b
  Elem lam(Elem a, Elem b) const { return ops_ ? add(neg(a), mul(a, b)) : lam_[idx(a, b)]; }
  // sigma_b(a) = -b + a + b
  Elem sig(Elem b, Elem a) const { return ops_ ? add(add(neg(b), a), b) : sig_[idx(b, a)]; }
  // a * b = lambda_a(b) - b
  Elem star(Elem a, Elem b) const { return ops_ ? sub(lam(a, b), b) : star_[idx(a, b)]; }

  const TableGroup& additive() const;
  const TableGroup& multiplicative() const;
  const std::vector<Elem>& add_generators() const { return add_gens_; }
  const std::vector<Elem>& mul_generators() const { return mul_gens_; }

  std::size_t add_order(Elem a) const;

 private:
  std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * n_ + b; }
  void init_generators();

  std::size_t n_ = 0;
  std::shared_ptr<const BraceOps> ops_;
  TableGroup add_, mul_;
  std::vector<Elem> lam_, sig_, star_;
  std::vector<Elem> add_gens_, mul_gens_;
};

std::optional<BraceDefect> check_brace(std::size_t n, const std::vector<Elem>& add,
                                       const std::vector<Elem>& mul);

// Random triples checked against both associativity laws and compatibility.
std::optional<BraceDefect> sampled_check(const SkewBrace& b, std::size_t samples, std::uint64_t seed);

SkewBrace trivial_brace(const TableGroup& g);
// a + b := b.a (the opposite group), a o b := a.b
SkewBrace almost_trivial_brace(const TableGroup& g);

/// A sorted subset of the carrier with a membership mask.
class Subset {
 public:
  Subset() = default;
  Subset(std::size_t n, std::vector<Elem> elems);
  std::size_t size() const { return elems_.size(); }
  const std::vector<Elem>& elements() const { return elems_; }
  bool contains(Elem x) const { return mask_[x] != 0; }
  friend bool operator==(const Subset& a, const Subset& b) { return a.elems_ == b.elems_; }

 private:
  std::vector<Elem> elems_;
  std::vector<char> mask_;
};

using Ideal = Subset;

FinSolution associated_solution(const SkewBrace& b);

bool is_ideal(const SkewBrace& b, const Subset& s);
Ideal ideal_closure(const SkewBrace& b, const std::vector<Elem>& seed);
Subset additive_closure(const SkewBrace& b, const std::vector<Elem>& seed);

struct BraceInvariants {
  Ideal socle;
  Ideal b2;  // additive subgroup generated by all a * b
  Ideal b3;  // additive subgroup generated by all i * b, i in b2
  Subset add_center;
  bool is_trivial = false;
  bool additive_abelian = false;
  bool additive_cyclic = false;
};

BraceInvariants brace_invariants(const SkewBrace& b);

// The nonzero ideal contained in every nonzero ideal, if there is one.
std::optional<Ideal> smallest_nonzero_ideal(const SkewBrace& b);
// True when i is nonzero and every ideal_closure({b}), b != 0, contains it.
bool is_smallest_nonzero_ideal(const SkewBrace& b, const Ideal& i);

struct BraceQuotient {
  SkewBrace brace;
  std::vector<Elem> projection;
  std::vector<Elem> reps;
};

BraceQuotient quotient_brace(const SkewBrace& b, const Ideal& i);

struct InvarianceDefect {
  Elem a = 0, x = 0;
  std::string map;  // "lambda" or "sigma"
};

std::optional<InvarianceDefect> check_invariant_subset(const SkewBrace& b, const std::vector<Elem>& x);
// r_B restricted to X; points indexed by the sorted order of X.
FinSolution restricted_solution(const SkewBrace& b, std::vector<Elem> x);

/// The permutation brace of a solution: pairs g_a = (sigma_a^{-1}, lambda_a).
struct PermutationBrace {
  SkewBrace brace;
  std::vector<Elem> point;        // carrier index of g_x for each point x
  std::vector<Perm> sigma_inv;    // first component of each element
  std::vector<Perm> lambda;       // second component of each element
};

inline constexpr std::size_t kPermutationBraceLimit = 4096;

PermutationBrace permutation_brace(const FinSolution& s, std::size_t cap = default_element_cap());

struct SimpleNLReport {
  bool applies = false;  // false for Lyubashenko solutions
  bool irretractable = false;
  bool d_is_min_ideal = false;
  bool dd_transitive = false;
  bool verdict = false;
  std::size_t brace_order = 0;
  std::size_t d_size = 0;
  std::string note;
};

SimpleNLReport simpleNL_check(const FinSolution& s);

struct SimpleGENReport {
  bool generates = false;
  bool v_is_min_ideal = false;
  bool v_transitive_on_x = false;
  bool verdict = false;
  std::size_t v_size = 0;
};

SimpleGENReport simpleGEN_check(const SkewBrace& b, const std::vector<Elem>& x);

// Additive and multiplicative isomorphism; capped at order 400.
std::optional<std::vector<Elem>> brace_isomorphic(const SkewBrace& a, const SkewBrace& b);

}  // namespace ybe
