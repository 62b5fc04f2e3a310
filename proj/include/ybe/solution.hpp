#pragma once

/** @file solution.hpp
 *  @brief Finite non-degenerate set-theoretic solutions of the Yang-Baxter
 *  equation, r(x, y) = (lambda_x(y), rho_y(x)).
 */

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ybe/error.hpp"
#include "ybe/perm.hpp"

namespace ybe {

/// Why a pair of tables fails to be a non-degenerate solution.
struct SolutionDefect {
  enum class Kind { Shape, LambdaNotBijective, RhoNotBijective, Braid };
  Kind kind = Kind::Shape;
  std::array<Elem, 3> witness{};  // row index, or the triple (x, y, z)
  std::string message;
};

class InvalidSolution : public InvalidInput {
 public:
  explicit InvalidSolution(SolutionDefect d) : InvalidInput(d.message), defect_(std::move(d)) {}
  const SolutionDefect& defect() const { return defect_; }

 private:
  SolutionDefect defect_;
};

// lam[x][y] = lambda_x(y), rho[y][x] = rho_y(x).
using Table = std::vector<std::vector<Elem>>;

std::optional<SolutionDefect> check_solution(const Table& lam, const Table& rho);

class FinSolution {
 public:
  FinSolution() = default;
  // Validates both tables and the braid relation; throws InvalidSolution.
  FinSolution(const Table& lam, const Table& rho);

  std::size_t size() const { return n_; }
  Elem lambda(Elem x, Elem y) const { return lam_[static_cast<std::size_t>(x) * n_ + y]; }
  Elem rho(Elem y, Elem x) const { return rho_[static_cast<std::size_t>(y) * n_ + x]; }
  Elem lambda_inv(Elem x, Elem y) const { return lam_inv_[static_cast<std::size_t>(x) * n_ + y]; }
  Elem rho_inv(Elem y, Elem x) const { return rho_inv_[static_cast<std::size_t>(y) * n_ + x]; }
  Perm lambda_perm(Elem x) const;
  Perm rho_perm(Elem y) const;
  Table lambda_table() const;
  Table rho_table() const;

  friend bool operator==(const FinSolution& a, const FinSolution& b) {
    return a.n_ == b.n_ && a.lam_ == b.lam_ && a.rho_ == b.rho_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Elem> lam_, rho_, lam_inv_, rho_inv_;
};

// r'(x, y) = (y, sigma_y(x)) with sigma_y(x) = lambda_y(rho_{lambda_x^{-1}(y)}(x)).
FinSolution derived_solution(const FinSolution& s);
// sigma_y as a table: sigma[y][x].
Table sigma_table(const FinSolution& s);
// q(x) = lambda_x^{-1}(x); always a permutation for finite solutions.
Perm diagonal_map(const FinSolution& s);
// First b with sigma_b != lambda_b q rho_b q^{-1}, if any.
std::optional<Elem> sigma_factorization_defect(const FinSolution& s);

struct SolutionProfile {
  bool involutive = false;
  bool derived_form = false;  // every lambda_x is the identity
  bool twisted_rack = false;  // all lambda_x coincide
  bool quandle = false;
  bool lyubashenko = false;   // all lambda_x coincide and all rho_y coincide
  bool indecomposable = false;
  bool irretractable = false;
  bool injective_hint = false;
  std::size_t orbit_count = 0;
  std::size_t retraction_size = 0;
};

SolutionProfile profile(const FinSolution& s);

// Points with equal (lambda_x, rho_x) are identified.
Partition retraction_partition(const FinSolution& s);
FinSolution retraction(const FinSolution& s);

// Smallest congruence containing (x, y).
Partition congruence_closure(const FinSolution& s, Elem x, Elem y);
bool is_congruence(const FinSolution& s, const Partition& p, std::array<Elem, 2>* witness = nullptr);
FinSolution quotient_solution(const FinSolution& s, const Partition& p);

struct SimplicityReport {
  bool simple = false;
  bool small_size_convention = false;  // answer fixed by the |X| <= 2 convention
  std::optional<std::array<Elem, 2>> witness;  // a pair with a proper closure
};

SimplicityReport simplicity_bruteforce(const FinSolution& s);
bool is_simple_bruteforce(const FinSolution& s);

inline constexpr std::size_t kSolutionIsoCap = 32;

// Point map phi with phi(lambda_x(y)) = lambda'_{phi x}(phi y) and the same
// for rho. Throws CapExceeded above size 32.
std::optional<Perm> are_isomorphic(const FinSolution& s, const FinSolution& t);

struct LyubashenkoClass {
  bool is_lyubashenko = false;
  bool is_simple = false;
  std::optional<std::size_t> prime;
  std::string reason;
};

LyubashenkoClass classify_lyubashenko(const FinSolution& s);
// r(x, y) = (f(y), g(x)) with commuting permutations f, g.
FinSolution lyubashenko_solution(const Perm& f, const Perm& g);

// Prime-order affine families on Z_p (1, 2 use a, b, c; 3 uses c1, c2).
struct AffineParams {
  std::size_t p = 0;
  int family = 1;
  long long a = 0, b = 0, c = 0, c1 = 0, c2 = 0;
};

FinSolution affine_prime_solution(const AffineParams& prm);

// Disjoint union with no interaction, and direct product, both standard.
FinSolution direct_product(const FinSolution& s, const FinSolution& t);
FinSolution disjoint_union(const FinSolution& s, const FinSolution& t);

bool is_prime(std::size_t n);

}  // namespace ybe
