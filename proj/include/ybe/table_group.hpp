#pragma once

/** @file table_group.hpp
 *  @brief Finite groups given by multiplication tables, direct powers and
 *  the group-level operations built on them.
 */

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ybe/perm.hpp"

namespace ybe {

/// A finite group on {0, ..., n-1} with identity 0, stored as a full table.
class TableGroup {
 public:
  TableGroup() = default;

  // table[a * n + b] = a.b. The identity is relabelled to 0 if needed.
  // Associativity is checked when n <= 512 or when `trusted` is false.
  static TableGroup from_table(std::size_t n, std::vector<Elem> table, bool trusted = false);
  // Group of the given permutations under composition; the identity goes to
  // index 0, the others keep their relative order.
  static TableGroup from_perms(std::vector<Perm> elems, std::vector<Perm>* labels = nullptr);
  static TableGroup cyclic(std::size_t n);

  std::size_t order() const { return n_; }
  Elem op(Elem a, Elem b) const { return t_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  const std::vector<Elem>& table() const { return t_; }

  Elem pow(Elem a, long long e) const;
  std::size_t element_order(Elem a) const;
  // Left multiplication by a as a permutation of the carrier.
  Perm left_mult(Elem a) const;
  const std::vector<Elem>& generators() const { return gens_; }

 private:
  std::size_t n_ = 0;
  std::vector<Elem> t_;
  std::vector<Elem> inv_;
  std::vector<Elem> gens_;
};

/// S x ... x S (copies factors); element (s_0, ..., s_{c-1}) is encoded as
/// sum s_i |S|^i.
class PowerGroup {
 public:
  PowerGroup() = default;
  PowerGroup(TableGroup base, std::size_t copies);

  std::size_t order() const { return order_; }
  std::size_t copies() const { return copies_; }
  const TableGroup& base() const { return base_; }

  Elem op(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem component(Elem a, std::size_t i) const;
  Elem compose(const std::vector<Elem>& parts) const;
  const std::vector<Elem>& generators() const { return gens_; }
  // Checks that a permutation of the carrier is a group automorphism.
  bool is_automorphism(const Perm& f) const;
  TableGroup as_table() const;

 private:
  TableGroup base_;
  std::size_t copies_ = 0;
  std::size_t order_ = 0;
  std::vector<Elem> gens_;
};

struct GroupInvariants {
  std::vector<Elem> center;
  std::vector<Elem> commutator;
  bool is_abelian = false;
  bool is_cyclic = false;
};

GroupInvariants group_invariants(const TableGroup& g);
std::vector<Elem> center(const TableGroup& g);
std::vector<Elem> commutator_subgroup(const TableGroup& g);
std::vector<Elem> conjugacy_class(const TableGroup& g, Elem a);
std::vector<Elem> subgroup_generated(const TableGroup& g, const std::vector<Elem>& gens);
std::vector<Elem> normal_closure(const TableGroup& g, const std::vector<Elem>& gens);
bool is_subgroup(const TableGroup& g, const std::vector<Elem>& subset);
bool is_normal_subgroup(const TableGroup& g, const std::vector<Elem>& subset);

// V x| C_k with (v,i)(w,j) = (v A^i(w), i+j mod k); element (v,i) has index
// i |V| + v. A must be an automorphism of V with A^k = 1.
TableGroup semidirect_product(const TableGroup& v, std::size_t k, const Perm& a);

struct Quotient {
  TableGroup group;
  std::vector<Elem> projection;  // carrier -> coset index
  std::vector<Elem> reps;        // least element of each coset
};

// Cosets are numbered by their least element; throws InvalidInput when
// `normal` is not a normal subgroup.
Quotient quotient_group(const TableGroup& g, const std::vector<Elem>& normal);

/// A group handed to the isomorphism search: identity 0 and an operation.
struct GroupView {
  std::size_t order = 0;
  std::function<Elem(Elem, Elem)> op;
};

// Visits every isomorphism phi: G -> H (phi[g] = image) until `visit`
// returns true. `compatible(g, h)` may prune candidate images. Returns
// whether the visit was stopped.
bool for_each_isomorphism(const GroupView& g, const GroupView& h,
                          const std::function<bool(Elem, Elem)>& compatible,
                          const std::function<bool(const std::vector<Elem>&)>& visit);

// Capped at order 400; throws CapExceeded above.
std::optional<std::vector<Elem>> find_isomorphism(const TableGroup& g, const TableGroup& h);

inline constexpr std::size_t kIsomorphismCap = 400;

}  // namespace ybe
