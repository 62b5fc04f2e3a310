#pragma once

/** @file perm.hpp
 *  @brief Permutations, partitions and permutation groups given by generators.
 */

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ybe {

using Elem = std::uint32_t;

// Default element cap for closures; YBE_ELEMENT_CAP overrides it.
std::size_t default_element_cap();

/// A bijection of {0, ..., n-1}. Composition `f * g` applies g first.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Elem> images);  // throws InvalidInput if not a bijection

  static Perm identity(std::size_t n);
  // Cycle notation with 1-based points, e.g. "(1 2)(3 4 5)" or "()".
  static Perm from_cycles(std::size_t n, const std::string& cycles);

  std::size_t degree() const { return img_.size(); }
  Elem operator[](Elem x) const { return img_[x]; }
  const std::vector<Elem>& images() const { return img_; }

  Perm inverse() const;
  bool is_identity() const;
  std::size_t order() const;
  std::string to_cycles() const;  // 1-based points

  friend Perm operator*(const Perm& f, const Perm& g);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

 private:
  struct Unchecked {};
  Perm(std::vector<Elem> images, Unchecked) : img_(std::move(images)) {}
  std::vector<Elem> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// An equivalence relation on {0, ..., n-1}; each point stores the least
/// member of its class.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Elem> reps);  // reps[i] must be the class minimum

  static Partition discrete(std::size_t n);
  static Partition full(std::size_t n);
  // Canonical partition from arbitrary labels (equal label = same class).
  static Partition from_labels(const std::vector<std::size_t>& labels);

  std::size_t size() const { return rep_.size(); }
  Elem rep(Elem x) const { return rep_[x]; }
  const std::vector<Elem>& reps() const { return rep_; }
  bool same(Elem x, Elem y) const { return rep_[x] == rep_[y]; }

  std::size_t class_count() const;
  // Dense class number, classes ordered by their least member.
  std::vector<Elem> class_index() const;
  std::vector<std::vector<Elem>> classes() const;
  bool is_discrete() const { return class_count() == size(); }
  bool is_full() const { return class_count() <= 1; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Elem> rep_;
};

/// Union-find with path halving; `partition()` yields the canonical form.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  Elem find(Elem x);
  bool unite(Elem a, Elem b);  // true if two classes were merged
  std::size_t classes() const { return classes_; }
  Partition partition();

 private:
  std::vector<Elem> parent_;
  std::size_t classes_;
};

/// A permutation group with its generators and its full element list,
/// sorted lexicographically by image vector.
class GenGroup {
 public:
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& gens() const { return gens_; }
  const std::vector<Perm>& elements() const { return elements_; }
  bool contains(const Perm& p) const;

 private:
  friend GenGroup closure(const std::vector<Perm>&, std::size_t, std::size_t);
  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
};

// All products of the generators; throws CapExceeded past `cap` elements.
GenGroup closure(const std::vector<Perm>& gens, std::size_t degree,
                 std::size_t cap = default_element_cap());

Partition orbits(const std::vector<Perm>& gens, std::size_t degree);

struct Primitivity {
  bool transitive = false;
  bool primitive = false;
};

Primitivity is_primitive(const GenGroup& g);
Primitivity is_primitive(const std::vector<Perm>& gens, std::size_t degree);

}  // namespace ybe
