#pragma once

// Incremental subgroup generation over an arbitrary finite group given by
// its operation. Elements are indices 0..n-1 with 0 the identity.

#include <cstddef>
#include <vector>

#include "ybe/perm.hpp"

namespace ybe::detail {

template <class Op>
class SubgroupBuilder {
 public:
  SubgroupBuilder(std::size_t n, Op op) : op_(op), in_(n, 0), elems_{0} { in_[0] = 1; }

  bool contains(Elem x) const { return in_[x] != 0; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<Elem>& elements() const { return elems_; }
  const std::vector<Elem>& gens() const { return gens_; }

  // Extends to the subgroup generated by the current one and g; false if g
  // already lies in it.
  bool add(Elem g) {
    if (in_[g]) return false;
    gens_.push_back(g);
    // every new element is a current element times a word in the generators
    std::size_t old = elems_.size();
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      const std::size_t from = i < old ? gens_.size() - 1 : 0;
      for (std::size_t j = from; j < gens_.size(); ++j) {
        Elem y = op_(elems_[i], gens_[j]);
        if (!in_[y]) {
          in_[y] = 1;
          elems_.push_back(y);
        }
      }
    }
    return true;
  }

  template <class It>
  void add_all(It first, It last) {
    for (; first != last; ++first) add(*first);
  }

 private:
  Op op_;
  std::vector<char> in_;
  std::vector<Elem> elems_;
  std::vector<Elem> gens_;
};

template <class Op>
SubgroupBuilder<Op> make_subgroup_builder(std::size_t n, Op op) {
  return SubgroupBuilder<Op>(n, op);
}

// Greedy generating set: scan elements in index order, keep those outside
// the subgroup generated so far.
template <class Op>
std::vector<Elem> greedy_generators(std::size_t n, Op op) {
  SubgroupBuilder<Op> sb(n, op);
  for (Elem x = 1; x < n && sb.size() < n; ++x) sb.add(x);
  return sb.gens();
}

}  // namespace ybe::detail
