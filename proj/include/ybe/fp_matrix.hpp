#pragma once

/** @file fp_matrix.hpp
 *  @brief Square matrices over a prime field and vectors of F_p^n encoded as
 *  integers (coordinate i is base-p digit i).
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ybe/perm.hpp"

namespace ybe {

using FpVec = std::vector<Elem>;

class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t p, std::size_t n);  // zero matrix
  // Row-major entries, reduced mod p (negative values allowed).
  FpMatrix(std::size_t p, std::size_t n, const std::vector<long long>& entries);

  static FpMatrix identity(std::size_t p, std::size_t n);
  static FpMatrix scalar(std::size_t p, std::size_t n, long long c);

  std::size_t prime() const { return p_; }
  std::size_t dim() const { return n_; }
  Elem at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, long long v);

  FpVec apply(const FpVec& v) const;
  Elem apply(Elem code) const;
  std::optional<FpMatrix> inverse() const;
  bool is_identity() const { return *this == identity(p_, n_); }
  bool is_zero() const;
  // Order in GL_n(F_p); nullopt if singular.
  std::optional<std::size_t> order() const;
  FpMatrix pow(std::size_t e) const;
  // The induced permutation of the encoded vectors 0..p^n-1.
  Perm as_perm() const;
  std::string to_string() const;

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
  friend FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
  friend auto operator<=>(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t p_ = 0, n_ = 0;
  std::vector<Elem> a_;
};

std::size_t ipow(std::size_t b, std::size_t e);
FpVec decode(Elem code, std::size_t p, std::size_t n);
Elem encode(const FpVec& v, std::size_t p);

// Smallest subspace containing v and invariant under all mats; as a list of
// its vectors' codes.
std::vector<Elem> invariant_span(const std::vector<FpMatrix>& mats, const FpVec& v);
// A nonzero vector whose invariant span is proper, if any.
std::optional<FpVec> common_invariant_subspace(const std::vector<FpMatrix>& mats, std::size_t p,
                                               std::size_t n);
// Whether the subring generated by commuting mats is a field (every nonzero
// element invertible); also reports its size.
bool generated_ring_is_field(const std::vector<FpMatrix>& mats, std::size_t p, std::size_t n,
                             std::size_t* ring_size = nullptr);

}  // namespace ybe
