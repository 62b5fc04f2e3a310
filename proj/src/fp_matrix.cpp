#include "ybe/fp_matrix.hpp"

#include <set>
#include <sstream>

#include "ybe/error.hpp"

namespace ybe {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

FpVec decode(Elem code, std::size_t p, std::size_t n) {
  FpVec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<Elem>(code % p);
    code /= static_cast<Elem>(p);
  }
  return v;
}

Elem encode(const FpVec& v, std::size_t p) {
  Elem c = 0;
  for (std::size_t i = v.size(); i-- > 0;) c = c * static_cast<Elem>(p) + v[i];
  return c;
}

FpMatrix::FpMatrix(std::size_t p, std::size_t n) : p_(p), n_(n), a_(n * n, 0) {
  if (p < 2 || n == 0) throw InvalidInput("matrix needs p >= 2 and n >= 1");
}

FpMatrix::FpMatrix(std::size_t p, std::size_t n, const std::vector<long long>& e) : FpMatrix(p, n) {
  if (e.size() != n * n)
    throw InvalidInput("matrix needs " + std::to_string(n * n) + " entries, got " + std::to_string(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i) {
    const long long q = static_cast<long long>(p);
    a_[i] = static_cast<Elem>(((e[i] % q) + q) % q);
  }
}

FpMatrix FpMatrix::identity(std::size_t p, std::size_t n) { return scalar(p, n, 1); }

FpMatrix FpMatrix::scalar(std::size_t p, std::size_t n, long long c) {
  FpMatrix m(p, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, c);
  return m;
}

void FpMatrix::set(std::size_t i, std::size_t j, long long v) {
  const long long q = static_cast<long long>(p_);
  a_[i * n_ + j] = static_cast<Elem>(((v % q) + q) % q);
}

bool FpMatrix::is_zero() const {
  for (Elem x : a_)
    if (x) return false;
  return true;
}

FpVec FpMatrix::apply(const FpVec& v) const {
  FpVec r(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    std::size_t s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += static_cast<std::size_t>(at(i, j)) * v[j];
    r[i] = static_cast<Elem>(s % p_);
  }
  return r;
}

Elem FpMatrix::apply(Elem code) const { return encode(apply(decode(code, p_, n_)), p_); }

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  if (a.p_ != b.p_ || a.n_ != b.n_) throw InvalidInput("matrix shape mismatch");
  FpMatrix c(a.p_, a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j) {
      std::size_t s = 0;
      for (std::size_t k = 0; k < a.n_; ++k) s += static_cast<std::size_t>(a.at(i, k)) * b.at(k, j);
      c.a_[i * a.n_ + j] = static_cast<Elem>(s % a.p_);
    }
  return c;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix c(a.p_, a.n_);
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] = static_cast<Elem>((a.a_[i] + b.a_[i]) % a.p_);
  return c;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
  FpMatrix c(a.p_, a.n_);
  for (std::size_t i = 0; i < c.a_.size(); ++i)
    c.a_[i] = static_cast<Elem>((a.a_[i] + a.p_ - b.a_[i]) % a.p_);
  return c;
}

namespace {

Elem inv_mod(Elem a, std::size_t p) {
  std::size_t r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<Elem>(r);
}

}  // namespace

std::optional<FpMatrix> FpMatrix::inverse() const {
  const std::size_t n = n_, p = p_;
  std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = at(i, j);
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[c]);
    const std::size_t iv = inv_mod(static_cast<Elem>(m[c][c]), p);
    for (auto& x : m[c]) x = x * iv % p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const std::size_t f = m[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] = (m[r][j] + (p - f) * m[c][j]) % p;
    }
  }
  FpMatrix inv(p, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.a_[i * n + j] = static_cast<Elem>(m[i][n + j]);
  return inv;
}

std::optional<std::size_t> FpMatrix::order() const {
  if (!inverse()) return std::nullopt;
  const FpMatrix id = identity(p_, n_);
  FpMatrix x = *this;
  std::size_t k = 1;
  while (!(x == id)) {
    x = x * *this;
    ++k;
  }
  return k;
}

FpMatrix FpMatrix::pow(std::size_t e) const {
  FpMatrix r = identity(p_, n_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Perm FpMatrix::as_perm() const {
  const std::size_t q = ipow(p_, n_);
  std::vector<Elem> img(q);
  for (Elem v = 0; v < q; ++v) img[v] = apply(v);
  return Perm(std::move(img));
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < n_; ++j) os << (j ? " " : "") << at(i, j);
  }
  os << ']';
  return os.str();
}

std::vector<Elem> invariant_span(const std::vector<FpMatrix>& mats, const FpVec& v) {
  if (mats.empty()) throw InvalidInput("no matrices given");
  const std::size_t p = mats[0].prime(), n = mats[0].dim(), q = ipow(p, n);
  std::vector<char> in(q, 0);
  std::vector<Elem> elems{0};
  in[0] = 1;
  auto add_vec = [&](Elem c) {
    if (in[c]) return;
    // extend the subspace by c: all current elements plus multiples of c
    const FpVec cv = decode(c, p, n);
    const std::size_t old = elems.size();
    for (std::size_t t = 1; t < p; ++t)
      for (std::size_t i = 0; i < old; ++i) {
        FpVec w = decode(elems[i], p, n);
        for (std::size_t k = 0; k < n; ++k) w[k] = static_cast<Elem>((w[k] + t * cv[k]) % p);
        const Elem wc = encode(w, p);
        if (!in[wc]) {
          in[wc] = 1;
          elems.push_back(wc);
        }
      }
  };
  add_vec(encode(v, p));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const FpMatrix& m : mats) add_vec(m.apply(elems[i]));
  return elems;
}

std::optional<FpVec> common_invariant_subspace(const std::vector<FpMatrix>& mats, std::size_t p,
                                               std::size_t n) {
  const std::size_t q = ipow(p, n);
  for (Elem c = 1; c < q; ++c) {
    FpVec v = decode(c, p, n);
    if (invariant_span(mats, v).size() < q) return v;
  }
  return std::nullopt;
}

bool generated_ring_is_field(const std::vector<FpMatrix>& mats, std::size_t p, std::size_t n,
                             std::size_t* ring_size) {
  // monomials in the generators, then their F_p-span
  std::set<FpMatrix> mono{FpMatrix::identity(p, n)};
  std::vector<FpMatrix> queue{FpMatrix::identity(p, n)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const FpMatrix& m : mats) {
      FpMatrix x = queue[i] * m;
      if (mono.insert(x).second) queue.push_back(x);
    }
  // row-reduce flattened monomials to a basis
  std::vector<std::vector<Elem>> basis;
  std::vector<FpMatrix> basis_mats;
  for (const FpMatrix& m : queue) {
    std::vector<Elem> row(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) row[i * n + j] = m.at(i, j);
    std::vector<Elem> red = row;
    for (const auto& b : basis) {
      std::size_t lead = 0;
      while (b[lead] == 0) ++lead;
      if (red[lead] == 0) continue;
      const std::size_t f = red[lead];
      for (std::size_t k = 0; k < red.size(); ++k) red[k] = static_cast<Elem>((red[k] + (p - f) * b[k]) % p);
    }
    std::size_t lead = 0;
    while (lead < red.size() && red[lead] == 0) ++lead;
    if (lead == red.size()) continue;
    const Elem iv = inv_mod(red[lead], p);
    for (auto& x : red) x = static_cast<Elem>(x * iv % p);
    for (auto& b : basis) {
      if (b[lead] == 0) continue;
      const std::size_t f = b[lead];
      for (std::size_t k = 0; k < b.size(); ++k) b[k] = static_cast<Elem>((b[k] + (p - f) * red[k]) % p);
    }
    basis.push_back(red);
    basis_mats.push_back(m);
  }
  const std::size_t size = ipow(p, basis.size());
  if (ring_size) *ring_size = size;
  if (size > 200000) throw CapExceeded("generated ring too large to enumerate");
  for (std::size_t c = 1; c < size; ++c) {
    FpMatrix x(p, n);
    std::size_t code = c;
    for (const FpMatrix& b : basis_mats) {
      x = x + FpMatrix::scalar(p, n, static_cast<long long>(code % p)) * b;
      code /= p;
    }
    if (!x.inverse()) return false;
  }
  return true;
}

}  // namespace ybe
