#include <deque>
#include <unordered_map>

#include "ybe/constructions.hpp"
#include "ybe/error.hpp"

namespace ybe {

namespace {

// An element (u, P) of V x| GL_p(F_p).
struct Affine {
  FpVec u;
  FpMatrix mat;
};

FpVec vadd(const FpVec& a, const FpVec& b, std::size_t p) {
  FpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<Elem>((a[i] + b[i]) % p);
  return r;
}

FpVec vneg(const FpVec& a, std::size_t p) {
  FpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<Elem>((p - a[i]) % p);
  return r;
}

Affine aff_add(const Affine& a, const Affine& b, std::size_t p) {
  return {vadd(a.u, a.mat.apply(b.u), p), a.mat * b.mat};
}

Affine aff_neg(const Affine& a, std::size_t p) {
  const FpMatrix inv = *a.mat.inverse();
  return {vneg(inv.apply(a.u), p), inv};
}

FpMatrix jordan_block(std::size_t p) {
  FpMatrix j = FpMatrix::identity(p, p);
  for (std::size_t i = 0; i + 1 < p; ++i) j.set(i, i + 1, 1);
  return j;
}

std::optional<FpMatrix> find_m(std::size_t p, std::size_t q, const FpMatrix& j) {
  const std::size_t cells = p * p;
  const std::size_t total = ipow(p, cells);
  for (std::size_t code = 0; code < total; ++code) {
    // entry 0 is the most significant digit, so codes run in lexicographic order
    std::vector<long long> e(cells);
    std::size_t c = code;
    for (std::size_t i = cells; i-- > 0;) {
      e[i] = static_cast<long long>(c % p);
      c /= p;
    }
    FpMatrix m(p, p, e);
    if (m.is_identity() || !m.pow(q).is_identity()) continue;
    if (j * m == m.pow(p) * j) return m;
  }
  return std::nullopt;
}

struct VecHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Elem x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace

ByottBrace byott_build(std::size_t p, std::size_t q) {
  if (!is_prime(p) || !is_prime(q)) throw InvalidInput("p and q must be prime");
  const std::size_t vs = ipow(p, p);
  if ((vs - 1) % q != 0 || (p - 1) % q == 0)
    throw InvalidInput("q must divide p^p - 1 and must not divide p - 1");
  const std::size_t n = vs * q;
  if (n > 512) throw CapExceeded("p^p q = " + std::to_string(n) + " exceeds 512");

  const FpMatrix j = jordan_block(p);
  const auto mm = find_m(p, q, j);
  if (!mm) throw InternalError("no matrix M of order q with J M J^{-1} = M^p");
  std::vector<FpMatrix> mpow{FpMatrix::identity(p, p)};
  for (std::size_t i = 1; i < q; ++i) mpow.push_back(mpow.back() * *mm);

  // (v, M^i) has index i p^p + v
  auto to_aff = [&](Elem b) { return Affine{decode(b % vs, p, p), mpow[b / vs]}; };
  auto from_aff = [&](const Affine& a) -> Elem {
    for (std::size_t i = 0; i < q; ++i)
      if (mpow[i] == a.mat) return static_cast<Elem>(i * vs + encode(a.u, p));
    throw InternalError("element outside V x| <M>");
  };
  std::vector<Elem> add(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) add[a * n + b] = from_aff(aff_add(to_aff(a), to_aff(b), p));

  // conjugation by an affine element, restricted to B
  auto conj = [&](const Affine& g) {
    const Affine gi = aff_neg(g, p);
    std::vector<Elem> img(n);
    for (Elem b = 0; b < n; ++b) img[b] = from_aff(aff_add(aff_add(g, to_aff(b), p), gi, p));
    return Perm(std::move(img));
  };

  struct Hol {
    Elem b;
    Perm phi;
  };
  std::vector<Hol> gens;
  gens.push_back({static_cast<Elem>(vs), Perm::identity(n)});
  for (Elem v = 1; v < ipow(p, p - 1); ++v) {
    Affine g{vneg(decode(v, p, p), p), FpMatrix::identity(p, p)};
    gens.push_back({v, conj(g)});
  }
  FpVec ep(p, 0);
  ep[p - 1] = 1;
  gens.push_back({encode(ep, p), conj(Affine{vneg(ep, p), j})});

  // closure in the holomorph: (b, f)(c, g) = (b + f(c), f g)
  std::unordered_map<std::vector<Elem>, std::size_t, VecHash> seen;
  std::vector<Hol> elems{{0, Perm::identity(n)}};
  auto key = [](const Hol& h) {
    std::vector<Elem> k{h.b};
    k.insert(k.end(), h.phi.images().begin(), h.phi.images().end());
    return k;
  };
  seen.emplace(key(elems[0]), 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Hol& g : gens) {
      Hol h{add[elems[i].b * n + elems[i].phi[g.b]], elems[i].phi * g.phi};
      if (seen.emplace(key(h), elems.size()).second) {
        elems.push_back(std::move(h));
        if (elems.size() > n) throw InternalError("generated subgroup of the holomorph is not regular");
      }
    }
  if (elems.size() != n) throw InternalError("generated subgroup of the holomorph is not regular");
  std::vector<const Perm*> phi(n, nullptr);
  for (const Hol& h : elems) {
    if (phi[h.b]) throw InternalError("generated subgroup of the holomorph is not regular");
    phi[h.b] = &h.phi;
  }
  std::vector<Elem> mul(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) mul[a * n + b] = add[a * n + (*phi[a])[b]];

  ByottBrace out;
  out.p = p;
  out.q = q;
  out.m = *mm;
  out.brace = SkewBrace::from_tables(n, std::move(add), std::move(mul));
  for (Elem b = static_cast<Elem>(vs); b < n; ++b) out.x.push_back(b);
  out.solution = restricted_solution(out.brace, out.x);
  const auto min = smallest_nonzero_ideal(out.brace);
  out.brace_simple = min && min->size() == n;
  if (out.x.size() <= 64) out.solution_simple_bruteforce = is_simple_bruteforce(out.solution);
  return out;
}

}  // namespace ybe
