#include "ybe/solution.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <string>

namespace ybe {

namespace {

std::string triple(Elem x, Elem y, Elem z) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

std::optional<SolutionDefect> check_rows(const Table& t, std::size_t n, SolutionDefect::Kind kind,
                                         const char* name) {
  std::vector<char> seen(n);
  for (Elem x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem v : t[x]) {
      if (seen[v])
        return SolutionDefect{kind, {x, 0, 0}, std::string(name) + " row " + std::to_string(x) + " is not bijective"};
      seen[v] = 1;
    }
  }
  return std::nullopt;
}

std::vector<Elem> flatten(const Table& t) {
  std::vector<Elem> out;
  for (const auto& row : t) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::vector<Elem> row_inverses(const std::vector<Elem>& flat, std::size_t n) {
  std::vector<Elem> inv(flat.size());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) inv[x * n + flat[x * n + y]] = static_cast<Elem>(y);
  return inv;
}

}  // namespace

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<SolutionDefect> check_solution(const Table& lam, const Table& rho) {
  const std::size_t n = lam.size();
  using K = SolutionDefect::Kind;
  if (n == 0) return SolutionDefect{K::Shape, {}, "solution of size 0"};
  if (rho.size() != n) return SolutionDefect{K::Shape, {}, "lambda and rho have different sizes"};
  for (Elem x = 0; x < n; ++x) {
    if (lam[x].size() != n)
      return SolutionDefect{K::Shape, {x, 0, 0}, "lambda row " + std::to_string(x) + " has wrong length"};
    if (rho[x].size() != n)
      return SolutionDefect{K::Shape, {x, 0, 0}, "rho row " + std::to_string(x) + " has wrong length"};
    for (Elem y = 0; y < n; ++y)
      if (lam[x][y] >= n || rho[x][y] >= n)
        return SolutionDefect{K::Shape, {x, y, 0}, "entry out of range in row " + std::to_string(x)};
  }
  if (auto d = check_rows(lam, n, K::LambdaNotBijective, "lambda")) return d;
  if (auto d = check_rows(rho, n, K::RhoNotBijective, "rho")) return d;

  const std::vector<Elem> L = flatten(lam), R = flatten(rho);
  auto l = [&](Elem x, Elem y) { return L[static_cast<std::size_t>(x) * n + y]; };
  auto r = [&](Elem y, Elem x) { return R[static_cast<std::size_t>(y) * n + x]; };
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem a = l(x, y), b = r(y, x);
      for (Elem z = 0; z < n; ++z) {
        // (r x id)(id x r)(r x id)
        const Elem c = l(b, z), d = r(z, b);
        const Elem p1 = l(a, c), p2 = r(c, a), p3 = d;
        // (id x r)(r x id)(id x r)
        const Elem e = l(y, z), f = r(z, y);
        const Elem g = l(x, e), h = r(e, x);
        const Elem q1 = g, q2 = l(h, f), q3 = r(f, h);
        if (p1 != q1 || p2 != q2 || p3 != q3)
          return SolutionDefect{K::Braid, {x, y, z}, "braid relation fails at " + triple(x, y, z)};
      }
    }
  return std::nullopt;
}

FinSolution::FinSolution(const Table& lam, const Table& rho) {
  if (auto d = check_solution(lam, rho)) throw InvalidSolution(*d);
  n_ = lam.size();
  lam_ = flatten(lam);
  rho_ = flatten(rho);
  lam_inv_ = row_inverses(lam_, n_);
  rho_inv_ = row_inverses(rho_, n_);
}

Perm FinSolution::lambda_perm(Elem x) const {
  return Perm(std::vector<Elem>(lam_.begin() + x * n_, lam_.begin() + (x + 1) * n_));
}

Perm FinSolution::rho_perm(Elem y) const {
  return Perm(std::vector<Elem>(rho_.begin() + y * n_, rho_.begin() + (y + 1) * n_));
}

Table FinSolution::lambda_table() const {
  Table t(n_);
  for (Elem x = 0; x < n_; ++x) t[x].assign(lam_.begin() + x * n_, lam_.begin() + (x + 1) * n_);
  return t;
}

Table FinSolution::rho_table() const {
  Table t(n_);
  for (Elem y = 0; y < n_; ++y) t[y].assign(rho_.begin() + y * n_, rho_.begin() + (y + 1) * n_);
  return t;
}

Table sigma_table(const FinSolution& s) {
  const std::size_t n = s.size();
  Table sig(n, std::vector<Elem>(n));
  for (Elem y = 0; y < n; ++y)
    for (Elem x = 0; x < n; ++x) sig[y][x] = s.lambda(y, s.rho(s.lambda_inv(x, y), x));
  return sig;
}

FinSolution derived_solution(const FinSolution& s) {
  const std::size_t n = s.size();
  Table lam(n, std::vector<Elem>(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) lam[x][y] = y;
  return FinSolution(lam, sigma_table(s));
}

Perm diagonal_map(const FinSolution& s) {
  std::vector<Elem> q(s.size());
  for (Elem x = 0; x < s.size(); ++x) q[x] = s.lambda_inv(x, x);
  return Perm(std::move(q));
}

std::optional<Elem> sigma_factorization_defect(const FinSolution& s) {
  const Table sig = sigma_table(s);
  const Perm q = diagonal_map(s), qi = q.inverse();
  for (Elem b = 0; b < s.size(); ++b)
    for (Elem x = 0; x < s.size(); ++x)
      if (sig[b][x] != s.lambda(b, q[s.rho(b, qi[x])])) return b;
  return std::nullopt;
}

// --- profile and retraction ------------------------------------------------

Partition retraction_partition(const FinSolution& s) {
  const std::size_t n = s.size();
  std::map<std::pair<std::vector<Elem>, std::vector<Elem>>, std::size_t> seen;
  std::vector<std::size_t> labels(n);
  for (Elem x = 0; x < n; ++x) {
    auto key = std::make_pair(s.lambda_perm(x).images(), s.rho_perm(x).images());
    labels[x] = seen.try_emplace(std::move(key), seen.size()).first->second;
  }
  return Partition::from_labels(labels);
}

FinSolution retraction(const FinSolution& s) { return quotient_solution(s, retraction_partition(s)); }

SolutionProfile profile(const FinSolution& s) {
  const std::size_t n = s.size();
  SolutionProfile p;
  p.involutive = true;
  for (Elem x = 0; x < n && p.involutive; ++x)
    for (Elem y = 0; y < n && p.involutive; ++y) {
      const Elem u = s.lambda(x, y), v = s.rho(y, x);
      p.involutive = s.lambda(u, v) == x && s.rho(v, u) == y;
    }
  p.derived_form = true;
  p.twisted_rack = true;
  bool rho_equal = true;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (s.lambda(x, y) != y) p.derived_form = false;
      if (s.lambda(x, y) != s.lambda(0, y)) p.twisted_rack = false;
      if (s.rho(x, y) != s.rho(0, y)) rho_equal = false;
    }
  p.lyubashenko = p.twisted_rack && rho_equal;
  if (p.derived_form) {
    p.quandle = true;
    for (Elem x = 0; x < n; ++x)
      if (s.rho(x, x) != x) p.quandle = false;
  }
  std::vector<Perm> gens;
  for (Elem x = 0; x < n; ++x) {
    gens.push_back(s.lambda_perm(x));
    gens.push_back(s.rho_perm(x));
  }
  p.orbit_count = orbits(gens, n).class_count();
  p.indecomposable = p.orbit_count == 1;
  p.retraction_size = retraction_partition(s).class_count();
  p.irretractable = p.retraction_size == n;
  p.injective_hint = p.irretractable;
  return p;
}

// --- congruences -----------------------------------------------------------

Partition congruence_closure(const FinSolution& s, Elem x, Elem y) {
  const std::size_t n = s.size();
  UnionFind uf(n);
  std::deque<std::pair<Elem, Elem>> work;
  auto merge = [&](Elem a, Elem b) {
    if (uf.unite(a, b)) work.emplace_back(a, b);
  };
  merge(x, y);
  while (!work.empty() && uf.classes() > 1) {
    auto [a, b] = work.front();
    work.pop_front();
    // one-variable compatibility for the merged pair suffices by transitivity
    for (Elem z = 0; z < n; ++z) {
      merge(s.lambda(a, z), s.lambda(b, z));
      merge(s.lambda(z, a), s.lambda(z, b));
      merge(s.rho(a, z), s.rho(b, z));
      merge(s.rho(z, a), s.rho(z, b));
    }
  }
  Partition part = uf.partition();
  // fibres of an epimorphism from an indecomposable solution have equal size
  std::vector<Perm> gens;
  for (Elem z = 0; z < n; ++z) {
    gens.push_back(s.lambda_perm(z));
    gens.push_back(s.rho_perm(z));
  }
  if (orbits(gens, n).class_count() == 1) {
    for (const auto& cls : part.classes())
      if (cls.size() * part.class_count() != n)
        throw InternalError("congruence of an indecomposable solution has unequal fibres");
  }
  return part;
}

bool is_congruence(const FinSolution& s, const Partition& p, std::array<Elem, 2>* witness) {
  const std::size_t n = s.size();
  if (p.size() != n) throw InvalidInput("partition size differs from solution size");
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v) {
      const Elem ru = p.rep(u), rv = p.rep(v);
      if (!p.same(s.lambda(u, v), s.lambda(ru, rv)) || !p.same(s.rho(v, u), s.rho(rv, ru))) {
        if (witness) *witness = {u, v};
        return false;
      }
    }
  return true;
}

FinSolution quotient_solution(const FinSolution& s, const Partition& p) {
  std::array<Elem, 2> w{};
  if (!is_congruence(s, p, &w))
    throw InvalidInput("partition is not a congruence; compatibility fails at (" + std::to_string(w[0]) +
                       "," + std::to_string(w[1]) + ")");
  const std::vector<Elem> idx = p.class_index();
  std::vector<Elem> reps;
  for (Elem x = 0; x < s.size(); ++x)
    if (p.rep(x) == x) reps.push_back(x);
  const std::size_t m = reps.size();
  Table lam(m, std::vector<Elem>(m)), rho(m, std::vector<Elem>(m));
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      lam[i][j] = idx[s.lambda(reps[i], reps[j])];
      rho[i][j] = idx[s.rho(reps[i], reps[j])];
    }
  return FinSolution(lam, rho);
}

SimplicityReport simplicity_bruteforce(const FinSolution& s) {
  const std::size_t n = s.size();
  SimplicityReport rep;
  if (n <= 2) {
    rep.simple = n == 2;
    rep.small_size_convention = true;
    return rep;
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (!congruence_closure(s, x, y).is_full()) {
        rep.witness = std::array<Elem, 2>{x, y};
        return rep;
      }
  rep.simple = true;
  return rep;
}

bool is_simple_bruteforce(const FinSolution& s) { return simplicity_bruteforce(s).simple; }

// --- isomorphism -----------------------------------------------------------

namespace {

std::vector<std::size_t> cycle_type(const Perm& p) {
  std::vector<std::size_t> out;
  std::vector<char> seen(p.degree(), 0);
  for (Elem x = 0; x < p.degree(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (Elem y = x; !seen[y]; y = p[y]) {
      seen[y] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> point_signatures(const FinSolution& s) {
  std::vector<std::vector<std::size_t>> sig(s.size());
  for (Elem x = 0; x < s.size(); ++x) {
    auto& v = sig[x];
    v = cycle_type(s.lambda_perm(x));
    v.push_back(0);
    auto rt = cycle_type(s.rho_perm(x));
    v.insert(v.end(), rt.begin(), rt.end());
    v.push_back(s.lambda(x, x) == x);
    v.push_back(s.rho(x, x) == x);
    v.push_back(s.lambda_inv(x, x) == x);
  }
  return sig;
}

}  // namespace

std::optional<Perm> are_isomorphic(const FinSolution& s, const FinSolution& t) {
  const std::size_t n = s.size();
  if (n != t.size()) return std::nullopt;
  if (n > kSolutionIsoCap)
    throw CapExceeded("solution isomorphism search capped at size " + std::to_string(kSolutionIsoCap));
  const auto ss = point_signatures(s), ts = point_signatures(t);
  {
    auto a = ss, b = ts;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  constexpr Elem kNone = static_cast<Elem>(-1);
  std::vector<Elem> phi(n, kNone), used(n, kNone);  // used[image] = preimage
  std::vector<Elem> trail;

  // assign and propagate; false on a conflict (trail holds what to undo)
  auto assign = [&](Elem x, Elem y) -> bool {
    std::vector<std::pair<Elem, Elem>> stack{{x, y}};
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      if (phi[a] != kNone) {
        if (phi[a] != b) return false;
        continue;
      }
      if (used[b] != kNone || ss[a] != ts[b]) return false;
      phi[a] = b;
      used[b] = a;
      trail.push_back(a);
      for (Elem c : trail) {
        const Elem fc = phi[c];
        stack.emplace_back(s.lambda(a, c), t.lambda(b, fc));
        stack.emplace_back(s.lambda(c, a), t.lambda(fc, b));
        stack.emplace_back(s.rho(a, c), t.rho(b, fc));
        stack.emplace_back(s.rho(c, a), t.rho(fc, b));
      }
    }
    return true;
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      used[phi[trail.back()]] = kNone;
      phi[trail.back()] = kNone;
      trail.pop_back();
    }
  };

  std::function<bool()> rec = [&]() -> bool {
    Elem x = 0;
    while (x < n && phi[x] != kNone) ++x;
    if (x == n) return true;
    for (Elem y = 0; y < n; ++y) {
      if (used[y] != kNone) continue;
      const std::size_t mark = trail.size();
      if (assign(x, y) && rec()) return true;
      undo(mark);
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  Perm p(phi);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (p[s.lambda(x, y)] != t.lambda(p[x], p[y]) || p[s.rho(y, x)] != t.rho(p[y], p[x]))
        throw InternalError("solution isomorphism search produced a non-isomorphism");
  return p;
}

// --- Lyubashenko and affine families ---------------------------------------

FinSolution lyubashenko_solution(const Perm& f, const Perm& g) {
  const std::size_t n = f.degree();
  if (g.degree() != n) throw InvalidInput("permutations of different degree");
  if (!(f * g == g * f)) throw InvalidInput("Lyubashenko maps must commute");
  Table lam(n, f.images()), rho(n, g.images());
  return FinSolution(lam, rho);
}

LyubashenkoClass classify_lyubashenko(const FinSolution& s) {
  LyubashenkoClass c;
  const std::size_t n = s.size();
  c.is_lyubashenko = profile(s).lyubashenko;
  if (!c.is_lyubashenko) {
    c.reason = "not Lyubashenko";
    return c;
  }
  if (n == 1) {
    c.reason = "size 1 is not simple by convention";
    return c;
  }
  if (n == 2) {
    c.is_simple = true;
    c.prime = 2;
    c.reason = "every solution of size 2 is simple";
    return c;
  }
  if (!is_prime(n)) {
    c.reason = "n not prime";
    return c;
  }
  GenGroup g = closure({s.lambda_perm(0), s.rho_perm(0)}, n);
  if (g.order() != n) {
    c.reason = "<lambda, rho> is not cyclic of order n";
    return c;
  }
  c.is_simple = true;
  c.prime = n;
  c.reason = "n prime and <lambda, rho> cyclic of order n";
  return c;
}

namespace {

long long mod(long long a, long long p) { return ((a % p) + p) % p; }

long long inv_mod(long long a, long long p) {
  long long r = 1, b = mod(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

FinSolution affine_prime_solution(const AffineParams& prm) {
  const long long p = static_cast<long long>(prm.p);
  if (!is_prime(prm.p)) throw InvalidInput("affine family needs a prime p");
  const long long a = mod(prm.a, p), b = mod(prm.b, p), c = mod(prm.c, p);
  Table lam(prm.p, std::vector<Elem>(prm.p)), rho = lam;
  switch (prm.family) {
    case 1:
    case 2: {
      if (a == 0 || b == 0) throw InvalidInput("affine family needs a, b nonzero");
      if (a * b % p == 1) throw InvalidInput("affine family needs ab != 1");
      for (long long x = 0; x < p; ++x)
        for (long long y = 0; y < p; ++y) {
          if (prm.family == 1) {
            lam[x][y] = static_cast<Elem>(mod(a * y + (1 - a * b) * x + c, p));
            rho[y][x] = static_cast<Elem>(mod(b * x - inv_mod(a, p) * c, p));
          } else {
            lam[x][y] = static_cast<Elem>(mod(a * y + c, p));
            rho[y][x] = static_cast<Elem>(mod(b * x + (1 - a * b) * y - b * c, p));
          }
        }
      break;
    }
    case 3: {
      const long long c1 = mod(prm.c1, p), c2 = mod(prm.c2, p);
      if (c1 == 0 && c2 == 0) throw InvalidInput("affine family 3 needs (c1, c2) != (0, 0)");
      for (long long x = 0; x < p; ++x)
        for (long long y = 0; y < p; ++y) {
          lam[x][y] = static_cast<Elem>(mod(y + c1, p));
          rho[y][x] = static_cast<Elem>(mod(x + c2, p));
        }
      break;
    }
    default:
      throw InvalidInput("affine family must be 1, 2 or 3");
  }
  return FinSolution(lam, rho);
}

FinSolution direct_product(const FinSolution& s, const FinSolution& t) {
  const std::size_t n = s.size(), m = t.size(), N = n * m;
  Table lam(N, std::vector<Elem>(N)), rho = lam;
  for (Elem x = 0; x < N; ++x)
    for (Elem y = 0; y < N; ++y) {
      const Elem x1 = x / m, x2 = x % m, y1 = y / m, y2 = y % m;
      lam[x][y] = s.lambda(x1, y1) * m + t.lambda(x2, y2);
      rho[y][x] = s.rho(y1, x1) * m + t.rho(y2, x2);
    }
  return FinSolution(lam, rho);
}

FinSolution disjoint_union(const FinSolution& s, const FinSolution& t) {
  const std::size_t n = s.size(), N = n + t.size();
  Table lam(N, std::vector<Elem>(N)), rho = lam;
  for (Elem x = 0; x < N; ++x)
    for (Elem y = 0; y < N; ++y) {
      const bool xs = x < n, ys = y < n;
      if (xs && ys) {
        lam[x][y] = s.lambda(x, y);
        rho[y][x] = s.rho(y, x);
      } else if (!xs && !ys) {
        lam[x][y] = static_cast<Elem>(t.lambda(x - n, y - n) + n);
        rho[y][x] = static_cast<Elem>(t.rho(y - n, x - n) + n);
      } else {
        lam[x][y] = y;
        rho[y][x] = x;
      }
    }
  return FinSolution(lam, rho);
}

}  // namespace ybe
