#include "ybe/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "ybe/detail/subgroup.hpp"
#include "ybe/error.hpp"

namespace ybe {

// --- ledger ----------------------------------------------------------------

void HypothesisLedger::record(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail)});
}

bool HypothesisLedger::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const HypothesisCheck* HypothesisLedger::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string HypothesisLedger::to_string() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "  [ok]   " : "  [FAIL] ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  return os.str();
}

namespace {

std::string failed_names(const HypothesisLedger& l) {
  std::string s;
  for (const auto& c : l.checks)
    if (!c.passed) s += (s.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
  return s;
}

}  // namespace

HypothesisFailure::HypothesisFailure(HypothesisLedger l)
    : InvalidInput("hypotheses violated: " + failed_names(l)), ledger_(std::move(l)) {}

// --- the generic cyclic-extension brace ------------------------------------

namespace {

std::string vec_string(const FpVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// B = V + <x> with |B/V| = k, x + v - x = A v, k x = kx in V and
// lambda(v + ix) = A'v + u0 - A^i u0 + ix.
class CyclicOps final : public BraceOps {
 public:
  CyclicOps(PowerGroup v, std::size_t k, const Perm& a, const Perm& a2, Elem u0, Elem kx)
      : v_(std::move(v)), m_(v_.order()), k_(k), kx_(kx) {
    apow_.push_back(Perm::identity(m_));
    for (std::size_t i = 1; i <= k; ++i) apow_.push_back(a * apow_.back());
    for (const Perm& p : apow_) ainv_.push_back(p.inverse());
    a2_ = a2.images();
    for (std::size_t i = 0; i < k; ++i) vi_.push_back(v_.op(u0, v_.inv(apow_[i][u0])));
    neg_kx_ = v_.inv(kx_);
  }

  std::size_t order() const override { return m_ * k_; }

  Elem add(Elem a, Elem b) const override {
    const Elem v = a % m_, w = b % m_;
    const std::size_t i = a / m_, j = b / m_;
    Elem u = v_.op(v, apow_[i][w]);
    std::size_t l = i + j;
    if (l >= k_) {
      l -= k_;
      u = v_.op(u, kx_);
    }
    return static_cast<Elem>(l * m_ + u);
  }

  Elem neg(Elem a) const override {
    const Elem v = a % m_;
    const std::size_t i = a / m_;
    if (i == 0) return v_.inv(v);
    // v + A^i w + kx = 0
    const Elem w = ainv_[i][v_.op(v_.inv(v), neg_kx_)];
    return static_cast<Elem>((k_ - i) * m_ + w);
  }

  Elem lambda(Elem a) const {
    const Elem v = a % m_;
    const std::size_t i = a / m_;
    return static_cast<Elem>(i * m_ + v_.op(a2_[v], vi_[i]));
  }

  Elem lambda_pow(std::size_t e, Elem b) const {
    for (std::size_t t = 0; t < e; ++t) b = lambda(b);
    return b;
  }

  Elem mul(Elem a, Elem b) const override { return add(a, lambda_pow(a / m_, b)); }

  Elem inv(Elem a) const override {
    const std::size_t i = a / m_;
    return lambda_pow((k_ - i) % k_, neg(a));
  }

 private:
  PowerGroup v_;
  std::size_t m_, k_;
  Elem kx_, neg_kx_ = 0;
  std::vector<Perm> apow_, ainv_;
  std::vector<Elem> a2_, vi_;
};

// Element v + x - v for every v; also a representative list per element.
std::vector<Elem> conjugacy_class_of_x(const SkewBrace& b, std::size_t m,
                                       std::vector<std::vector<Elem>>* reps) {
  std::vector<Elem> out;
  std::vector<std::vector<Elem>> by(b.order());
  const Elem x = static_cast<Elem>(m);
  for (Elem v = 0; v < m; ++v) {
    const Elem c = b.add(b.add(v, x), b.neg(v));
    if (by[c].empty()) out.push_back(c);
    by[c].push_back(v);
  }
  std::sort(out.begin(), out.end());
  if (reps) {
    reps->clear();
    for (Elem c : out) reps->push_back(by[c]);
  }
  return out;
}

CyclicBrace build_cyclic(PowerGroup v, std::size_t k, const Perm& a, const Perm& a2, Elem u0, Elem kx,
                         HypothesisLedger ledger) {
  auto ops = std::make_shared<CyclicOps>(v, k, a, a2, u0, kx);
  const std::size_t n = ops->order();
  const std::size_t m = v.order();

  Perm ak = Perm::identity(m);
  for (std::size_t i = 0; i < k; ++i) ak = a * ak;
  for (Elem g : v.generators())
    if (ak[g] != v.op(v.op(kx, g), v.inv(kx))) throw InternalError("A^k is not conjugation by k x");

  // additive generators: those of V and x
  std::vector<Elem> gens = v.generators();
  gens.push_back(static_cast<Elem>(m));
  for (Elem e = 0; e < n; ++e)
    for (Elem g : gens)
      if (ops->lambda(ops->add(e, g)) != ops->add(ops->lambda(e), ops->lambda(g)))
        throw InternalError("lambda is not an additive endomorphism");
  for (Elem g : gens)
    if (ops->lambda_pow(k, g) != g) throw InternalError("lambda^k is not the identity");

  CyclicBrace out;
  if (n <= kBraceTableLimit) {
    std::vector<Elem> add(n * n), mul(n * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        add[x * n + y] = ops->add(x, y);
        mul[x * n + y] = ops->mul(x, y);
      }
    out.brace = SkewBrace::from_tables(n, std::move(add), std::move(mul));
  } else {
    out.brace = SkewBrace::structured(ops);
    if (auto d = sampled_check(out.brace, 2000, 20240601))
      throw InternalError("structured brace fails a sampled axiom: " + d->message);
  }
  out.v = std::move(v);
  out.k = k;
  out.a = a;
  out.a2 = a2;
  out.u0 = u0;
  out.kx = kx;
  out.ledger = std::move(ledger);
  return out;
}

}  // namespace

// --- abelian case ----------------------------------------------------------

HypothesisLedger coro1_hypotheses(const Coro1Data& d) {
  HypothesisLedger l;
  const bool prime = is_prime(d.p);
  l.record("p prime", prime, "p = " + std::to_string(d.p));
  l.record("n >= 1", d.n >= 1);
  l.record("k > 1", d.k > 1, "k = " + std::to_string(d.k));
  if (!prime || d.n == 0) return l;
  const bool shapes = d.a.prime() == d.p && d.a.dim() == d.n && d.a2.prime() == d.p && d.a2.dim() == d.n &&
                      d.u0.size() == d.n &&
                      std::all_of(d.u0.begin(), d.u0.end(), [&](Elem c) { return c < d.p; });
  l.record("data shapes", shapes, "A, A' must be n x n over F_p and u0 in F_p^n");
  if (!shapes) return l;

  const auto oa = d.a.order(), oa2 = d.a2.order();
  l.record("A invertible", oa.has_value());
  l.record("A' invertible", oa2.has_value());
  l.record("A != 1", !d.a.is_identity());
  const bool commute = d.a * d.a2 == d.a2 * d.a;
  l.record("A, A' commute", commute);
  const std::size_t g = std::gcd(d.k, ipow(d.p, d.n) - 1);
  if (oa) l.record("o(A) | gcd(k, p^n - 1)", g % *oa == 0, "o(A) = " + std::to_string(*oa) + ", gcd = " + std::to_string(g));
  if (oa2)
    l.record("o(A') | gcd(k, p^n - 1)", g % *oa2 == 0,
             "o(A') = " + std::to_string(*oa2) + ", gcd = " + std::to_string(g));
  if (!oa || !oa2) return l;

  const FpVec v1 = (FpMatrix::identity(d.p, d.n) - d.a).apply(d.u0);
  const bool v1_zero = std::all_of(v1.begin(), v1.end(), [](Elem c) { return c == 0; });
  if (d.a2.is_identity() && v1_zero) {
    l.record("k matches case A' = 1, v1 = 0: k = o(A)", d.k == *oa);
  } else if (d.a2.is_identity()) {
    l.record("k matches case A' = 1, v1 != 0: k = o(A) p", d.k == *oa * d.p, "v1 = " + vec_string(v1));
  } else {
    const std::size_t want = std::lcm(*oa, *oa2);
    l.record("k matches case A' != 1: k = lcm(o(A), o(A'))", d.k == want, "lcm = " + std::to_string(want));
  }

  const auto sub = common_invariant_subspace({d.a, d.a2}, d.p, d.n);
  if (sub) {
    const std::size_t dim = [&] {
      std::size_t s = invariant_span({d.a, d.a2}, *sub).size(), e = 0;
      while (s > 1) s /= d.p, ++e;
      return e;
    }();
    l.record("V is a simple module over <A, A'>", false,
             "invariant subspace found: span of the orbit of " + vec_string(*sub) + ", dimension " + std::to_string(dim));
  } else {
    l.record("V is a simple module over <A, A'>", true);
  }

  // secondary check, independent of the case split
  bool ord = true;
  std::string ord_detail;
  FpMatrix ai = FpMatrix::identity(d.p, d.n), a2i = ai, sum(d.p, d.n);
  for (std::size_t i = 1; i < d.k && ord; ++i) {
    sum = sum + a2i;  // 1 + A' + ... + A'^{i-1}
    ai = ai * d.a;
    a2i = a2i * d.a2;
    if (ai.is_identity() && a2i.is_identity() && sum.is_zero()) {
      ord = false;
      ord_detail = "fails at i = " + std::to_string(i);
    }
  }
  l.record("OrdCond", ord, ord_detail);

  if (commute && !sub && ipow(d.p, d.n) <= 81) {
    std::size_t rs = 0;
    const bool field = generated_ring_is_field({d.a, d.a2}, d.p, d.n, &rs);
    l.record("generated ring is a field of order p^n", field && rs == ipow(d.p, d.n),
             "ring order " + std::to_string(rs));
  }
  return l;
}

CyclicBrace coro1_build(const Coro1Data& d) {
  HypothesisLedger l = coro1_hypotheses(d);
  if (!l.all_passed()) throw HypothesisFailure(l);
  PowerGroup v(TableGroup::cyclic(d.p), d.n);
  const Elem u0 = encode(d.u0, d.p);
  CyclicBrace out = build_cyclic(v, d.k, d.a.as_perm(), d.a2.as_perm(), u0, 0, std::move(l));
  const std::size_t m = out.v.order();

  out.x = conjugacy_class_of_x(out.brace, m, nullptr);
  if (out.x.size() != m) throw InternalError("conjugacy class of x differs from V + x");
  for (Elem i = 0; i < m; ++i)
    if (out.x[i] != m + i) throw InternalError("conjugacy class of x differs from V + x");
  out.solution = restricted_solution(out.brace, out.x);

  // r(v + x, w + x) = (A'w + v1 + x, -A^{-1}w + (AA')^{-1}(v - v1) + w + x)
  const FpMatrix ainv = *d.a.inverse();
  const FpMatrix aa2inv = *(d.a * d.a2).inverse();
  const FpVec v1 = (FpMatrix::identity(d.p, d.n) - d.a).apply(d.u0);
  auto add = [&](FpVec x, const FpVec& y, long long s) {
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] = static_cast<Elem>(((x[i] + s * static_cast<long long>(y[i])) % static_cast<long long>(d.p) +
                                static_cast<long long>(d.p)) % static_cast<long long>(d.p));
    return x;
  };
  Table lam(m, std::vector<Elem>(m)), rho = lam;
  for (Elem vi = 0; vi < m; ++vi)
    for (Elem wi = 0; wi < m; ++wi) {
      const FpVec v = decode(vi, d.p, d.n), w = decode(wi, d.p, d.n);
      lam[vi][wi] = encode(add(d.a2.apply(w), v1, 1), d.p);
      FpVec r = add(FpVec(d.n, 0), ainv.apply(w), -1);
      r = add(r, aa2inv.apply(add(v, v1, -1)), 1);
      r = add(r, w, 1);
      rho[wi][vi] = encode(r, d.p);
    }
  out.formula = FinSolution(lam, rho);
  if (!(out.formula == out.solution)) throw InternalError("closed formula disagrees with the restricted solution");
  if (out.x.size() <= 64) out.solution_simple_bruteforce = is_simple_bruteforce(out.solution);
  return out;
}

// --- non-abelian case ------------------------------------------------------

namespace {

struct CenterData {
  std::size_t k = 0;
  Elem kx = 0;
  std::string detail;
  bool ok = true;
};

// Z(D) for D = V x| C_m: (v, i) with A v = v and A^i = conjugation by v.
CenterData center_quotient(const PowerGroup& v, std::size_t m, const Perm& a) {
  CenterData c;
  Perm ai = Perm::identity(v.order());
  std::vector<std::pair<std::size_t, Elem>> z;
  for (std::size_t i = 0; i < m; ++i, ai = a * ai) {
    for (Elem e = 0; e < v.order(); ++e) {
      if (a[e] != e) continue;
      bool ok = true;
      for (Elem g : v.generators())
        if (ai[g] != v.op(v.op(v.inv(e), g), e)) {
          ok = false;
          break;
        }
      if (ok) z.emplace_back(i, e);
    }
  }
  // Z(D) meets V trivially, so it is {(z_j, j t)} for the least t > 0
  c.k = m;
  for (auto [i, e] : z)
    if (i > 0) {
      c.k = i;
      c.kx = v.inv(e);
      break;
    }
  c.detail = "|Z(D)| = " + std::to_string(z.size());
  if (m % c.k != 0 || z.size() != m / c.k) {
    c.ok = false;
    c.detail += ", unexpected shape";
  }
  return c;
}

}  // namespace

HypothesisLedger coro2_hypotheses(const Coro2Data& d) {
  HypothesisLedger l;
  const PowerGroup& v = d.v;
  const std::size_t n = v.order();
  const bool shapes = d.a.degree() == n && d.a2.degree() == n && d.u0 < n;
  l.record("data shapes", shapes, "A, A' must permute V and u0 must lie in V");
  if (!shapes) return l;
  bool abelian = true, centerless = true;
  for (Elem e = 1; e < n; ++e) {
    bool central = true;
    for (Elem g : v.generators())
      if (v.op(e, g) != v.op(g, e)) central = false;
    if (!central) abelian = false;
    else centerless = false;
  }
  l.record("V non-abelian", !abelian && n > 1);
  l.record("Z(V) = 0", centerless);
  l.record("m > 1", d.m > 1, "m = " + std::to_string(d.m));
  const bool auta = v.is_automorphism(d.a), auta2 = v.is_automorphism(d.a2);
  l.record("A is an automorphism of V", auta);
  l.record("A' is an automorphism of V", auta2);
  if (!auta || !auta2 || d.m < 2 || !centerless) return l;
  l.record("A != 1", !d.a.is_identity());
  l.record("A^m = 1", d.m % d.a.order() == 0, "o(A) = " + std::to_string(d.a.order()));
  if (d.m % d.a.order() != 0) return l;

  const CenterData c = center_quotient(v, d.m, d.a);
  l.record("B = D / Z(D) well formed", c.ok, c.detail);
  l.record("k = |B/V| > 1", c.k > 1, "k = " + std::to_string(c.k));
  if (!c.ok || c.k < 2) return l;
  const std::size_t k = c.k;

  l.record("o(A') | k", k % d.a2.order() == 0, "o(A') = " + std::to_string(d.a2.order()));
  auto apow = [&](std::size_t i, Elem e) {
    for (std::size_t t = 0; t < i; ++t) e = d.a[e];
    return e;
  };
  auto vn = [&](std::size_t i) { return v.op(d.u0, v.inv(apow(i, d.u0))); };
  const Elem v1 = vn(1);
  bool c2 = true;
  for (Elem w = 0; w < n && c2; ++w) c2 = v.op(v1, d.a[d.a2[w]]) == v.op(d.a2[d.a[w]], v1);
  l.record("[A, A'] = conjugation by v1", c2);
  l.record("A'(kx) = v_k + kx", d.a2[c.kx] == v.op(vn(k), c.kx));
  Elem tel = 0;
  for (std::size_t i = k; i-- > 0;) {
    Elem t = v1;
    for (std::size_t s = 0; s < i; ++s) t = d.a2[t];
    tel = v.op(tel, t);
  }
  l.record("A'^{k-1} v1 + ... + v1 = 0", tel == 0);

  auto add_op = [&v](Elem x, Elem y) { return v.op(x, y); };
  {
    auto sb = detail::make_subgroup_builder(n, add_op);
    for (Elem e = 0; e < n && sb.size() < n; ++e) sb.add(v.op(e, v.inv(d.a[e])));
    l.record("V generated by v - Av", sb.size() == n, "subgroup order " + std::to_string(sb.size()));
  }
  {
    // orbits of V \ {0} under inner automorphisms, A and A'
    UnionFind uf(n);
    for (Elem e = 0; e < n; ++e) {
      for (Elem g : v.generators()) uf.unite(e, v.op(v.op(v.inv(g), e), g));
      uf.unite(e, d.a[e]);
      uf.unite(e, d.a2[e]);
    }
    const Partition orb = uf.partition();
    bool simple = true;
    std::string why;
    for (Elem e = 1; e < n && simple; ++e) {
      if (orb.rep(e) != e) continue;
      auto sb = detail::make_subgroup_builder(n, add_op);
      sb.add(e);
      for (std::size_t i = 0; i < sb.size(); ++i) {
        const Elem f = sb.elements()[i];
        for (Elem g : v.generators()) sb.add(v.op(v.op(v.inv(g), f), g));
        sb.add(d.a[f]);
        sb.add(d.a2[f]);
      }
      if (sb.size() != n) {
        simple = false;
        why = "normal invariant subgroup of order " + std::to_string(sb.size());
      }
    }
    l.record("no non-trivial normal A-invariant subgroup", simple, why);
  }
  return l;
}

CyclicBrace coro2_build(const Coro2Data& d) {
  HypothesisLedger l = coro2_hypotheses(d);
  if (!l.all_passed()) throw HypothesisFailure(l);
  const CenterData c = center_quotient(d.v, d.m, d.a);
  CyclicBrace out = build_cyclic(d.v, c.k, d.a, d.a2, d.u0, c.kx, std::move(l));
  const PowerGroup& v = out.v;
  const SkewBrace& b = out.brace;
  const std::size_t m = v.order();

  std::vector<std::vector<Elem>> reps;
  out.x = conjugacy_class_of_x(b, m, &reps);
  out.solution = restricted_solution(b, out.x);

  // r(v + x - v, w + x - w) = (w' + x - w', v' + x - v')
  const Perm ainv = d.a.inverse();
  const Perm aa2inv = (d.a2 * d.a).inverse();
  std::vector<Elem> pos(b.order(), static_cast<Elem>(-1));
  for (Elem i = 0; i < out.x.size(); ++i) pos[out.x[i]] = i;
  auto conj_x = [&](Elem e) { return b.add(b.add(e, static_cast<Elem>(m)), b.neg(e)); };
  auto images = [&](Elem vv, Elem ww) {
    const Elem w1 = v.op(d.a2[ww], d.u0);
    const Elem v1 = v.op(v.op(ww, v.inv(ainv[ww])), aa2inv[v.op(vv, v.inv(d.u0))]);
    return std::make_pair(pos[conj_x(w1)], pos[conj_x(v1)]);
  };
  const std::size_t sz = out.x.size();
  Table lam(sz, std::vector<Elem>(sz)), rho = lam;
  for (Elem i = 0; i < sz; ++i)
    for (Elem j = 0; j < sz; ++j) {
      auto [li, ri] = images(reps[i][0], reps[j][0]);
      if (li == static_cast<Elem>(-1) || ri == static_cast<Elem>(-1))
        throw InternalError("closed formula leaves X");
      lam[i][j] = li;
      rho[j][i] = ri;
    }
  // representative independence: exhaustive when small, sampled otherwise
  const std::size_t c2 = reps[0].size() * reps[0].size();
  if (sz * sz * c2 <= 4000000) {
    for (Elem i = 0; i < sz; ++i)
      for (Elem j = 0; j < sz; ++j)
        for (Elem vv : reps[i])
          for (Elem ww : reps[j])
            if (images(vv, ww) != std::make_pair(lam[i][j], rho[j][i]))
              throw InternalError("closed formula depends on the representatives");
  } else {
    std::mt19937_64 rng(7);
    for (int s = 0; s < 2000; ++s) {
      const Elem i = static_cast<Elem>(rng() % sz), j = static_cast<Elem>(rng() % sz);
      const Elem vv = reps[i][rng() % reps[i].size()], ww = reps[j][rng() % reps[j].size()];
      if (images(vv, ww) != std::make_pair(lam[i][j], rho[j][i]))
        throw InternalError("closed formula depends on the representatives");
    }
  }
  out.formula = FinSolution(lam, rho);
  if (!(out.formula == out.solution)) throw InternalError("closed formula disagrees with the restricted solution");
  if (out.x.size() <= 64) out.solution_simple_bruteforce = is_simple_bruteforce(out.solution);
  return out;
}

// --- isomorphism criterion -------------------------------------------------

bool iso_criterion(const CyclicBrace& b1, const CyclicBrace& b2) {
  const std::size_t m = b1.v.order();
  if (m != b2.v.order() || b1.k != b2.k || b1.brace.order() != b2.brace.order()) return false;
  const std::size_t k = b1.k;
  const SkewBrace& t = b2.brace;

  struct Candidate {
    Elem x;
    std::vector<Elem> a;   // conjugation by x on V~
    std::vector<Elem> a2;  // lambda_x restricted to V~
    Elem image;            // lambda_x(x) = u0~ + x - u0~
    Elem kx;
  };
  // generators x~ of B~ over V~ with lambda_x~(x~) V~-conjugate to x~
  std::vector<Candidate> cands;
  for (Elem xt = 0; xt < t.order(); ++xt) {
    const std::size_t i = xt / m;
    if (std::gcd(i, k) != 1) continue;
    const Elem image = t.lam(xt, xt);
    bool conjugate = false;
    for (Elem u = 0; u < m && !conjugate; ++u) conjugate = t.add(t.add(u, xt), t.neg(u)) == image;
    if (!conjugate) continue;
    Candidate c{xt, std::vector<Elem>(m), std::vector<Elem>(m), image, 0};
    for (Elem w = 0; w < m; ++w) {
      c.a[w] = t.add(t.add(xt, w), t.neg(xt));
      c.a2[w] = t.lam(xt, w);
    }
    Elem s = 0;
    for (std::size_t j = 0; j < k; ++j) s = t.add(s, xt);
    if (s >= m) throw InternalError("k x~ does not lie in V~");
    c.kx = s;
    cands.push_back(std::move(c));
  }

  GroupView g1{m, [&](Elem a, Elem b) { return b1.v.op(a, b); }};
  GroupView g2{m, [&](Elem a, Elem b) { return b2.v.op(a, b); }};
  return for_each_isomorphism(g1, g2, [](Elem, Elem) { return true; }, [&](const std::vector<Elem>& f) {
    for (const Candidate& c : cands) {
      if (f[b1.kx] != c.kx) continue;
      const Elem fu = f[b1.u0];
      if (t.add(t.add(fu, c.x), t.neg(fu)) != c.image) continue;
      bool ok = true;
      for (Elem g : b1.v.generators())
        if (f[b1.a[g]] != c.a[f[g]] || f[b1.a2[g]] != c.a2[f[g]]) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
    return false;
  });
}

// --- Lyubashenko -----------------------------------------------------------

FinSolution lyubashenko_build(std::size_t n, long long a, long long b) {
  if (n == 0) throw InvalidInput("size must be positive");
  const long long q = static_cast<long long>(n);
  std::vector<Elem> f(n), g(n);
  for (long long x = 0; x < q; ++x) {
    f[x] = static_cast<Elem>((((x + a) % q) + q) % q);
    g[x] = static_cast<Elem>((((x + b) % q) + q) % q);
  }
  return lyubashenko_solution(Perm(f), Perm(g));
}

}  // namespace ybe
