#include <string>
#include <unordered_map>

#include "ybe/brace.hpp"
#include "ybe/error.hpp"

namespace ybe {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Elem x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

std::vector<Elem> key_of(const Perm& s, const Perm& l) {
  std::vector<Elem> k = s.images();
  k.insert(k.end(), l.images().begin(), l.images().end());
  return k;
}

}  // namespace

PermutationBrace permutation_brace(const FinSolution& s, std::size_t cap) {
  const std::size_t n = s.size();
  const std::size_t limit = std::min(cap, kPermutationBraceLimit);
  const Table sig = sigma_table(s);
  std::vector<Perm> hs, hl;
  for (Elem x = 0; x < n; ++x) {
    hs.push_back(Perm(sig[x]).inverse());
    hl.push_back(s.lambda_perm(x));
  }

  PermutationBrace out;
  std::unordered_map<std::vector<Elem>, Elem, VecHash> index;
  std::vector<Perm>& S = out.sigma_inv;
  std::vector<Perm>& L = out.lambda;
  std::vector<Elem> parent{0}, gen{0};
  S.push_back(Perm::identity(n));
  L.push_back(Perm::identity(n));
  index.emplace(key_of(S[0], L[0]), 0);

  auto find_or_add = [&](Perm a, Perm b, Elem par, Elem g) -> Elem {
    auto [it, fresh] = index.try_emplace(key_of(a, b), static_cast<Elem>(S.size()));
    if (fresh) {
      if (S.size() >= limit)
        throw CapExceeded("permutation brace exceeds " + std::to_string(limit) + " elements");
      S.push_back(std::move(a));
      L.push_back(std::move(b));
      parent.push_back(par);
      gen.push_back(g);
    }
    return it->second;
  };
  // (s, l) o (s', l') = (s . l s' l^{-1}, l l')
  auto compose = [&](const Perm& s1, const Perm& l1, const Perm& s2, const Perm& l2) {
    return std::make_pair(s1 * (l1 * s2 * l1.inverse()), l1 * l2);
  };

  // additive steps: g + h_x = g o h_{l_g^{-1}(x)}
  std::vector<Elem> step;
  for (Elem i = 0; i < S.size(); ++i) {
    const Perm li = L[i].inverse();
    for (Elem x = 0; x < n; ++x) {
      const Elem y = li[x];
      auto [a, b] = compose(S[i], L[i], hs[y], hl[y]);
      step.push_back(find_or_add(std::move(a), std::move(b), i, x));
    }
  }
  const std::size_t N = S.size();

  // g + h folds h's additive word onto g
  std::vector<Elem> add(N * N);
  for (Elem i = 0; i < N; ++i) {
    add[i * N] = i;
    for (Elem j = 1; j < N; ++j) add[i * N + j] = step[add[i * N + parent[j]] * n + gen[j]];
  }
  // the fold must not depend on the word chosen: check every edge
  for (Elem i = 0; i < N; ++i)
    for (Elem j = 0; j < N; ++j)
      for (Elem x = 0; x < n; ++x)
        if (add[i * N + step[j * n + x]] != step[add[i * N + j] * n + x])
          throw InternalError("permutation brace addition depends on the chosen word");

  std::vector<Elem> mul(N * N);
  for (Elem i = 0; i < N; ++i)
    for (Elem j = 0; j < N; ++j) {
      auto [a, b] = compose(S[i], L[i], S[j], L[j]);
      auto it = index.find(key_of(a, b));
      if (it == index.end()) throw InternalError("permutation brace not closed under composition");
      mul[i * N + j] = it->second;
    }

  out.brace = SkewBrace::from_tables(N, std::move(add), std::move(mul));
  out.point.resize(n);
  for (Elem x = 0; x < n; ++x) out.point[x] = step[x];
  return out;
}

SimpleNLReport simpleNL_check(const FinSolution& s) {
  SimpleNLReport r;
  const SolutionProfile prof = profile(s);
  r.irretractable = prof.irretractable;
  if (prof.lyubashenko) {
    const LyubashenkoClass c = classify_lyubashenko(s);
    r.verdict = c.is_simple;
    r.note = "Lyubashenko: " + c.reason;
    return r;
  }
  r.applies = true;
  const PermutationBrace pb = permutation_brace(s);
  const SkewBrace& b = pb.brace;
  r.brace_order = b.order();
  std::vector<Elem> diffs;
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = 0; y < s.size(); ++y) diffs.push_back(b.sub(pb.point[x], pb.point[y]));
  const Subset d = additive_closure(b, diffs);
  if (!is_ideal(b, d)) throw InternalError("difference subgroup of the permutation brace is not an ideal");
  r.d_size = d.size();
  r.d_is_min_ideal = is_smallest_nonzero_ideal(b, d);

  UnionFind uf(s.size());
  for (Elem e : d.elements()) {
    for (Elem f : d.elements()) {
      const Perm t = pb.sigma_inv[e] * pb.lambda[f];
      for (Elem x = 0; x < s.size(); ++x) uf.unite(x, t[x]);
      if (uf.classes() == 1) break;
    }
    if (uf.classes() == 1) break;
  }
  r.dd_transitive = uf.classes() == 1;
  r.verdict = r.irretractable && r.d_is_min_ideal && r.dd_transitive;
  return r;
}

SimpleGENReport simpleGEN_check(const SkewBrace& b, const std::vector<Elem>& x) {
  Subset xs(b.order(), x);
  if (xs.size() < 2) throw InvalidInput("simpleGEN needs at least two points");
  if (auto d = check_invariant_subset(b, xs.elements()))
    throw InvalidInput("subset not invariant under " + d->map + "_" + std::to_string(d->a));
  SimpleGENReport r;
  const auto& pts = xs.elements();
  r.generates = additive_closure(b, pts).size() == b.order();
  // x - y = (x - x0) - (y - x0), so differences with one base point suffice
  std::vector<Elem> diffs;
  for (Elem p : pts) diffs.push_back(b.sub(p, pts[0]));
  const Ideal v = ideal_closure(b, diffs);
  r.v_size = v.size();
  r.v_is_min_ideal = is_smallest_nonzero_ideal(b, v);

  std::vector<Elem> pos(b.order(), 0);
  for (Elem i = 0; i < pts.size(); ++i) pos[pts[i]] = i;
  // <sigma_v o lambda_w : v, w in V> is generated by the sigma_v and lambda_w
  UnionFind uf(pts.size());
  for (Elem e : v.elements()) {
    for (Elem p : pts) {
      uf.unite(pos[p], pos[b.sig(e, p)]);
      uf.unite(pos[p], pos[b.lam(e, p)]);
    }
    if (uf.classes() == 1) break;
  }
  r.v_transitive_on_x = uf.classes() == 1;
  r.verdict = r.generates && r.v_is_min_ideal && r.v_transitive_on_x;
  return r;
}

}  // namespace ybe
