#include "ybe/table_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "ybe/detail/subgroup.hpp"
#include "ybe/error.hpp"

namespace ybe {

namespace {

std::size_t order_by(std::size_t n, const std::function<Elem(Elem, Elem)>& op, Elem a) {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = op(x, a)) {
    if (++k > n + 1) throw InvalidInput("element has no finite order within the carrier");
  }
  return k;
}

}  // namespace

// --- TableGroup ------------------------------------------------------------

TableGroup TableGroup::from_table(std::size_t n, std::vector<Elem> t, bool trusted) {
  if (n == 0) throw InvalidInput("group of order 0");
  if (t.size() != n * n) throw InvalidInput("group table has wrong size");
  for (Elem v : t)
    if (v >= n) throw InvalidInput("group table entry out of range");
  auto at = [&](Elem a, Elem b) { return t[static_cast<std::size_t>(a) * n + b]; };

  std::optional<Elem> e;
  for (Elem c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = at(c, x) == x && at(x, c) == x;
    if (ok) e = c;
  }
  if (!e) throw InvalidInput("group table has no identity");
  if (*e != 0) {
    // swap labels e <-> 0
    auto sw = [&](Elem x) { return x == 0 ? *e : x == *e ? 0 : x; };
    std::vector<Elem> u(n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) u[static_cast<std::size_t>(a) * n + b] = sw(at(sw(a), sw(b)));
    t = std::move(u);
  }

  std::vector<char> seen(n);
  for (Elem a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      if (seen[at(a, b)]) throw InvalidInput("group table row " + std::to_string(a) + " is not a permutation");
      seen[at(a, b)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem b = 0; b < n; ++b) {
      if (seen[at(b, a)]) throw InvalidInput("group table column " + std::to_string(a) + " is not a permutation");
      seen[at(b, a)] = 1;
    }
  }
  if (n <= 512 || !trusted) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem ab = at(a, b);
        for (Elem c = 0; c < n; ++c)
          if (at(ab, c) != at(a, at(b, c)))
            throw InvalidInput("group table not associative at (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")");
      }
  }

  TableGroup g;
  g.n_ = n;
  g.t_ = std::move(t);
  g.inv_.assign(n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (g.op(a, b) == 0) {
        g.inv_[a] = b;
        break;
      }
  g.gens_ = detail::greedy_generators(n, [&g](Elem a, Elem b) { return g.op(a, b); });
  return g;
}

TableGroup TableGroup::from_perms(std::vector<Perm> elems, std::vector<Perm>* labels) {
  if (elems.empty()) throw InvalidInput("empty permutation list");
  auto id = std::find_if(elems.begin(), elems.end(), [](const Perm& p) { return p.is_identity(); });
  if (id == elems.end()) throw InvalidInput("permutation list lacks the identity");
  std::rotate(elems.begin(), id, id + 1);
  const std::size_t n = elems.size();
  std::unordered_map<Perm, Elem, PermHash> index;
  for (Elem i = 0; i < n; ++i)
    if (!index.emplace(elems[i], i).second) throw InvalidInput("repeated permutation");
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      auto it = index.find(elems[a] * elems[b]);
      if (it == index.end()) throw InvalidInput("permutation list is not closed");
      t[static_cast<std::size_t>(a) * n + b] = it->second;
    }
  if (labels) *labels = std::move(elems);
  return from_table(n, std::move(t), true);
}

TableGroup TableGroup::cyclic(std::size_t n) {
  std::vector<Elem> t(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = static_cast<Elem>((a + b) % n);
  return from_table(n, std::move(t), true);
}

Elem TableGroup::pow(Elem a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  Elem r = 0;
  while (e > 0) {
    if (e & 1) r = op(r, a);
    a = op(a, a);
    e >>= 1;
  }
  return r;
}

std::size_t TableGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = op(x, a)) ++k;
  return k;
}

Perm TableGroup::left_mult(Elem a) const {
  std::vector<Elem> img(n_);
  for (Elem x = 0; x < n_; ++x) img[x] = op(a, x);
  return Perm(std::move(img));
}

// --- PowerGroup ------------------------------------------------------------

PowerGroup::PowerGroup(TableGroup base, std::size_t copies) : base_(std::move(base)), copies_(copies) {
  if (copies == 0) throw InvalidInput("power group needs at least one copy");
  order_ = 1;
  for (std::size_t i = 0; i < copies; ++i) {
    order_ *= base_.order();
    if (order_ > (std::size_t{1} << 31)) throw CapExceeded("power group too large");
  }
  // generators: each base generator in each coordinate
  std::vector<Elem> parts(copies, 0);
  for (std::size_t i = 0; i < copies; ++i)
    for (Elem g : base_.generators()) {
      parts[i] = g;
      gens_.push_back(compose(parts));
      parts[i] = 0;
    }
}

Elem PowerGroup::component(Elem a, std::size_t i) const {
  for (std::size_t j = 0; j < i; ++j) a /= base_.order();
  return a % base_.order();
}

Elem PowerGroup::compose(const std::vector<Elem>& parts) const {
  Elem r = 0;
  for (std::size_t i = parts.size(); i-- > 0;) r = r * static_cast<Elem>(base_.order()) + parts[i];
  return r;
}

Elem PowerGroup::op(Elem a, Elem b) const {
  const Elem s = static_cast<Elem>(base_.order());
  Elem r = 0, scale = 1;
  for (std::size_t i = 0; i < copies_; ++i) {
    r += base_.op(a % s, b % s) * scale;
    a /= s;
    b /= s;
    scale *= s;
  }
  return r;
}

Elem PowerGroup::inv(Elem a) const {
  const Elem s = static_cast<Elem>(base_.order());
  Elem r = 0, scale = 1;
  for (std::size_t i = 0; i < copies_; ++i) {
    r += base_.inv(a % s) * scale;
    a /= s;
    scale *= s;
  }
  return r;
}

bool PowerGroup::is_automorphism(const Perm& f) const {
  if (f.degree() != order_ || f[0] != 0) return false;
  // homomorphism on every Cayley-graph edge suffices
  for (Elem a = 0; a < order_; ++a)
    for (Elem g : gens_)
      if (f[op(a, g)] != op(f[a], f[g])) return false;
  return true;
}

TableGroup PowerGroup::as_table() const {
  if (copies_ == 1) return base_;
  std::vector<Elem> t(order_ * order_);
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b) t[static_cast<std::size_t>(a) * order_ + b] = op(a, b);
  return TableGroup::from_table(order_, std::move(t), true);
}

// --- invariants ------------------------------------------------------------

std::vector<Elem> center(const TableGroup& g) {
  std::vector<Elem> out;
  for (Elem a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Elem s : g.generators())
      if (g.op(a, s) != g.op(s, a)) {
        central = false;
        break;
      }
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<Elem> subgroup_generated(const TableGroup& g, const std::vector<Elem>& gens) {
  auto sb = detail::make_subgroup_builder(g.order(), [&g](Elem a, Elem b) { return g.op(a, b); });
  for (Elem x : gens) sb.add(x);
  std::vector<Elem> out = sb.elements();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> normal_closure(const TableGroup& g, const std::vector<Elem>& gens) {
  auto sb = detail::make_subgroup_builder(g.order(), [&g](Elem a, Elem b) { return g.op(a, b); });
  for (Elem x : gens) sb.add(x);
  for (std::size_t i = 0; i < sb.size(); ++i) {
    const Elem x = sb.elements()[i];
    for (Elem s : g.generators()) sb.add(g.op(g.op(g.inv(s), x), s));
  }
  std::vector<Elem> out = sb.elements();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> commutator_subgroup(const TableGroup& g) {
  std::vector<Elem> comms;
  for (Elem a : g.generators())
    for (Elem b : g.generators()) comms.push_back(g.op(g.op(g.inv(a), g.inv(b)), g.op(a, b)));
  return normal_closure(g, comms);
}

std::vector<Elem> conjugacy_class(const TableGroup& g, Elem a) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> out;
  for (Elem s = 0; s < g.order(); ++s) {
    Elem c = g.op(g.op(s, a), g.inv(s));
    if (!in[c]) {
      in[c] = 1;
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroupInvariants group_invariants(const TableGroup& g) {
  GroupInvariants inv;
  inv.center = center(g);
  inv.commutator = commutator_subgroup(g);
  inv.is_abelian = inv.center.size() == g.order();
  for (Elem a = 0; a < g.order() && !inv.is_cyclic; ++a) inv.is_cyclic = g.element_order(a) == g.order();
  return inv;
}

bool is_subgroup(const TableGroup& g, const std::vector<Elem>& subset) {
  std::vector<char> in(g.order(), 0);
  for (Elem x : subset) {
    if (x >= g.order()) return false;
    in[x] = 1;
  }
  if (!in[0]) return false;
  for (Elem a : subset)
    for (Elem b : subset)
      if (!in[g.op(a, g.inv(b))]) return false;
  return true;
}

bool is_normal_subgroup(const TableGroup& g, const std::vector<Elem>& subset) {
  if (!is_subgroup(g, subset)) return false;
  std::vector<char> in(g.order(), 0);
  for (Elem x : subset) in[x] = 1;
  for (Elem x : subset)
    for (Elem s : g.generators())
      if (!in[g.op(g.op(g.inv(s), x), s)]) return false;
  return true;
}

// --- semidirect product and quotient ---------------------------------------

TableGroup semidirect_product(const TableGroup& v, std::size_t k, const Perm& a) {
  const std::size_t m = v.order();
  if (k == 0) throw InvalidInput("semidirect product with C_0");
  if (a.degree() != m) throw InvalidInput("automorphism degree differs from |V|");
  PowerGroup pv(v, 1);
  if (!pv.is_automorphism(a)) throw InvalidInput("map is not an automorphism of V");
  std::vector<Perm> pw{Perm::identity(m)};
  for (std::size_t i = 1; i <= k; ++i) pw.push_back(a * pw.back());
  if (!pw[k].is_identity()) throw InvalidInput("A^k is not the identity; C_k does not act");
  const std::size_t n = m * k;
  if (n > 20000) throw CapExceeded("semidirect product table too large");
  std::vector<Elem> t(n * n);
  for (std::size_t i = 0; i < k; ++i)
    for (Elem x = 0; x < m; ++x)
      for (std::size_t j = 0; j < k; ++j)
        for (Elem y = 0; y < m; ++y) {
          const Elem prod = v.op(x, pw[i][y]);
          t[(i * m + x) * n + j * m + y] = static_cast<Elem>(((i + j) % k) * m + prod);
        }
  return TableGroup::from_table(n, std::move(t), true);
}

Quotient quotient_group(const TableGroup& g, const std::vector<Elem>& normal) {
  if (!is_normal_subgroup(g, normal)) throw InvalidInput("subset is not a normal subgroup");
  const std::size_t n = g.order();
  Quotient q;
  q.projection.assign(n, static_cast<Elem>(-1));
  for (Elem a = 0; a < n; ++a) {
    if (q.projection[a] != static_cast<Elem>(-1)) continue;
    const Elem c = static_cast<Elem>(q.reps.size());
    q.reps.push_back(a);
    for (Elem x : normal) q.projection[g.op(a, x)] = c;
  }
  const std::size_t m = q.reps.size();
  std::vector<Elem> t(m * m);
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) t[i * m + j] = q.projection[g.op(q.reps[i], q.reps[j])];
  q.group = TableGroup::from_table(m, std::move(t));
  return q;
}

// --- isomorphism search ----------------------------------------------------

bool for_each_isomorphism(const GroupView& g, const GroupView& h,
                          const std::function<bool(Elem, Elem)>& compatible,
                          const std::function<bool(const std::vector<Elem>&)>& visit) {
  const std::size_t n = g.order;
  if (n != h.order) return false;
  const std::vector<Elem> gens = detail::greedy_generators(n, g.op);
  std::vector<std::size_t> ord_g(n), ord_h(n);
  for (Elem a = 0; a < n; ++a) {
    ord_g[a] = order_by(n, g.op, a);
    ord_h[a] = order_by(n, h.op, a);
  }
  {
    std::map<std::size_t, std::size_t> cg, ch;
    for (Elem a = 0; a < n; ++a) {
      ++cg[ord_g[a]];
      ++ch[ord_h[a]];
    }
    if (cg != ch) return false;
  }

  constexpr Elem kNone = static_cast<Elem>(-1);
  std::vector<Elem> images(gens.size());
  std::vector<Elem> phi(n);
  std::vector<char> used(n);

  // extends phi over <gens[0..j]>; false on an inconsistency
  auto extend = [&](std::size_t j) {
    std::fill(phi.begin(), phi.end(), kNone);
    std::fill(used.begin(), used.end(), 0);
    phi[0] = 0;
    used[0] = 1;
    std::vector<Elem> queue{0};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Elem a = queue[q];
      for (std::size_t i = 0; i <= j; ++i) {
        const Elem b = g.op(a, gens[i]);
        const Elem fb = h.op(phi[a], images[i]);
        if (phi[b] == kNone) {
          if (used[fb]) return false;
          phi[b] = fb;
          used[fb] = 1;
          queue.push_back(b);
        } else if (phi[b] != fb) {
          return false;
        }
      }
    }
    return true;
  };

  std::function<bool(std::size_t)> rec = [&](std::size_t j) -> bool {
    if (j == gens.size()) return visit(phi);
    for (Elem c = 0; c < n; ++c) {
      if (ord_h[c] != ord_g[gens[j]] || !compatible(gens[j], c)) continue;
      images[j] = c;
      if (!extend(j)) continue;
      if (rec(j + 1)) return true;
    }
    return false;
  };
  if (gens.empty()) return visit(std::vector<Elem>{0});
  return rec(0);
}

std::optional<std::vector<Elem>> find_isomorphism(const TableGroup& g, const TableGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.order() > kIsomorphismCap)
    throw CapExceeded("group isomorphism search capped at order " + std::to_string(kIsomorphismCap));
  std::optional<std::vector<Elem>> found;
  GroupView gv{g.order(), [&g](Elem a, Elem b) { return g.op(a, b); }};
  GroupView hv{h.order(), [&h](Elem a, Elem b) { return h.op(a, b); }};
  for_each_isomorphism(gv, hv, [](Elem, Elem) { return true; }, [&](const std::vector<Elem>& phi) {
    found = phi;
    return true;
  });
  return found;
}

}  // namespace ybe
