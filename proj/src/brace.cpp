#include "ybe/brace.hpp"

#include <algorithm>
#include <string>

#include "ybe/detail/subgroup.hpp"
#include "ybe/error.hpp"

namespace ybe {

namespace {

std::string triple(Elem a, Elem b, Elem c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

auto add_op(const SkewBrace& b) {
  return [&b](Elem x, Elem y) { return b.add(x, y); };
}

// Ideal generated by `seed`; when `targets` is given, stops as soon as all of
// them are members and reports whether that happened.
bool grow_ideal(const SkewBrace& b, const std::vector<Elem>& seed, const std::vector<Elem>* targets,
                std::vector<Elem>* out) {
  auto sb = detail::make_subgroup_builder(b.order(), add_op(b));
  auto done = [&] {
    if (!targets) return false;
    for (Elem t : *targets)
      if (!sb.contains(t)) return false;
    return true;
  };
  for (Elem s : seed) sb.add(s);
  if (done()) return true;
  for (std::size_t i = 0; i < sb.size(); ++i) {
    const Elem e = sb.elements()[i];
    bool grew = false;
    for (Elem g : b.add_generators()) grew |= sb.add(b.sig(g, e));
    for (Elem h : b.mul_generators()) {
      grew |= sb.add(b.lam(h, e));
      grew |= sb.add(b.mul(b.mul(b.inv(h), e), h));
    }
    if (grew && done()) return true;
  }
  if (out) *out = sb.elements();
  return done();
}

}  // namespace

// --- Subset ----------------------------------------------------------------

Subset::Subset(std::size_t n, std::vector<Elem> elems) : elems_(std::move(elems)), mask_(n, 0) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  for (Elem x : elems_) {
    if (x >= n) throw InvalidInput("subset element out of range");
    mask_[x] = 1;
  }
}

// --- construction ----------------------------------------------------------

std::optional<BraceDefect> check_brace(std::size_t n, const std::vector<Elem>& add,
                                       const std::vector<Elem>& mul) {
  if (n == 0) return BraceDefect{{}, "brace of order 0"};
  if (add.size() != n * n || mul.size() != n * n) return BraceDefect{{}, "table has wrong size"};
  for (std::size_t i = 0; i < n * n; ++i)
    if (add[i] >= n || mul[i] >= n) return BraceDefect{{}, "table entry out of range"};
  for (Elem x = 0; x < n; ++x) {
    if (add[x] != x || add[x * n] != x) return BraceDefect{{x, 0, 0}, "0 is not the additive identity"};
    if (mul[x] != x || mul[x * n] != x) return BraceDefect{{x, 0, 0}, "0 is not the multiplicative identity"};
  }
  TableGroup ga, gm;
  try {
    ga = TableGroup::from_table(n, add);
  } catch (const InvalidInput& e) {
    return BraceDefect{{}, std::string("additive table: ") + e.what()};
  }
  try {
    gm = TableGroup::from_table(n, mul);
  } catch (const InvalidInput& e) {
    return BraceDefect{{}, std::string("multiplicative table: ") + e.what()};
  }
  for (Elem a = 0; a < n; ++a) {
    const Elem na = ga.inv(a);
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = gm.op(a, b);
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = gm.op(a, ga.op(b, c));
        const Elem rhs = ga.op(ga.op(ab, na), gm.op(a, c));
        if (lhs != rhs) return BraceDefect{{a, b, c}, "compatibility fails at " + triple(a, b, c)};
      }
    }
  }
  return std::nullopt;
}

SkewBrace SkewBrace::from_tables(std::size_t n, std::vector<Elem> add, std::vector<Elem> mul, bool trusted) {
  if (!(trusted && n > kBraceTableLimit)) {
    if (auto d = check_brace(n, add, mul)) throw InvalidInput("invalid brace: " + d->message);
  }
  SkewBrace b;
  b.n_ = n;
  b.add_ = TableGroup::from_table(n, std::move(add), true);
  b.mul_ = TableGroup::from_table(n, std::move(mul), true);
  b.lam_.resize(n * n);
  b.sig_.resize(n * n);
  b.star_.resize(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem c = 0; c < n; ++c) {
      const Elem l = b.add_.op(b.add_.inv(a), b.mul_.op(a, c));
      b.lam_[b.idx(a, c)] = l;
      b.sig_[b.idx(a, c)] = b.add_.op(b.add_.op(b.add_.inv(a), c), a);
      b.star_[b.idx(a, c)] = b.add_.op(l, b.add_.inv(c));
    }
  b.init_generators();
  return b;
}

SkewBrace SkewBrace::structured(std::shared_ptr<const BraceOps> ops) {
  if (!ops || ops->order() == 0) throw InvalidInput("structured brace without operations");
  SkewBrace b;
  b.n_ = ops->order();
  b.ops_ = std::move(ops);
  b.init_generators();
  return b;
}

void SkewBrace::init_generators() {
  add_gens_ = detail::greedy_generators(n_, [this](Elem a, Elem b) { return add(a, b); });
  mul_gens_ = detail::greedy_generators(n_, [this](Elem a, Elem b) { return mul(a, b); });
}

const TableGroup& SkewBrace::additive() const {
  if (ops_) throw InvalidInput("structured brace has no additive table");
  return add_;
}

const TableGroup& SkewBrace::multiplicative() const {
  if (ops_) throw InvalidInput("structured brace has no multiplicative table");
  return mul_;
}

std::size_t SkewBrace::add_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = add(x, a)) ++k;
  return k;
}

std::optional<BraceDefect> sampled_check(const SkewBrace& b, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(b.order() - 1));
  for (std::size_t s = 0; s < samples; ++s) {
    const Elem x = pick(rng), y = pick(rng), z = pick(rng);
    if (b.add(b.add(x, y), z) != b.add(x, b.add(y, z)))
      return BraceDefect{{x, y, z}, "addition not associative at " + triple(x, y, z)};
    if (b.mul(b.mul(x, y), z) != b.mul(x, b.mul(y, z)))
      return BraceDefect{{x, y, z}, "multiplication not associative at " + triple(x, y, z)};
    if (b.mul(x, b.add(y, z)) != b.add(b.sub(b.mul(x, y), x), b.mul(x, z)))
      return BraceDefect{{x, y, z}, "compatibility fails at " + triple(x, y, z)};
    if (b.add(x, b.neg(x)) != 0 || b.mul(x, b.inv(x)) != 0)
      return BraceDefect{{x, 0, 0}, "inverse fails at " + std::to_string(x)};
  }
  return std::nullopt;
}

SkewBrace trivial_brace(const TableGroup& g) {
  return SkewBrace::from_tables(g.order(), g.table(), g.table());
}

SkewBrace almost_trivial_brace(const TableGroup& g) {
  const std::size_t n = g.order();
  std::vector<Elem> opp(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) opp[a * n + b] = g.op(b, a);
  return SkewBrace::from_tables(n, std::move(opp), g.table());
}

FinSolution associated_solution(const SkewBrace& b) {
  const std::size_t n = b.order();
  Table lam(n, std::vector<Elem>(n)), rho = lam;
  for (Elem a = 0; a < n; ++a)
    for (Elem c = 0; c < n; ++c) {
      const Elem l = b.lam(a, c);
      lam[a][c] = l;
      rho[c][a] = b.mul(b.mul(b.inv(l), a), c);
    }
  return FinSolution(lam, rho);
}

// --- ideals ----------------------------------------------------------------

Subset additive_closure(const SkewBrace& b, const std::vector<Elem>& seed) {
  auto sb = detail::make_subgroup_builder(b.order(), add_op(b));
  for (Elem s : seed) sb.add(s);
  return Subset(b.order(), sb.elements());
}

bool is_ideal(const SkewBrace& b, const Subset& s) {
  if (s.elements().empty() || !s.contains(0)) return false;
  // additive subgroup
  for (Elem x : s.elements())
    for (Elem y : s.elements())
      if (!s.contains(b.sub(x, y))) return false;
  // normal, lambda-invariant and closed under x * b; generators suffice
  for (Elem x : s.elements()) {
    for (Elem g : b.add_generators())
      if (!s.contains(b.sig(g, x)) || !s.contains(b.star(x, g))) return false;
    for (Elem h : b.mul_generators())
      if (!s.contains(b.lam(h, x))) return false;
  }
  return true;
}

Ideal ideal_closure(const SkewBrace& b, const std::vector<Elem>& seed) {
  for (Elem s : seed)
    if (s >= b.order()) throw InvalidInput("seed element out of range");
  std::vector<Elem> elems;
  grow_ideal(b, seed, nullptr, &elems);
  return Ideal(b.order(), std::move(elems));
}

namespace {

// Subgroup generated by {a * g} over a in `from` and additive generators g;
// equals the subgroup generated by all a * c whenever it is normal.
Subset star_subgroup(const SkewBrace& b, const std::vector<Elem>& from) {
  auto sb = detail::make_subgroup_builder(b.order(), add_op(b));
  for (Elem a : from)
    for (Elem g : b.add_generators()) sb.add(b.star(a, g));
  bool normal = true;
  for (Elem e : sb.elements()) {
    for (Elem g : b.add_generators())
      if (!sb.contains(b.sig(g, e))) normal = false;
    if (!normal) break;
  }
  if (!normal) {
    for (Elem a : from)
      for (Elem c = 0; c < b.order(); ++c) sb.add(b.star(a, c));
  }
  return Subset(b.order(), sb.elements());
}

}  // namespace

BraceInvariants brace_invariants(const SkewBrace& b) {
  const std::size_t n = b.order();
  BraceInvariants inv;
  std::vector<Elem> soc, cen;
  inv.is_trivial = true;
  for (Elem a = 0; a < n; ++a) {
    bool lam_id = true, central = true;
    for (Elem g : b.add_generators()) {
      if (b.lam(a, g) != g) lam_id = false;
      if (b.sig(a, g) != g) central = false;
    }
    if (lam_id && central) soc.push_back(a);
    if (central) cen.push_back(a);
    if (!lam_id) inv.is_trivial = false;
  }
  inv.socle = Ideal(n, soc);
  inv.add_center = Subset(n, cen);
  inv.additive_abelian = cen.size() == n;
  for (Elem a = 0; a < n && !inv.additive_cyclic; ++a) inv.additive_cyclic = b.add_order(a) == n;

  std::vector<Elem> all(n);
  for (Elem a = 0; a < n; ++a) all[a] = a;
  inv.b2 = star_subgroup(b, all);
  inv.b3 = star_subgroup(b, inv.b2.elements());
  if (!is_ideal(b, inv.socle)) throw InternalError("socle is not an ideal");
  if (!is_ideal(b, inv.b2)) throw InternalError("B^2 is not an ideal");
  if (!is_ideal(b, inv.b3)) throw InternalError("B^3 is not an ideal");
  return inv;
}

std::optional<Ideal> smallest_nonzero_ideal(const SkewBrace& b) {
  const std::size_t n = b.order();
  if (n == 1) return std::nullopt;
  Elem anchor = 1;
  Ideal m = ideal_closure(b, {anchor});
  // shrink to a minimal ideal: every nonzero member must regenerate the anchor
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (Elem x : m.elements()) {
      if (x == 0 || x == anchor) continue;
      std::vector<Elem> target{anchor};
      if (!grow_ideal(b, {x}, &target, nullptr)) {
        anchor = x;
        m = ideal_closure(b, {anchor});
        shrunk = true;
        break;
      }
    }
  }
  std::vector<Elem> target{anchor};
  for (Elem x = 1; x < n; ++x)
    if (!m.contains(x) && !grow_ideal(b, {x}, &target, nullptr)) return std::nullopt;
  return m;
}

bool is_smallest_nonzero_ideal(const SkewBrace& b, const Ideal& i) {
  if (i.size() <= 1) return false;
  auto sb = detail::make_subgroup_builder(b.order(), add_op(b));
  for (Elem x : i.elements()) sb.add(x);
  const std::vector<Elem> targets = sb.gens();
  for (Elem x = 1; x < b.order(); ++x)
    if (!grow_ideal(b, {x}, &targets, nullptr)) return false;
  return true;
}

BraceQuotient quotient_brace(const SkewBrace& b, const Ideal& i) {
  if (!is_ideal(b, i)) throw InvalidInput("subset is not an ideal");
  const std::size_t n = b.order();
  BraceQuotient q;
  constexpr Elem kNone = static_cast<Elem>(-1);
  q.projection.assign(n, kNone);
  for (Elem a = 0; a < n; ++a) {
    if (q.projection[a] != kNone) continue;
    const Elem c = static_cast<Elem>(q.reps.size());
    q.reps.push_back(a);
    for (Elem x : i.elements()) q.projection[b.add(a, x)] = c;
  }
  const std::size_t m = q.reps.size();
  if (m > kPermutationBraceLimit) throw CapExceeded("quotient brace too large to tabulate");
  std::vector<Elem> add(m * m), mul(m * m);
  for (Elem u = 0; u < m; ++u)
    for (Elem v = 0; v < m; ++v) {
      add[u * m + v] = q.projection[b.add(q.reps[u], q.reps[v])];
      mul[u * m + v] = q.projection[b.mul(q.reps[u], q.reps[v])];
    }
  // both operations are well defined iff the projection respects every edge
  for (Elem a = 0; a < n; ++a) {
    for (Elem g : b.add_generators())
      if (q.projection[b.add(a, g)] != add[q.projection[a] * m + q.projection[g]])
        throw InternalError("addition is not well defined on cosets");
    for (Elem h : b.mul_generators())
      if (q.projection[b.mul(a, h)] != mul[q.projection[a] * m + q.projection[h]])
        throw InternalError("multiplication is not well defined on cosets");
  }
  q.brace = SkewBrace::from_tables(m, std::move(add), std::move(mul));
  return q;
}

// --- restriction -----------------------------------------------------------

std::optional<InvarianceDefect> check_invariant_subset(const SkewBrace& b, const std::vector<Elem>& x) {
  Subset s(b.order(), x);
  for (Elem e : s.elements()) {
    for (Elem h : b.mul_generators())
      if (!s.contains(b.lam(h, e))) return InvarianceDefect{h, e, "lambda"};
    for (Elem g : b.add_generators())
      if (!s.contains(b.sig(g, e))) return InvarianceDefect{g, e, "sigma"};
  }
  return std::nullopt;
}

FinSolution restricted_solution(const SkewBrace& b, std::vector<Elem> x) {
  Subset s(b.order(), std::move(x));
  if (s.size() == 0) throw InvalidInput("empty subset");
  if (auto d = check_invariant_subset(b, s.elements()))
    throw InvalidInput("subset not invariant: " + d->map + "_" + std::to_string(d->a) + " moves " +
                       std::to_string(d->x) + " outside");
  const auto& pts = s.elements();
  const std::size_t m = pts.size();
  std::vector<Elem> pos(b.order(), static_cast<Elem>(-1));
  for (Elem i = 0; i < m; ++i) pos[pts[i]] = i;
  Table lam(m, std::vector<Elem>(m)), rho = lam;
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j) {
      const Elem l = b.lam(pts[i], pts[j]);
      const Elem r = b.mul(b.mul(b.inv(l), pts[i]), pts[j]);
      if (pos[l] == static_cast<Elem>(-1) || pos[r] == static_cast<Elem>(-1))
        throw InternalError("restricted solution leaves the invariant subset");
      lam[i][j] = pos[l];
      rho[j][i] = pos[r];
    }
  return FinSolution(lam, rho);
}

// --- isomorphism -----------------------------------------------------------

std::optional<std::vector<Elem>> brace_isomorphic(const SkewBrace& a, const SkewBrace& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() > kIsomorphismCap)
    throw CapExceeded("brace isomorphism search capped at order " + std::to_string(kIsomorphismCap));
  const std::size_t n = a.order();
  std::vector<std::size_t> mo_a(n), mo_b(n);
  for (Elem x = 0; x < n; ++x) {
    std::size_t k = 1;
    for (Elem y = x; y != 0; y = a.mul(y, x)) ++k;
    mo_a[x] = k;
    k = 1;
    for (Elem y = x; y != 0; y = b.mul(y, x)) ++k;
    mo_b[x] = k;
  }
  std::optional<std::vector<Elem>> found;
  GroupView ga{n, [&a](Elem x, Elem y) { return a.add(x, y); }};
  GroupView gb{n, [&b](Elem x, Elem y) { return b.add(x, y); }};
  for_each_isomorphism(
      ga, gb, [&](Elem x, Elem y) { return mo_a[x] == mo_b[y]; },
      [&](const std::vector<Elem>& phi) {
        for (Elem x = 0; x < n; ++x)
          for (Elem y = 0; y < n; ++y)
            if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
        found = phi;
        return true;
      });
  return found;
}

}  // namespace ybe
