#include <algorithm>
#include <array>
#include <numeric>

#include "ybe/constructions.hpp"
#include "ybe/error.hpp"

namespace ybe {

namespace {

constexpr std::size_t kRegistryCap = 20000;

std::vector<Perm> all_perms(std::size_t n) {
  std::vector<Elem> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Perm> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

bool even(const Perm& p) {
  std::size_t transpositions = 0;
  std::vector<char> seen(p.degree(), 0);
  for (Elem x = 0; x < p.degree(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (Elem y = x; !seen[y]; y = p[y]) seen[y] = 1, ++len;
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

// Collineations of the Fano plane, a group of order 168.
std::vector<Perm> fano_collineations() {
  static const std::array<std::array<Elem, 3>, 7> lines{{{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6},
                                                          {4, 5, 0}, {5, 6, 1}, {6, 0, 2}}};
  auto is_line = [&](std::array<Elem, 3> t) {
    std::sort(t.begin(), t.end());
    for (auto l : lines) {
      std::sort(l.begin(), l.end());
      if (l == t) return true;
    }
    return false;
  };
  std::vector<Perm> out;
  for (const Perm& p : all_perms(7)) {
    bool ok = true;
    for (const auto& l : lines)
      if (!is_line({p[l[0]], p[l[1]], p[l[2]]})) {
        ok = false;
        break;
      }
    if (ok) out.push_back(p);
  }
  return out;
}

std::size_t parse_size(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    throw InvalidInput(what + " must be a non-negative integer, got '" + s + "'");
  }
  if (pos != s.size()) throw InvalidInput(what + " must be a non-negative integer, got '" + s + "'");
  return v;
}

Example from_cyclic(std::string name, CyclicBrace c, std::string provenance) {
  Example e;
  e.name = std::move(name);
  e.brace = c.brace;
  e.x = c.x;
  e.solution = c.solution;
  e.provenance = std::move(provenance);
  e.cyclic = std::move(c);
  return e;
}

Coro2Data power_data(const NamedGroup& s, std::size_t copies, std::size_t m) {
  if (ipow(s.group.order(), copies) * m > kRegistryCap)
    throw CapExceeded("example exceeds the registry cap of " + std::to_string(kRegistryCap) + " elements");
  Coro2Data d;
  d.v = PowerGroup(s.group, copies);
  d.m = m;
  return d;
}

}  // namespace

Elem NamedGroup::find(const Perm& p) const {
  auto it = index.find(p);
  if (it == index.end()) throw InvalidInput(p.to_cycles() + " is not an element of " + name);
  return it->second;
}

Elem NamedGroup::conj(const Perm& c, Elem s) const { return find(c * labels[s] * c.inverse()); }

NamedGroup named_group(const std::string& name) {
  NamedGroup g;
  g.name = name;
  std::vector<Perm> elems;
  auto number = [&](std::size_t from) { return parse_size(name.substr(from), "group parameter"); };
  if (name == "PSL27") {
    g.degree = 7;
    elems = fano_collineations();
  } else if (name.size() >= 2 && (name[0] == 'S' || name[0] == 'A')) {
    g.degree = number(1);
    if (g.degree < 1 || g.degree > 6) throw InvalidInput("symmetric and alternating groups need degree 1..6");
    for (Perm& p : all_perms(g.degree))
      if (name[0] == 'S' || even(p)) elems.push_back(std::move(p));
  } else if (name.size() >= 2 && name[0] == 'D') {
    const std::size_t order = number(1);
    if (order < 6 || order % 2) throw InvalidInput("dihedral group D<2m> needs even order >= 6");
    g.degree = order / 2;
    std::vector<Elem> rot(g.degree), ref(g.degree);
    for (Elem i = 0; i < g.degree; ++i) {
      rot[i] = static_cast<Elem>((i + 1) % g.degree);
      ref[i] = static_cast<Elem>((g.degree - i) % g.degree);
    }
    elems = closure({Perm(rot), Perm(ref)}, g.degree, kRegistryCap).elements();
  } else if (name.size() >= 2 && name[0] == 'C') {
    g.degree = number(1);
    if (g.degree < 1) throw InvalidInput("cyclic group needs order >= 1");
    std::vector<Elem> rot(g.degree);
    for (Elem i = 0; i < g.degree; ++i) rot[i] = static_cast<Elem>((i + 1) % g.degree);
    elems = closure({Perm(rot)}, g.degree, kRegistryCap).elements();
  } else {
    throw InvalidInput("unknown group '" + name + "' (expected S<n>, A<n>, D<2m>, C<n> or PSL27)");
  }
  g.group = TableGroup::from_perms(std::move(elems), &g.labels);
  for (Elem i = 0; i < g.labels.size(); ++i) g.index.emplace(g.labels[i], i);
  return g;
}

Perm power_automorphism(const PowerGroup& v, const NamedGroup& s, const std::vector<std::size_t>& source,
                        const std::vector<Perm>& conj) {
  const std::size_t c = v.copies();
  if (source.size() != c || conj.size() != c) throw InvalidInput("automorphism data has the wrong length");
  std::vector<std::vector<Elem>> tab(c, std::vector<Elem>(s.group.order()));
  for (std::size_t i = 0; i < c; ++i)
    for (Elem e = 0; e < s.group.order(); ++e) tab[i][e] = s.conj(conj[i], e);
  std::vector<Elem> img(v.order()), parts(c);
  for (Elem e = 0; e < v.order(); ++e) {
    for (std::size_t i = 0; i < c; ++i) parts[i] = tab[i][v.component(e, source[i])];
    img[e] = v.compose(parts);
  }
  return Perm(std::move(img));
}

FpMatrix primitive_companion(std::size_t p, std::size_t n) {
  const std::size_t target = ipow(p, n) - 1;
  for (Elem code = 0; code < ipow(p, n); ++code) {
    // x^n + c_{n-1} x^{n-1} + ... + c_0
    const FpVec c = decode(code, p, n);
    FpMatrix m(p, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m.set(i + 1, i, 1);
    for (std::size_t j = 0; j < n; ++j) m.set(j, n - 1, -static_cast<long long>(c[j]));
    const auto o = m.order();
    if (o && *o == target) return m;
  }
  throw InternalError("no primitive polynomial found");
}

FpMatrix rotation_matrix(std::size_t p, std::size_t n) {
  FpMatrix m(p, n);
  m.set(0, n - 1, 1);
  if (n >= 2) m.set(1, 0, -1);
  for (std::size_t i = 2; i < n; ++i) m.set(i, i - 1, 1);
  if (n == 1) m.set(0, 0, -1);
  return m;
}

Example conj_quandle(const std::string& group, const std::string& rep) {
  const NamedGroup g = named_group(group);
  const Elem r = g.find(Perm::from_cycles(g.degree, rep));
  Example e;
  e.name = "conj_quandle(" + group + "," + rep + ")";
  e.brace = trivial_brace(g.group);
  e.x = conjugacy_class(g.group, r);
  std::sort(e.x.begin(), e.x.end());
  e.solution = restricted_solution(e.brace, e.x);
  e.provenance = "conjugacy class of " + rep + " in the trivial brace on " + group;
  return e;
}

Example dihedral_example(std::size_t p) {
  Coro1Data d{p, 1, 2, FpMatrix::scalar(p, 1, -1), FpMatrix::identity(p, 1), FpVec{0}};
  return from_cyclic("dihedral(" + std::to_string(p) + ")", coro1_build(d),
                     "abelian construction with A = -1, A' = 1 on F_p");
}

Example ex_ab(std::size_t p, std::size_t n) {
  const FpMatrix r = rotation_matrix(p, n);
  Coro1Data d{p, n, 2 * n, r, r, FpVec(n, 0)};
  return from_cyclic("ex_ab(" + std::to_string(p) + "," + std::to_string(n) + ")", coro1_build(d),
                     "abelian construction with A = A' the signed rotation");
}

Example field_example(std::size_t p, std::size_t n) {
  const FpMatrix xi = primitive_companion(p, n);
  Coro1Data d{p, n, ipow(p, n) - 1, xi, xi, FpVec(n, 0)};
  return from_cyclic("field_example(" + std::to_string(p) + "," + std::to_string(n) + ")", coro1_build(d),
                     "abelian construction with A = A' multiplication by a generator of F_q^*");
}

Example sym_n(std::size_t n) {
  const NamedGroup s = named_group("A" + std::to_string(n));
  Coro2Data d = power_data(s, 1, 2);
  const Perm c = Perm::from_cycles(n, "(1 2)");
  d.a = power_automorphism(d.v, s, {0}, {c});
  d.a2 = d.a;
  d.u0 = 0;
  return from_cyclic("sym_n(" + std::to_string(n) + ")", coro2_build(d),
                     "non-abelian construction on A_n with A = A' conjugation by (1 2)");
}

Example an_pr(std::size_t m, std::size_t copies) {
  if (copies < 2) throw InvalidInput("an_pr needs at least two copies");
  const NamedGroup s = named_group("A" + std::to_string(m));
  Coro2Data d = power_data(s, copies, 2 * copies);
  std::vector<std::size_t> source(copies);
  std::vector<Perm> conj(copies, Perm::identity(m));
  source[0] = copies - 1;
  for (std::size_t i = 1; i < copies; ++i) source[i] = i - 1;
  conj[1] = Perm::from_cycles(m, "(1 2)");
  d.a = power_automorphism(d.v, s, source, conj);
  d.a2 = d.a;
  d.u0 = 0;
  return from_cyclic("an_pr(" + std::to_string(m) + "," + std::to_string(copies) + ")", coro2_build(d),
                     "non-abelian construction on A_m^n with A = A' a twisted shift");
}

Example ex1(const std::string& group, std::size_t copies) {
  const NamedGroup s = named_group(group);
  // the first element of order `copies`
  Elem a = 0;
  for (Elem e = 1; e < s.group.order() && a == 0; ++e)
    if (s.group.element_order(e) == copies) a = e;
  if (a == 0) throw InvalidInput(group + " has no element of order " + std::to_string(copies));
  Coro2Data d = power_data(s, copies, copies);
  std::vector<std::size_t> shift(copies), same(copies);
  std::vector<Perm> none(copies, Perm::identity(s.degree)), powers;
  Perm ap = Perm::identity(s.degree);
  std::vector<Elem> u0(copies);
  for (std::size_t i = 0; i < copies; ++i) {
    shift[i] = (i + copies - 1) % copies;
    same[i] = i;
    powers.push_back(ap);
    u0[i] = s.find(ap);
    ap = s.labels[a] * ap;
  }
  d.a = power_automorphism(d.v, s, shift, none);
  d.a2 = power_automorphism(d.v, s, same, powers);
  d.u0 = d.v.compose(u0);
  return from_cyclic("ex1(" + group + "," + std::to_string(copies) + ")", coro2_build(d),
                     "non-abelian construction on S^n with A the shift and A' twisted conjugation by " +
                         s.labels[a].to_cycles());
}

Example example_registry(const std::string& name, const std::vector<std::string>& args) {
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw InvalidInput("example " + name + " takes " + std::to_string(k) + " parameter(s), got " +
                         std::to_string(args.size()));
  };
  auto num = [&](std::size_t i) { return parse_size(args[i], name + " parameter"); };
  if (name == "conj_quandle") {
    need(2);
    return conj_quandle(args[0], args[1]);
  }
  if (name == "dihedral") {
    need(1);
    return dihedral_example(num(0));
  }
  if (name == "ex_ab") {
    need(2);
    return ex_ab(num(0), num(1));
  }
  if (name == "field_example") {
    need(2);
    return field_example(num(0), num(1));
  }
  if (name == "sym_n") {
    need(1);
    return sym_n(num(0));
  }
  if (name == "an_pr") {
    need(2);
    return an_pr(num(0), num(1));
  }
  if (name == "ex1") {
    need(2);
    return ex1(args[0], num(1));
  }
  throw InvalidInput("unknown example '" + name + "'");
}

std::vector<std::string> example_names() {
  return {"conj_quandle", "dihedral", "ex_ab", "field_example", "sym_n", "an_pr", "ex1"};
}

}  // namespace ybe
