#include "ybe/perm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "ybe/error.hpp"

namespace ybe {

std::size_t default_element_cap() {
  if (const char* env = std::getenv("YBE_ELEMENT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

Perm::Perm(std::vector<Elem> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (Elem y : img_) {
    if (y >= img_.size() || seen[y])
      throw InvalidInput("image list is not a permutation of 0.." + std::to_string(img_.size() - 1));
    seen[y] = 1;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<Elem> v(n);
  std::iota(v.begin(), v.end(), Elem{0});
  return Perm(std::move(v), Unchecked{});
}

Perm Perm::from_cycles(std::size_t n, const std::string& text) {
  std::vector<Elem> img(n);
  std::iota(img.begin(), img.end(), Elem{0});
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw InvalidInput("bad cycle notation: " + text);
    ++i;
    std::vector<Elem> cyc;
    for (;;) {
      skip();
      if (i >= text.size()) throw InvalidInput("unterminated cycle: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw InvalidInput("bad cycle notation: " + text);
      unsigned long pt = std::stoul(text.substr(i, j - i));
      if (pt < 1 || pt > n) throw InvalidInput("cycle point out of range: " + text);
      cyc.push_back(static_cast<Elem>(pt - 1));
      i = j;
    }
    std::vector<Elem> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidInput("repeated point in cycle: " + text);
    // cycles compose left to right as written: apply the current map, then this cycle
    std::vector<Elem> step(n);
    std::iota(step.begin(), step.end(), Elem{0});
    for (std::size_t c = 0; c < cyc.size(); ++c) step[cyc[c]] = cyc[(c + 1) % cyc.size()];
    std::vector<Elem> next(n);
    for (Elem x = 0; x < n; ++x) next[x] = step[img[x]];
    img = std::move(next);
    skip();
  }
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<Elem> inv(img_.size());
  for (Elem x = 0; x < img_.size(); ++x) inv[img_[x]] = x;
  return Perm(std::move(inv), Unchecked{});
}

bool Perm::is_identity() const {
  for (Elem x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

std::size_t Perm::order() const {
  std::vector<char> seen(img_.size(), 0);
  std::size_t ord = 1;
  for (Elem x = 0; x < img_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (Elem y = x; !seen[y]; y = img_[y]) {
      seen[y] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::to_cycles() const {
  std::ostringstream os;
  std::vector<char> seen(img_.size(), 0);
  bool any = false;
  for (Elem x = 0; x < img_.size(); ++x) {
    if (seen[x] || img_[x] == x) continue;
    os << '(';
    for (Elem y = x; !seen[y]; y = img_[y]) {
      seen[y] = 1;
      if (y != x) os << ' ';
      os << y + 1;
    }
    os << ')';
    any = true;
  }
  if (!any) os << "()";
  return os.str();
}

Perm operator*(const Perm& f, const Perm& g) {
  if (f.degree() != g.degree()) throw InvalidInput("composing permutations of different degree");
  std::vector<Elem> h(g.degree());
  for (Elem x = 0; x < h.size(); ++x) h[x] = f.img_[g.img_[x]];
  return Perm(std::move(h), Perm::Unchecked{});
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Elem x : p.images()) h = (h ^ x) * 1099511628211ull;
  return h;
}

// --- Partition -------------------------------------------------------------

Partition::Partition(std::vector<Elem> reps) : rep_(std::move(reps)) {
  for (Elem x = 0; x < rep_.size(); ++x) {
    Elem r = rep_[x];
    if (r > x || rep_[r] != r) throw InvalidInput("partition representatives are not canonical");
  }
}

Partition Partition::discrete(std::size_t n) {
  std::vector<Elem> v(n);
  std::iota(v.begin(), v.end(), Elem{0});
  return Partition(std::move(v));
}

Partition Partition::full(std::size_t n) { return Partition(std::vector<Elem>(n, 0)); }

Partition Partition::from_labels(const std::vector<std::size_t>& labels) {
  std::vector<Elem> rep(labels.size());
  std::unordered_map<std::size_t, Elem> first;
  for (Elem x = 0; x < labels.size(); ++x) rep[x] = first.try_emplace(labels[x], x).first->second;
  return Partition(std::move(rep));
}

std::size_t Partition::class_count() const {
  std::size_t c = 0;
  for (Elem x = 0; x < rep_.size(); ++x) c += rep_[x] == x;
  return c;
}

std::vector<Elem> Partition::class_index() const {
  std::vector<Elem> idx(rep_.size());
  Elem next = 0;
  for (Elem x = 0; x < rep_.size(); ++x) idx[x] = rep_[x] == x ? next++ : idx[rep_[x]];
  return idx;
}

std::vector<std::vector<Elem>> Partition::classes() const {
  std::vector<Elem> idx = class_index();
  std::vector<std::vector<Elem>> out(class_count());
  for (Elem x = 0; x < rep_.size(); ++x) out[idx[x]].push_back(x);
  return out;
}

// --- UnionFind -------------------------------------------------------------

UnionFind::UnionFind(std::size_t n) : parent_(n), classes_(n) {
  std::iota(parent_.begin(), parent_.end(), Elem{0});
}

Elem UnionFind::find(Elem x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(Elem a, Elem b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (a < b) parent_[b] = a;
  else parent_[a] = b;
  --classes_;
  return true;
}

Partition UnionFind::partition() {
  // roots are always the least member because unite keeps the smaller root
  std::vector<Elem> rep(parent_.size());
  for (Elem x = 0; x < parent_.size(); ++x) rep[x] = find(x);
  return Partition(std::move(rep));
}

// --- GenGroup --------------------------------------------------------------

bool GenGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

GenGroup closure(const std::vector<Perm>& gens, std::size_t degree, std::size_t cap) {
  for (const Perm& g : gens)
    if (g.degree() != degree) throw InvalidInput("generator degree mismatch");
  GenGroup out;
  out.degree_ = degree;
  out.gens_ = gens;
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> list{Perm::identity(degree)};
  seen.insert(list.front());
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (const Perm& g : gens) {
      Perm h = g * list[i];
      if (seen.insert(h).second) {
        if (list.size() >= cap)
          throw CapExceeded("group closure exceeds element cap " + std::to_string(cap));
        list.push_back(std::move(h));
      }
    }
  }
  std::sort(list.begin(), list.end());
  out.elements_ = std::move(list);
  return out;
}

Partition orbits(const std::vector<Perm>& gens, std::size_t degree) {
  UnionFind uf(degree);
  for (const Perm& g : gens) {
    if (g.degree() != degree) throw InvalidInput("generator degree mismatch");
    for (Elem x = 0; x < degree; ++x) uf.unite(x, g[x]);
  }
  return uf.partition();
}

Primitivity is_primitive(const GenGroup& g) { return is_primitive(g.gens(), g.degree()); }

Primitivity is_primitive(const std::vector<Perm>& gens, std::size_t n) {
  Primitivity res;
  res.transitive = orbits(gens, n).class_count() <= 1;
  if (!res.transitive) return res;
  // minimal block system containing {0, b}, for each b
  for (Elem b = 1; b < n; ++b) {
    UnionFind uf(n);
    uf.unite(0, b);
    std::deque<std::pair<Elem, Elem>> work{{0, b}};
    while (!work.empty() && uf.classes() > 1) {
      auto [u, v] = work.front();
      work.pop_front();
      for (const Perm& g : gens)
        if (uf.unite(g[u], g[v])) work.emplace_back(g[u], g[v]);
    }
    if (uf.classes() > 1) return res;
  }
  res.primitive = true;
  return res;
}

}  // namespace ybe
