// ybe: verify, analyze and construct solutions of the Yang-Baxter equation
// and skew braces.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ybe/constructions.hpp"
#include "ybe/error.hpp"
#include "ybe/io.hpp"

using namespace ybe;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

enum Exit { kPass = 0, kFail = 1, kDisagree = 2, kUndecided = 3 };

std::string yes(bool b) { return b ? "true" : "false"; }

std::string defect_text(const SolutionDefect& d) {
  const auto& w = d.witness;
  switch (d.kind) {
    case SolutionDefect::Kind::Braid:
      return "braid at (x,y,z)=(" + std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ")";
    case SolutionDefect::Kind::LambdaNotBijective:
      return "lambda_" + std::to_string(w[0]) + " not bijective";
    case SolutionDefect::Kind::RhoNotBijective:
      return "rho_" + std::to_string(w[0]) + " not bijective";
    case SolutionDefect::Kind::Shape:
      break;
  }
  return d.message;
}

// --- simplicity criteria ---------------------------------------------------

struct Verdicts {
  std::optional<bool> brute, nl, gen;
  std::string nl_note, gen_note;
  bool disagree = false;
};

Verdicts decide(const FinSolution& s, const std::string& criterion, const SkewBrace* brace,
                const std::vector<Elem>* x) {
  Verdicts v;
  const bool all = criterion == "both";
  if (criterion == "brute" || all) v.brute = is_simple_bruteforce(s);
  if (criterion == "simpleNL" || all) {
    const SimpleNLReport r = simpleNL_check(s);
    v.nl = r.verdict;
    if (!r.applies) v.nl_note = r.note;
  }
  if (criterion == "simpleGEN") {
    if (brace && x) {
      v.gen = simpleGEN_check(*brace, *x).verdict;
    } else if (!profile(s).irretractable) {
      v.gen_note = "not applicable: retractable solutions do not embed in their permutation brace";
    } else {
      const PermutationBrace pb = permutation_brace(s);
      std::vector<Elem> pts = pb.point;
      std::sort(pts.begin(), pts.end());
      v.gen = simpleGEN_check(pb.brace, pts).verdict;
    }
  }
  v.disagree = v.brute && v.nl && *v.brute != *v.nl;
  return v;
}

void put_verdicts(const Verdicts& v, json& j, std::ostream& os) {
  std::vector<std::string> parts;
  if (v.brute) {
    j["simple"]["brute"] = *v.brute;
    parts.push_back(yes(*v.brute) + " (brute)");
  }
  if (v.nl) {
    j["simple"]["simpleNL"] = *v.nl;
    parts.push_back(yes(*v.nl) + (v.nl_note.empty() ? " (simpleNL)" : " (Lyubashenko classification)"));
  }
  if (v.gen) {
    j["simple"]["simpleGEN"] = *v.gen;
    parts.push_back(yes(*v.gen) + " (simpleGEN)");
  }
  if (!v.gen_note.empty()) j["simpleGEN_note"] = v.gen_note;
  std::string line;
  for (std::size_t i = 0; i < parts.size(); ++i) line += (i ? " / " : "") + parts[i];
  if (!line.empty()) os << "simple: " << line << "\n";
  if (!v.gen_note.empty()) os << "simpleGEN: " << v.gen_note << "\n";
  if (v.disagree) os << "ORACLE DISAGREEMENT\n";
}

void describe_solution(const FinSolution& s, json& j, std::ostream& os) {
  const SolutionProfile p = profile(s);
  j["size"] = s.size();
  j["profile"] = {{"involutive", p.involutive}, {"derived_form", p.derived_form}, {"twisted_rack", p.twisted_rack},
                  {"quandle", p.quandle},       {"lyubashenko", p.lyubashenko},   {"indecomposable", p.indecomposable},
                  {"irretractable", p.irretractable}};
  j["retraction_size"] = p.retraction_size;
  j["orbit_count"] = p.orbit_count;
  os << "size: " << s.size() << "\n";
  std::vector<std::string> tags{p.irretractable ? "irretractable" : "retractable"};
  if (p.lyubashenko) {
    const LyubashenkoClass c = classify_lyubashenko(s);
    tags.push_back("Lyubashenko");
    j["lyubashenko"] = {{"simple", c.is_simple}, {"reason", c.reason}};
    tags.push_back(std::string("simple: ") + yes(c.is_simple) + " (" + c.reason + ")");
  }
  if (p.involutive) tags.push_back("involutive");
  if (p.quandle) tags.push_back("quandle");
  else if (p.twisted_rack) tags.push_back("twisted rack");
  tags.push_back(p.indecomposable ? "indecomposable" : std::to_string(p.orbit_count) + " orbits");
  for (std::size_t i = 0; i < tags.size(); ++i) os << (i ? "; " : "") << tags[i];
  os << "\nretraction size: " << p.retraction_size << "\n";
}

void describe_brace(const SkewBrace& b, json& j, std::ostream& os) {
  const BraceInvariants inv = brace_invariants(b);
  const auto min = smallest_nonzero_ideal(b);
  j["order"] = b.order();
  j["socle"] = inv.socle.size();
  j["b2"] = inv.b2.size();
  j["b3"] = inv.b3.size();
  j["trivial"] = inv.is_trivial;
  j["additive_abelian"] = inv.additive_abelian;
  j["smallest_nonzero_ideal"] = min ? json(min->size()) : json(nullptr);
  j["simple_brace"] = min && min->size() == b.order() && b.order() > 1;
  os << "brace order " << b.order() << "; |Soc| = " << inv.socle.size() << ", |B2| = " << inv.b2.size()
     << ", |B3| = " << inv.b3.size() << "; smallest nonzero ideal: "
     << (min ? std::to_string(min->size()) : std::string("none")) << (inv.is_trivial ? "; trivial" : "")
     << (inv.additive_abelian ? "; additive group abelian" : "") << "\n";
}

// --- commands --------------------------------------------------------------

int cmd_verify(const std::string& path) {
  const Document d = read_document(path);
  if (d.kind == Document::Kind::Solution) {
    if (auto def = check_solution(d.lambda, d.rho)) {
      std::cout << "FAIL " << defect_text(*def) << "\n";
      return kFail;
    }
    std::cout << "PASS solution of size " << d.size << "\n";
    return kPass;
  }
  if (auto def = check_brace(d.size, d.add, d.mul)) {
    std::cout << "FAIL " << def->message << "\n";
    return kFail;
  }
  if (d.x) {
    const SkewBrace b = SkewBrace::from_tables(d.size, d.add, d.mul, true);
    if (auto def = check_invariant_subset(b, *d.x)) {
      std::cout << "FAIL X not invariant: " << def->map << "_" << def->a << " moves " << def->x << " outside X\n";
      return kFail;
    }
  }
  std::cout << "PASS brace of order " << d.size << (d.x ? ", |X| = " + std::to_string(d.x->size()) : "") << "\n";
  return kPass;
}

int cmd_analyze(const std::string& path, const std::string& criterion, bool as_json) {
  const Document d = read_document(path);
  json j;
  std::ostringstream os;
  Verdicts v;
  if (d.kind == Document::Kind::Solution) {
    const FinSolution s(d.lambda, d.rho);
    describe_solution(s, j, os);
    v = decide(s, criterion, nullptr, nullptr);
  } else {
    const SkewBrace b = SkewBrace::from_tables(d.size, d.add, d.mul);
    json& jb = j["brace"];
    describe_brace(b, jb, os);
    if (d.x) {
      const FinSolution s = restricted_solution(b, *d.x);
      json& js = j["solution"];
      describe_solution(s, js, os);
      v = decide(s, criterion, &b, &*d.x);
    }
  }
  put_verdicts(v, j, os);
  if (as_json) {
    j["oracle_disagreement"] = v.disagree;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << os.str();
  }
  return v.disagree ? kDisagree : kPass;
}

FpMatrix parse_matrix(const std::string& text, std::size_t p, std::size_t n) {
  std::vector<long long> e;
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::replace(t.begin(), t.end(), ';', ' ');
  std::istringstream in(t);
  long long x;
  while (in >> x) e.push_back(x);
  if (!in.eof()) throw InvalidInput("matrix entries must be integers: " + text);
  return FpMatrix(p, n, e);
}

// "j" or "j^(cycles)" per coordinate, comma separated; j is 0-based.
Perm parse_power_map(const std::string& text, const PowerGroup& v, const NamedGroup& s) {
  std::vector<std::size_t> source;
  std::vector<Perm> conj;
  std::istringstream in(text);
  std::string term;
  while (std::getline(in, term, ',')) {
    term.erase(0, term.find_first_not_of(' '));
    const auto hat = term.find('^');
    const std::string idx = term.substr(0, hat);
    std::size_t pos = 0;
    std::size_t j = 0;
    try {
      j = std::stoul(idx, &pos);
    } catch (const std::exception&) {
      throw InvalidInput("bad coordinate in automorphism term '" + term + "'");
    }
    if (idx.find_first_not_of(' ', pos) != std::string::npos || j >= v.copies())
      throw InvalidInput("bad coordinate in automorphism term '" + term + "'");
    source.push_back(j);
    conj.push_back(hat == std::string::npos ? Perm::identity(s.degree)
                                            : Perm::from_cycles(s.degree, term.substr(hat + 1)));
  }
  return power_automorphism(v, s, source, conj);
}

struct ConstructArgs {
  std::string family, out = ".", format = "json", name, group = "A5", a, a2, u0;
  std::size_t p = 0, q = 0, n = 1, k = 0, copies = 1, m = 2;
  long long la = 0, lb = 0;
  std::vector<std::string> params;
};

void write_outputs(const ConstructArgs& c, const std::optional<SkewBrace>& b, const std::vector<Elem>* x,
                   const FinSolution& s, const Metadata& meta) {
  fs::create_directories(c.out);
  const bool gap = c.format == "gap";
  const std::string stem = (fs::path(c.out) / (c.name.empty() ? c.family : c.name)).string();
  if (b) {
    const std::string f = stem + (gap ? "_brace.g" : "_brace.json");
    write_file(f, gap ? brace_gap(*b) : brace_json(*b, x ? std::optional(*x) : std::nullopt, meta));
    std::cout << "wrote " << f << "\n";
  }
  const std::string f = stem + (gap ? "_solution.g" : "_solution.json");
  write_file(f, gap ? solution_gap(s) : solution_json(s, meta));
  std::cout << "wrote " << f << "\n";
}

int report_cyclic(const ConstructArgs& c, const CyclicBrace& cb, const std::string& provenance) {
  std::cout << "hypotheses:\n" << cb.ledger.to_string();
  std::cout << "brace order " << cb.brace.order() << ", k = " << cb.k << ", |X| = " << cb.x.size() << "\n";
  if (cb.solution_simple_bruteforce) std::cout << "restricted solution simple: " << yes(*cb.solution_simple_bruteforce) << "\n";
  write_outputs(c, cb.brace.order() <= kPermutationBraceLimit ? std::optional(cb.brace) : std::nullopt, &cb.x,
                cb.solution, {{"family", c.family}, {"provenance", provenance}});
  return kPass;
}

int cmd_construct(const ConstructArgs& c) {
  try {
    if (c.family == "coro1") {
      Coro1Data d{c.p, c.n, c.k, parse_matrix(c.a, c.p, c.n), parse_matrix(c.a2, c.p, c.n), {}};
      if (c.u0.empty()) {
        d.u0.assign(c.n, 0);
      } else {
        std::string t = c.u0;
        std::replace(t.begin(), t.end(), ',', ' ');
        std::istringstream in(t);
        const long long p = static_cast<long long>(c.p);
        for (long long e; in >> e;) d.u0.push_back(static_cast<Elem>(((e % p) + p) % p));
        if (!in.eof() || d.u0.size() != c.n) throw InvalidInput("u0 needs " + std::to_string(c.n) + " integers");
      }
      const CyclicBrace cb = coro1_build(d);
      return report_cyclic(c, cb, "abelian construction p=" + std::to_string(c.p) + " n=" + std::to_string(c.n) +
                                      " k=" + std::to_string(c.k) + " A=" + d.a.to_string() + " A'=" +
                                      d.a2.to_string());
    }
    if (c.family == "coro2") {
      const NamedGroup s = named_group(c.group);
      Coro2Data d;
      d.v = PowerGroup(s.group, c.copies);
      d.m = c.m;
      d.a = parse_power_map(c.a, d.v, s);
      d.a2 = parse_power_map(c.a2, d.v, s);
      std::vector<Elem> parts;
      std::istringstream in(c.u0);
      std::string term;
      while (std::getline(in, term, ';')) parts.push_back(s.find(Perm::from_cycles(s.degree, term)));
      if (parts.empty()) parts.assign(c.copies, 0);
      if (parts.size() != c.copies) throw InvalidInput("u0 needs one cycle string per coordinate");
      d.u0 = d.v.compose(parts);
      const CyclicBrace cb = coro2_build(d);
      return report_cyclic(c, cb, "non-abelian construction on " + c.group + "^" + std::to_string(c.copies));
    }
    if (c.family == "byott") {
      const ByottBrace b = byott_build(c.p, c.q);
      std::cout << "M = " << b.m.to_string() << "\nbrace order " << b.brace.order() << ", |X| = " << b.x.size()
                << ", simple brace: " << yes(b.brace_simple) << "\n";
      if (b.solution_simple_bruteforce)
        std::cout << "restricted solution simple: " << yes(*b.solution_simple_bruteforce) << "\n";
      write_outputs(c, b.brace, &b.x, b.solution,
                    {{"family", "byott"}, {"M", b.m.to_string()},
                     {"provenance", "p=" + std::to_string(c.p) + " q=" + std::to_string(c.q)}});
      return b.brace_simple ? kPass : kFail;
    }
    if (c.family == "lyubashenko") {
      const FinSolution s = lyubashenko_build(c.n, c.la, c.lb);
      const LyubashenkoClass cl = classify_lyubashenko(s);
      std::cout << "size " << s.size() << ", simple: " << yes(cl.is_simple) << " (" << cl.reason << ")\n";
      write_outputs(c, std::nullopt, nullptr, s,
                    {{"family", "lyubashenko"},
                     {"provenance", "n=" + std::to_string(c.n) + " a=" + std::to_string(c.la) + " b=" + std::to_string(c.lb)}});
      return kPass;
    }
    if (c.family == "example") {
      const Example e = example_registry(c.name, c.params);
      if (e.cyclic) std::cout << "hypotheses:\n" << e.cyclic->ledger.to_string();
      std::cout << e.name << ": brace order " << e.brace.order() << ", |X| = " << e.x.size() << "\n";
      write_outputs(c, e.brace.order() <= kPermutationBraceLimit ? std::optional(e.brace) : std::nullopt, &e.x,
                    e.solution, {{"family", "example"}, {"name", e.name}, {"provenance", e.provenance}});
      return kPass;
    }
    throw InvalidInput("unknown family '" + c.family + "' (coro1, coro2, byott, lyubashenko, example)");
  } catch (const HypothesisFailure& f) {
    std::cout << "hypotheses:\n" << f.ledger().to_string();
    std::cout << "rejected: " << f.what() << "\n";
    return kFail;
  }
}

// Runs the invariant battery on one file; returns failure messages.
std::vector<std::string> battery(const fs::path& path, bool& disagreement) {
  std::vector<std::string> fails;
  try {
    const Document d = read_document(path.string());
    if (d.kind == Document::Kind::Solution) {
      const FinSolution s(d.lambda, d.rho);
      if (auto b = sigma_factorization_defect(s))
        fails.push_back("sigma_b != lambda_b q rho_b q^-1 at b = " + std::to_string(*b));
      if (derived_solution(s).size() != s.size()) fails.push_back("derived solution has the wrong size");
      const Verdicts v = decide(s, "both", nullptr, nullptr);
      if (v.disagree) {
        disagreement = true;
        fails.push_back("simplicity oracles disagree: brute " + yes(*v.brute) + ", simpleNL " + yes(*v.nl));
      }
    } else {
      const SkewBrace b = SkewBrace::from_tables(d.size, d.add, d.mul);
      (void)brace_invariants(b);
      if (d.x) (void)restricted_solution(b, *d.x);
    }
  } catch (const CapExceeded& e) {
    fails.push_back(std::string("undecided: ") + e.what());
  } catch (const Error& e) {
    fails.push_back(e.what());
  }
  return fails;
}

int cmd_corpus(const std::string& dir, bool as_json) {
  if (!fs::is_directory(dir)) throw InvalidInput(dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  json summary{{"objects", files.size()}, {"failures", json::array()}};
  bool disagreement = false;
  for (const fs::path& f : files)
    for (const std::string& msg : battery(f, disagreement))
      summary["failures"].push_back({{"file", f.filename().string()}, {"error", msg}});
  const std::size_t nf = summary["failures"].size();
  if (as_json) {
    std::cout << summary.dump(2) << "\n";
  } else {
    std::cout << files.size() << " objects, " << nf << " failures\n";
    for (const auto& f : summary["failures"])
      std::cout << "  " << f["file"].get<std::string>() << ": " << f["error"].get<std::string>() << "\n";
  }
  return disagreement ? kDisagree : nf ? kFail : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set-theoretic solutions of the Yang-Baxter equation and skew braces"};
  app.require_subcommand(1);

  std::string path, criterion = "brute", dir;
  bool as_json = false;

  auto* verify = app.add_subcommand("verify", "Validate a solution or brace file");
  verify->add_option("file", path, "JSON file")->required();

  auto* analyze = app.add_subcommand("analyze", "Profile, simplicity and brace invariants");
  analyze->add_option("file", path, "JSON file")->required();
  analyze->add_option("--criterion", criterion, "Simplicity test")
      ->check(CLI::IsMember({"brute", "simpleNL", "simpleGEN", "both"}));
  analyze->add_flag("--json", as_json, "Machine-readable output");
  bool unused = false;
  analyze->add_flag("--simple,--profile,--brace-invariants", unused, "Accepted for compatibility; always reported");

  ConstructArgs c;
  auto* construct = app.add_subcommand("construct", "Build a family member and write its files");
  construct->add_option("family", c.family, "coro1, coro2, byott, lyubashenko or example")->required();
  construct->add_option("--out", c.out, "Output directory");
  construct->add_option("--format", c.format, "json or gap")->check(CLI::IsMember({"json", "gap"}));
  construct->add_option("--p", c.p, "Prime p");
  construct->add_option("--q", c.q, "Prime q (byott)");
  construct->add_option("--n", c.n, "Dimension (coro1) or size (lyubashenko)");
  construct->add_option("--k", c.k, "Order of B/V (coro1)");
  construct->add_option("--A", c.a, "Matrix entries (coro1) or coordinate terms j^(cycles) (coro2)");
  construct->add_option("--A2", c.a2, "Second automorphism, same syntax as --A");
  construct->add_option("--u0", c.u0, "Vector entries (coro1) or ';'-separated cycles (coro2)");
  construct->add_option("--group", c.group, "Simple group for coro2 (A5, A6, PSL27, ...)");
  construct->add_option("--copies", c.copies, "Number of direct factors (coro2)");
  construct->add_option("--m", c.m, "Order of the acting cyclic group (coro2)");
  construct->add_option("--a", c.la, "Shift a (lyubashenko)");
  construct->add_option("--b", c.lb, "Shift b (lyubashenko)");
  construct->add_option("--name", c.name, "Example name, also the output file stem");
  construct->add_option("--param", c.params, "Example parameter (repeatable)");

  auto* corpus = app.add_subcommand("corpus", "Run the invariant battery over a directory");
  corpus->add_option("--dir", dir, "Directory of JSON files")->required();
  corpus->add_option("--check", criterion, "Battery to run")->check(CLI::IsMember({"all"}));
  corpus->add_flag("--json", as_json, "Machine-readable output");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*verify) return cmd_verify(path);
    if (*analyze) return cmd_analyze(path, criterion, as_json);
    if (*construct) return cmd_construct(c);
    if (*corpus) return cmd_corpus(dir, as_json);
  } catch (const CapExceeded& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return kUndecided;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kFail;
}
