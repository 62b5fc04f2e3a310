// Writes the shipped corpus of small solutions (size <= 12).

#include <filesystem>
#include <functional>
#include <iostream>

#include "ybe/constructions.hpp"
#include "ybe/io.hpp"

using namespace ybe;

namespace {

struct Entry {
  std::string name, provenance;
  std::function<FinSolution()> build;
};

FinSolution coro1(std::size_t p, std::size_t k, long long a, long long a2, Elem u0) {
  return coro1_build({p, 1, k, FpMatrix::scalar(p, 1, a), FpMatrix::scalar(p, 1, a2), FpVec{u0}}).solution;
}

FinSolution affine(std::size_t p, int family, long long a, long long b, long long c) {
  AffineParams prm;
  prm.p = p;
  prm.family = family;
  prm.a = a;
  prm.b = b;
  prm.c = c;
  return affine_prime_solution(prm);
}

std::vector<Entry> entries() {
  const auto cq3 = [] { return conj_quandle("S3", "(1 2)").solution; };
  return {
      {"flip_2", "Lyubashenko r(x,y) = (y,x) on 2 points", [] { return lyubashenko_build(2, 0, 0); }},
      {"flip_3", "Lyubashenko r(x,y) = (y,x) on 3 points", [] { return lyubashenko_build(3, 0, 0); }},
      {"lyu_3_1_0", "Lyubashenko on Z_3, shifts (1,0)", [] { return lyubashenko_build(3, 1, 0); }},
      {"lyu_4_1_1", "Lyubashenko on Z_4, shifts (1,1)", [] { return lyubashenko_build(4, 1, 1); }},
      {"lyu_5_2_3", "Lyubashenko on Z_5, shifts (2,3)", [] { return lyubashenko_build(5, 2, 3); }},
      {"lyu_6_1_0", "Lyubashenko on Z_6, shifts (1,0)", [] { return lyubashenko_build(6, 1, 0); }},
      {"lyu_7_0_3", "Lyubashenko on Z_7, shifts (0,3)", [] { return lyubashenko_build(7, 0, 3); }},
      {"cq_S3_transpositions", "conjugation quandle of transpositions in S3", cq3},
      {"cq_D10_reflections", "conjugation quandle of reflections in D10",
       [] { return conj_quandle("D10", "(2 5)(3 4)").solution; }},
      {"cq_D14_reflections", "conjugation quandle of reflections in D14",
       [] { return conj_quandle("D14", "(2 7)(3 6)(4 5)").solution; }},
      {"cq_D12_reflections", "conjugation quandle of one reflection class in D12",
       [] { return conj_quandle("D12", "(2 6)(3 5)").solution; }},
      {"cq_D8_reflections", "conjugation quandle of one reflection class in D8",
       [] { return conj_quandle("D8", "(2 4)").solution; }},
      {"cq_S4_transpositions", "conjugation quandle of transpositions in S4",
       [] { return conj_quandle("S4", "(1 2)").solution; }},
      {"cq_S4_3cycles", "conjugation quandle of 3-cycles in S4", [] { return conj_quandle("S4", "(1 2 3)").solution; }},
      {"cq_S4_4cycles", "conjugation quandle of 4-cycles in S4", [] { return conj_quandle("S4", "(1 2 3 4)").solution; }},
      {"cq_A4_3cycles", "conjugation quandle of one 3-cycle class in A4",
       [] { return conj_quandle("A4", "(1 2 3)").solution; }},
      {"cq_A5_5cycles", "conjugation quandle of one 5-cycle class in A5",
       [] { return conj_quandle("A5", "(1 2 3 4 5)").solution; }},
      {"affine_3_f1", "affine family 1 on Z_3, a=1 b=2 c=1", [] { return affine(3, 1, 1, 2, 1); }},
      {"affine_5_f1", "affine family 1 on Z_5, a=2 b=2 c=1", [] { return affine(5, 1, 2, 2, 1); }},
      {"affine_5_f2", "affine family 2 on Z_5, a=3 b=1 c=4", [] { return affine(5, 2, 3, 1, 4); }},
      {"affine_7_f2", "affine family 2 on Z_7, a=2 b=3 c=0", [] { return affine(7, 2, 2, 3, 0); }},
      {"affine_11_f1", "affine family 1 on Z_11, a=3 b=5 c=2", [] { return affine(11, 1, 3, 5, 2); }},
      {"coro1_3_k2_neg", "abelian construction p=3 k=2 A=A'=-1 u0=0", [] { return coro1(3, 2, -1, -1, 0); }},
      {"coro1_3_k6_u1", "abelian construction p=3 k=6 A=-1 A'=1 u0=1", [] { return coro1(3, 6, -1, 1, 1); }},
      {"coro1_5_k4", "abelian construction p=5 k=4 A=2 A'=1 u0=0", [] { return coro1(5, 4, 2, 1, 0); }},
      {"coro1_7_k6", "abelian construction p=7 k=6 A=3 A'=-1 u0=2", [] { return coro1(7, 6, 3, -1, 2); }},
      {"dihedral_5", "dihedral example p=5", [] { return dihedral_example(5).solution; }},
      {"field_2_2", "field example over F_4", [] { return field_example(2, 2).solution; }},
      {"field_3_2", "field example over F_9", [] { return field_example(3, 2).solution; }},
      {"ex_ab_3_2", "rotation example p=3 n=2", [] { return ex_ab(3, 2).solution; }},
      {"union_cq3_cq3", "disjoint union of two S3 transposition quandles",
       [cq3] { return disjoint_union(cq3(), cq3()); }},
      {"union_flip2_lyu3", "disjoint union of a flip and a Lyubashenko solution",
       [] { return disjoint_union(lyubashenko_build(2, 0, 0), lyubashenko_build(3, 1, 0)); }},
      {"product_cq3_lyu2", "direct product of the S3 quandle and a 2-point Lyubashenko solution",
       [cq3] { return direct_product(cq3(), lyubashenko_build(2, 1, 0)); }},
      {"product_cq3_cq3", "direct product of two S3 transposition quandles",
       [cq3] { return direct_product(cq3(), cq3()); }},
      {"derived_coro1_7_k6", "derived solution of coro1_7_k6",
       [] { return derived_solution(coro1(7, 6, 3, -1, 2)); }},
      {"derived_affine_5_f1", "derived solution of affine_5_f1", [] { return derived_solution(affine(5, 1, 2, 2, 1)); }},
      {"assoc_trivial_S3", "associated solution of the trivial brace on S3",
       [] { return associated_solution(trivial_brace(named_group("S3").group)); }},
      {"assoc_almost_trivial_S3", "associated solution of the almost trivial brace on S3",
       [] { return associated_solution(almost_trivial_brace(named_group("S3").group)); }},
      {"assoc_trivial_C4", "associated solution of the trivial brace on C4",
       [] { return associated_solution(trivial_brace(named_group("C4").group)); }},
      {"assoc_coro1_3_k2", "associated solution of the order-6 abelian-construction brace",
       [] {
         return associated_solution(
             coro1_build({3, 1, 2, FpMatrix::scalar(3, 1, -1), FpMatrix::scalar(3, 1, -1), FpVec{0}}).brace);
       }},
      {"byott_2_3", "restricted solution of the Byott brace p=2 q=3", [] { return byott_build(2, 3).solution; }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: ybe_gen_corpus <dir>\n";
    return 1;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  int i = 0;
  for (const Entry& e : entries()) {
    const FinSolution s = e.build();
    if (s.size() > 12) {
      std::cerr << e.name << " has size " << s.size() << ", above 12\n";
      return 1;
    }
    ++i;
    const std::string prefix = (i < 10 ? "0" : "") + std::to_string(i) + "_";
    write_file((dir / (prefix + e.name + ".json")).string(),
               solution_json(s, {{"name", e.name}, {"provenance", e.provenance}}));
  }
  std::cout << "wrote " << i << " solutions to " << dir.string() << "\n";
  return 0;
}
