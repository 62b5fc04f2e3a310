#pragma once

/** @file io.hpp
 *  @brief Canonical JSON interchange for solutions and braces, plus a plain
 *  text dump for external algebra systems.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ybe/brace.hpp"
#include "ybe/solution.hpp"

namespace ybe {

using Metadata = std::map<std::string, std::string>;

/// A parsed interchange document. Exactly one of the two payloads is set.
struct Document {
  enum class Kind { Solution, Brace } kind = Kind::Solution;
  std::size_t size = 0;
  Table lambda, rho;                       // solution files
  std::vector<Elem> add, mul;              // brace files, row-major
  std::optional<std::vector<Elem>> x;      // brace files
  Metadata metadata;
};

// Shape and range checks only; the algebra is validated by the caller.
// Errors carry the source name and, for syntax errors, line and column.
Document parse_document(const std::string& text, const std::string& source = "<input>");
Document read_document(const std::string& path);

std::string solution_json(const FinSolution& s, const Metadata& meta = {});
std::string brace_json(const SkewBrace& b, const std::optional<std::vector<Elem>>& x = std::nullopt,
                       const Metadata& meta = {});
std::string solution_gap(const FinSolution& s);
std::string brace_gap(const SkewBrace& b);

void write_file(const std::string& path, const std::string& text);

}  // namespace ybe
