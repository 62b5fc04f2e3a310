#include "ybe/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ybe/error.hpp"

namespace ybe {

namespace {

using nlohmann::json;

std::string row_string(const std::vector<Elem>& row) {
  std::string s = "[";
  for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + std::to_string(row[i]);
  return s + "]";
}

// Keys sorted; each table row on its own line.
class CanonicalWriter {
 public:
  void table(const std::string& key, const Table& t) {
    std::string s = "[\n";
    for (std::size_t i = 0; i < t.size(); ++i) s += "    " + row_string(t[i]) + (i + 1 < t.size() ? ",\n" : "\n");
    fields_[key] = s + "  ]";
  }
  void list(const std::string& key, const std::vector<Elem>& v) { fields_[key] = row_string(v); }
  void value(const std::string& key, const json& j) { fields_[key] = j.dump(); }
  std::string str() const {
    std::string s = "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : fields_) s += "  " + json(k).dump() + ": " + v + (++i < fields_.size() ? ",\n" : "\n");
    return s + "}\n";
  }

 private:
  std::map<std::string, std::string> fields_;
};

Table square(const std::vector<Elem>& flat, std::size_t n) {
  Table t(n);
  for (std::size_t i = 0; i < n; ++i) t[i].assign(flat.begin() + i * n, flat.begin() + (i + 1) * n);
  return t;
}

std::string where(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Table read_table(const json& doc, const std::string& key, std::size_t n, const std::string& src) {
  if (!doc.contains(key)) throw InvalidInput(src + ": missing field '" + key + "'");
  const json& t = doc.at(key);
  if (!t.is_array() || t.size() != n)
    throw InvalidInput(src + ": field '" + key + "' must be an array of " + std::to_string(n) + " rows");
  Table out(n, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = t[i];
    if (!row.is_array() || row.size() != n)
      throw InvalidInput(src + ": field '" + key + "' row " + std::to_string(i) + " must have " +
                         std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      const json& e = row[j];
      if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() >= static_cast<long long>(n))
        throw InvalidInput(src + ": field '" + key + "' row " + std::to_string(i) + " entry " + std::to_string(j) +
                           " is " + e.dump() + ", expected an integer in [0, " + std::to_string(n) + ")");
      out[i][j] = static_cast<Elem>(e.get<long long>());
    }
  }
  return out;
}

}  // namespace

Document parse_document(const std::string& text, const std::string& src) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(src + ": JSON syntax error at " + where(text, e.byte == 0 ? 0 : e.byte - 1));
  }
  if (!doc.is_object()) throw InvalidInput(src + ": top level must be an object");
  if (!doc.contains("size")) throw InvalidInput(src + ": missing field 'size'");
  const json& sz = doc.at("size");
  if (!sz.is_number_integer() || sz.get<long long>() <= 0)
    throw InvalidInput(src + ": field 'size' must be a positive integer");
  Document d;
  d.size = sz.get<std::size_t>();
  const bool sol = doc.contains("lambda") || doc.contains("rho");
  const bool br = doc.contains("add") || doc.contains("mul");
  if (sol == br) throw InvalidInput(src + ": expected either lambda/rho (solution) or add/mul (brace) fields");
  for (const auto& [k, v] : doc.items()) {
    static const std::vector<std::string> known{"size", "lambda", "rho", "add", "mul", "X", "metadata"};
    if (std::find(known.begin(), known.end(), k) == known.end())
      throw InvalidInput(src + ": unknown field '" + k + "'");
  }
  if (doc.contains("metadata")) {
    const json& m = doc.at("metadata");
    if (!m.is_object()) throw InvalidInput(src + ": field 'metadata' must be an object");
    for (const auto& [k, v] : m.items()) d.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
  }
  if (sol) {
    d.kind = Document::Kind::Solution;
    if (doc.contains("X")) throw InvalidInput(src + ": field 'X' belongs to brace files");
    d.lambda = read_table(doc, "lambda", d.size, src);
    d.rho = read_table(doc, "rho", d.size, src);
    return d;
  }
  d.kind = Document::Kind::Brace;
  for (const char* key : {"add", "mul"}) {
    const Table t = read_table(doc, key, d.size, src);
    std::vector<Elem>& flat = std::string(key) == "add" ? d.add : d.mul;
    for (const auto& row : t) flat.insert(flat.end(), row.begin(), row.end());
  }
  if (doc.contains("X")) {
    const json& x = doc.at("X");
    if (!x.is_array()) throw InvalidInput(src + ": field 'X' must be an array");
    std::vector<Elem> pts;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!x[i].is_number_integer() || x[i].get<long long>() < 0 ||
          x[i].get<long long>() >= static_cast<long long>(d.size))
        throw InvalidInput(src + ": field 'X' entry " + std::to_string(i) + " out of range");
      pts.push_back(static_cast<Elem>(x[i].get<long long>()));
    }
    if (!std::is_sorted(pts.begin(), pts.end()) || std::adjacent_find(pts.begin(), pts.end()) != pts.end())
      throw InvalidInput(src + ": field 'X' must be strictly increasing");
    d.x = std::move(pts);
  }
  return d;
}

Document read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

std::string solution_json(const FinSolution& s, const Metadata& meta) {
  CanonicalWriter w;
  w.value("size", s.size());
  w.table("lambda", s.lambda_table());
  w.table("rho", s.rho_table());
  if (!meta.empty()) w.value("metadata", json(meta));
  return w.str();
}

std::string brace_json(const SkewBrace& b, const std::optional<std::vector<Elem>>& x, const Metadata& meta) {
  const std::size_t n = b.order();
  std::vector<Elem> add(n * n), mul(n * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      add[i * n + j] = b.add(i, j);
      mul[i * n + j] = b.mul(i, j);
    }
  CanonicalWriter w;
  w.value("size", n);
  w.table("add", square(add, n));
  w.table("mul", square(mul, n));
  if (x) w.list("X", *x);
  if (!meta.empty()) w.value("metadata", json(meta));
  return w.str();
}

std::string solution_gap(const FinSolution& s) {
  std::ostringstream os;
  os << "# " << s.size() << " points; points are 1.." << s.size() << "\n";
  auto perm_list = [&](const char* name, auto row) {
    os << name << " := [\n";
    for (Elem x = 0; x < s.size(); ++x) {
      os << "  PermList([";
      for (Elem y = 0; y < s.size(); ++y) os << (y ? "," : "") << row(x, y) + 1;
      os << "])" << (x + 1 < s.size() ? "," : "") << "\n";
    }
    os << "];\n";
  };
  perm_list("lambda", [&](Elem x, Elem y) { return s.lambda(x, y); });
  perm_list("rho", [&](Elem x, Elem y) { return s.rho(x, y); });
  return os.str();
}

std::string brace_gap(const SkewBrace& b) {
  std::ostringstream os;
  const std::size_t n = b.order();
  os << "# skew brace of order " << n << "; elements are 1.." << n << ", identity 1\n";
  auto table = [&](const char* name, auto op) {
    os << name << " := [\n";
    for (Elem x = 0; x < n; ++x) {
      os << "  [";
      for (Elem y = 0; y < n; ++y) os << (y ? "," : "") << op(x, y) + 1;
      os << "]" << (x + 1 < n ? "," : "") << "\n";
    }
    os << "];\n";
  };
  table("add", [&](Elem x, Elem y) { return b.add(x, y); });
  table("mul", [&](Elem x, Elem y) { return b.mul(x, y); });
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
  if (!out) throw InvalidInput("error writing " + path);
}

}  // namespace ybe
