#include "semigraph/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace semigraph {

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

int read_int(std::istream& in, const std::string& what) {
  int v;
  if (!(in >> v)) throw ParseError("expected integer for " + what);
  return v;
}

void expect_keyword(std::istream& in, const std::string& kw) {
  std::string tok;
  if (!(in >> tok) || tok != kw)
    throw ParseError("expected keyword '" + kw + "'");
}

void expect_end(std::istream& in, const std::string& path) {
  std::string tok;
  if (in >> tok) throw ParseError("trailing content in " + path + ": " + tok);
}

std::vector<int> read_table_block(std::istream& in, int n) {
  std::vector<int> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n * n; ++i) table.push_back(read_int(in, "table entry"));
  return table;
}

}  // namespace

FiniteSemigroup read_table_file(const std::string& path) {
  auto in = open_or_throw(path);
  const int n = read_int(in, "element count");
  if (n < 1) throw ParseError("element count must be >= 1 in " + path);
  auto table = read_table_block(in, n);
  expect_end(in, path);
  return FiniteSemigroup::from_table(n, std::move(table));
}

ReesSpec read_rees_spec_file(const std::string& path) {
  auto in = open_or_throw(path);
  expect_keyword(in, "group");
  const int n = read_int(in, "group order");
  if (n < 1) throw ParseError("group order must be >= 1 in " + path);
  auto table = read_table_block(in, n);
  FiniteSemigroup group = FiniteSemigroup::from_table(n, std::move(table));
  expect_keyword(in, "I");
  const int p = read_int(in, "I size");
  expect_keyword(in, "L");
  const int q = read_int(in, "L size");
  if (p < 1 || q < 1) throw ParseError("index set sizes must be >= 1");
  std::vector<int> sandwich;
  sandwich.reserve(static_cast<std::size_t>(p) * q);
  for (int i = 0; i < p * q; ++i) {
    std::string tok;
    if (!(in >> tok)) throw ParseError("missing sandwich entry in " + path);
    if (tok == "-") {
      sandwich.push_back(ReesSpec::kZeroEntry);
    } else {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        sandwich.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("bad sandwich entry '" + tok + "' in " + path);
      }
    }
  }
  expect_end(in, path);
  return ReesSpec{std::move(group), p, q, std::move(sandwich)};
}

namespace {

std::string escape_label(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string to_dot(const SimpleGraph& g, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "graph cyclic {\n";
  for (int v = 0; v < g.size(); ++v)
    out << "  " << v << " [label=\"" << escape_label(labels[v]) << "\"];\n";
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string graph_to_json(const SimpleGraph& g,
                          const std::vector<std::string>& labels, int indent) {
  nlohmann::json j;
  j["n"] = g.size();
  j["labels"] = labels;
  auto arr = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) arr.push_back({u, v});
  j["edges"] = arr;
  return j.dump(indent);
}

}  // namespace semigraph
