#include "semigraph/spec.hpp"

#include <stdexcept>

#include "semigraph/io.hpp"

namespace semigraph {

namespace {

int parse_int(const std::string& text) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + text + "' in spec");
  }
}

/// Splits "(A)x(B)" into A and B, honoring nested parentheses.
std::pair<std::string, std::string> split_product(const std::string& body) {
  if (body.empty() || body.front() != '(')
    throw ParseError("product spec must start with '(': " + body);
  int depth = 0;
  std::size_t close = std::string::npos;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '(') ++depth;
    if (body[i] == ')' && --depth == 0) {
      close = i;
      break;
    }
  }
  if (close == std::string::npos)
    throw ParseError("unbalanced parentheses in product spec: " + body);
  const std::string first = body.substr(1, close - 1);
  std::string rest = body.substr(close + 1);
  if (rest.size() < 3 || rest.front() != 'x' || rest[1] != '(' ||
      rest.back() != ')')
    throw ParseError("product spec must look like (A)x(B): " + body);
  return {first, rest.substr(2, rest.size() - 3)};
}

}  // namespace

SemigroupSpec parse_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("spec needs a 'kind:' prefix: " + text);
  const std::string head = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);

  SemigroupSpec s;
  if (head == "monogenic") {
    const auto comma = body.find(',');
    if (comma == std::string::npos)
      throw ParseError("monogenic spec needs m,r: " + text);
    s.kind = SemigroupSpec::Kind::monogenic;
    s.m = parse_int(body.substr(0, comma));
    s.r = parse_int(body.substr(comma + 1));
  } else if (head == "cyclic") {
    s.kind = SemigroupSpec::Kind::cyclic;
    s.n = parse_int(body);
  } else if (head == "leftzero") {
    s.kind = SemigroupSpec::Kind::leftzero;
    s.n = parse_int(body);
  } else if (head == "table") {
    if (body.empty()) throw ParseError("table spec needs a path");
    s.kind = SemigroupSpec::Kind::table;
    s.path = body;
  } else if (head == "rees") {
    if (body.empty()) throw ParseError("rees spec needs a path");
    s.kind = SemigroupSpec::Kind::rees;
    s.path = body;
  } else if (head == "product") {
    s.kind = SemigroupSpec::Kind::product;
    auto [a, b] = split_product(body);
    s.left = std::make_shared<SemigroupSpec>(parse_spec(a));
    s.right = std::make_shared<SemigroupSpec>(parse_spec(b));
  } else {
    throw ParseError("unknown spec kind '" + head + "'");
  }
  return s;
}

std::string render_spec(const SemigroupSpec& spec) {
  using Kind = SemigroupSpec::Kind;
  switch (spec.kind) {
    case Kind::monogenic:
      return "monogenic:" + std::to_string(spec.m) + "," + std::to_string(spec.r);
    case Kind::cyclic: return "cyclic:" + std::to_string(spec.n);
    case Kind::leftzero: return "leftzero:" + std::to_string(spec.n);
    case Kind::table: return "table:" + spec.path;
    case Kind::rees: return "rees:" + spec.path;
    case Kind::product:
      return "product:(" + render_spec(*spec.left) + ")x(" +
             render_spec(*spec.right) + ")";
  }
  throw ParseError("unrenderable spec");
}

Realized realize(const SemigroupSpec& spec) {
  using Kind = SemigroupSpec::Kind;
  switch (spec.kind) {
    case Kind::monogenic: {
      MonogenicParams p{spec.m, spec.r};
      return Realized{FiniteSemigroup::monogenic(p), p, std::nullopt};
    }
    case Kind::cyclic:
      return Realized{FiniteSemigroup::cyclic_group(spec.n), std::nullopt,
                      std::nullopt};
    case Kind::leftzero:
      return Realized{FiniteSemigroup::left_zero_band(spec.n), std::nullopt,
                      std::nullopt};
    case Kind::table:
      return Realized{read_table_file(spec.path), std::nullopt, std::nullopt};
    case Kind::rees: {
      ReesSemigroup rs = rees_matrix(read_rees_spec_file(spec.path));
      FiniteSemigroup s = rs.semigroup;
      return Realized{std::move(s), std::nullopt, std::move(rs)};
    }
    case Kind::product: {
      Realized a = realize(*spec.left);
      Realized b = realize(*spec.right);
      return Realized{FiniteSemigroup::direct_product(a.semigroup, b.semigroup),
                      std::nullopt, std::nullopt};
    }
  }
  throw ParseError("unrealizable spec");
}

}  // namespace semigraph
