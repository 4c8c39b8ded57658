#include "charclass/problem.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "charclass/parser.hpp"

namespace charclass {

namespace {

const std::set<std::string> kExpectKeys{"g", "segre", "csm", "chi", "sections"};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

struct Cursor {
  std::string_view line;
  std::size_t pos = 0;

  void skip() {
    while (pos < line.size() && is_space(line[pos])) ++pos;
  }
  bool done() {
    skip();
    return pos >= line.size();
  }
  std::string word() {
    skip();
    std::size_t start = pos;
    while (pos < line.size() && !is_space(line[pos])) ++pos;
    return std::string(line.substr(start, pos - start));
  }
  std::size_t column() const { return pos + 1; }
};

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

BigInt parse_integer(const std::string& text, std::size_t line, std::size_t column) {
  std::size_t i = (text.size() > 1 && text[0] == '-') ? 1 : 0;
  if (i == text.size()) throw ParseError("expected an integer", line, column);
  for (std::size_t k = i; k < text.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw ParseError("expected an integer, found '" + text + "'", line, column);
  return BigInt(text);
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  ProblemFile problem;
  bool have_char = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    Cursor cur{raw};
    if (cur.done()) continue;
    const std::size_t key_col = cur.column();
    const std::string key = cur.word();

    if (key == "name") {
      cur.skip();
      std::string rest(raw.substr(cur.pos));
      while (!rest.empty() && is_space(rest.back())) rest.pop_back();
      problem.name = rest;
    } else if (key == "char") {
      if (have_char) throw ParseError("duplicate 'char' line", line_no, key_col);
      const std::size_t col = (cur.skip(), cur.column());
      std::string value = cur.word();
      BigInt p = parse_integer(value, line_no, col);
      if (p < 3 || p >= (BigInt(1) << 31) || !is_prime(static_cast<std::uint64_t>(p)))
        throw ParseError("characteristic must be an odd prime below 2^31", line_no, col);
      problem.characteristic = static_cast<std::uint32_t>(p);
      have_char = true;
      if (!cur.done()) throw ParseError("unexpected text after the characteristic", line_no, cur.column());
    } else if (key == "vars") {
      if (!problem.variables.empty()) throw ParseError("duplicate 'vars' line", line_no, key_col);
      std::set<std::string> seen;
      while (!cur.done()) {
        const std::size_t col = cur.column();
        std::string v = cur.word();
        if (!valid_identifier(v)) throw ParseError("invalid variable name '" + v + "'", line_no, col);
        if (!seen.insert(v).second) throw ParseError("duplicate variable '" + v + "'", line_no, col);
        problem.variables.push_back(v);
      }
      if (problem.variables.empty()) throw ParseError("'vars' needs at least one variable", line_no, key_col);
    } else if (key == "gen") {
      if (cur.done()) throw ParseError("'gen' needs an expression", line_no, cur.column());
      problem.generators.push_back({std::string(raw.substr(cur.pos)), line_no, cur.column()});
    } else if (key == "expect") {
      const std::size_t col = (cur.skip(), cur.column());
      std::string what = cur.word();
      if (!kExpectKeys.count(what)) throw ParseError("unknown expectation '" + what + "'", line_no, col);
      std::vector<BigInt> values;
      while (!cur.done()) {
        const std::size_t vcol = cur.column();
        std::string token = cur.word();
        std::stringstream parts(token);
        std::string item;
        while (std::getline(parts, item, ','))
          if (!item.empty()) values.push_back(parse_integer(item, line_no, vcol));
      }
      if (values.empty()) throw ParseError("expectation '" + what + "' has no values", line_no, col);
      problem.expectations[what] = std::move(values);
    } else {
      throw ParseError("unknown directive '" + key + "'", line_no, key_col);
    }
  }
  line_no = std::max<std::size_t>(line_no, 1);
  if (problem.variables.empty()) throw ParseError("missing 'vars' line", line_no, 1);
  if (problem.generators.empty()) throw ParseError("no 'gen' lines", line_no, 1);
  return problem;
}

ProblemFile read_problem(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path.string());
  ProblemFile problem = parse_problem(buf.str());
  if (problem.name.empty()) problem.name = path.stem().string();
  return problem;
}

IdealSpec build_ideal(const ProblemFile& problem, std::optional<std::uint32_t> characteristic) {
  const std::uint32_t p = characteristic.value_or(problem.characteristic);
  if (p < 3 || !is_prime(p)) throw UnsupportedError("characteristic " + std::to_string(p) + " is not an odd prime");
  RingPtr ring = Ring::make(problem.variables, PrimeField(p));
  std::vector<Polynomial> gens;
  for (const auto& g : problem.generators) {
    Polynomial f = parse_polynomial(g.text, ring, g.line, g.column - 1);
    if (!f.is_homogeneous())
      throw ParseError("generator is not homogeneous: " + f.to_string(), g.line, g.column);
    gens.push_back(std::move(f));
  }
  bool all_zero = true;
  for (const auto& f : gens) all_zero = all_zero && f.is_zero();
  if (all_zero) throw UnsupportedError("every generator is zero; V is all of projective space");
  return IdealSpec::from_generators(std::move(gens));
}

IdealSpec load_ideal(const std::filesystem::path& path, std::optional<std::uint32_t> characteristic) {
  return build_ideal(read_problem(path), characteristic);
}

}  // namespace charclass
