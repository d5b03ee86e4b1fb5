#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "svh/algebra.hpp"
#include "svh/errors.hpp"

// Line-oriented rule language:
//
//   algebra twisted-sv
//   families L Y M
//   closure antisymmetric
//   bracket L L -> (m - n) L
//   bracket L Y -> (m - n/2) Y
//
// '#' starts a comment. Coefficients are polynomials in n (left index) and
// m (right index) built from rational literals, + - * / ^ and parentheses;
// division is only by nonzero constants.

namespace svh {

namespace dsl_detail {

enum class Tok { Ident, Int, Plus, Minus, Star, Slash, Caret, LParen, RParen, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view line, std::size_t line_no, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = offset;
  while (i < line.size()) {
    char c = line[i];
    std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_' || line[j] == '\''))
        ++j;
      out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Tok::Int, std::string(line.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", col});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw ParseError(line_no, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::End, "", line.size() + 1});
  return out;
}

class RuleParser {
public:
  RuleParser(const AlgebraSpec& spec, std::vector<Token> tokens, std::size_t line)
      : spec_(spec), toks_(std::move(tokens)), line_(line) {}

  // rhs := ['+'|'-'] term { ('+'|'-') term };  term := [coeff] FAMILY
  std::vector<BracketTerm> rhs() {
    std::vector<BracketTerm> terms;
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negate = next().kind == Tok::Minus;
    for (;;) {
      CoeffPoly coeff(Rat(1));
      if (!(peek().kind == Tok::Ident && spec_.find_family(peek().text))) coeff = product();
      const Token& fam = next();
      if (fam.kind != Tok::Ident) fail(fam, "expected family name");
      auto id = spec_.find_family(fam.text);
      if (!id) throw UnknownFamily(line_, fam.column, "unknown family '" + fam.text + "'");
      if (negate) coeff = -coeff;
      terms.push_back({std::move(coeff), *id});
      if (peek().kind == Tok::End) break;
      const Token& sign = next();
      if (sign.kind != Tok::Plus && sign.kind != Tok::Minus) fail(sign, "expected '+', '-' or end of line");
      negate = sign.kind == Tok::Minus;
    }
    return terms;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw ParseError(line_, t.column, what + (t.kind == Tok::End ? " at end of line" : ", got '" + t.text + "'"));
  }

  CoeffPoly expr() {
    CoeffPoly acc;
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negate = next().kind == Tok::Minus;
    acc = product();
    if (negate) acc = -acc;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      CoeffPoly t = product();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  CoeffPoly product() {
    CoeffPoly acc = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      const Token& op = next();
      CoeffPoly rhs = factor();
      if (op.kind == Tok::Star) {
        acc *= rhs;
      } else {
        if (!rhs.is_constant() || rhs.is_zero())
          throw ParseError(line_, op.column, "division only by a nonzero constant");
        acc *= CoeffPoly(Rat(1) / rhs.constant_value());
      }
    }
    return acc;
  }

  CoeffPoly factor() {
    if (peek().kind == Tok::Minus) {
      next();
      return -factor();
    }
    if (peek().kind == Tok::Plus) {
      next();
      return factor();
    }
    CoeffPoly base = primary();
    if (peek().kind == Tok::Caret) {
      const Token& caret = next();
      if (peek().kind != Tok::Int)
        throw ParseError(line_, caret.column, "expected integer exponent after '^'");
      const Token& e = next();
      if (e.text.size() > 3) throw ParseError(line_, e.column, "exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(e.text)));
    }
    return base;
  }

  CoeffPoly primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Int:
        return CoeffPoly(Rat(BigInt(t.text), BigInt(1)));
      case Tok::Ident:
        if (t.text == "n") return CoeffPoly::n();
        if (t.text == "m") return CoeffPoly::m();
        fail(t, "expected 'n', 'm', a number or '('");
        break;
      case Tok::LParen: {
        CoeffPoly inner = expr();
        const Token& close = next();
        if (close.kind != Tok::RParen) fail(close, "expected ')'");
        return inner;
      }
      default:
        fail(t, "expected 'n', 'm', a number or '('");
    }
  }

  const AlgebraSpec& spec_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

inline bool valid_family_name(const std::string& s) {
  if (s.empty() || s == "n" || s == "m") return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

} // namespace dsl_detail

/// Parses rule-DSL text. Errors carry a 1-based line and column.
inline AlgebraSpec parse_algebra(std::string_view text) {
  using namespace dsl_detail;

  std::optional<std::string> name;
  std::optional<std::vector<std::string>> families;
  std::optional<bool> closure;
  struct PendingRule {
    std::size_t line;
    std::string rest;
    std::size_t offset;
  };
  std::vector<PendingRule> pending;

  std::size_t line_no = 0;
  std::istringstream input{std::string(text)};
  std::string line;
  while (std::getline(input, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

    std::size_t kw_begin = line.find_first_not_of(" \t");
    if (kw_begin == std::string::npos) continue;
    std::size_t kw_end = line.find_first_of(" \t", kw_begin);
    if (kw_end == std::string::npos) kw_end = line.size();
    std::string keyword = line.substr(kw_begin, kw_end - kw_begin);

    std::vector<std::pair<std::string, std::size_t>> words;
    for (std::size_t i = kw_end; i < line.size();) {
      i = line.find_first_not_of(" \t", i);
      if (i == std::string::npos) break;
      std::size_t j = line.find_first_of(" \t", i);
      if (j == std::string::npos) j = line.size();
      words.emplace_back(line.substr(i, j - i), i + 1);
      i = j;
    }

    if (keyword == "algebra") {
      if (name) throw ParseError(line_no, kw_begin + 1, "duplicate 'algebra' line");
      if (words.size() != 1) throw ParseError(line_no, kw_end + 1, "expected exactly one algebra name");
      name = words[0].first;
    } else if (keyword == "families") {
      if (families) throw ParseError(line_no, kw_begin + 1, "duplicate 'families' line");
      if (words.empty()) throw ParseError(line_no, kw_end + 1, "expected at least one family name");
      std::vector<std::string> names;
      std::set<std::string> seen;
      for (const auto& [w, col] : words) {
        if (!valid_family_name(w)) throw ParseError(line_no, col, "invalid family name '" + w + "'");
        if (!seen.insert(w).second) throw ParseError(line_no, col, "family '" + w + "' declared twice");
        names.push_back(w);
      }
      families = std::move(names);
    } else if (keyword == "closure") {
      if (closure) throw ParseError(line_no, kw_begin + 1, "duplicate 'closure' line");
      if (words.size() != 1 || (words[0].first != "antisymmetric" && words[0].first != "none"))
        throw ParseError(line_no, words.empty() ? kw_end + 1 : words[0].second,
                         "expected 'antisymmetric' or 'none'");
      closure = words[0].first == "antisymmetric";
    } else if (keyword == "bracket") {
      if (!families) throw ParseError(line_no, kw_begin + 1, "'bracket' before 'families'");
      pending.push_back({line_no, line, kw_end});
    } else {
      throw ParseError(line_no, kw_begin + 1, "unknown directive '" + keyword + "'");
    }
  }

  if (!families) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'families' line");
  AlgebraSpec spec(name.value_or("unnamed"), *families, closure.value_or(false));

  for (const auto& p : pending) {
    auto toks = tokenize(p.rest, p.line, p.offset);
    std::size_t i = 0;
    FamilyId ids[2];
    for (int side = 0; side < 2; ++side, ++i) {
      const Token& t = toks[i];
      if (t.kind != Tok::Ident) throw ParseError(p.line, t.column, "expected family name");
      auto id = spec.find_family(t.text);
      if (!id) throw UnknownFamily(p.line, t.column, "unknown family '" + t.text + "'");
      ids[side] = *id;
    }
    if (toks[i].kind != Tok::Arrow) throw ParseError(p.line, toks[i].column, "expected '->'");
    std::size_t arrow_col = toks[i].column;
    if (spec.rule(ids[0], ids[1]))
      throw DuplicateRule(p.line, toks[0].column,
                          "duplicate bracket rule for " + toks[0].text + " " + toks[1].text);
    if (toks[i + 1].kind == Tok::End) throw ParseError(p.line, arrow_col + 2, "empty right-hand side");
    RuleParser rp(spec, std::vector<Token>(toks.begin() + static_cast<std::ptrdiff_t>(i) + 1, toks.end()),
                  p.line);
    spec.add_rule({ids[0], ids[1], rp.rhs()});
  }
  return spec;
}

inline AlgebraSpec load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str());
}

/// Canonical DSL text; parse_algebra(print_algebra(s)) == s.
inline std::string print_algebra(const AlgebraSpec& spec) {
  std::ostringstream out;
  out << "algebra " << spec.name() << "\n";
  out << "families";
  for (const auto& f : spec.families()) out << " " << f;
  out << "\n";
  out << "closure " << (spec.antisymmetric_closure() ? "antisymmetric" : "none") << "\n";
  for (const auto& [key, rule] : spec.rules()) {
    out << "bracket " << spec.family_name(rule.left) << " " << spec.family_name(rule.right) << " ->";
    if (rule.terms.empty()) out << " (0) " << spec.family_name(rule.left);
    for (std::size_t i = 0; i < rule.terms.size(); ++i) {
      out << (i == 0 ? " " : " + ") << "(" << rule.terms[i].coeff.str() << ") "
          << spec.family_name(rule.terms[i].target);
    }
    out << "\n";
  }
  return out.str();
}

} // namespace svh
