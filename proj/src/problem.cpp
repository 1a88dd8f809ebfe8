#include "sigmagb/problem.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace sigmagb {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

Ranking parse_ranking(const std::string& s) {
  if (s == "weight") return Ranking::weight;
  if (s == "index") return Ranking::index;
  throw std::invalid_argument("unknown ranking '" + s + "' (expected weight or index)");
}

SigmaOrderKind parse_sigma_order(const std::string& s) {
  if (s == "degrevlex") return SigmaOrderKind::degrevlex;
  if (s == "lex") return SigmaOrderKind::lex;
  throw std::invalid_argument("unknown order on Sigma '" + s + "' (expected degrevlex or lex)");
}

InnerOrder parse_inner_order(const std::string& s) {
  if (s == "lex") return InnerOrder::lex;
  if (s == "degrevlex") return InnerOrder::degrevlex;
  throw std::invalid_argument("unknown inner order '" + s + "' (expected lex or degrevlex)");
}

namespace {

enum class Tok { ident, integer, symbol, newline, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (c == '\n') {
      out.push_back({Tok::newline, "\n", line, col});
      advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::integer, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::string_view("=,[]()+-*^/;").find(c) != std::string_view::npos) {
      out.push_back({Tok::symbol, std::string(1, c), line, col});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

bool same_bound(const std::optional<Truncation>& a, const std::optional<Truncation>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Truncation::Kind::none:
      return true;
    case Truncation::Kind::order:
      return a->order_bound == b->order_bound;
    case Truncation::Kind::weight:
      return a->weight_bound == b->weight_bound;
  }
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  ProblemFile file() {
    ProblemFile p;
    bool have_ring = false;
    std::optional<Ring> ring;
    while (true) {
      skip_newlines();
      if (peek().kind == Tok::end) break;
      const Token kw = expect_ident("a statement");
      if (kw.text == "ring") {
        if (have_ring) fail("duplicate ring declaration", kw);
        ring_decl(p);
        have_ring = true;
        ring.emplace(p.ring());
        end_of_line();
      } else if (kw.text == "order") {
        if (!p.generators.empty()) fail("order must precede the generators", kw);
        order_decl(p);
        if (have_ring) ring.emplace(p.ring());
        end_of_line();
      } else if (kw.text == "bound") {
        bound_decl(p, have_ring);
        end_of_line();
      } else if (kw.text == "gen") {
        if (!have_ring) fail("generator before the ring declaration", kw);
        ring_ = &*ring;
        DiffPolynomial g = expr(true);
        expect_symbol(";");
        p.generators.push_back(std::move(g));
      } else {
        fail("unknown statement '" + kw.text + "'", kw);
      }
    }
    if (!have_ring) fail("missing ring declaration", peek());
    return p;
  }

  DiffPolynomial polynomial(const Ring& ring) {
    ring_ = &ring;
    DiffPolynomial f = expr(true);
    skip_newlines();
    if (peek().kind == Tok::symbol && peek().text == ";") next();
    skip_newlines();
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "' after the expression", peek());
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw ParseError(msg, t.line, t.column); }

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  void skip_newlines() {
    while (peek().kind == Tok::newline) ++pos_;
  }
  bool at_symbol(const char* s) const { return peek().kind == Tok::symbol && peek().text == s; }

  Token expect_ident(const std::string& what) {
    if (peek().kind != Tok::ident) fail("expected " + what, peek());
    return next();
  }
  void expect_symbol(const char* s) {
    if (!at_symbol(s)) {
      fail(std::string("expected '") + s + "'" + (peek().kind == Tok::end ? " before end of input" : ""), peek());
    }
    next();
  }
  long expect_int(const std::string& what, long max_value) {
    if (peek().kind != Tok::integer) fail("expected " + what, peek());
    const Token t = next();
    if (t.text.size() > 9 || std::stol(t.text) > max_value) fail(what + " too large", t);
    return std::stol(t.text);
  }
  void end_of_line() {
    if (peek().kind != Tok::newline && peek().kind != Tok::end) fail("unexpected '" + peek().text + "'", peek());
  }

  std::vector<std::string> name_list() {
    std::vector<std::string> out;
    out.push_back(expect_ident("a name").text);
    while (at_symbol(",")) {
      next();
      out.push_back(expect_ident("a name").text);
    }
    return out;
  }

  void ring_decl(ProblemFile& p) {
    const Token r = expect_ident("'r='");
    if (r.text != "r") fail("expected 'r='", r);
    expect_symbol("=");
    const Token rt = peek();
    const long rank = expect_int("the rank", kMaxRank);
    if (rank < 1) fail("rank must be at least 1", rt);
    p.rank = static_cast<int>(rank);
    const Token v = expect_ident("'vars'");
    if (v.text != "vars") fail("expected 'vars'", v);
    const Token first = peek();
    p.unknowns = name_list();
    if (peek().kind == Tok::ident && peek().text == "params") {
      next();
      p.params = name_list();
    }
    std::vector<std::string> all = p.unknowns;
    all.insert(all.end(), p.params.begin(), p.params.end());
    std::vector<std::string> sorted = all;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("duplicate name in ring", first);
    if (static_cast<int>(p.params.size()) > ParamPoly::kMaxParams) fail("too many parameters", first);
  }

  void order_decl(ProblemFile& p) {
    while (peek().kind == Tok::ident) {
      const Token key = next();
      expect_symbol("=");
      const Token val = expect_ident("a value");
      try {
        if (key.text == "ranking") {
          p.ordering.ranking = parse_ranking(val.text);
        } else if (key.text == "sigma") {
          p.ordering.sigma.kind = parse_sigma_order(val.text);
        } else if (key.text == "inner") {
          p.ordering.inner = parse_inner_order(val.text);
        } else {
          fail("unknown order option '" + key.text + "'", key);
        }
      } catch (const std::invalid_argument& e) {
        fail(e.what(), val);
      }
    }
  }

  void bound_decl(ProblemFile& p, bool have_ring) {
    const Token key = expect_ident("'ord=' or 'weight='");
    expect_symbol("=");
    if (key.text == "ord") {
      p.bound = Truncation::by_order(static_cast<int>(expect_int("an order bound", 255)));
    } else if (key.text == "weight") {
      if (!have_ring) fail("weight bound before the ring declaration", key);
      std::vector<int> c{static_cast<int>(expect_int("a coordinate", 255))};
      while (at_symbol(",")) {
        next();
        c.push_back(static_cast<int>(expect_int("a coordinate", 255)));
      }
      if (static_cast<int>(c.size()) != p.rank) {
        fail("weight bound needs " + std::to_string(p.rank) + " coordinates", key);
      }
      p.bound = Truncation::by_weight(ShiftExponent(std::span<const int>(c)));
    } else {
      fail("unknown bound '" + key.text + "'", key);
    }
  }

  DiffPolynomial expr(bool allow_newlines) {
    if (allow_newlines) skip_newlines();
    DiffPolynomial acc;
    bool negate = false;
    if (at_symbol("+") || at_symbol("-")) negate = next().text == "-";
    acc = term();
    if (negate) acc = neg(acc);
    while (true) {
      skip_newlines();
      if (at_symbol("+")) {
        next();
        acc = add(*ring_, acc, term());
      } else if (at_symbol("-")) {
        next();
        acc = sub(*ring_, acc, term());
      } else {
        return acc;
      }
    }
  }

  DiffPolynomial term() {
    DiffPolynomial acc = power();
    while (true) {
      skip_newlines();
      if (at_symbol("*")) {
        next();
        acc = mul(*ring_, acc, power());
      } else if (at_symbol("/")) {
        const Token slash = next();
        const DiffPolynomial d = power();
        if (d.is_zero()) fail("division by zero", slash);
        if (!d.is_constant()) fail("division is only allowed by scalars", slash);
        acc = scale(d.lc().inverse(), acc);
      } else {
        return acc;
      }
    }
  }

  DiffPolynomial power() {
    skip_newlines();
    if (at_symbol("-")) {
      next();
      return neg(power());
    }
    DiffPolynomial base = primary();
    skip_newlines();
    if (!at_symbol("^")) return base;
    next();
    skip_newlines();
    long e = expect_int("an exponent", 1000);
    DiffPolynomial result = DiffPolynomial::constant(FieldElem(1));
    while (e > 0) {
      if (e & 1) result = mul(*ring_, result, base);
      e >>= 1;
      if (e) base = mul(*ring_, base, base);
    }
    return result;
  }

  DiffPolynomial primary() {
    skip_newlines();
    const Token t = peek();
    if (t.kind == Tok::integer) {
      next();
      return DiffPolynomial::constant(FieldElem(mpz_class(t.text)));
    }
    if (at_symbol("(")) {
      next();
      DiffPolynomial e = expr(true);
      skip_newlines();
      expect_symbol(")");
      return e;
    }
    if (t.kind != Tok::ident) {
      fail(t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'", t);
    }
    next();
    const auto& us = ring_->unknowns();
    const auto& ps = ring_->params();
    int index = -1;
    if (auto it = std::find(us.begin(), us.end(), t.text); it != us.end()) {
      index = static_cast<int>(it - us.begin());
    } else if (ring_->is_extended() && t.text == ring_->homogenizer_name()) {
      index = ring_->homogenizer_index();
    }
    if (index >= 0) {
      if (!at_symbol("[")) {
        fail("unknown '" + t.text + "' needs " + std::to_string(ring_->rank()) + " shift indices", t);
      }
      next();
      std::vector<int> c;
      while (true) {
        c.push_back(static_cast<int>(expect_int("a shift index", 255)));
        if (at_symbol(",")) {
          next();
          continue;
        }
        break;
      }
      expect_symbol("]");
      if (static_cast<int>(c.size()) != ring_->rank()) {
        fail("wrong shift arity for '" + t.text + "': expected " + std::to_string(ring_->rank()) + ", got " +
                 std::to_string(c.size()),
             t);
      }
      const ShiftExponent s{std::span<const int>(c)};
      if (s.degree() > 255) fail("shift degree above 255", t);
      return DiffPolynomial::monomial(FieldElem(1), ring_->variable(index, s));
    }
    if (auto it = std::find(ps.begin(), ps.end(), t.text); it != ps.end()) {
      return DiffPolynomial::constant(FieldElem::param(static_cast<int>(it - ps.begin())));
    }
    fail("undeclared identifier '" + t.text + "'", t);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Ring* ring_ = nullptr;
};

}  // namespace

ProblemFile ProblemFile::with_ordering(const SigmaOrdering& o) const {
  ProblemFile p = *this;
  const Ring from = ring();
  p.ordering = o;
  const Ring to = p.ring();
  for (auto& g : p.generators) g = convert(from, to, g);
  return p;
}

bool operator==(const ProblemFile& a, const ProblemFile& b) {
  return a.rank == b.rank && a.unknowns == b.unknowns && a.params == b.params && a.ordering == b.ordering &&
         same_bound(a.bound, b.bound) && a.generators == b.generators;
}

ProblemFile parse_problem(std::string_view text) { return Parser(text).file(); }

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

DiffPolynomial parse_polynomial(const Ring& ring, std::string_view text) { return Parser(text).polynomial(ring); }

std::string serialize_problem(const ProblemFile& p) {
  std::string s = "ring r=" + std::to_string(p.rank) + " vars ";
  for (std::size_t i = 0; i < p.unknowns.size(); ++i) s += (i ? "," : "") + p.unknowns[i];
  if (!p.params.empty()) {
    s += " params ";
    for (std::size_t i = 0; i < p.params.size(); ++i) s += (i ? "," : "") + p.params[i];
  }
  s += "\norder ranking=";
  s += to_string(p.ordering.ranking);
  s += " sigma=";
  s += to_string(p.ordering.sigma.kind);
  s += " inner=";
  s += to_string(p.ordering.inner);
  s += "\n";
  if (p.bound) {
    if (p.bound->kind == Truncation::Kind::order) {
      s += "bound ord=" + std::to_string(p.bound->order_bound) + "\n";
    } else if (p.bound->kind == Truncation::Kind::weight) {
      s += "bound weight=";
      for (int i = 0; i < p.rank; ++i) s += (i ? "," : "") + std::to_string(p.bound->weight_bound[i]);
      s += "\n";
    }
  }
  const Ring ring = p.ring();
  for (const auto& g : p.generators) s += "gen " + to_string(ring, g) + ";\n";
  return s;
}

}  // namespace sigmagb
