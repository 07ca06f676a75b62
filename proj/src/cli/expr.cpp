#include "preproj/expr.hpp"

#include <cctype>
#include <optional>

namespace preproj::cli {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) out += (i ? ", " : "") + expected[i];
  return out;
}

enum class Tok { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i + k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    i += n;
  };
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    const int l = line;
    const int col = column;
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Integer, std::string(s.substr(i, j - i)), l, col});
      advance(j - i);
      continue;
    }
    if (std::isalpha(c)) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), l, col});
      advance(j - i);
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
      default: throw ParseError("unexpected character '" + std::string(1, static_cast<char>(c)) + "'", l, col);
    }
    out.push_back({kind, std::string(1, static_cast<char>(c)), l, col});
    advance(1);
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

bool is_indeterminate(const std::string& s) { return s.size() == 2 && s[0] == 't' && s[1] >= '1' && s[1] <= '9'; }

bool is_known_identifier(const std::string& s) {
  if (s == "x" || s == "y") return true;
  if (s.size() != 2) return false;
  if ((s[0] == 'a' || s[0] == 'b') && s[1] >= '0' && s[1] <= '4') return true;
  return s[0] == 'e' && s[1] >= '0' && s[1] <= '5';
}

const std::vector<std::string> kAtomStart = {"integer", "identifier", "'('", "'-'"};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    if (peek().kind != Tok::End) {
      fail({"'+'", "'-'", "'*'", "'^'", "end of input"});
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::vector<std::string>& expected) const {
    const Token& t = peek();
    throw ParseError("expected " + join_expected(expected) + ", found " + describe(t), t.line, t.column, expected);
  }

  static ExprPtr located(ExprPtr e, const Token& t) {
    auto copy = std::make_shared<Expr>(*e);
    copy->line = t.line;
    copy->column = t.column;
    return copy;
  }

  ExprPtr expr() {
    const Token& first = peek();
    std::vector<ExprPtr> terms{term()};
    std::vector<bool> negated{false};
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      negated.push_back(take().kind == Tok::Minus);
      terms.push_back(term());
    }
    if (terms.size() == 1) return terms.front();
    return located(Expr::make_sum(std::move(terms), std::move(negated)), first);
  }

  ExprPtr term() {
    const Token& first = peek();
    std::vector<ExprPtr> factors{factor()};
    while (peek().kind == Tok::Star) {
      take();
      factors.push_back(factor());
    }
    if (factors.size() == 1) return factors.front();
    return located(Expr::make_product(std::move(factors)), first);
  }

  ExprPtr factor() {
    const Token& first = peek();
    ExprPtr base = atom();
    if (peek().kind != Tok::Caret) return base;
    take();
    if (peek().kind != Tok::Integer) fail({"integer"});
    const Token& n = take();
    if (n.text.size() > 4) throw ParseError("exponent " + n.text + " is too large", n.line, n.column);
    return located(Expr::make_power(base, static_cast<unsigned>(std::stoul(n.text))), first);
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Integer: {
        take();
        std::string text = t.text;
        if (peek().kind == Tok::Slash) {
          take();
          if (peek().kind != Tok::Integer) fail({"integer"});
          const Token& d = take();
          if (d.text.find_first_not_of('0') == std::string::npos) {
            throw ParseError("denominator must be positive", d.line, d.column);
          }
          text += "/" + d.text;
        }
        return located(Expr::make_number(Rational::parse(text)), t);
      }
      case Tok::Ident: {
        take();
        if (is_indeterminate(t.text)) return located(Expr::make_indeterminate(t.text), t);
        if (!is_known_identifier(t.text)) throw ParseError("unknown identifier '" + t.text + "'", t.line, t.column);
        return located(Expr::make_identifier(t.text), t);
      }
      case Tok::LParen: {
        take();
        ExprPtr inner = expr();
        if (peek().kind != Tok::RParen) fail({"'+'", "'-'", "'*'", "'^'", "')'"});
        take();
        return located(Expr::make_group(inner), t);
      }
      case Tok::Minus: {
        take();
        return located(Expr::make_negation(atom()), t);
      }
      default: fail(kAtomStart);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

QuiverKind kind_of(const std::string& ident) {
  if (ident == "x" || ident == "y") return QuiverKind::L2;
  if (ident == "e0") return QuiverKind::Unknown;
  return QuiverKind::E6;
}

const char* to_name(QuiverKind k) { return k == QuiverKind::E6 ? "E6" : "L2"; }

void infer(const Expr& e, QuiverKind& seen, std::string& witness) {
  if (e.kind == Expr::Kind::Identifier) {
    const QuiverKind k = kind_of(e.name);
    if (k == QuiverKind::Unknown) return;
    if (seen == QuiverKind::Unknown) {
      seen = k;
      witness = e.name;
    } else if (seen != k) {
      throw ParseError("identifiers from different quivers: '" + witness + "' (" + to_name(seen) + ") and '" + e.name +
                           "' (" + to_name(k) + ")",
                       e.line, e.column);
    }
    return;
  }
  for (const ExprPtr& c : e.children) infer(*c, seen, witness);
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column, std::vector<std::string> expected)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

ExprPtr Expr::make_number(Rational r) {
  Expr e;
  e.kind = Kind::Number;
  e.number = std::move(r);
  return node(std::move(e));
}

ExprPtr Expr::make_indeterminate(std::string name) {
  Expr e;
  e.kind = Kind::Indeterminate;
  e.name = std::move(name);
  return node(std::move(e));
}

ExprPtr Expr::make_identifier(std::string name) {
  Expr e;
  e.kind = Kind::Identifier;
  e.name = std::move(name);
  return node(std::move(e));
}

ExprPtr Expr::make_product(std::vector<ExprPtr> factors) {
  Expr e;
  e.kind = Kind::Product;
  e.children = std::move(factors);
  return node(std::move(e));
}

ExprPtr Expr::make_sum(std::vector<ExprPtr> terms, std::vector<bool> negated) {
  if (terms.size() != negated.size()) throw std::invalid_argument("sum: one sign per term");
  Expr e;
  e.kind = Kind::Sum;
  e.children = std::move(terms);
  e.negated = std::move(negated);
  return node(std::move(e));
}

ExprPtr Expr::make_negation(ExprPtr operand) {
  Expr e;
  e.kind = Kind::Negation;
  e.children = {std::move(operand)};
  return node(std::move(e));
}

ExprPtr Expr::make_group(ExprPtr inner) {
  Expr e;
  e.kind = Kind::Group;
  e.children = {std::move(inner)};
  return node(std::move(e));
}

ExprPtr Expr::make_power(ExprPtr base, unsigned exponent) {
  Expr e;
  e.kind = Kind::Power;
  e.children = {std::move(base)};
  e.exponent = exponent;
  return node(std::move(e));
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.number != b.number || a.name != b.name || a.negated != b.negated ||
      a.exponent != b.exponent || a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!(*a.children[i] == *b.children[i])) return false;
  }
  return true;
}

ExprPtr parse(std::string_view text) {
  ExprPtr e = Parser(text).parse_all();
  infer_quiver(*e);
  return e;
}

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return e.number.to_string();
    case Expr::Kind::Indeterminate:
    case Expr::Kind::Identifier: return e.name;
    case Expr::Kind::Product: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) out += (i ? "*" : "") + print(*e.children[i]);
      return out;
    }
    case Expr::Kind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += e.negated[i] ? " - " : " + ";
        out += print(*e.children[i]);
      }
      return out;
    }
    case Expr::Kind::Negation: return "-" + print(*e.children[0]);
    case Expr::Kind::Group: return "(" + print(*e.children[0]) + ")";
    case Expr::Kind::Power: return print(*e.children[0]) + "^" + std::to_string(e.exponent);
  }
  return {};
}

QuiverKind infer_quiver(const Expr& e) {
  QuiverKind seen = QuiverKind::Unknown;
  std::string witness;
  infer(e, seen, witness);
  return seen;
}

FreeElement to_element(const Expr& e, const std::shared_ptr<const Quiver>& quiver) {
  switch (e.kind) {
    case Expr::Kind::Number: return FreeElement::one(quiver) * Polynomial(e.number);
    case Expr::Kind::Indeterminate: return FreeElement::one(quiver) * t(e.name[1] - '0');
    case Expr::Kind::Identifier: {
      if (e.name[0] == 'e') {
        const Vertex v = e.name[1] - '0';
        if (!quiver->has_vertex(v)) {
          throw ParseError("'" + e.name + "' is not a vertex of this quiver", e.line, e.column);
        }
        return FreeElement::idempotent(quiver, v);
      }
      if (!quiver->find_arrow(e.name)) {
        throw ParseError("'" + e.name + "' is not an arrow of this quiver", e.line, e.column);
      }
      return FreeElement::word(quiver, e.name);
    }
    case Expr::Kind::Product: {
      FreeElement out = to_element(*e.children[0], quiver);
      for (std::size_t i = 1; i < e.children.size(); ++i) out = out * to_element(*e.children[i], quiver);
      return out;
    }
    case Expr::Kind::Sum: {
      FreeElement out(quiver);
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const FreeElement term = to_element(*e.children[i], quiver);
        out = e.negated[i] ? out - term : out + term;
      }
      return out;
    }
    case Expr::Kind::Negation: return -to_element(*e.children[0], quiver);
    case Expr::Kind::Group: return to_element(*e.children[0], quiver);
    case Expr::Kind::Power: return pow(to_element(*e.children[0], quiver), e.exponent);
  }
  return FreeElement(quiver);
}

}  // namespace preproj::cli
