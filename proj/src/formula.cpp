#include "ltlbit/formula.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "ltlbit/errors.hpp"

namespace ltlbit {

bool is_unary(Op op) noexcept {
  return op == Op::kNot || op == Op::kNext || op == Op::kGlobally ||
         op == Op::kFinally;
}

bool is_binary(Op op) noexcept {
  return op == Op::kAnd || op == Op::kOr || op == Op::kImplies ||
         op == Op::kUntil;
}

bool is_valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  if (name == "X" || name == "G" || name == "F" || name == "U") return false;
  const auto c0 = static_cast<unsigned char>(name[0]);
  if (!std::isalpha(c0) && c0 != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) {
    throw Error("invalid atom name '" + name + "'");
  }
  auto node = std::make_shared<Node>();
  node->op = Op::kAtom;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::unary(Op op, Formula child) {
  if (!is_unary(op)) throw Error("not a unary operator");
  auto node = std::make_shared<Node>();
  node->op = op;
  node->lhs = std::make_shared<const Formula>(std::move(child));
  return Formula(std::move(node));
}

Formula Formula::binary(Op op, Formula lhs, Formula rhs) {
  if (!is_binary(op)) throw Error("not a binary operator");
  auto node = std::make_shared<Node>();
  node->op = op;
  node->lhs = std::make_shared<const Formula>(std::move(lhs));
  node->rhs = std::make_shared<const Formula>(std::move(rhs));
  return Formula(std::move(node));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  if (a.op() == Op::kAtom) return a.name() == b.name();
  if (!(a.lhs() == b.lhs())) return false;
  return !is_binary(a.op()) || a.rhs() == b.rhs();
}

Formula operator!(Formula f) { return Formula::unary(Op::kNot, std::move(f)); }
Formula operator&&(Formula a, Formula b) {
  return Formula::binary(Op::kAnd, std::move(a), std::move(b));
}
Formula operator||(Formula a, Formula b) {
  return Formula::binary(Op::kOr, std::move(a), std::move(b));
}

namespace ltl {
Formula atom(std::string name) { return Formula::atom(std::move(name)); }
Formula implies(Formula a, Formula b) {
  return Formula::binary(Op::kImplies, std::move(a), std::move(b));
}
Formula next(Formula f) { return Formula::unary(Op::kNext, std::move(f)); }
Formula globally(Formula f) {
  return Formula::unary(Op::kGlobally, std::move(f));
}
Formula eventually(Formula f) {
  return Formula::unary(Op::kFinally, std::move(f));
}
Formula until(Formula a, Formula b) {
  return Formula::binary(Op::kUntil, std::move(a), std::move(b));
}
}  // namespace ltl

namespace {

enum class Tok { kIdent, kNot, kNext, kGlobally, kFinally, kUntil, kAnd, kOr,
                 kImplies, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  Formula parse() {
    if (tok_.kind == Tok::kEnd) fail("empty formula");
    Formula f = parse_implies();
    if (tok_.kind != Tok::kEnd) fail("unexpected '" + std::string(tok_.text) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw FormulaSyntaxError(message, tok_.pos);
  }

  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::size_t start = pos_;
    if (pos_ == text_.size()) {
      tok_ = {Tok::kEnd, "end of input", start};
      return;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view word = text_.substr(start, pos_ - start);
      Tok kind = Tok::kIdent;
      if (word == "X") kind = Tok::kNext;
      if (word == "G") kind = Tok::kGlobally;
      if (word == "F") kind = Tok::kFinally;
      if (word == "U") kind = Tok::kUntil;
      tok_ = {kind, word, start};
      return;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      pos_ += 2;
      tok_ = {Tok::kImplies, text_.substr(start, 2), start};
      return;
    }
    Tok kind;
    switch (c) {
      case '!': kind = Tok::kNot; break;
      case '&': kind = Tok::kAnd; break;
      case '|': kind = Tok::kOr; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      default:
        throw FormulaSyntaxError("unexpected character '" + std::string(1, c) + "'",
                                 start);
    }
    ++pos_;
    tok_ = {kind, text_.substr(start, 1), start};
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (tok_.kind != Tok::kImplies) return lhs;
    advance();
    return ltl::implies(std::move(lhs), parse_implies());
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (tok_.kind == Tok::kOr) {
      advance();
      f = std::move(f) || parse_and();
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_until();
    while (tok_.kind == Tok::kAnd) {
      advance();
      f = std::move(f) && parse_until();
    }
    return f;
  }

  Formula parse_until() {
    Formula lhs = parse_unary();
    if (tok_.kind != Tok::kUntil) return lhs;
    advance();
    return ltl::until(std::move(lhs), parse_until());
  }

  Formula parse_unary() {
    Op op;
    switch (tok_.kind) {
      case Tok::kNot: op = Op::kNot; break;
      case Tok::kNext: op = Op::kNext; break;
      case Tok::kGlobally: op = Op::kGlobally; break;
      case Tok::kFinally: op = Op::kFinally; break;
      default: return parse_primary();
    }
    advance();
    return Formula::unary(op, parse_unary());
  }

  Formula parse_primary() {
    if (tok_.kind == Tok::kIdent) {
      Formula f = ltl::atom(std::string(tok_.text));
      advance();
      return f;
    }
    if (tok_.kind == Tok::kLParen) {
      advance();
      Formula f = parse_implies();
      if (tok_.kind != Tok::kRParen) fail("expected ')'");
      advance();
      return f;
    }
    if (tok_.kind == Tok::kEnd) fail("unexpected end of input");
    fail("unexpected '" + std::string(tok_.text) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token tok_{Tok::kEnd, {}, 0};
};

std::string_view symbol(Op op) {
  switch (op) {
    case Op::kNot: return "!";
    case Op::kNext: return "X";
    case Op::kGlobally: return "G";
    case Op::kFinally: return "F";
    case Op::kAnd: return "&";
    case Op::kOr: return "|";
    case Op::kImplies: return "->";
    case Op::kUntil: return "U";
    case Op::kAtom: break;
  }
  return "";
}

void render_into(const Formula& f, std::string& out) {
  if (f.op() == Op::kAtom) {
    out += f.name();
    return;
  }
  auto operand = [&out](const Formula& g) {
    if (is_binary(g.op())) {
      out += '(';
      render_into(g, out);
      out += ')';
    } else {
      render_into(g, out);
    }
  };
  if (is_unary(f.op())) {
    out += symbol(f.op());
    if (f.op() != Op::kNot) out += ' ';
    operand(f.lhs());
    return;
  }
  operand(f.lhs());
  out += ' ';
  out += symbol(f.op());
  out += ' ';
  operand(f.rhs());
}

std::size_t count_operators(const Formula& f) {
  if (f.op() == Op::kAtom) return 0;
  std::size_t n = 1 + count_operators(f.lhs());
  if (is_binary(f.op())) n += count_operators(f.rhs());
  return n;
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.op() == Op::kAtom) {
    out.insert(f.name());
    return;
  }
  collect_atoms(f.lhs(), out);
  if (is_binary(f.op())) collect_atoms(f.rhs(), out);
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

std::size_t formula_size(const Formula& f) {
  return f.op() == Op::kAtom ? 1 : count_operators(f);
}

std::size_t formula_depth(const Formula& f) {
  if (f.op() == Op::kAtom) return 0;
  std::size_t d = formula_depth(f.lhs());
  if (is_binary(f.op())) d = std::max(d, formula_depth(f.rhs()));
  return d + 1;
}

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

}  // namespace ltlbit
