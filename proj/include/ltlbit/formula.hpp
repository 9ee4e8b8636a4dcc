#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace ltlbit {

enum class Op {
  kAtom,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kNext,
  kGlobally,
  kFinally,
  kUntil,
};

bool is_unary(Op op) noexcept;
bool is_binary(Op op) noexcept;

/// Immutable LTL formula tree. Copies share structure.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula unary(Op op, Formula child);
  static Formula binary(Op op, Formula lhs, Formula rhs);

  Op op() const noexcept { return node_->op; }
  /// Variable name; only meaningful for atoms.
  const std::string& name() const noexcept { return node_->name; }
  /// Operand of a unary node, or left operand of a binary node.
  const Formula& lhs() const { return *node_->lhs; }
  const Formula& rhs() const { return *node_->rhs; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Op op = Op::kAtom;
    std::string name;
    std::shared_ptr<const Formula> lhs;
    std::shared_ptr<const Formula> rhs;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

Formula operator!(Formula f);
Formula operator&&(Formula a, Formula b);
Formula operator||(Formula a, Formula b);

// Builders for tests and the corpus.
namespace ltl {
Formula atom(std::string name);
Formula implies(Formula a, Formula b);
Formula next(Formula f);
Formula globally(Formula f);
Formula eventually(Formula f);
Formula until(Formula a, Formula b);
}  // namespace ltl

/// Parses formula text.
///
///   atoms      [a-zA-Z_][a-zA-Z0-9_]*, except the operator letters X G F U
///   prefix     ! X G F
///   infix      U  &  |  ->     (tightest first; U and -> associate right)
///
/// Throws FormulaSyntaxError with the offending character offset.
Formula parse_formula(std::string_view text);

/// Canonical text form; parse_formula(render(f)) == f.
std::string render(const Formula& f);

/// Number of operators and connectives; a bare atom has size 1.
std::size_t formula_size(const Formula& f);

/// Longest chain of nested operators; a bare atom has depth 0.
std::size_t formula_depth(const Formula& f);

/// Variable names the formula mentions.
std::set<std::string> atoms_of(const Formula& f);

bool is_valid_atom_name(std::string_view name);

}  // namespace ltlbit
