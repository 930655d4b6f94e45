#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "cliffaut/multivector.hpp"

namespace cliffaut {

/// Parsed multivector expression.
///
/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := '-' unary | power
///   power  := atom ['^' ['-'] int]
///   atom   := int ['/' int] | 'i' | blade | func '(' args ')' | '(' expr ')' | name
///   blade  := 'e' digits | 'e{' int (',' int)* '}'
///   func   := rev | gi | cj | inv | psi | chi | proj
///
/// `proj(spec, x)` takes a grade set `{0,2,n}` or one of even, odd, bar0..bar3,
/// center, all. Blade indices may come in any order and multiply as
/// generators; digit shorthand needs n <= 9. The identity is written `1`
/// and the imaginary unit `i` is only accepted by complex signatures.
class Expression {
 public:
  struct Node;

  Expression(std::shared_ptr<const Node> root, Signature sig);

  const Signature& signature() const { return sig_; }
  const Node& root() const { return *root_; }

 private:
  std::shared_ptr<const Node> root_;
  Signature sig_;
};

using Environment = std::map<std::string, Multivector, std::less<>>;

/// Throws ParseError (with byte offset and expected tokens) or
/// IndexOutOfRange for blade indices above n. Names other than functions
/// must appear in `variables`.
Expression parse_expression(std::string_view text, const Signature& sig,
                            const std::set<std::string, std::less<>>& variables = {});

/// Exact evaluation. Throws SingularError from inv and negative powers.
Multivector eval(const Expression& expr, const Environment& env = {});

/// parse_expression followed by eval, with the environment's names allowed.
Multivector evaluate(std::string_view text, const Signature& sig, const Environment& env = {});

}  // namespace cliffaut
