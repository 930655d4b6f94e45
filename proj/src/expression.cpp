#include "cliffaut/expression.hpp"

#include <gmpxx.h>

#include <cctype>
#include <variant>
#include <vector>

#include "cliffaut/groups.hpp"
#include "cliffaut/matrix_rep.hpp"

namespace cliffaut {

struct Expression::Node {
  enum class Kind { Literal, Blade, Variable, Add, Sub, Mul, Neg, Pow, Call };

  Kind kind;
  std::size_t offset = 0;
  Exact value;
  std::vector<int> indices;
  std::string name;
  long exponent = 0;
  std::optional<SubspaceSpec> spec;
  std::vector<std::shared_ptr<const Node>> children;
};

Expression::Expression(std::shared_ptr<const Node> root, Signature sig)
    : root_(std::move(root)), sig_(sig.with_backend(Backend::Exact)) {}

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

constexpr long kMaxExponent = 256;

const std::set<std::string, std::less<>> kFunctions{"rev", "gi", "cj", "inv", "psi", "chi", "proj"};

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig, const std::set<std::string, std::less<>>& vars)
      : text_(text), sig_(sig), vars_(vars) {}

  NodePtr parse() {
    NodePtr root = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected input", {"'+'", "'-'", "'*'", "end of input"});
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const {
    std::string msg = what + " at offset " + std::to_string(pos_);
    if (!expected.empty()) {
      msg += "; expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? ", " : "") + expected[i];
    }
    throw ParseError(msg, pos_, std::move(expected));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail("missing token", {std::string("'") + c + "'"});
  }

  static std::shared_ptr<Node> make(Node::Kind kind, std::size_t offset) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->offset = offset;
    return node;
  }

  static NodePtr binary(Node::Kind kind, std::size_t offset, NodePtr a, NodePtr b) {
    auto node = make(kind, offset);
    node->children = {std::move(a), std::move(b)};
    return node;
  }

  NodePtr expr() {
    NodePtr left = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+')) {
        left = binary(Node::Kind::Add, at, left, term());
      } else if (accept('-')) {
        left = binary(Node::Kind::Sub, at, left, term());
      } else {
        return left;
      }
    }
  }

  NodePtr term() {
    NodePtr left = unary();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (!accept('*')) return left;
      left = binary(Node::Kind::Mul, at, left, unary());
    }
  }

  NodePtr unary() {
    skip_space();
    const std::size_t at = pos_;
    if (accept('-')) {
      auto node = make(Node::Kind::Neg, at);
      node->children = {unary()};
      return node;
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    skip_space();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_space();
    const bool negative = accept('-');
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("exponent must be an integer", {"integer"});
    }
    const mpz_class e = integer();
    if (e > kMaxExponent) fail("exponent too large", {"integer <= " + std::to_string(kMaxExponent)});
    auto node = make(Node::Kind::Pow, at);
    node->exponent = negative ? -e.get_si() : e.get_si();
    node->children = {std::move(base)};
    return node;
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer", {"integer"});
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  static std::vector<std::string> atom_starts() {
    return {"number", "'i'", "blade", "function", "'('", "'-'", "name"};
  }

  NodePtr atom() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input", atom_starts());
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return literal();
    if (accept('(')) {
      NodePtr inner = expr();
      expect(')');
      return inner;
    }
    if (c == 'e' && pos_ + 1 < text_.size() &&
        (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '{')) {
      return blade();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string name = identifier();
      if (name == "e") {
        pos_ = at;
        fail("bare 'e' is not an element; write the identity as 1", {"blade such as e1 or e{1,2}"});
      }
      if (name == "i") {
        if (!sig_.is_complex()) {
          pos_ = at;
          fail("imaginary unit needs a complex signature", {});
        }
        auto node = make(Node::Kind::Literal, at);
        node->value = Exact::imaginary_unit();
        return node;
      }
      if (kFunctions.count(name)) return call(name, at);
      if (vars_.count(name)) {
        auto node = make(Node::Kind::Variable, at);
        node->name = name;
        return node;
      }
      pos_ = at;
      fail("unknown name '" + name + "'", atom_starts());
    }
    fail("unexpected character", atom_starts());
  }

  NodePtr literal() {
    const std::size_t at = pos_;
    mpq_class value(integer());
    if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      const std::size_t den_at = pos_;
      const mpz_class den = integer();
      if (den == 0) {
        pos_ = den_at;
        fail("zero denominator", {"nonzero integer"});
      }
      value = mpq_class(value.get_num(), den);
    }
    auto node = make(Node::Kind::Literal, at);
    node->value = Exact(value);
    return node;
  }

  int index_value(const mpz_class& v, std::size_t at) {
    if (v < 1 || v > sig_.n()) {
      throw IndexOutOfRange("generator index " + v.get_str() + " outside 1.." + std::to_string(sig_.n()) +
                                " at offset " + std::to_string(at),
                            at);
    }
    return static_cast<int>(v.get_si());
  }

  NodePtr blade() {
    const std::size_t at = pos_;
    ++pos_;  // 'e'
    auto node = make(Node::Kind::Blade, at);
    if (text_[pos_] == '{') {
      ++pos_;
      do {
        skip_space();
        const std::size_t idx_at = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("blade index must be an integer", {"integer"});
        }
        node->indices.push_back(index_value(integer(), idx_at));
      } while (accept(','));
      expect('}');
      return node;
    }
    if (sig_.n() > 9) fail("digit blades need n <= 9", {"'e{'"});
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      node->indices.push_back(index_value(text_[pos_] - '0', pos_));
      ++pos_;
    }
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      fail("unexpected character after blade", {"operator"});
    }
    return node;
  }

  SubspaceSpec spec_argument() {
    skip_space();
    const int n = sig_.n();
    if (accept('{')) {
      std::vector<int> grades;
      do {
        skip_space();
        if (accept('n')) {
          grades.push_back(n);
        } else if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          const std::size_t at = pos_;
          const mpz_class k = integer();
          if (k > n) {
            pos_ = at;
            fail("grade above n", {"grade in 0.." + std::to_string(n)});
          }
          grades.push_back(static_cast<int>(k.get_si()));
        } else {
          fail("bad grade", {"integer", "'n'"});
        }
      } while (accept(','));
      expect('}');
      return SubspaceSpec::grades(n, grades);
    }
    const std::size_t at = pos_;
    const std::string word = identifier();
    if (word == "even") return SubspaceSpec::parity(n, 0);
    if (word == "odd") return SubspaceSpec::parity(n, 1);
    if (word == "center") return SubspaceSpec::center(n);
    if (word == "all") return SubspaceSpec::all(n);
    if (word.size() == 4 && word.starts_with("bar") && word[3] >= '0' && word[3] <= '3') {
      return SubspaceSpec::bar(n, word[3] - '0');
    }
    pos_ = at;
    fail("unknown subspace", {"'{'", "even", "odd", "bar0", "bar1", "bar2", "bar3", "center", "all"});
  }

  NodePtr call(const std::string& name, std::size_t at) {
    auto node = make(Node::Kind::Call, at);
    node->name = name;
    expect('(');
    if (name == "proj") {
      node->spec = spec_argument();
      expect(',');
    }
    node->children = {expr()};
    expect(')');
    return node;
  }

  std::string_view text_;
  const Signature& sig_;
  const std::set<std::string, std::less<>>& vars_;
  std::size_t pos_ = 0;
};

Multivector power(const Multivector& base, long exponent) {
  Multivector x = exponent < 0 ? inverse(base) : base;
  long e = exponent < 0 ? -exponent : exponent;
  Multivector out = Multivector::scalar(base.signature(), Exact(1));
  while (e > 0) {
    if (e & 1) out = out * x;
    e >>= 1;
    if (e > 0) x = x * x;
  }
  return out;
}

Multivector evaluate_node(const Node& node, const Signature& sig, const Environment& env) {
  using Kind = Node::Kind;
  auto child = [&](std::size_t i) { return evaluate_node(*node.children[i], sig, env); };
  switch (node.kind) {
    case Kind::Literal:
      return Multivector::scalar(sig, node.value);
    case Kind::Blade: {
      Multivector out = Multivector::scalar(sig, Exact(1));
      for (int a : node.indices) out = out.times_blade(Blade{1} << (a - 1));
      return out;
    }
    case Kind::Variable: {
      const auto it = env.find(node.name);
      if (it == env.end()) throw std::invalid_argument("unbound name '" + node.name + "'");
      if (it->second.signature() != sig) throw SignatureMismatch();
      return it->second;
    }
    case Kind::Add:
      return child(0) + child(1);
    case Kind::Sub:
      return child(0) - child(1);
    case Kind::Mul:
      return child(0) * child(1);
    case Kind::Neg:
      return -child(0);
    case Kind::Pow:
      return power(child(0), node.exponent);
    case Kind::Call: {
      const Multivector x = child(0);
      if (node.name == "rev") return reverse(x);
      if (node.name == "gi") return grade_involution(x);
      if (node.name == "cj") return clifford_conjugate(x);
      if (node.name == "inv") return inverse(x);
      if (node.name == "psi") return psi(x);
      if (node.name == "chi") return chi(x);
      return grade_project(x, *node.spec);
    }
  }
  throw std::logic_error("unhandled expression node");
}

}  // namespace

Expression parse_expression(std::string_view text, const Signature& sig,
                            const std::set<std::string, std::less<>>& variables) {
  Parser parser(text, sig, variables);
  return Expression(parser.parse(), sig);
}

Multivector eval(const Expression& expr, const Environment& env) {
  return evaluate_node(expr.root(), expr.signature(), env);
}

Multivector evaluate(std::string_view text, const Signature& sig, const Environment& env) {
  std::set<std::string, std::less<>> names;
  for (const auto& [name, value] : env) names.insert(name);
  return eval(parse_expression(text, sig, names), env);
}

}  // namespace cliffaut
