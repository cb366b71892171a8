#include "tvdlab/field_expr.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <numbers>
#include <utility>

#include "tvdlab/errors.hpp"

namespace tvdlab {

struct Expression::Node {
  enum class Op { Const, Var, Add, Sub, Mul, Div, Pow, Neg, Exp, Log, Sqrt };
  Op op;
  double value = 0.0;
  std::size_t var = 0;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Op op, NodePtr a = nullptr, NodePtr b = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("expression '" + std::string(text_) + "': " + what + " at position " +
                      std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr n = term();
    for (;;) {
      if (accept('+')) {
        n = make(Node::Op::Add, n, term());
      } else if (accept('-')) {
        n = make(Node::Op::Sub, n, term());
      } else {
        return n;
      }
    }
  }

  NodePtr term() {
    NodePtr n = unary();
    for (;;) {
      if (accept('*')) {
        n = make(Node::Op::Mul, n, unary());
      } else if (accept('/')) {
        n = make(Node::Op::Div, n, unary());
      } else {
        return n;
      }
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Node::Op::Neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Node::Op::Pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    if (accept('(')) {
      NodePtr n = expr();
      if (!accept(')')) fail("expected ')'");
      return n;
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    fail("unexpected character");
  }

  NodePtr number() {
    double v = 0.0;
    const char* first = text_.data() + pos_;
    const auto [end, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc()) fail("bad number");
    pos_ += static_cast<std::size_t>(end - first);
    auto n = std::make_shared<Node>();
    n->op = Node::Op::Const;
    n->value = v;
    return n;
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name(text_.substr(start, pos_ - start));

    static const std::pair<const char*, Node::Op> functions[] = {
        {"exp", Node::Op::Exp}, {"log", Node::Op::Log}, {"sqrt", Node::Op::Sqrt}};
    for (const auto& [fname, op] : functions) {
      if (name == fname) {
        if (!accept('(')) fail("expected '(' after " + name);
        NodePtr arg = expr();
        if (!accept(')')) fail("expected ')'");
        return make(op, arg);
      }
    }
    if (name == "id" && accept('(')) {
      NodePtr arg = expr();
      if (!accept(')')) fail("expected ')'");
      return arg;
    }
    if (name == "pi" || name == "e") {
      auto n = std::make_shared<Node>();
      n->op = Node::Op::Const;
      n->value = name == "pi" ? std::numbers::pi : std::numbers::e;
      return n;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == name) {
        auto n = std::make_shared<Node>();
        n->op = Node::Op::Var;
        n->var = i;
        return n;
      }
    }
    pos_ = start;
    fail("unknown identifier '" + name + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

Jet2 evaluate(const Node& n, const std::vector<Jet2>& args) {
  switch (n.op) {
    case Node::Op::Const:
      return Jet2::constant(n.value);
    case Node::Op::Var:
      return args.at(n.var);
    case Node::Op::Add:
      return evaluate(*n.a, args) + evaluate(*n.b, args);
    case Node::Op::Sub:
      return evaluate(*n.a, args) - evaluate(*n.b, args);
    case Node::Op::Mul:
      return evaluate(*n.a, args) * evaluate(*n.b, args);
    case Node::Op::Div:
      return evaluate(*n.a, args) / evaluate(*n.b, args);
    case Node::Op::Pow:
      return pow(evaluate(*n.a, args), evaluate(*n.b, args));
    case Node::Op::Neg:
      return -evaluate(*n.a, args);
    case Node::Op::Exp:
      return exp(evaluate(*n.a, args));
    case Node::Op::Log:
      return log(evaluate(*n.a, args));
    case Node::Op::Sqrt:
      return pow(evaluate(*n.a, args), Jet2::constant(0.5));
  }
  return {};
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Expression Expression::parse(std::string_view text, std::vector<std::string> variables) {
  Expression e;
  e.text_ = std::string(text);
  e.root_ = Parser(text, variables).parse();
  return e;
}

Jet2 Expression::eval(const std::vector<Jet2>& args) const { return evaluate(*root_, args); }

Univariate parse_univariate(std::string_view text) {
  const Expression e = Expression::parse(text, {"v", "x", "id"});
  auto at = [e](double v) {
    const Jet2 x = Jet2::var_r(v);
    return e.eval({x, x, x});
  };
  return Univariate([at](double v) { return at(v).v; }, [at](double v) { return at(v).dr; },
                    [at](double v) { return at(v).drr; });
}

ScalarField parse_field(std::string_view spec) {
  spec = trim(spec);
  if (spec.starts_with("raw:")) {
    const Expression e = Expression::parse(trim(spec.substr(4)), {"r", "s"});
    return ScalarField::general(
        [e](double r, double s) { return e.eval({Jet2::var_r(r), Jet2::var_s(s)}); });
  }
  if (spec.starts_with("split:")) {
    std::string_view rest = spec.substr(6);
    std::string theta = "id";
    std::string psi = "id";
    while (!rest.empty()) {
      const std::size_t semi = rest.find(';');
      const std::string_view part = trim(rest.substr(0, semi));
      rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);
      if (part.empty()) continue;
      const std::size_t eq = part.find('=');
      if (eq == std::string_view::npos) {
        throw DomainError("field spec: expected theta=<expr> or psi=<expr>");
      }
      const std::string_view key = trim(part.substr(0, eq));
      const std::string value(trim(part.substr(eq + 1)));
      if (key == "theta") {
        theta = value;
      } else if (key == "psi") {
        psi = value;
      } else {
        throw DomainError("field spec: unknown key '" + std::string(key) + "'");
      }
    }
    return ScalarField::split(parse_univariate(theta), parse_univariate(psi));
  }
  throw DomainError("field spec must start with 'split:' or 'raw:'");
}

}  // namespace tvdlab
