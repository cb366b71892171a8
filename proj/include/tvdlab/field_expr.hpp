#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tvdlab/jet.hpp"
#include "tvdlab/scalar_field.hpp"

namespace tvdlab {

/// Arithmetic expression over named variables, evaluated on jets so that
/// first and second derivatives come out exactly.
///
/// Grammar: + - * / ^ (right associative), unary minus, parentheses, numbers,
/// the constants pi and e, and the functions exp, log, sqrt and id.
class Expression {
 public:
  /// `variables` lists the accepted identifiers in evaluation order.
  /// Throws DomainError with the offending position on a syntax error.
  static Expression parse(std::string_view text, std::vector<std::string> variables);

  /// Evaluates with args[i] bound to variables[i].
  Jet2 eval(const std::vector<Jet2>& args) const;

  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

/// Univariate function of v (also spelled x or id).
Univariate parse_univariate(std::string_view text);

/// Field spec: `split:theta=<expr>;psi=<expr>` (each in v) or
/// `raw:<expr in r, s>`.  Omitted theta or psi default to id.
ScalarField parse_field(std::string_view spec);

}  // namespace tvdlab
