#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "qcat/series.hpp"

namespace qcat::expr {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// Expressions over rational literals and the variables z, t, q.  Exponents are
// integer literals; only q-only bases may take negative exponents.
struct Node {
  enum class Kind { Number, Variable, Negate, Add, Sub, Mul, Pow };

  Kind kind = Kind::Number;
  std::size_t offset = 0;  // byte offset of the token that starts the node
  mpq_class value;         // Number
  char var = 0;            // Variable
  long exponent = 0;       // Pow
  NodePtr lhs, rhs;        // Negate and Pow use lhs only

  // Structural equality, ignoring offsets.
  friend bool operator==(const Node& a, const Node& b);
};

// Precedence: ^ binds tightest, then unary -, then *, then binary + and -.
// Whitespace is ignored.  Throws ParseError with the byte offset of the
// offending token.
NodePtr parse(std::string_view text);

// Text that parses back to a structurally equal tree.
std::string to_text(const Node& n);

// Exact polynomial in z and t, then cut to the given window.
ZTSeries lower(const Node& n, int trunc_z = kExact, int trunc_t = kExact);
// Univariate lowering; a t anywhere in the expression is a ParseError.
ZSeries lower_univariate(const Node& n, int trunc = kExact);

// Parseable text for a polynomial whose coefficients are Laurent polynomials
// in q with integral exponents.  Unsupported otherwise.
std::string poly_to_text(const ZTSeries& f);

}  // namespace qcat::expr
