#include "qcat/expr.hpp"

#include <cctype>
#include <sstream>

#include "qcat/errors.hpp"

namespace qcat::expr {

bool operator==(const Node& a, const Node& b) {
  if (a.kind != b.kind) return false;
  auto same = [](const NodePtr& x, const NodePtr& y) {
    if (!x || !y) return !x && !y;
    return *x == *y;
  };
  switch (a.kind) {
    case Node::Kind::Number: return a.value == b.value;
    case Node::Kind::Variable: return a.var == b.var;
    case Node::Kind::Pow: return a.exponent == b.exponent && same(a.lhs, b.lhs);
    default: return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
  }
}

namespace {

NodePtr make(Node::Kind k, std::size_t offset, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->offset = offset;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr run() {
    NodePtr n = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr sum() {
    NodePtr n = product();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (accept('+')) {
        n = make(Node::Kind::Add, at, n, product());
      } else if (accept('-')) {
        n = make(Node::Kind::Sub, at, n, product());
      } else {
        return n;
      }
    }
  }

  NodePtr product() {
    NodePtr n = unary();
    for (;;) {
      skip();
      const std::size_t at = pos_;
      if (!accept('*')) return n;
      n = make(Node::Kind::Mul, at, n, unary());
    }
  }

  NodePtr unary() {
    skip();
    const std::size_t at = pos_;
    if (accept('-')) return make(Node::Kind::Negate, at, unary());
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    skip();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    const bool paren = accept('(');
    const bool negative = accept('-');
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      fail("expected an integer exponent");
    }
    const mpz_class e = digits();
    if (paren && !accept(')')) fail("expected ')'");
    if (e > 1000000) fail("exponent too large");
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Pow;
    n->offset = at;
    n->lhs = base;
    n->exponent = negative ? -e.get_si() : e.get_si();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') fail("chained exponents need parentheses");
    return n;
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  NodePtr atom() {
    skip();
    const std::size_t at = pos_;
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr n = sum();
      if (!accept(')')) fail("expected ')'");
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class v(digits());
      skip();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          fail("expected an integer denominator");
        }
        const std::size_t den_at = pos_;
        mpz_class d = digits();
        if (d == 0) throw ParseError(den_at, "zero denominator");
        v /= d;
      }
      v.canonicalize();
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Number;
      n->offset = at;
      n->value = v;
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view id = s_.substr(at, pos_ - at);
      if (id != "z" && id != "t" && id != "q") {
        throw ParseError(at, "unknown identifier '" + std::string(id) + "'");
      }
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Variable;
      n->offset = at;
      n->var = id[0];
      return n;
    }
    fail("expected an operand");
  }
};

int precedence(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Add:
    case Node::Kind::Sub: return 1;
    case Node::Kind::Mul: return 2;
    case Node::Kind::Negate: return 3;
    case Node::Kind::Pow: return 4;
    case Node::Kind::Number: return n.value < 0 ? 0 : n.value.get_den() == 1 ? 5 : 4;
    case Node::Kind::Variable: return 5;
  }
  return 0;
}

void write(std::ostream& os, const Node& n, int min_prec) {
  const bool paren = precedence(n) < min_prec;
  if (paren) os << '(';
  switch (n.kind) {
    case Node::Kind::Number:
      if (n.value < 0 && !paren) os << '(' << n.value.get_str() << ')';
      else os << n.value.get_str();
      break;
    case Node::Kind::Variable: os << n.var; break;
    case Node::Kind::Negate:
      os << '-';
      write(os, *n.lhs, 3);
      break;
    case Node::Kind::Pow:
      write(os, *n.lhs, 5);
      if (n.exponent < 0) os << "^(" << n.exponent << ')';
      else os << '^' << n.exponent;
      break;
    case Node::Kind::Add:
    case Node::Kind::Sub:
    case Node::Kind::Mul: {
      const int p = precedence(n);
      write(os, *n.lhs, p);
      os << (n.kind == Node::Kind::Add ? " + " : n.kind == Node::Kind::Sub ? " - " : "*");
      write(os, *n.rhs, p + 1);
      break;
    }
  }
  if (paren) os << ')';
}

ZTSeries lower_exact(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Number: return ZTSeries::monomial(QRat(n.value), 0, 0);
    case Node::Kind::Variable:
      if (n.var == 'z') return ZTSeries::monomial(QRat(1), 1, 0);
      if (n.var == 't') return ZTSeries::monomial(QRat(1), 0, 1);
      return ZTSeries::monomial(QRat::q(), 0, 0);
    case Node::Kind::Negate: return -lower_exact(*n.lhs);
    case Node::Kind::Add: return lower_exact(*n.lhs) + lower_exact(*n.rhs);
    case Node::Kind::Sub: return lower_exact(*n.lhs) - lower_exact(*n.rhs);
    case Node::Kind::Mul: return lower_exact(*n.lhs) * lower_exact(*n.rhs);
    case Node::Kind::Pow: {
      const ZTSeries base = lower_exact(*n.lhs);
      if (n.exponent < 0) {
        if (base.terms().size() > 1 || (base.terms().size() == 1 && base.terms().count({0, 0}) == 0)) {
          throw ParseError(n.offset, "negative exponent on an expression in z or t");
        }
        if (base.is_zero()) throw ParseError(n.offset, "zero raised to a negative power");
        return ZTSeries::monomial(pow(base.coeff(0, 0), n.exponent), 0, 0);
      }
      ZTSeries r = ZTSeries::monomial(QRat(1), 0, 0);
      for (long k = 0; k < n.exponent; ++k) r = r * base;
      return r;
    }
  }
  return {};
}

const Node* find_t(const Node& n) {
  if (n.kind == Node::Kind::Variable && n.var == 't') return &n;
  for (const NodePtr& c : {n.lhs, n.rhs}) {
    if (c) {
      if (const Node* hit = find_t(*c)) return hit;
    }
  }
  return nullptr;
}

std::string qpart(const QExp& e) {
  if (e.num == 1) return "q";
  if (e.num < 0) return "q^(" + std::to_string(e.num) + ")";
  return "q^" + std::to_string(e.num);
}

// Signed terms of a Laurent coefficient, as (negative, magnitude text).
std::vector<std::pair<bool, std::string>> coefficient_terms(const QRat& c) {
  if (!c.is_laurent() || c.root() != 1) {
    throw Unsupported("coefficient " + c.to_string() + " is not a Laurent polynomial in q");
  }
  std::vector<std::pair<bool, std::string>> out;
  for (const auto& [e, v] : c.laurent_terms()) {
    const mpq_class a = abs(v);
    std::string s;
    if (e.num == 0) {
      s = a.get_den() == 1 ? a.get_str() : "(" + a.get_str() + ")";
    } else if (a == 1) {
      s = qpart(e);
    } else {
      s = (a.get_den() == 1 ? a.get_str() : "(" + a.get_str() + ")") + "*" + qpart(e);
    }
    out.emplace_back(v < 0, s);
  }
  return out;
}

std::string var_part(char v, int k) {
  if (k == 0) return "";
  return k == 1 ? std::string(1, v) : std::string(1, v) + "^" + std::to_string(k);
}

}  // namespace

NodePtr parse(std::string_view text) { return Parser(text).run(); }

std::string to_text(const Node& n) {
  std::ostringstream os;
  write(os, n, 0);
  return os.str();
}

ZTSeries lower(const Node& n, int trunc_z, int trunc_t) {
  return lower_exact(n).truncated(trunc_z, trunc_t);
}

ZSeries lower_univariate(const Node& n, int trunc) {
  if (const Node* t = find_t(n)) throw ParseError(t->offset, "t is not allowed in a series in z");
  const ZTSeries f = lower_exact(n);
  ZSeries r(0, trunc);
  for (const auto& [k, v] : f.terms()) {
    if (k.i1 <= trunc) r.set(k.i1, v);
  }
  return r;
}

std::string poly_to_text(const ZTSeries& f) {
  std::string out;
  for (const auto& [k, v] : f.terms()) {
    const auto terms = coefficient_terms(v);
    std::string mono = var_part('z', k.i1);
    const std::string tp = var_part('t', k.i2);
    if (!tp.empty()) mono += (mono.empty() ? "" : "*") + tp;
    std::string body;
    bool negative = false;
    if (terms.size() == 1) {
      negative = terms[0].first;
      body = terms[0].second == "1" && !mono.empty() ? mono
             : mono.empty()                          ? terms[0].second
                                                     : terms[0].second + "*" + mono;
    } else {
      body = "(";
      for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) body += terms[i].first ? "-" : "";
        else body += terms[i].first ? " - " : " + ";
        body += terms[i].second;
      }
      body += ")";
      if (!mono.empty()) body += "*" + mono;
    }
    if (out.empty()) out = (negative ? "-" : "") + body;
    else out += (negative ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace qcat::expr
