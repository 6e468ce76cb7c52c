#include "ocs/statistic.hpp"

#include <cctype>

namespace ocs {

struct Statistic::Node {
  enum class Kind { Add, Sub, Mul, Pow, Const, CountG, CountChi } kind;
  NodePtr lhs, rhs;        // Add/Sub/Mul
  uint32_t exponent = 0;   // Pow
  Rat value;               // Const
  uint32_t i = 0, j = 0;   // CountG: X[i,g=j]; CountChi: X[i,chi=j]
};

namespace {

class Parser {
public:
  Parser(const std::string& text, uint32_t d) : s_(text), d_(d) {}

  Statistic::NodePtr run() {
    auto e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

private:
  using Node = Statistic::Node;
  using NodePtr = Statistic::NodePtr;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "' in " + what, pos_);
  }

  long integer() {
    skip_ws();
    size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected integer", start);
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1000000000L) throw ParseError("integer literal too large", start);
      ++pos_;
    }
    return neg ? -v : v;
  }

  NodePtr expr() {
    NodePtr node = term();
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        char op = s_[pos_++];
        auto r = term();
        auto parent = std::make_shared<Node>();
        parent->kind = op == '+' ? Node::Kind::Add : Node::Kind::Sub;
        parent->lhs = node;
        parent->rhs = r;
        node = parent;
      } else {
        return node;
      }
    }
  }

  NodePtr term() {
    NodePtr node = factor();
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        auto r = factor();
        auto parent = std::make_shared<Node>();
        parent->kind = Node::Kind::Mul;
        parent->lhs = node;
        parent->rhs = r;
        node = parent;
      } else {
        return node;
      }
    }
  }

  NodePtr factor() {
    NodePtr base = atom();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      size_t at = pos_;
      long e = integer();
      if (e < 1) throw ParseError("exponent must be a positive integer", at);
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::Pow;
      node->lhs = base;
      node->exponent = static_cast<uint32_t>(e);
      return node;
    }
    return base;
  }

  NodePtr atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      expect(')', "parenthesized expression");
      return inner;
    }
    if (c == 'X') {
      ++pos_;
      expect('[', "cycle count");
      size_t at = pos_;
      long i = integer();
      if (i < 1) throw ParseError("i must be >= 1", at);
      expect(',', "cycle count");
      skip_ws();
      bool chi;
      if (s_.compare(pos_, 3, "chi") == 0) {
        chi = true;
        pos_ += 3;
      } else if (pos_ < s_.size() && s_[pos_] == 'g') {
        chi = false;
        ++pos_;
      } else {
        throw ParseError("expected label 'g <int>' or 'chi <int>'", pos_);
      }
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '=') ++pos_;
      long j = integer();
      expect(']', "cycle count");
      auto node = std::make_shared<Node>();
      node->kind = chi ? Node::Kind::CountChi : Node::Kind::CountG;
      node->i = static_cast<uint32_t>(i);
      long jm = j % static_cast<long>(d_);
      if (jm < 0) jm += d_;
      node->j = static_cast<uint32_t>(jm);
      return node;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      long num = integer();
      long den = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        size_t at = pos_;
        den = integer();
        if (den <= 0) throw ParseError("denominator must be positive", at);
      }
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::Const;
      node->value = Cyc::canonical(Rat(num, den));
      return node;
    }
    throw ParseError("unexpected character", pos_);
  }

  const std::string& s_;
  uint32_t d_;
  size_t pos_ = 0;
};

using Monomial = Statistic::Monomial;

// polynomial in the X[i,g=k] variables with Cyc coefficients
using XPoly = std::map<Monomial, Cyc>;

XPoly xp_const(const Cyc& c) {
  XPoly p;
  if (!c.is_zero()) p.emplace(Monomial{}, c);
  return p;
}

XPoly xp_add(const XPoly& a, const XPoly& b, int sign) {
  XPoly r = a;
  for (const auto& [m, c] : b) {
    auto it = r.find(m);
    Cyc v = sign > 0 ? c : -c;
    if (it == r.end()) {
      r.emplace(m, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) r.erase(it);
    }
  }
  return r;
}

XPoly xp_mul(const XPoly& a, const XPoly& b) {
  XPoly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m = ma;
      for (const auto& [var, e] : mb) m[var] += e;
      Cyc c = ca * cb;
      auto it = r.find(m);
      if (it == r.end()) {
        r.emplace(std::move(m), c);
      } else {
        it->second += c;
        if (it->second.is_zero()) r.erase(it);
      }
    }
  return r;
}

XPoly expand_node(const Statistic::Node& node, uint32_t d) {
  using Kind = Statistic::Node::Kind;
  switch (node.kind) {
    case Kind::Add:
      return xp_add(expand_node(*node.lhs, d), expand_node(*node.rhs, d), +1);
    case Kind::Sub:
      return xp_add(expand_node(*node.lhs, d), expand_node(*node.rhs, d), -1);
    case Kind::Mul:
      return xp_mul(expand_node(*node.lhs, d), expand_node(*node.rhs, d));
    case Kind::Pow: {
      XPoly base = expand_node(*node.lhs, d);
      XPoly r = xp_const(Cyc(Rat(1)));
      for (uint32_t k = 0; k < node.exponent; ++k) r = xp_mul(r, base);
      return r;
    }
    case Kind::Const:
      return xp_const(Cyc(node.value));
    case Kind::CountG: {
      XPoly p;
      p.emplace(Monomial{{{node.i, node.j}, 1}}, Cyc(Rat(1)));
      return p;
    }
    case Kind::CountChi: {
      // X[i,chi=j] = sum_k zeta_d^{jk} X[i,g=k]
      XPoly p;
      for (uint32_t k = 0; k < d; ++k) {
        Cyc coef = Cyc::zeta(static_cast<int>(d), static_cast<long>(node.j) * k);
        p = xp_add(p, xp_mul(xp_const(coef),
                             XPoly{{Monomial{{{node.i, k}, 1}}, Cyc(Rat(1))}}),
                   +1);
      }
      return p;
    }
  }
  throw std::logic_error("unhandled node kind");
}

}  // namespace

Statistic Statistic::parse(const std::string& text, uint32_t d) {
  if (d == 0) throw std::invalid_argument("label modulus must be positive");
  Statistic s;
  s.d_ = d;
  s.text_ = text;
  s.root_ = Parser(text, d).run();
  s.expansion_ = expand_node(*s.root_, d);
  return s;
}

Statistic Statistic::one(uint32_t d) { return parse("1", d); }

Cyc Statistic::eval_node(const Node& node, const LabeledCycleType& t) const {
  switch (node.kind) {
    case Node::Kind::Add:
      return eval_node(*node.lhs, t) + eval_node(*node.rhs, t);
    case Node::Kind::Sub:
      return eval_node(*node.lhs, t) - eval_node(*node.rhs, t);
    case Node::Kind::Mul:
      return eval_node(*node.lhs, t) * eval_node(*node.rhs, t);
    case Node::Kind::Pow: {
      Cyc base = eval_node(*node.lhs, t);
      Cyc r(Rat(1));
      for (uint32_t k = 0; k < node.exponent; ++k) r *= base;
      return r;
    }
    case Node::Kind::Const:
      return Cyc(node.value);
    case Node::Kind::CountG:
      return Cyc(Rat(static_cast<long>(t.count(node.i, node.j))));
    case Node::Kind::CountChi: {
      Cyc acc;
      for (uint32_t k = 0; k < d_; ++k) {
        uint32_t m = t.count(node.i, k);
        if (m == 0) continue;
        acc += Cyc(Rat(static_cast<long>(m))) *
               Cyc::zeta(static_cast<int>(d_), static_cast<long>(node.j) * k);
      }
      return acc;
    }
  }
  throw std::logic_error("unhandled node kind");
}

Cyc Statistic::evaluate(const LabeledCycleType& t) const {
  return eval_node(*root_, t);
}

Cyc Statistic::evaluate_expanded(const LabeledCycleType& t) const {
  Cyc acc;
  for (const auto& [m, c] : expansion_) {
    Cyc term = c;
    bool zero = false;
    for (const auto& [var, e] : m) {
      uint32_t count = t.count(var.first, var.second);
      if (count == 0 && e > 0) { zero = true; break; }
      Cyc base(Rat(static_cast<long>(count)));
      for (uint32_t k = 0; k < e; ++k) term *= base;
    }
    if (!zero) acc += term;
  }
  return acc;
}

uint32_t Statistic::degree() const {
  uint32_t deg = 0;
  for (const auto& [m, c] : expansion_) {
    (void)c;
    uint32_t d = 0;
    for (const auto& [var, e] : m) d += var.first * e;
    deg = std::max(deg, d);
  }
  return deg;
}

}  // namespace ocs
