#pragma once
// Character-polynomial statistics over W_n = (Z/d)^n x| S_n.
//
// Grammar (whitespace-insensitive):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' posint)?
//   atom   := 'X[' posint ',' label ']' | rational | '(' expr ')'
//   label  := 'g' ['='] int | 'chi' ['='] int
//
// X[i,g=k] evaluated at a labeled cycle type counts cycles of length i with
// label k; X[i,chi=j] = sum_k zeta_d^{jk} X[i,g=k].  Labels are reduced
// mod d.  A statistic defines a class function on every W_n simultaneously.

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ocs/cycle_types.hpp"
#include "ocs/cyclotomic.hpp"

namespace ocs {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, size_t offset)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  size_t offset() const { return offset_; }

private:
  size_t offset_;
};

class Statistic {
public:
  // monomial in the variables X[i,g=k]: sorted (i,k) -> exponent
  using Monomial = std::map<std::pair<uint32_t, uint32_t>, uint32_t>;

  static Statistic parse(const std::string& text, uint32_t d);
  static Statistic one(uint32_t d);   // the constant statistic 1

  uint32_t d() const { return d_; }
  const std::string& text() const { return text_; }

  // direct AST evaluation at a labeled cycle type
  Cyc evaluate(const LabeledCycleType& t) const;

  // expanded normal form: finite sum of monomials with cyclotomic
  // coefficients; evaluate_expanded must agree with evaluate
  const std::map<Monomial, Cyc>& expansion() const { return expansion_; }
  Cyc evaluate_expanded(const LabeledCycleType& t) const;

  // degree of the character polynomial: deg X[i,*] = i
  uint32_t degree() const;

  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

private:
  Statistic() = default;
  Cyc eval_node(const Node& node, const LabeledCycleType& t) const;

  uint32_t d_ = 1;
  std::string text_;
  NodePtr root_;
  std::map<Monomial, Cyc> expansion_;
};

}  // namespace ocs
