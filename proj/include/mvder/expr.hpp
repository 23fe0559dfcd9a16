#ifndef MVDER_EXPR_HPP
#define MVDER_EXPR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mvder/algebra.hpp"

namespace mvder {

/// Syntax or validation error in an algebra expression, carrying the byte
/// offset and the tokens that would have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected, const std::string& detail)
      : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + detail +
                           " (expected " + expected + ")"),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// Parse tree over the grammar
///   Expr   := Factor ('x' Factor)*
///   Factor := 'L' INT | 'B' INT | '(' Expr ')'
/// with INT >= 2, 'B' INT requiring a power of two, and the multiplication
/// sign accepted as an alias for 'x'.
struct AlgebraExpr {
  enum class Kind { chain, boolean, product };
  Kind kind = Kind::chain;
  int size = 0;                        // carrier size for chain/boolean
  std::vector<AlgebraExpr> factors;    // children for product
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  AlgebraExpr parse() {
    AlgebraExpr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError(pos_, "'x' or end of input", "trailing input");
    }
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool at_times() {
    if (pos_ < text_.size() && text_[pos_] == 'x') return true;
    // UTF-8 multiplication sign
    return pos_ + 1 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xC3 &&
           static_cast<unsigned char>(text_[pos_ + 1]) == 0x97;
  }

  void eat_times() { pos_ += (text_[pos_] == 'x') ? 1 : 2; }

  int parse_int(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') {
      throw ParseError(pos_, "integer", std::string("missing ") + what);
    }
    long long value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000) throw ParseError(start, "smaller integer", "size literal too large");
      ++pos_;
    }
    return static_cast<int>(value);
  }

  AlgebraExpr parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw ParseError(pos_, "'L', 'B' or '('", "unexpected end of input");
    }
    const char c = text_[pos_];
    if (c == 'L') {
      ++pos_;
      const std::size_t arg_at = pos_;
      AlgebraExpr e;
      e.kind = AlgebraExpr::Kind::chain;
      e.size = parse_int("chain size");
      if (e.size < 2) throw ParseError(arg_at, "integer >= 2", "chain size must be at least 2");
      return e;
    }
    if (c == 'B') {
      ++pos_;
      const std::size_t arg_at = pos_;
      AlgebraExpr e;
      e.kind = AlgebraExpr::Kind::boolean;
      e.size = parse_int("Boolean algebra size");
      if (e.size < 2) throw ParseError(arg_at, "integer >= 2", "Boolean algebra size must be at least 2");
      if ((e.size & (e.size - 1)) != 0) {
        throw ParseError(arg_at, "power of two", "Boolean algebra size must be a power of two");
      }
      return e;
    }
    if (c == '(') {
      ++pos_;
      AlgebraExpr e = parse_expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError(pos_, "')'", "unclosed parenthesis");
      }
      ++pos_;
      return e;
    }
    throw ParseError(pos_, "'L', 'B' or '('", "unexpected character");
  }

  AlgebraExpr parse_expr() {
    AlgebraExpr first = parse_factor();
    skip_ws();
    if (!at_times()) return first;
    AlgebraExpr prod;
    prod.kind = AlgebraExpr::Kind::product;
    prod.factors.push_back(std::move(first));
    while (true) {
      skip_ws();
      if (!at_times()) break;
      eat_times();
      prod.factors.push_back(parse_factor());
    }
    return prod;
  }
};

}  // namespace detail

inline AlgebraExpr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// The list of factor algebras an expression multiplies at top level; a
/// non-product expression is its own single factor, and B(2^k) expands to
/// k copies of the two-element chain.
inline std::vector<FiniteMvAlgebra> eval_expr_factors(const AlgebraExpr& e,
                                                      int max_elements = kDefaultMaxElements);

inline FiniteMvAlgebra eval_expr(const AlgebraExpr& e, int max_elements = kDefaultMaxElements) {
  switch (e.kind) {
    case AlgebraExpr::Kind::chain:
      if (e.size > max_elements) throw CapExceeded("eval_expr: chain size exceeds cap");
      return make_chain(e.size);
    case AlgebraExpr::Kind::boolean: {
      if (e.size == 2) return make_chain(2);
      std::vector<FiniteMvAlgebra> twos;
      for (int s = e.size; s > 1; s /= 2) twos.push_back(make_chain(2));
      return make_product(twos, max_elements);
    }
    case AlgebraExpr::Kind::product: {
      std::vector<FiniteMvAlgebra> factors;
      factors.reserve(e.factors.size());
      for (const auto& f : e.factors) factors.push_back(eval_expr(f, max_elements));
      return make_product(factors, max_elements);
    }
  }
  throw InvalidInput("eval_expr: corrupt expression node");
}

inline std::vector<FiniteMvAlgebra> eval_expr_factors(const AlgebraExpr& e, int max_elements) {
  if (e.kind == AlgebraExpr::Kind::product) {
    std::vector<FiniteMvAlgebra> factors;
    factors.reserve(e.factors.size());
    for (const auto& f : e.factors) factors.push_back(eval_expr(f, max_elements));
    return factors;
  }
  if (e.kind == AlgebraExpr::Kind::boolean && e.size > 2) {
    std::vector<FiniteMvAlgebra> twos;
    for (int s = e.size; s > 1; s /= 2) twos.push_back(make_chain(2));
    return twos;
  }
  return {eval_expr(e, max_elements)};
}

/// Whether the expression denotes a chain (L_n, or the Boolean algebra B2).
inline bool expr_is_chain(const AlgebraExpr& e) {
  return e.kind == AlgebraExpr::Kind::chain ||
         (e.kind == AlgebraExpr::Kind::boolean && e.size == 2);
}

}  // namespace mvder

#endif  // MVDER_EXPR_HPP
