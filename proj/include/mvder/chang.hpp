#ifndef MVDER_CHANG_HPP
#define MVDER_CHANG_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "mvder/algebra.hpp"

namespace mvder {

/// An element of the infinite MV-chain of formal symbols: Lower k encodes
/// kc (with k = 0 the bottom element 0), Upper k encodes (kc)* (with k = 0
/// the top element 1). The two families never alias, and the order runs
/// 0 < c < 2c < ... < (2c)* < c* < 1.
struct ChangElement {
  enum class Tag { lower, upper };
  Tag tag = Tag::lower;
  std::uint64_t k = 0;

  bool operator==(const ChangElement& o) const { return tag == o.tag && k == o.k; }
  bool operator!=(const ChangElement& o) const { return !(*this == o); }
};

inline ChangElement chang_lower(std::uint64_t k) { return {ChangElement::Tag::lower, k}; }
inline ChangElement chang_upper(std::uint64_t k) { return {ChangElement::Tag::upper, k}; }
inline ChangElement chang_zero() { return chang_lower(0); }
inline ChangElement chang_one() { return chang_upper(0); }

inline std::string chang_name(const ChangElement& x) {
  if (x.tag == ChangElement::Tag::lower) {
    if (x.k == 0) return "0";
    if (x.k == 1) return "c";
    return std::to_string(x.k) + "c";
  }
  if (x.k == 0) return "1";
  if (x.k == 1) return "c*";
  return "(" + std::to_string(x.k) + "c)*";
}

namespace detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw InvalidInput("chang: index overflow in formal sum");
  }
  return a + b;
}

}  // namespace detail

/// nc + mc = (n+m)c; (nc)* + (mc)* = 1; nc + (mc)* = 1 when m <= n and
/// ((m-n)c)* when m > n.
inline ChangElement chang_oplus(const ChangElement& a, const ChangElement& b) {
  using Tag = ChangElement::Tag;
  if (a.tag == Tag::lower && b.tag == Tag::lower) {
    return chang_lower(detail::checked_add(a.k, b.k));
  }
  if (a.tag == Tag::upper && b.tag == Tag::upper) return chang_one();
  const std::uint64_t n = (a.tag == Tag::lower) ? a.k : b.k;  // the kc operand
  const std::uint64_t m = (a.tag == Tag::upper) ? a.k : b.k;  // the (kc)* operand
  if (m <= n) return chang_one();
  return chang_upper(m - n);
}

inline ChangElement chang_neg(const ChangElement& a) {
  return {a.tag == ChangElement::Tag::lower ? ChangElement::Tag::upper : ChangElement::Tag::lower,
          a.k};
}

inline ChangElement chang_odot(const ChangElement& a, const ChangElement& b) {
  return chang_neg(chang_oplus(chang_neg(a), chang_neg(b)));
}

inline bool chang_leq(const ChangElement& a, const ChangElement& b) {
  using Tag = ChangElement::Tag;
  if (a.tag == Tag::lower && b.tag == Tag::lower) return a.k <= b.k;
  if (a.tag == Tag::lower && b.tag == Tag::upper) return true;
  if (a.tag == Tag::upper && b.tag == Tag::upper) return a.k >= b.k;
  return false;
}

inline ChangElement chang_ovee(const ChangElement& a, const ChangElement& b) {
  return chang_oplus(chang_odot(a, chang_neg(b)), b);
}

inline ChangElement chang_owedge(const ChangElement& a, const ChangElement& b) {
  return chang_odot(a, chang_oplus(chang_neg(a), b));
}

/// The injective non-identity derivation: x . c* on the upper family,
/// identity on the lower family.
inline ChangElement remark_derivation(const ChangElement& x) {
  if (x.tag == ChangElement::Tag::upper) return chang_odot(x, chang_upper(1));
  return x;
}

/// The principal derivation x -> x . c*.
inline ChangElement principal_cstar(const ChangElement& x) {
  return chang_odot(x, chang_upper(1));
}

/// All elements with index at most k, both families, in ascending order.
inline std::vector<ChangElement> chang_window(std::uint64_t k) {
  std::vector<ChangElement> out;
  out.reserve(2 * (k + 1));
  for (std::uint64_t i = 0; i <= k; ++i) out.push_back(chang_lower(i));
  for (std::uint64_t i = k + 1; i-- > 0;) out.push_back(chang_upper(i));
  return out;
}

/// Bounded verification report. The check covers the (2K+2)^2 pairs whose
/// indices are at most K; it is a window check, not a proof.
struct ChangWindowReport {
  std::uint64_t window = 0;
  bool eq1_ok = false;
  bool injective_on_window = false;
  std::string image_of_one;
};

inline ChangWindowReport verify_window(const std::function<ChangElement(ChangElement)>& op,
                                       std::uint64_t window) {
  detail::require(window >= 1, "verify_window: window must be >= 1");
  ChangWindowReport report;
  report.window = window;
  std::vector<ChangElement> elems = chang_window(window);

  report.eq1_ok = true;
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      ChangElement lhs = op(chang_odot(x, y));
      ChangElement rhs = chang_ovee(chang_odot(op(x), y), chang_odot(x, op(y)));
      if (lhs != rhs) {
        report.eq1_ok = false;
        break;
      }
    }
    if (!report.eq1_ok) break;
  }

  report.injective_on_window = true;
  for (std::size_t i = 0; i < elems.size() && report.injective_on_window; ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (op(elems[i]) == op(elems[j])) {
        report.injective_on_window = false;
        break;
      }
    }
  }

  report.image_of_one = chang_name(op(chang_one()));
  return report;
}

}  // namespace mvder

#endif  // MVDER_CHANG_HPP
