#ifndef MVDER_DER_LATTICE_HPP
#define MVDER_DER_LATTICE_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mvder/algebra.hpp"
#include "mvder/derivations.hpp"
#include "mvder/poset.hpp"

namespace mvder {

/// Label of an operator: its images, by element name, space-separated.
inline std::string operator_label(const FiniteMvAlgebra& a, const Operator& d) {
  std::string out;
  for (int x = 0; x < a.n; ++x) {
    if (x > 0) out += " ";
    out += a.names[d(x)];
  }
  return out;
}

namespace detail {

inline Poset poset_of_operators(const FiniteMvAlgebra& a, const std::vector<Operator>& ops) {
  const int m = static_cast<int>(ops.size());
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& op : ops) labels.push_back(operator_label(a, op));
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) leq[i][j] = operator_leq(a, ops[i], ops[j]);
  }
  return make_poset(std::move(labels), std::move(leq));
}

}  // namespace detail

/// The set Der(a) ordered pointwise, with join and meet tables.
///
/// The join of two derivations is their pointwise join, which always stays
/// in the set. The meet is computed constructively as the pointwise join of
/// all common lower bounds inside the set, because the pointwise meet can
/// fall outside it. is_lattice is established by scanning every pair for a
/// least upper bound and a greatest lower bound, not assumed.
struct DerivationPoset {
  std::vector<DerivationRecord> records;  // canonical (lexicographic) order
  Poset poset;
  bool is_lattice = false;
  std::vector<std::vector<int>> join_table;
  std::vector<std::vector<int>> meet_table;

  int size() const { return static_cast<int>(records.size()); }
};

inline DerivationPoset derivation_poset(const FiniteMvAlgebra& a, const EnumerationOptions& opts = {}) {
  DerivationPoset dp;
  dp.records = enumerate_derivations(a, opts);
  std::vector<Operator> ops;
  ops.reserve(dp.records.size());
  for (const auto& r : dp.records) ops.push_back(r.op);
  dp.poset = detail::poset_of_operators(a, ops);

  const int m = dp.size();
  dp.join_table.assign(m, std::vector<int>(m, -1));
  dp.meet_table.assign(m, std::vector<int>(m, -1));
  auto index_of = [&](const Operator& op) -> int {
    auto it = std::lower_bound(ops.begin(), ops.end(), op);
    if (it == ops.end() || !(*it == op)) return -1;
    return static_cast<int>(it - ops.begin());
  };
  dp.is_lattice = true;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int join = index_of(pointwise_join(a, ops[i], ops[j]));
      Operator glb = zero_operator(a);
      for (int k = 0; k < m; ++k) {
        if (dp.poset.leq[k][i] && dp.poset.leq[k][j]) glb = pointwise_join(a, glb, ops[k]);
      }
      int meet = index_of(glb);
      dp.join_table[i][j] = join;
      dp.meet_table[i][j] = meet;
      // The computed bounds must be genuine: members, comparable the right
      // way, and extremal among the candidates.
      auto lub = poset_lub(dp.poset, i, j);
      auto gl = poset_glb(dp.poset, i, j);
      if (join < 0 || meet < 0 || !lub || !gl || *lub != join || *gl != meet) dp.is_lattice = false;
    }
  }
  return dp;
}

/// The pairs (x, y) over the n-chain with y <= x, minus (0, 0), under the
/// componentwise order. Lattice-isomorphic to Der(L_n) via (x,y) -> the
/// principal map of x redirected at the top to y.
inline Poset a_lattice(int n) {
  detail::require(n >= 2, "a_lattice: chain size must be >= 2");
  const FiniteMvAlgebra chain = make_chain(n);
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y <= x; ++y) {
      if (x == 0 && y == 0) continue;
      pairs.emplace_back(x, y);
    }
  }
  const int m = static_cast<int>(pairs.size());
  std::vector<std::string> labels;
  labels.reserve(m);
  for (const auto& [x, y] : pairs) {
    labels.push_back("(" + chain.names[x] + "," + chain.names[y] + ")");
  }
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      leq[i][j] = pairs[i].first <= pairs[j].first && pairs[i].second <= pairs[j].second;
    }
  }
  return make_poset(std::move(labels), std::move(leq));
}

/// The underlying lattice of the algebra, as a poset on the carrier.
inline Poset algebra_lattice(const FiniteMvAlgebra& a) {
  std::vector<std::vector<bool>> leq(a.n, std::vector<bool>(a.n));
  for (int i = 0; i < a.n; ++i) {
    for (int j = 0; j < a.n; ++j) leq[i][j] = a.leq(i, j);
  }
  return make_poset(a.names, std::move(leq));
}

/// The Boolean center as a sub-poset of the carrier.
inline Poset boolean_center_lattice(const FiniteMvAlgebra& a) {
  std::vector<int> elems = boolean_center(a).elements();
  const int m = static_cast<int>(elems.size());
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int x : elems) labels.push_back(a.names[x]);
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) leq[i][j] = a.leq(elems[i], elems[j]);
  }
  return make_poset(std::move(labels), std::move(leq));
}

namespace detail {

inline void assert_family(bool cond, const char* what) {
  if (!cond) throw std::logic_error(std::string("derivation family invariant broke: ") + what);
}

}  // namespace detail

/// Poset of the principal derivations d_u, one per element u, in ascending
/// element order. Construction checks that pointwise join and meet land on
/// d_{u v v} and d_{u ^ v} and that d_u -> u is an order isomorphism onto
/// the carrier lattice.
inline Poset pder_poset(const FiniteMvAlgebra& a) {
  std::vector<Operator> ops;
  ops.reserve(a.n);
  for (int u = 0; u < a.n; ++u) ops.push_back(principal(a, u));
  for (int u = 0; u < a.n; ++u) {
    for (int v = 0; v < a.n; ++v) {
      detail::assert_family(pointwise_join(a, ops[u], ops[v]) == ops[a.ovee(u, v)],
                            "join of principal maps");
      detail::assert_family(pointwise_meet(a, ops[u], ops[v]) == ops[a.owedge(u, v)],
                            "meet of principal maps");
      detail::assert_family(operator_leq(a, ops[u], ops[v]) == a.leq(u, v),
                            "principal map order");
    }
  }
  return detail::poset_of_operators(a, ops);
}

/// Poset of the maps that are the identity except at the top, one per
/// element u, checked the same way against the carrier lattice.
inline Poset chi_poset(const FiniteMvAlgebra& a) {
  std::vector<Operator> ops;
  ops.reserve(a.n);
  for (int u = 0; u < a.n; ++u) ops.push_back(chi(a, u));
  for (int u = 0; u < a.n; ++u) {
    for (int v = 0; v < a.n; ++v) {
      detail::assert_family(pointwise_join(a, ops[u], ops[v]) == ops[a.ovee(u, v)],
                            "join of chi maps");
      detail::assert_family(pointwise_meet(a, ops[u], ops[v]) == ops[a.owedge(u, v)],
                            "meet of chi maps");
      detail::assert_family(operator_leq(a, ops[u], ops[v]) == a.leq(u, v), "chi map order");
    }
  }
  return detail::poset_of_operators(a, ops);
}

/// Poset of the isotone derivations with idempotent top image; d -> d(1) is
/// checked to be an order isomorphism onto the Boolean center.
inline Poset ider_poset(const FiniteMvAlgebra& a) {
  std::vector<Operator> ops = ider(a);
  std::vector<int> center = boolean_center(a).elements();
  detail::assert_family(ops.size() == center.size(), "ider size");
  for (std::size_t i = 0; i < ops.size(); ++i) {
    detail::assert_family(ops[i](a.one()) == center[i], "ider top image");
    for (std::size_t j = 0; j < ops.size(); ++j) {
      detail::assert_family(operator_leq(a, ops[i], ops[j]) == a.leq(center[i], center[j]),
                            "ider order");
    }
  }
  return detail::poset_of_operators(a, ops);
}

/// Whether the chi family is a filter of the derivation lattice: upward
/// closed and closed under the lattice meet.
inline bool chi_filter_check(const FiniteMvAlgebra& a, const EnumerationOptions& opts = {}) {
  DerivationPoset dp = derivation_poset(a, opts);
  if (!dp.is_lattice) throw InvalidInput("chi_filter_check: derivation poset is not a lattice");
  const int m = dp.size();
  std::vector<bool> in_chi(m);
  bool any = false;
  for (int i = 0; i < m; ++i) {
    in_chi[i] = dp.records[i].is_chi;
    any = any || in_chi[i];
  }
  if (!any) return false;
  for (int i = 0; i < m; ++i) {
    if (!in_chi[i]) continue;
    for (int j = 0; j < m; ++j) {
      if (dp.poset.leq[i][j] && !in_chi[j]) return false;
      if (in_chi[j] && !in_chi[dp.meet_table[i][j]]) return false;
    }
  }
  return true;
}

}  // namespace mvder

#endif  // MVDER_DER_LATTICE_HPP
