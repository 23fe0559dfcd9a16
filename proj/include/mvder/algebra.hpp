#ifndef MVDER_ALGEBRA_HPP
#define MVDER_ALGEBRA_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mvder {

/// Invalid argument, malformed table, or failed precondition.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size or search cap would be exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default cap on carrier size for constructed products.
inline constexpr int kDefaultMaxElements = 4096;

/// A finite MV-algebra presented by Cayley tables over indices 0..n-1.
///
/// Index 0 is the bottom element 0 and neg(0) is the top element 1.
/// Everything else (odot, join, meet, the natural order) is derived from
/// the two stored tables. Construction does not validate the MV axioms;
/// call check_axioms for that, so deliberately broken tables can be built
/// for negative tests. Instances are immutable after construction and all
/// operations are pure, so sharing across threads is safe.
struct FiniteMvAlgebra {
  int n = 0;
  std::vector<int> oplus_table;        // n*n, row-major
  std::vector<int> neg_table;          // n
  std::vector<std::string> names;      // n display labels

  int size() const { return n; }
  int zero() const { return 0; }
  int one() const { return neg_table[0]; }

  int oplus(int x, int y) const { return oplus_table[static_cast<std::size_t>(x) * n + y]; }
  int neg(int x) const { return neg_table[x]; }
  int odot(int x, int y) const { return neg(oplus(neg(x), neg(y))); }
  int ovee(int x, int y) const { return oplus(odot(x, neg(y)), y); }
  int owedge(int x, int y) const { return odot(x, oplus(neg(x), y)); }
  bool leq(int x, int y) const { return oplus(neg(x), y) == one(); }

  bool same_tables(const FiniteMvAlgebra& other) const {
    return n == other.n && oplus_table == other.oplus_table && neg_table == other.neg_table;
  }
  bool operator==(const FiniteMvAlgebra& other) const {
    return same_tables(other) && names == other.names;
  }
};

struct AxiomViolation {
  std::string axiom;           // "MV1".."MV6"
  std::vector<int> witness;    // offending element indices
};

struct AxiomReport {
  bool passed = true;
  std::vector<AxiomViolation> violations;
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvalidInput(msg);
}

}  // namespace detail

/// Chain element labels are the exact fraction strings k/(n-1), never floats.
inline std::string chain_name(int k, int n) {
  if (k == 0) return "0";
  if (k == n - 1) return "1";
  return std::to_string(k) + "/" + std::to_string(n - 1);
}

/// The n-element MV-chain {0, 1/(n-1), ..., 1} with truncated addition.
inline FiniteMvAlgebra make_chain(int n) {
  detail::require(n >= 2, "make_chain: carrier size must be >= 2");
  FiniteMvAlgebra a;
  a.n = n;
  a.oplus_table.resize(static_cast<std::size_t>(n) * n);
  a.neg_table.resize(n);
  a.names.reserve(n);
  for (int i = 0; i < n; ++i) {
    a.neg_table[i] = n - 1 - i;
    a.names.push_back(chain_name(i, n));
    for (int j = 0; j < n; ++j) {
      a.oplus_table[static_cast<std::size_t>(i) * n + j] = std::min(n - 1, i + j);
    }
  }
  return a;
}

/// Tuple <-> index conversion for lexicographic product indexing,
/// first factor most significant.
inline std::vector<int> product_tuple(const std::vector<int>& dims, int index) {
  std::vector<int> t(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    t[i] = index % dims[i];
    index /= dims[i];
  }
  return t;
}

inline int product_index(const std::vector<int>& dims, const std::vector<int>& tuple) {
  int idx = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) idx = idx * dims[i] + tuple[i];
  return idx;
}

/// Direct product with MV-operations applied coordinatewise. Element names
/// are tuples of factor names. Exceeding the cap is an error, never a
/// truncation.
inline FiniteMvAlgebra make_product(const std::vector<FiniteMvAlgebra>& factors,
                                    int max_elements = kDefaultMaxElements) {
  detail::require(!factors.empty(), "make_product: empty factor list");
  long long total = 1;
  std::vector<int> dims;
  dims.reserve(factors.size());
  for (const auto& f : factors) {
    detail::require(f.n >= 1, "make_product: factor has empty carrier");
    dims.push_back(f.n);
    total *= f.n;
    if (total > max_elements) {
      throw CapExceeded("make_product: product size " + std::to_string(total) +
                        " exceeds cap " + std::to_string(max_elements));
    }
  }
  const int n = static_cast<int>(total);
  FiniteMvAlgebra a;
  a.n = n;
  a.oplus_table.resize(static_cast<std::size_t>(n) * n);
  a.neg_table.resize(n);
  a.names.resize(n);
  std::vector<std::vector<int>> tuples(n);
  for (int i = 0; i < n; ++i) tuples[i] = product_tuple(dims, i);
  std::vector<int> t(dims.size());
  for (int i = 0; i < n; ++i) {
    const auto& ti = tuples[i];
    for (std::size_t c = 0; c < dims.size(); ++c) t[c] = factors[c].neg(ti[c]);
    a.neg_table[i] = product_index(dims, t);
    std::string name = "(";
    for (std::size_t c = 0; c < dims.size(); ++c) {
      if (c > 0) name += ",";
      name += factors[c].names[ti[c]];
    }
    name += ")";
    a.names[i] = std::move(name);
    for (int j = 0; j < n; ++j) {
      const auto& tj = tuples[j];
      for (std::size_t c = 0; c < dims.size(); ++c) t[c] = factors[c].oplus(ti[c], tj[c]);
      a.oplus_table[static_cast<std::size_t>(i) * n + j] = product_index(dims, t);
    }
  }
  return a;
}

/// Builds an algebra from raw tables without checking the MV axioms.
/// Shape and index-range violations are rejected; axiom checking is the
/// caller's separate step.
inline FiniteMvAlgebra from_tables(int n, const std::vector<std::vector<int>>& oplus,
                                   const std::vector<int>& neg,
                                   std::vector<std::string> names = {}) {
  detail::require(n >= 1, "from_tables: carrier size must be >= 1");
  detail::require(static_cast<int>(oplus.size()) == n, "from_tables: oplus table has wrong row count");
  detail::require(static_cast<int>(neg.size()) == n, "from_tables: neg table has wrong length");
  FiniteMvAlgebra a;
  a.n = n;
  a.oplus_table.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : oplus) {
    detail::require(static_cast<int>(row.size()) == n, "from_tables: oplus table has a ragged row");
    for (int v : row) {
      detail::require(v >= 0 && v < n, "from_tables: oplus entry out of range");
      a.oplus_table.push_back(v);
    }
  }
  for (int v : neg) {
    detail::require(v >= 0 && v < n, "from_tables: neg entry out of range");
    a.neg_table.push_back(v);
  }
  if (names.empty()) {
    for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  }
  detail::require(static_cast<int>(names.size()) == n, "from_tables: names have wrong length");
  a.names = std::move(names);
  return a;
}

/// Exhaustive check of MV1-MV6. With all_violations=false the scan stops at
/// the first failure.
inline AxiomReport check_axioms(const FiniteMvAlgebra& a, bool all_violations = false) {
  AxiomReport report;
  auto record = [&](const char* axiom, std::vector<int> witness) {
    report.passed = false;
    report.violations.push_back({axiom, std::move(witness)});
  };
  auto done = [&]() { return !report.passed && !all_violations; };
  const int n = a.n;
  const int one = a.one();
  for (int x = 0; x < n && !done(); ++x) {
    for (int y = 0; y < n && !done(); ++y) {
      for (int z = 0; z < n && !done(); ++z) {
        if (a.oplus(x, a.oplus(y, z)) != a.oplus(a.oplus(x, y), z)) record("MV1", {x, y, z});
      }
    }
  }
  for (int x = 0; x < n && !done(); ++x) {
    for (int y = 0; y < n && !done(); ++y) {
      if (a.oplus(x, y) != a.oplus(y, x)) record("MV2", {x, y});
    }
  }
  for (int x = 0; x < n && !done(); ++x) {
    if (a.oplus(x, 0) != x) record("MV3", {x});
  }
  for (int x = 0; x < n && !done(); ++x) {
    if (a.neg(a.neg(x)) != x) record("MV4", {x});
  }
  for (int x = 0; x < n && !done(); ++x) {
    if (a.oplus(x, one) != one) record("MV5", {x});
  }
  for (int x = 0; x < n && !done(); ++x) {
    for (int y = 0; y < n && !done(); ++y) {
      if (a.oplus(a.neg(a.oplus(a.neg(x), y)), y) != a.oplus(a.neg(a.oplus(a.neg(y), x)), x)) {
        record("MV6", {x, y});
      }
    }
  }
  return report;
}

}  // namespace mvder

#endif  // MVDER_ALGEBRA_HPP
