#ifndef MVDER_DERIVATIONS_HPP
#define MVDER_DERIVATIONS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvder/algebra.hpp"
#include "mvder/structure.hpp"

namespace mvder {

/// A total self-map on a finite carrier, stored as images in canonical
/// element order. Comparison is lexicographic on the images, which is the
/// canonical total order used everywhere operators are listed.
struct Operator {
  std::vector<int> images;

  Operator() = default;
  explicit Operator(std::vector<int> img) : images(std::move(img)) {}

  int operator()(int x) const { return images[x]; }
  int size() const { return static_cast<int>(images.size()); }

  bool operator==(const Operator& o) const { return images == o.images; }
  bool operator!=(const Operator& o) const { return images != o.images; }
  bool operator<(const Operator& o) const { return images < o.images; }
};

namespace detail {

inline void check_operator(const FiniteMvAlgebra& a, const Operator& f, const char* where) {
  if (f.size() != a.n) throw InvalidInput(std::string(where) + ": operator does not match the algebra");
  for (int v : f.images) {
    if (v < 0 || v >= a.n) throw InvalidInput(std::string(where) + ": operator image out of range");
  }
}

}  // namespace detail

inline Operator identity_operator(const FiniteMvAlgebra& a) {
  std::vector<int> img(a.n);
  for (int x = 0; x < a.n; ++x) img[x] = x;
  return Operator(std::move(img));
}

inline Operator zero_operator(const FiniteMvAlgebra& a) {
  return Operator(std::vector<int>(a.n, 0));
}

/// Whether f satisfies d(x . y) = (d(x) . y) v (x . d(y)) on every pair.
/// On failure the first offending pair is reported through witness.
inline bool is_derivation(const FiniteMvAlgebra& a, const Operator& f,
                          std::pair<int, int>* witness = nullptr) {
  detail::check_operator(a, f, "is_derivation");
  for (int x = 0; x < a.n; ++x) {
    for (int y = 0; y < a.n; ++y) {
      int lhs = f(a.odot(x, y));
      int rhs = a.ovee(a.odot(f(x), y), a.odot(x, f(y)));
      if (lhs != rhs) {
        if (witness) *witness = {x, y};
        return false;
      }
    }
  }
  return true;
}

/// The principal derivation d_a : x -> a . x.
inline Operator principal(const FiniteMvAlgebra& a, int elem) {
  detail::require(elem >= 0 && elem < a.n, "principal: element out of range");
  std::vector<int> img(a.n);
  for (int x = 0; x < a.n; ++x) img[x] = a.odot(elem, x);
  return Operator(std::move(img));
}

/// The derivation that is the identity everywhere except 1 -> u.
inline Operator chi(const FiniteMvAlgebra& a, int u) {
  detail::require(u >= 0 && u < a.n, "chi: element out of range");
  Operator f = identity_operator(a);
  f.images[a.one()] = u;
  return f;
}

/// Redirects d at the top element to u. Requires u <= d(1); the result is
/// again a derivation whenever d was one.
inline Operator modify_at_one(const FiniteMvAlgebra& a, const Operator& d, int u) {
  detail::check_operator(a, d, "modify_at_one");
  detail::require(u >= 0 && u < a.n, "modify_at_one: element out of range");
  if (!a.leq(u, d(a.one()))) {
    throw InvalidInput("modify_at_one: new top image must lie below d(1)");
  }
  Operator f = d;
  f.images[a.one()] = u;
  return f;
}

/// Pointwise order and lattice operations on operators over one algebra.
inline bool operator_leq(const FiniteMvAlgebra& a, const Operator& d, const Operator& e) {
  detail::check_operator(a, d, "operator_leq");
  detail::check_operator(a, e, "operator_leq");
  for (int x = 0; x < a.n; ++x) {
    if (!a.leq(d(x), e(x))) return false;
  }
  return true;
}

/// The pointwise join of two derivations is again a derivation.
inline Operator pointwise_join(const FiniteMvAlgebra& a, const Operator& d, const Operator& e) {
  detail::check_operator(a, d, "pointwise_join");
  detail::check_operator(a, e, "pointwise_join");
  std::vector<int> img(a.n);
  for (int x = 0; x < a.n; ++x) img[x] = a.ovee(d(x), e(x));
  return Operator(std::move(img));
}

/// The pointwise meet carries no membership guarantee: the caller must test
/// is_derivation on the result.
inline Operator pointwise_meet(const FiniteMvAlgebra& a, const Operator& d, const Operator& e) {
  detail::check_operator(a, d, "pointwise_meet");
  detail::check_operator(a, e, "pointwise_meet");
  std::vector<int> img(a.n);
  for (int x = 0; x < a.n; ++x) img[x] = a.owedge(d(x), e(x));
  return Operator(std::move(img));
}

struct EnumerationOptions {
  // Cap on visited partial assignments during backtracking.
  std::int64_t max_nodes = 10'000'000;
};

/// Exhaustive backtracking enumeration of all derivations on a.
///
/// Images are assigned along a linear extension of the natural order, the
/// candidate set for d(x) is the downset of x, and the defining equation is
/// checked incrementally on every pair whose images are already fixed. The
/// returned list is sorted lexicographically by images.
inline std::vector<Operator> enumerate_derivation_operators(const FiniteMvAlgebra& a,
                                                            const EnumerationOptions& opts = {}) {
  const int n = a.n;
  std::vector<std::vector<int>> down(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (a.leq(y, x)) down[x].push_back(y);
    }
  }
  // Linear extension: y < x in the natural order forces |down(y)| < |down(x)|.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int l, int r) {
    if (down[l].size() != down[r].size()) return down[l].size() < down[r].size();
    return l < r;
  });

  std::vector<int> images(n, -1);
  std::vector<Operator> found;
  std::int64_t visited = 0;

  auto pair_ok = [&](int x, int y) {
    int lhs = images[a.odot(x, y)];
    int rhs = a.ovee(a.odot(images[x], y), a.odot(x, images[y]));
    return lhs == rhs;
  };

  std::function<void(int)> assign = [&](int step) {
    if (step == n) {
      found.emplace_back(images);
      return;
    }
    const int x = order[step];
    for (int candidate : down[x]) {
      if (++visited > opts.max_nodes) {
        throw CapExceeded("enumerate_derivations: search cap of " + std::to_string(opts.max_nodes) +
                          " partial assignments exceeded");
      }
      images[x] = candidate;
      bool ok = true;
      for (int j = 0; j <= step && ok; ++j) {
        const int y = order[j];
        ok = pair_ok(x, y) && pair_ok(y, x);
      }
      if (ok) assign(step + 1);
    }
    images[x] = -1;
  };
  assign(0);
  std::sort(found.begin(), found.end());
  return found;
}

/// An operator together with its classification against the named
/// derivation families and its fixed-point set.
struct DerivationRecord {
  Operator op;
  bool is_principal = false;
  std::optional<int> principal_witness;
  bool is_isotone = false;
  bool in_ider = false;
  bool is_chi = false;
  std::optional<int> chi_witness;
  bool is_idempotent = false;
  Subset fixed_points;
};

/// Classifies a derivation. Principality is tested first against the only
/// possible witness a = d(1); the full scan after that can only confirm the
/// negative but keeps the check independent of that argument.
inline DerivationRecord classify(const FiniteMvAlgebra& a, const Operator& d) {
  std::pair<int, int> bad;
  if (!is_derivation(a, d, &bad)) {
    throw InvalidInput("classify: operator is not a derivation (fails at pair " +
                       std::to_string(bad.first) + "," + std::to_string(bad.second) + ")");
  }
  DerivationRecord rec;
  rec.op = d;
  const int n = a.n;
  const int one = a.one();
  const int top_image = d(one);

  rec.is_isotone = true;
  for (int x = 0; x < n && rec.is_isotone; ++x) {
    for (int y = 0; y < n && rec.is_isotone; ++y) {
      if (a.leq(x, y) && !a.leq(d(x), d(y))) rec.is_isotone = false;
    }
  }

  if (principal(a, top_image) == d) {
    rec.is_principal = true;
    rec.principal_witness = top_image;
  } else {
    for (int cand = 0; cand < n && !rec.is_principal; ++cand) {
      if (principal(a, cand) == d) {
        rec.is_principal = true;
        rec.principal_witness = cand;
      }
    }
  }

  rec.in_ider = rec.is_isotone && a.oplus(top_image, top_image) == top_image;

  rec.is_chi = true;
  for (int x = 0; x < n; ++x) {
    if (x != one && d(x) != x) {
      rec.is_chi = false;
      break;
    }
  }
  if (rec.is_chi) rec.chi_witness = top_image;

  rec.is_idempotent = true;
  for (int x = 0; x < n; ++x) {
    if (d(d(x)) != d(x)) {
      rec.is_idempotent = false;
      break;
    }
  }

  rec.fixed_points = Subset(n);
  for (int x = 0; x < n; ++x) {
    if (d(x) == x) rec.fixed_points.insert(x);
  }
  return rec;
}

/// Exactly the set Der(a), classified, in lexicographic image order.
inline std::vector<DerivationRecord> enumerate_derivations(const FiniteMvAlgebra& a,
                                                           const EnumerationOptions& opts = {}) {
  std::vector<DerivationRecord> out;
  for (const Operator& op : enumerate_derivation_operators(a, opts)) {
    out.push_back(classify(a, op));
  }
  return out;
}

/// Closed form for chains: every derivation on the n-chain is a principal
/// map redirected at the top, one per pair (x, y) with y <= x other than
/// (0, 0). Emitted in ascending (x, y) order.
inline std::vector<Operator> chain_derivations(int n) {
  const FiniteMvAlgebra a = make_chain(n);
  std::vector<Operator> out;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y <= x; ++y) {
      if (x == 0 && y == 0) continue;
      out.push_back(modify_at_one(a, principal(a, x), y));
    }
  }
  return out;
}

/// Whether the fixed points of d form a lattice ideal (they always form a
/// downset; principal derivations guarantee the full ideal property).
inline bool fixed_point_ideal_check(const FiniteMvAlgebra& a, const Operator& d) {
  detail::check_operator(a, d, "fixed_point_ideal_check");
  std::vector<int> fix;
  for (int x = 0; x < a.n; ++x) {
    if (d(x) == x) fix.push_back(x);
  }
  if (std::find(fix.begin(), fix.end(), 0) == fix.end()) return false;
  for (int x : fix) {
    for (int y = 0; y < a.n; ++y) {
      if (a.leq(y, x) && d(y) != y) return false;
    }
    for (int y : fix) {
      int j = a.ovee(x, y);
      if (d(j) != j) return false;
    }
  }
  return true;
}

/// The direct product of per-factor operators, acting coordinatewise on the
/// lexicographically indexed product algebra.
inline Operator product_derivation(const std::vector<FiniteMvAlgebra>& factors,
                                   const std::vector<Operator>& ds,
                                   int max_elements = kDefaultMaxElements) {
  detail::require(!factors.empty(), "product_derivation: empty factor list");
  detail::require(factors.size() == ds.size(), "product_derivation: arity mismatch");
  std::vector<int> dims;
  long long total = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    detail::check_operator(factors[i], ds[i], "product_derivation");
    dims.push_back(factors[i].n);
    total *= factors[i].n;
    if (total > max_elements) throw CapExceeded("product_derivation: product size exceeds cap");
  }
  const int n = static_cast<int>(total);
  std::vector<int> img(n);
  for (int x = 0; x < n; ++x) {
    std::vector<int> t = product_tuple(dims, x);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = ds[i](t[i]);
    img[x] = product_index(dims, t);
  }
  return Operator(std::move(img));
}

/// The composite pi_i . d . rho_i: embed into coordinate i with zeros
/// elsewhere, apply d, project coordinate i back out.
inline Operator project_derivation(const std::vector<FiniteMvAlgebra>& factors, const Operator& d,
                                   std::size_t i) {
  detail::require(i < factors.size(), "project_derivation: factor index out of range");
  std::vector<int> dims;
  long long total = 1;
  for (const auto& f : factors) {
    dims.push_back(f.n);
    total *= f.n;
  }
  detail::require(d.size() == total, "project_derivation: operator does not match the product");
  const int ni = factors[i].n;
  std::vector<int> img(ni);
  std::vector<int> t(dims.size(), 0);
  for (int x = 0; x < ni; ++x) {
    t[i] = x;
    img[x] = product_tuple(dims, d(product_index(dims, t)))[i];
  }
  return Operator(std::move(img));
}

/// A derivation on a product belongs to the product of the factor
/// derivation sets exactly when it equals the product of its projections.
inline bool factorizes(const std::vector<FiniteMvAlgebra>& factors, const Operator& d,
                       int max_elements = kDefaultMaxElements) {
  std::vector<Operator> projected;
  projected.reserve(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    projected.push_back(project_derivation(factors, d, i));
  }
  return product_derivation(factors, projected, max_elements) == d;
}

/// The isotone derivations with idempotent top image: exactly the principal
/// maps d_a for a in the Boolean center, listed by ascending a.
inline std::vector<Operator> ider(const FiniteMvAlgebra& a) {
  std::vector<Operator> out;
  for (int b : boolean_center(a).elements()) out.push_back(principal(a, b));
  return out;
}

}  // namespace mvder

#endif  // MVDER_DERIVATIONS_HPP
