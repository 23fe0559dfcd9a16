#ifndef MVDER_STRUCTURE_HPP
#define MVDER_STRUCTURE_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "mvder/algebra.hpp"

namespace mvder {

/// A subset of an algebra's carrier as a membership bitset.
struct Subset {
  std::vector<bool> members;

  Subset() = default;
  explicit Subset(int n) : members(n, false) {}

  int carrier_size() const { return static_cast<int>(members.size()); }
  bool contains(int x) const { return members[x]; }
  void insert(int x) { members[x] = true; }
  int count() const { return static_cast<int>(std::count(members.begin(), members.end(), true)); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int i = 0; i < carrier_size(); ++i) {
      if (members[i]) out.push_back(i);
    }
    return out;
  }

  bool operator==(const Subset& other) const { return members == other.members; }
  bool operator<(const Subset& other) const { return members < other.members; }
};

/// Idempotent elements {x : x+x = x}. On a genuine MV-algebra the same set
/// is odot-idempotent and closed under negation; both facts are asserted so
/// that unvalidated tables fail loudly here instead of corrupting the
/// decomposition built on top.
inline Subset boolean_center(const FiniteMvAlgebra& a) {
  Subset s(a.n);
  for (int x = 0; x < a.n; ++x) {
    if (a.oplus(x, x) == x) s.insert(x);
  }
  for (int x : s.elements()) {
    if (a.odot(x, x) != x || !s.contains(a.neg(x))) {
      throw InvalidInput("boolean_center: idempotents are not a Boolean subalgebra; "
                         "the input tables do not satisfy the MV axioms");
    }
  }
  return s;
}

namespace detail {

// Smallest subset containing seed that holds 0, is downward closed, and is
// closed under the given binary operation.
template <typename Op>
Subset close_ideal(const FiniteMvAlgebra& a, Subset seed, Op op) {
  seed.members[0] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < a.n; ++x) {
      if (!seed.members[x]) continue;
      for (int y = 0; y < a.n; ++y) {
        if (a.leq(y, x) && !seed.members[y]) {
          seed.members[y] = true;
          changed = true;
        }
        if (seed.members[y]) {
          int z = op(x, y);
          if (!seed.members[z]) {
            seed.members[z] = true;
            changed = true;
          }
        }
      }
    }
  }
  return seed;
}

// Enumerates all closed sets reachable by adding one generator at a time,
// which is every one of them. Output is sorted by (size, bitset) so the
// order never depends on discovery order.
template <typename Op>
std::vector<Subset> enumerate_ideals(const FiniteMvAlgebra& a, Op op) {
  std::set<Subset> seen;
  std::vector<Subset> frontier{close_ideal(a, Subset(a.n), op)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const auto& ideal : frontier) {
      for (int x = 0; x < a.n; ++x) {
        if (ideal.contains(x)) continue;
        Subset grown = ideal;
        grown.insert(x);
        grown = close_ideal(a, std::move(grown), op);
        if (seen.insert(grown).second) next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subset> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Subset& l, const Subset& r) {
    int cl = l.count(), cr = r.count();
    if (cl != cr) return cl < cr;
    return l.members < r.members;
  });
  return out;
}

}  // namespace detail

/// All ideals: subsets containing 0, downward closed, closed under oplus.
inline std::vector<Subset> ideals(const FiniteMvAlgebra& a) {
  return detail::enumerate_ideals(a, [&](int x, int y) { return a.oplus(x, y); });
}

/// All lattice ideals: downward closed and closed under join.
inline std::vector<Subset> lattice_ideals(const FiniteMvAlgebra& a) {
  return detail::enumerate_ideals(a, [&](int x, int y) { return a.ovee(x, y); });
}

/// Result of decomposing a finite MV-algebra into a product of chains.
/// chain_lengths is sorted ascending; iso[x] is the factor tuple of element
/// x in the reconstructed product, in the same factor order.
struct Decomposition {
  std::vector<int> chain_lengths;
  std::vector<std::vector<int>> iso;
};

/// Decomposes via the atoms of the Boolean center: each atom a_i spans the
/// interval [0, a_i], which must be a chain, and x -> (x/\a_1, ..., x/\a_u)
/// must be a bijective homomorphism. The construction is not trusted: every
/// one of those facts is verified and failure throws, which is how garbage
/// tables that slipped past the caller get caught.
inline Decomposition decompose(const FiniteMvAlgebra& a) {
  auto fail = [](const std::string& what) {
    throw InvalidInput("decompose: input is not an MV-algebra (" + what + ")");
  };
  Decomposition dec;
  dec.iso.assign(a.n, {});
  if (a.n == 1) return dec;  // trivial algebra: empty product

  Subset center = boolean_center(a);
  std::vector<int> atoms;
  for (int x : center.elements()) {
    if (x == 0) continue;
    bool minimal = true;
    for (int y : center.elements()) {
      if (y != 0 && y != x && a.leq(y, x)) minimal = false;
    }
    if (minimal) atoms.push_back(x);
  }
  if (atoms.empty()) fail("Boolean center has no atoms");

  // Interval [0, atom] in increasing natural order; must be totally ordered.
  std::vector<std::vector<int>> intervals;
  for (int atom : atoms) {
    std::vector<int> iv;
    for (int x = 0; x < a.n; ++x) {
      if (a.leq(x, atom)) iv.push_back(x);
    }
    for (std::size_t i = 0; i < iv.size(); ++i) {
      for (std::size_t j = i + 1; j < iv.size(); ++j) {
        if (!a.leq(iv[i], iv[j]) && !a.leq(iv[j], iv[i])) fail("factor interval is not a chain");
      }
    }
    std::sort(iv.begin(), iv.end(), [&](int x, int y) { return x != y && a.leq(x, y); });
    if (iv.size() < 2) fail("factor interval is degenerate");
    intervals.push_back(std::move(iv));
  }

  // Keep factors sorted by length; the representation is unique up to order.
  std::vector<std::size_t> order(intervals.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    if (intervals[l].size() != intervals[r].size()) return intervals[l].size() < intervals[r].size();
    return intervals[l] < intervals[r];
  });

  std::vector<int> dims;
  std::vector<int> sorted_atoms;
  std::vector<std::vector<int>> rank;  // rank[f][element] = position in interval, or -1
  for (std::size_t f : order) {
    dims.push_back(static_cast<int>(intervals[f].size()));
    sorted_atoms.push_back(atoms[f]);
    std::vector<int> r(a.n, -1);
    for (std::size_t pos = 0; pos < intervals[f].size(); ++pos) r[intervals[f][pos]] = static_cast<int>(pos);
    rank.push_back(std::move(r));
  }
  dec.chain_lengths = dims;

  long long total = 1;
  for (int d : dims) total *= d;
  if (total != a.n) fail("factor sizes do not multiply to the carrier size");

  std::vector<int> image_index(a.n);
  std::vector<bool> hit(a.n, false);
  for (int x = 0; x < a.n; ++x) {
    std::vector<int> tuple;
    for (std::size_t f = 0; f < dims.size(); ++f) {
      int proj = a.owedge(x, sorted_atoms[f]);
      int pos = rank[f][proj];
      if (pos < 0) fail("projection left its interval");
      tuple.push_back(pos);
    }
    image_index[x] = product_index(dims, tuple);
    if (hit[image_index[x]]) fail("projection map is not injective");
    hit[image_index[x]] = true;
    dec.iso[x] = std::move(tuple);
  }

  // Homomorphism check against the reconstructed product of chains.
  std::vector<FiniteMvAlgebra> chains;
  chains.reserve(dims.size());
  for (int d : dims) chains.push_back(make_chain(d));
  FiniteMvAlgebra rebuilt = make_product(chains, a.n);
  if (image_index[0] != 0) fail("zero is not preserved");
  for (int x = 0; x < a.n; ++x) {
    if (rebuilt.neg(image_index[x]) != image_index[a.neg(x)]) fail("negation is not preserved");
    for (int y = 0; y < a.n; ++y) {
      if (rebuilt.oplus(image_index[x], image_index[y]) != image_index[a.oplus(x, y)]) {
        fail("addition is not preserved");
      }
    }
  }
  return dec;
}

/// Finite MV-algebras are isomorphic exactly when their chain-length
/// multisets agree.
inline bool is_isomorphic(const FiniteMvAlgebra& a, const FiniteMvAlgebra& b) {
  return decompose(a).chain_lengths == decompose(b).chain_lengths;
}

namespace detail {

inline void factorizations(int m, int min_factor, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
  if (m == 1) {
    out.push_back(cur);
    return;
  }
  for (int f = min_factor; f <= m; ++f) {
    if (m % f == 0) {
      cur.push_back(f);
      factorizations(m / f, f, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace detail

/// One representative per isomorphism class of size m: every multiset of
/// chain lengths >= 2 with product m, in lexicographic multiset order.
inline std::vector<FiniteMvAlgebra> all_algebras_of_size(int m, int max_elements = kDefaultMaxElements) {
  detail::require(m >= 2, "all_algebras_of_size: size must be >= 2");
  if (m > max_elements) {
    throw CapExceeded("all_algebras_of_size: size " + std::to_string(m) + " exceeds cap " +
                      std::to_string(max_elements));
  }
  std::vector<std::vector<int>> factor_lists;
  std::vector<int> cur;
  detail::factorizations(m, 2, cur, factor_lists);
  std::sort(factor_lists.begin(), factor_lists.end());
  std::vector<FiniteMvAlgebra> out;
  out.reserve(factor_lists.size());
  for (const auto& lengths : factor_lists) {
    if (lengths.size() == 1) {
      out.push_back(make_chain(lengths[0]));
    } else {
      std::vector<FiniteMvAlgebra> chains;
      chains.reserve(lengths.size());
      for (int d : lengths) chains.push_back(make_chain(d));
      out.push_back(make_product(chains, max_elements));
    }
  }
  return out;
}

}  // namespace mvder

#endif  // MVDER_STRUCTURE_HPP
