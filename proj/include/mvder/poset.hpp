#ifndef MVDER_POSET_HPP
#define MVDER_POSET_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvder/algebra.hpp"

namespace mvder {

/// A finite poset: ordered labels, a full <= matrix, and the cover relation
/// (the transitive reduction, i.e. the Hasse diagram edges).
struct Poset {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;
  std::vector<std::pair<int, int>> covers;  // (lower, upper), sorted

  int size() const { return static_cast<int>(labels.size()); }
  bool less(int i, int j) const { return i != j && leq[i][j]; }
};

/// Validates the partial-order axioms and computes the cover relation.
inline Poset make_poset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq) {
  const int m = static_cast<int>(labels.size());
  detail::require(static_cast<int>(leq.size()) == m, "make_poset: matrix size mismatch");
  for (const auto& row : leq) {
    detail::require(static_cast<int>(row.size()) == m, "make_poset: matrix size mismatch");
  }
  for (int i = 0; i < m; ++i) {
    detail::require(leq[i][i], "make_poset: relation is not reflexive");
    for (int j = 0; j < m; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) throw InvalidInput("make_poset: relation is not antisymmetric");
      for (int k = 0; k < m; ++k) {
        if (leq[i][j] && leq[j][k] && !leq[i][k]) throw InvalidInput("make_poset: relation is not transitive");
      }
    }
  }
  Poset p;
  p.labels = std::move(labels);
  p.leq = std::move(leq);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (!p.less(i, j)) continue;
      bool direct = true;
      for (int k = 0; k < m && direct; ++k) {
        if (p.less(i, k) && p.less(k, j)) direct = false;
      }
      if (direct) p.covers.emplace_back(i, j);
    }
  }
  std::sort(p.covers.begin(), p.covers.end());
  return p;
}

/// Least element of the common upper bounds, if one exists.
inline std::optional<int> poset_lub(const Poset& p, int i, int j) {
  const int m = p.size();
  std::vector<int> uppers;
  for (int k = 0; k < m; ++k) {
    if (p.leq[i][k] && p.leq[j][k]) uppers.push_back(k);
  }
  for (int u : uppers) {
    bool least = true;
    for (int v : uppers) {
      if (!p.leq[u][v]) {
        least = false;
        break;
      }
    }
    if (least) return u;
  }
  return std::nullopt;
}

inline std::optional<int> poset_glb(const Poset& p, int i, int j) {
  const int m = p.size();
  std::vector<int> lowers;
  for (int k = 0; k < m; ++k) {
    if (p.leq[k][i] && p.leq[k][j]) lowers.push_back(k);
  }
  for (int l : lowers) {
    bool greatest = true;
    for (int v : lowers) {
      if (!p.leq[v][l]) {
        greatest = false;
        break;
      }
    }
    if (greatest) return l;
  }
  return std::nullopt;
}

/// Every pair has both a least upper bound and a greatest lower bound.
inline bool poset_is_lattice(const Poset& p) {
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) {
      if (!poset_lub(p, i, j) || !poset_glb(p, i, j)) return false;
    }
  }
  return true;
}

/// Height of each element: length of a longest chain below it.
inline std::vector<int> poset_heights(const Poset& p) {
  const int m = p.size();
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::vector<int> downsize(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (p.less(j, i)) ++downsize[i];
    }
  }
  std::sort(order.begin(), order.end(), [&](int l, int r) {
    if (downsize[l] != downsize[r]) return downsize[l] < downsize[r];
    return l < r;
  });
  std::vector<int> height(m, 0);
  for (int i : order) {
    for (int j = 0; j < m; ++j) {
      if (p.less(j, i)) height[i] = std::max(height[i], height[j] + 1);
    }
  }
  return height;
}

/// Successive strata of minimal (resp. maximal) elements, peeling the poset
/// until it is empty.
inline std::vector<std::vector<int>> peel_minimal(const Poset& p) {
  std::vector<std::vector<int>> strata;
  std::vector<bool> gone(p.size(), false);
  int remaining = p.size();
  while (remaining > 0) {
    std::vector<int> level;
    for (int i = 0; i < p.size(); ++i) {
      if (gone[i]) continue;
      bool minimal = true;
      for (int j = 0; j < p.size() && minimal; ++j) {
        if (!gone[j] && p.less(j, i)) minimal = false;
      }
      if (minimal) level.push_back(i);
    }
    for (int i : level) gone[i] = true;
    remaining -= static_cast<int>(level.size());
    strata.push_back(std::move(level));
  }
  return strata;
}

inline std::vector<std::vector<int>> peel_maximal(const Poset& p) {
  std::vector<std::vector<int>> strata;
  std::vector<bool> gone(p.size(), false);
  int remaining = p.size();
  while (remaining > 0) {
    std::vector<int> level;
    for (int i = 0; i < p.size(); ++i) {
      if (gone[i]) continue;
      bool maximal = true;
      for (int j = 0; j < p.size() && maximal; ++j) {
        if (!gone[j] && p.less(i, j)) maximal = false;
      }
      if (maximal) level.push_back(i);
    }
    for (int i : level) gone[i] = true;
    remaining -= static_cast<int>(level.size());
    strata.push_back(std::move(level));
  }
  return strata;
}

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

/// DOT digraph with edges drawn bottom to top and one rank layer per poset
/// height. Node labels carry the item labels verbatim.
inline std::string export_hasse_dot(const Poset& p) {
  std::string out = "digraph {\n  rankdir=BT;\n";
  std::vector<int> height = poset_heights(p);
  int levels = 0;
  for (int h : height) levels = std::max(levels, h + 1);
  for (int h = 0; h < levels; ++h) {
    out += "  { rank=same;";
    for (int i = 0; i < p.size(); ++i) {
      if (height[i] == h) out += " " + detail::dot_quote(p.labels[i]) + ";";
    }
    out += " }\n";
  }
  for (const auto& [lo, hi] : p.covers) {
    out += "  " + detail::dot_quote(p.labels[lo]) + " -> " + detail::dot_quote(p.labels[hi]) + ";\n";
  }
  out += "}\n";
  return out;
}

/// Layered listing: one stratum per line, items comma-separated in canonical
/// order; minimal-first peeling, a blank line, then maximal-first peeling.
inline std::string export_hasse_layers(const Poset& p) {
  std::string out;
  auto emit = [&](const std::vector<std::vector<int>>& strata) {
    for (const auto& level : strata) {
      for (std::size_t i = 0; i < level.size(); ++i) {
        if (i > 0) out += ", ";
        out += p.labels[level[i]];
      }
      out += "\n";
    }
  };
  emit(peel_minimal(p));
  out += "\n";
  emit(peel_maximal(p));
  return out;
}

inline std::string export_hasse(const Poset& p, const std::string& format) {
  if (format == "dot") return export_hasse_dot(p);
  if (format == "layers") return export_hasse_layers(p);
  throw InvalidInput("export_hasse: unknown format '" + format + "'");
}

/// Outcome of a lattice-isomorphism search. mapping[i] is the image in the
/// second lattice of item i of the first; only meaningful when found.
struct LatticeIsoResult {
  enum class Status { found, none, unknown };
  Status status = Status::none;
  std::vector<int> mapping;

  explicit operator bool() const { return status == Status::found; }
};

namespace detail {

// Order-invariant fingerprint, refined once through the cover relation.
inline std::vector<std::string> iso_colors(const Poset& p) {
  const int m = p.size();
  std::vector<int> height = poset_heights(p);
  std::vector<std::string> color(m);
  for (int i = 0; i < m; ++i) {
    int up = 0, down = 0, upset = 0, downset = 0;
    for (const auto& [lo, hi] : p.covers) {
      if (lo == i) ++up;
      if (hi == i) ++down;
    }
    for (int j = 0; j < m; ++j) {
      if (p.less(i, j)) ++upset;
      if (p.less(j, i)) ++downset;
    }
    color[i] = std::to_string(height[i]) + ":" + std::to_string(up) + ":" + std::to_string(down) +
               ":" + std::to_string(upset) + ":" + std::to_string(downset);
  }
  for (int round = 0; round < 2; ++round) {
    std::vector<std::string> next(m);
    for (int i = 0; i < m; ++i) {
      std::vector<std::string> ups, downs;
      for (const auto& [lo, hi] : p.covers) {
        if (lo == i) ups.push_back(color[hi]);
        if (hi == i) downs.push_back(color[lo]);
      }
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      next[i] = color[i] + "|";
      for (const auto& s : ups) next[i] += s + ",";
      next[i] += "|";
      for (const auto& s : downs) next[i] += s + ",";
    }
    color = std::move(next);
  }
  return color;
}

inline bool verify_lattice_iso(const Poset& p, const Poset& q, const std::vector<int>& map) {
  const int m = p.size();
  std::vector<bool> used(m, false);
  for (int v : map) {
    if (v < 0 || v >= m || used[v]) return false;
    used[v] = true;
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (p.leq[i][j] != q.leq[map[i]][map[j]]) return false;
    }
  }
  // An order isomorphism between lattices preserves joins and meets; verify
  // anyway rather than trusting the argument.
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      auto pj = poset_lub(p, i, j), qj = poset_lub(q, map[i], map[j]);
      auto pm = poset_glb(p, i, j), qm = poset_glb(q, map[i], map[j]);
      if (!pj || !qj || map[*pj] != *qj) return false;
      if (!pm || !qm || map[*pm] != *qm) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Searches for a lattice isomorphism between p and q. A caller-supplied
/// candidate mapping is verified first. Posets larger than search_cap are
/// only compared by invariant fingerprints: a mismatch is a definite "none",
/// a match is reported as "unknown".
inline LatticeIsoResult find_lattice_isomorphism(const Poset& p, const Poset& q,
                                                 const std::vector<int>* hint = nullptr,
                                                 int search_cap = 64) {
  if (!poset_is_lattice(p) || !poset_is_lattice(q)) {
    throw InvalidInput("find_lattice_isomorphism: inputs must be lattices");
  }
  LatticeIsoResult result;
  if (p.size() != q.size() || p.covers.size() != q.covers.size()) return result;
  const int m = p.size();
  if (hint && static_cast<int>(hint->size()) == m && detail::verify_lattice_iso(p, q, *hint)) {
    result.status = LatticeIsoResult::Status::found;
    result.mapping = *hint;
    return result;
  }

  std::vector<std::string> pc = detail::iso_colors(p);
  std::vector<std::string> qc = detail::iso_colors(q);
  {
    auto ps = pc;
    auto qs = qc;
    std::sort(ps.begin(), ps.end());
    std::sort(qs.begin(), qs.end());
    if (ps != qs) return result;  // definite no
  }
  if (m > search_cap) {
    result.status = LatticeIsoResult::Status::unknown;
    return result;
  }

  // Backtracking on order preservation, most constrained elements first.
  std::map<std::string, std::vector<int>> qbuckets;
  for (int j = 0; j < m; ++j) qbuckets[qc[j]].push_back(j);
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int l, int r) {
    auto sl = qbuckets[pc[l]].size(), sr = qbuckets[pc[r]].size();
    if (sl != sr) return sl < sr;
    return l < r;
  });
  std::vector<int> map(m, -1);
  std::vector<bool> used(m, false);
  std::function<bool(int)> extend = [&](int step) -> bool {
    if (step == m) return true;
    const int i = order[step];
    for (int j : qbuckets[pc[i]]) {
      if (used[j]) continue;
      bool ok = true;
      for (int s = 0; s < step && ok; ++s) {
        const int k = order[s];
        ok = (p.leq[i][k] == q.leq[j][map[k]]) && (p.leq[k][i] == q.leq[map[k]][j]);
      }
      if (!ok) continue;
      map[i] = j;
      used[j] = true;
      if (extend(step + 1)) return true;
      map[i] = -1;
      used[j] = false;
    }
    return false;
  };
  if (extend(0) && detail::verify_lattice_iso(p, q, map)) {
    result.status = LatticeIsoResult::Status::found;
    result.mapping = std::move(map);
  }
  return result;
}

}  // namespace mvder

#endif  // MVDER_POSET_HPP
