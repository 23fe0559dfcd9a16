#ifndef MVDER_PROPERTIES_HPP
#define MVDER_PROPERTIES_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mvder/algebra.hpp"
#include "mvder/der_lattice.hpp"
#include "mvder/derivations.hpp"
#include "mvder/structure.hpp"

namespace mvder {

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::string witness;  // first counterexample, empty when passed
};

namespace detail {

class PropertyLog {
 public:
  explicit PropertyLog(const FiniteMvAlgebra& a) : a_(a) {}

  void report(const std::string& name, bool ok, const std::string& witness = "") {
    results_.push_back({name, ok, ok ? "" : witness});
  }

  std::string elem(int x) const { return a_.names[x]; }

  std::vector<PropertyResult> take() { return std::move(results_); }

 private:
  const FiniteMvAlgebra& a_;
  std::vector<PropertyResult> results_;
};

inline bool algebra_is_chain(const FiniteMvAlgebra& a) {
  for (int x = 0; x < a.n; ++x) {
    for (int y = 0; y < a.n; ++y) {
      if (!a.leq(x, y) && !a.leq(y, x)) return false;
    }
  }
  return true;
}

inline bool algebra_is_boolean(const FiniteMvAlgebra& a) {
  return boolean_center(a).count() == a.n;
}

inline int power_odot(const FiniteMvAlgebra& a, int x, int m) {
  int acc = a.one();
  for (int i = 0; i < m; ++i) acc = a.odot(acc, x);
  return acc;
}

inline std::vector<Operator> all_operators(const FiniteMvAlgebra& a) {
  std::vector<Operator> out;
  std::vector<int> img(a.n, 0);
  while (true) {
    out.emplace_back(img);
    int i = a.n - 1;
    while (i >= 0 && img[i] == a.n - 1) img[i--] = 0;
    if (i < 0) break;
    ++img[i];
  }
  return out;
}

}  // namespace detail

/// Laws of the derived operations and the natural order, checked
/// exhaustively over the carrier.
inline std::vector<PropertyResult> check_algebra_properties(const FiniteMvAlgebra& a) {
  detail::PropertyLog log(a);
  const int n = a.n;
  const int one = a.one();

  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        int prod = a.odot(x, y), meet = a.owedge(x, y), join = a.ovee(x, y), sum = a.oplus(x, y);
        ok = a.leq(prod, meet) && a.leq(meet, x) && a.leq(x, join) && a.leq(join, sum);
        if (!ok) w = "x=" + log.elem(x) + " y=" + log.elem(y);
      }
    }
    log.report("operation-sandwich", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x) {
      if (!a.leq(x, x)) { ok = false; w = "reflexivity at " + log.elem(x); }
      if (ok && !a.leq(0, x)) { ok = false; w = "bottom vs " + log.elem(x); }
      if (ok && !a.leq(x, one)) { ok = false; w = "top vs " + log.elem(x); }
      for (int y = 0; y < n && ok; ++y) {
        if (x != y && a.leq(x, y) && a.leq(y, x)) { ok = false; w = "antisymmetry " + log.elem(x) + "," + log.elem(y); }
        for (int z = 0; z < n && ok; ++z) {
          if (a.leq(x, y) && a.leq(y, z) && !a.leq(x, z)) {
            ok = false;
            w = "transitivity " + log.elem(x) + "," + log.elem(y) + "," + log.elem(z);
          }
        }
      }
    }
    log.report("natural-order-bounded", ok, w);
  }
  {
    // join and meet really are least upper / greatest lower bounds
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        int join = a.ovee(x, y), meet = a.owedge(x, y);
        ok = a.leq(x, join) && a.leq(y, join) && a.leq(meet, x) && a.leq(meet, y);
        for (int z = 0; z < n && ok; ++z) {
          if (a.leq(x, z) && a.leq(y, z)) ok = a.leq(join, z);
          if (ok && a.leq(z, x) && a.leq(z, y)) ok = a.leq(z, meet);
        }
        if (!ok) w = "x=" + log.elem(x) + " y=" + log.elem(y);
      }
    }
    log.report("join-meet-are-bounds", ok, w);
  }
  if (n <= 12) {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        for (int z = 0; z < n && ok; ++z) {
          ok = a.owedge(x, a.ovee(y, z)) == a.ovee(a.owedge(x, y), a.owedge(x, z));
          if (!ok) w = "x=" + log.elem(x) + " y=" + log.elem(y) + " z=" + log.elem(z);
        }
      }
    }
    log.report("lattice-distributivity", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        bool le = a.leq(x, y);
        bool via_odot = a.odot(x, a.neg(y)) == 0;
        bool via_recover = a.oplus(x, a.odot(y, a.neg(x))) == y;
        bool via_exists = false;
        for (int z = 0; z < n && !via_exists; ++z) via_exists = a.oplus(x, z) == y;
        ok = (le == via_odot) && (le == via_exists) && (!le || via_recover);
        if (!ok) w = "x=" + log.elem(x) + " y=" + log.elem(y);
      }
    }
    log.report("order-equivalences", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        for (int z = 0; z < n && ok; ++z) {
          ok = a.odot(x, a.ovee(y, z)) == a.ovee(a.odot(x, y), a.odot(x, z)) &&
               a.odot(x, a.owedge(y, z)) == a.owedge(a.odot(x, y), a.odot(x, z));
          if (!ok) w = "x=" + log.elem(x) + " y=" + log.elem(y) + " z=" + log.elem(z);
        }
      }
    }
    log.report("odot-distributes-over-join-meet", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        for (int z = 0; z < n && ok; ++z) {
          ok = a.leq(a.odot(x, y), z) == a.leq(x, a.oplus(a.neg(y), z));
          if (!ok) w = "x=" + log.elem(x) + " y=" + log.elem(y) + " z=" + log.elem(z);
        }
      }
    }
    log.report("residuation", ok, w);
  }
  if (detail::algebra_is_chain(a)) {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        ok = (a.oplus(x, y) == x) == (x == one || y == 0);
        if (!ok) w = "x=" + log.elem(x) + " y=" + log.elem(y);
      }
    }
    log.report("chain-absorption", ok, w);
  }
  {
    Subset center = boolean_center(a);
    bool ok = center.contains(0) && center.contains(one);
    std::string w = ok ? "" : "bounds missing from center";
    for (int x : center.elements()) {
      if (!ok) break;
      if (!center.contains(a.neg(x)) || a.odot(x, x) != x) {
        ok = false;
        w = "x=" + log.elem(x);
      }
      for (int y : center.elements()) {
        if (!center.contains(a.oplus(x, y))) {
          ok = false;
          w = "x=" + log.elem(x) + " y=" + log.elem(y);
        }
      }
    }
    log.report("boolean-center-subalgebra", ok, w);

    ok = true;
    w.clear();
    for (int x : center.elements()) {
      for (int y = 0; y < n && ok; ++y) {
        ok = a.oplus(x, y) == a.ovee(x, y) && a.odot(x, y) == a.owedge(x, y);
        if (!ok) w = "x=" + log.elem(x) + " y=" + log.elem(y);
      }
      if (!ok) break;
    }
    log.report("boolean-center-absorption", ok, w);
  }
  {
    std::vector<Subset> ids = ideals(a);
    std::vector<Subset> lids = lattice_ideals(a);
    bool ok = true;
    std::string w;
    for (const auto& ideal : ids) {
      if (std::find(lids.begin(), lids.end(), ideal) == lids.end()) {
        ok = false;
        w = "an ideal of size " + std::to_string(ideal.count()) + " is not a lattice ideal";
        break;
      }
    }
    log.report("ideals-are-lattice-ideals", ok, w);
  }
  return log.take();
}

/// Pointwise laws every derivation obeys, checked for every enumerated
/// derivation over every element pair.
inline std::vector<PropertyResult> check_derivation_properties(const FiniteMvAlgebra& a,
                                                               const EnumerationOptions& opts = {}) {
  detail::PropertyLog log(a);
  const int n = a.n;
  const int one = a.one();
  std::vector<DerivationRecord> records = enumerate_derivations(a, opts);
  const bool boolean_algebra = detail::algebra_is_boolean(a);
  Subset center = boolean_center(a);

  auto for_each_der = [&](const std::string& name, auto&& body) {
    bool ok = true;
    std::string w;
    for (std::size_t di = 0; di < records.size() && ok; ++di) {
      std::string local;
      if (!body(records[di], local)) {
        ok = false;
        w = "derivation #" + std::to_string(di) + (local.empty() ? "" : " at " + local);
      }
    }
    log.report(name, ok, w);
  };

  for_each_der("derivation-fixes-zero", [&](const DerivationRecord& r, std::string&) {
    return r.op(0) == 0;
  });
  for_each_der("derivation-below-identity", [&](const DerivationRecord& r, std::string& w) {
    for (int x = 0; x < n; ++x) {
      if (!a.leq(r.op(x), x)) { w = "x=" + log.elem(x); return false; }
    }
    return true;
  });
  for_each_der("derivation-annihilation", [&](const DerivationRecord& r, std::string& w) {
    for (int x = 0; x < n; ++x) {
      if (a.odot(r.op(x), a.neg(x)) != 0 || a.odot(x, r.op(a.neg(x))) != 0) {
        w = "x=" + log.elem(x);
        return false;
      }
    }
    return true;
  });
  for_each_der("derivation-power-rule", [&](const DerivationRecord& r, std::string& w) {
    for (int x = 0; x < n; ++x) {
      for (int m = 1; m <= n; ++m) {
        if (r.op(detail::power_odot(a, x, m)) != a.odot(detail::power_odot(a, x, m - 1), r.op(x))) {
          w = "x=" + log.elem(x) + " power=" + std::to_string(m);
          return false;
        }
      }
    }
    return true;
  });
  for_each_der("derivation-top-image-bound", [&](const DerivationRecord& r, std::string& w) {
    for (int x = 0; x < n; ++x) {
      int scaled = a.odot(x, r.op(one));
      if (r.op(x) != a.ovee(r.op(x), scaled) || !a.leq(scaled, r.op(x))) {
        w = "x=" + log.elem(x);
        return false;
      }
    }
    return true;
  });
  for_each_der("derivation-negation-bound", [&](const DerivationRecord& r, std::string& w) {
    for (int x = 0; x < n; ++x) {
      if (!a.leq(r.op(a.neg(x)), a.neg(x)) || !a.leq(a.neg(x), a.neg(r.op(x)))) {
        w = "x=" + log.elem(x);
        return false;
      }
    }
    return true;
  });
  for_each_der("derivation-product-bounds", [&](const DerivationRecord& r, std::string& w) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        int dxy = r.op(a.odot(x, y));
        if (!a.leq(a.odot(r.op(x), r.op(y)), dxy) || !a.leq(dxy, a.ovee(r.op(x), r.op(y))) ||
            !a.leq(a.ovee(r.op(x), r.op(y)), a.oplus(r.op(x), r.op(y)))) {
          w = "x=" + log.elem(x) + " y=" + log.elem(y);
          return false;
        }
      }
    }
    return true;
  });
  for_each_der("derivation-power-bound", [&](const DerivationRecord& r, std::string& w) {
    for (int x = 0; x < n; ++x) {
      for (int m = 1; m <= n; ++m) {
        if (!a.leq(detail::power_odot(a, r.op(x), m), r.op(detail::power_odot(a, x, m)))) {
          w = "x=" + log.elem(x) + " power=" + std::to_string(m);
          return false;
        }
      }
    }
    return true;
  });
  for_each_der("derivation-downset-stability", [&](const DerivationRecord& r, std::string& w) {
    if (n <= 16) {
      for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        bool downset = true;
        for (int x = 0; x < n && downset; ++x) {
          if (!(mask >> x & 1)) continue;
          for (int y = 0; y < n && downset; ++y) {
            if (a.leq(y, x) && !(mask >> y & 1)) downset = false;
          }
        }
        if (!downset) continue;
        for (int x = 0; x < n; ++x) {
          if ((mask >> x & 1) && !(mask >> r.op(x) & 1)) {
            w = "x=" + log.elem(x);
            return false;
          }
        }
      }
      return true;
    }
    for (int x = 0; x < n; ++x) {
      if (!a.leq(r.op(x), x)) { w = "x=" + log.elem(x); return false; }
    }
    return true;
  });
  for_each_der("derivation-fixed-points-downward", [&](const DerivationRecord& r, std::string& w) {
    for (int x = 0; x < n; ++x) {
      if (r.op(x) != x) continue;
      for (int y = 0; y < n; ++y) {
        if (a.leq(y, x) && r.op(y) != y) {
          w = "x=" + log.elem(x) + " y=" + log.elem(y);
          return false;
        }
      }
    }
    return true;
  });
  for_each_der("identity-characterization", [&](const DerivationRecord& r, std::string& w) {
    bool is_id = r.op == identity_operator(a);
    bool top_fixed = r.op(one) == one;
    bool hits_top = false;
    std::vector<bool> seen(n, false);
    for (int x = 0; x < n; ++x) {
      seen[r.op(x)] = true;
      if (r.op(x) == one) hits_top = true;
    }
    bool surjective = std::find(seen.begin(), seen.end(), false) == seen.end();
    bool dual_law = true;
    for (int x = 0; x < n && dual_law; ++x) {
      for (int y = 0; y < n && dual_law; ++y) {
        dual_law = r.op(a.oplus(x, y)) == a.owedge(a.oplus(r.op(x), y), a.oplus(x, r.op(y)));
      }
    }
    if (is_id != top_fixed || is_id != hits_top || is_id != surjective || is_id != dual_law) {
      w = "flags id/top/hits/surj/dual = " + std::to_string(is_id) + std::to_string(top_fixed) +
          std::to_string(hits_top) + std::to_string(surjective) + std::to_string(dual_law);
      return false;
    }
    return true;
  });
  for_each_der("boolean-image-idempotence", [&](const DerivationRecord& r, std::string& w) {
    for (int x = 0; x < n; ++x) {
      if (center.contains(r.op(x)) && r.op(r.op(x)) != r.op(x)) {
        w = "x=" + log.elem(x);
        return false;
      }
    }
    return true;
  });
  for_each_der("boolean-center-pair-laws", [&](const DerivationRecord& r, std::string& w) {
    for (int x : center.elements()) {
      if (r.op(x) != a.odot(x, r.op(x))) { w = "x=" + log.elem(x); return false; }
      for (int y : center.elements()) {
        if (r.op(a.owedge(x, y)) !=
            a.ovee(a.owedge(r.op(x), y), a.owedge(x, r.op(y)))) {
          w = "x=" + log.elem(x) + " y=" + log.elem(y);
          return false;
        }
      }
    }
    return true;
  });
  for_each_der("isotone-equivalences", [&](const DerivationRecord& r, std::string& w) {
    if (!center.contains(r.op(one))) return true;  // equivalences need an idempotent top image
    bool bounded = true, scaled = true, meets = true, joins = true;
    for (int x = 0; x < n; ++x) {
      bounded = bounded && a.leq(r.op(x), r.op(one));
      scaled = scaled && r.op(x) == a.odot(r.op(one), x);
      for (int y = 0; y < n; ++y) {
        meets = meets && r.op(a.owedge(x, y)) == a.owedge(r.op(x), r.op(y));
        joins = joins && r.op(a.ovee(x, y)) == a.ovee(r.op(x), r.op(y));
      }
    }
    if (r.is_isotone != bounded || r.is_isotone != scaled || r.is_isotone != meets ||
        r.is_isotone != joins) {
      w = "flags isotone/bounded/scaled/meets/joins = " + std::to_string(r.is_isotone) +
          std::to_string(bounded) + std::to_string(scaled) + std::to_string(meets) +
          std::to_string(joins);
      return false;
    }
    return true;
  });
  for_each_der("ider-additivity-equivalence", [&](const DerivationRecord& r, std::string& w) {
    bool additive = true, multiplicative = true;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        additive = additive && r.op(a.oplus(x, y)) == a.oplus(r.op(x), r.op(y));
        multiplicative = multiplicative && r.op(a.odot(x, y)) == a.odot(r.op(x), r.op(y));
      }
    }
    if (r.in_ider != additive || r.in_ider != multiplicative) {
      w = "flags ider/additive/multiplicative = " + std::to_string(r.in_ider) +
          std::to_string(additive) + std::to_string(multiplicative);
      return false;
    }
    return true;
  });
  for_each_der("ider-idempotence", [&](const DerivationRecord& r, std::string&) {
    return !r.in_ider || r.is_idempotent;
  });
  for_each_der("principal-fixed-points-ideal", [&](const DerivationRecord& r, std::string&) {
    return !r.is_principal || fixed_point_ideal_check(a, r.op);
  });
  if (boolean_algebra) {
    // On Boolean algebras the defining equation and the lattice-derivation
    // law select exactly the same maps; scan the full candidate space of
    // sub-identity maps when it is small enough.
    bool ok = true;
    std::string w;
    for (const auto& r : records) {
      for (int x = 0; x < n && ok; ++x) {
        for (int y = 0; y < n && ok; ++y) {
          ok = r.op(a.owedge(x, y)) == a.ovee(a.owedge(r.op(x), y), a.owedge(x, r.op(y)));
          if (!ok) w = "x=" + log.elem(x) + " y=" + log.elem(y);
        }
      }
      if (!ok) break;
    }
    if (ok && n <= 8) {
      std::vector<Operator> ders;
      for (const auto& r : records) ders.push_back(r.op);
      std::vector<std::vector<int>> down(n);
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (a.leq(y, x)) down[x].push_back(y);
        }
      }
      std::vector<int> img(n, 0);
      std::vector<std::size_t> choice(n, 0);
      while (ok) {
        for (int x = 0; x < n; ++x) img[x] = down[x][choice[x]];
        bool lattice_law = true;
        for (int x = 0; x < n && lattice_law; ++x) {
          for (int y = 0; y < n && lattice_law; ++y) {
            lattice_law = img[a.owedge(x, y)] == a.ovee(a.owedge(img[x], y), a.owedge(x, img[y]));
          }
        }
        Operator f{img};
        bool in_der = std::binary_search(ders.begin(), ders.end(), f);
        if (lattice_law != in_der) {
          ok = false;
          w = "map " + operator_label(a, f);
        }
        int i = n - 1;
        while (i >= 0 && choice[i] + 1 == down[i].size()) choice[i--] = 0;
        if (i < 0) break;
        ++choice[i];
      }
    }
    log.report("boolean-lattice-derivation-law", ok, w);
  }
  return log.take();
}

/// Order-theoretic facts about the derivation poset.
inline std::vector<PropertyResult> check_lattice_properties(const FiniteMvAlgebra& a,
                                                            const EnumerationOptions& opts = {}) {
  detail::PropertyLog log(a);
  DerivationPoset dp = derivation_poset(a, opts);
  const int m = dp.size();
  const Operator id = identity_operator(a);
  const Operator zero = zero_operator(a);

  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < m && ok; ++i) {
      ok = operator_leq(a, zero, dp.records[i].op) && operator_leq(a, dp.records[i].op, id);
      if (!ok) w = "derivation #" + std::to_string(i);
    }
    log.report("derivation-bounds", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    std::vector<Operator> ops;
    for (const auto& r : dp.records) ops.push_back(r.op);
    for (int i = 0; i < m && ok; ++i) {
      for (int j = 0; j < m && ok; ++j) {
        ok = std::binary_search(ops.begin(), ops.end(), pointwise_join(a, ops[i], ops[j]));
        if (!ok) w = "pair #" + std::to_string(i) + ",#" + std::to_string(j);
      }
    }
    log.report("derivation-join-closure", ok, w);
  }
  log.report("derivation-poset-is-lattice", dp.is_lattice);
  if (detail::algebra_is_chain(a)) {
    // Meets and joins of redirected principal maps follow the componentwise
    // closed form, so the chain's derivation lattice is pointwise-closed.
    bool ok = true;
    std::string w;
    const int n = a.n;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y <= x && ok; ++y) {
        if (x == 0 && y == 0) continue;
        Operator dxy = modify_at_one(a, principal(a, x), y);
        for (int z = 0; z < n && ok; ++z) {
          for (int u = 0; u <= z && ok; ++u) {
            if (z == 0 && u == 0) continue;
            Operator dzu = modify_at_one(a, principal(a, z), u);
            Operator join = modify_at_one(a, principal(a, a.ovee(x, z)), a.ovee(y, u));
            Operator meet = modify_at_one(a, principal(a, a.owedge(x, z)), a.owedge(y, u));
            ok = pointwise_join(a, dxy, dzu) == join && pointwise_meet(a, dxy, dzu) == meet;
            if (!ok) {
              w = "(" + log.elem(x) + "," + log.elem(y) + ") vs (" + log.elem(z) + "," +
                  log.elem(u) + ")";
            }
          }
        }
      }
    }
    log.report("chain-closed-form-join-meet", ok, w);
  }
  {
    bool ok = false;
    std::string w;
    try {
      ok = chi_filter_check(a, opts);
      if (!ok) w = "chi family is not a filter";
    } catch (const InvalidInput&) {
      w = "derivation poset is not a lattice";
    }
    log.report("chi-family-is-filter", ok, w);
  }
  return log.take();
}

/// Direct-product facts, checked over every combination of factor
/// operators (not just derivations, so both directions of the equivalences
/// are exercised).
inline std::vector<PropertyResult> check_product_properties(
    const std::vector<FiniteMvAlgebra>& factors, const EnumerationOptions& opts = {},
    int max_elements = kDefaultMaxElements) {
  detail::require(factors.size() >= 2, "check_product_properties: need at least two factors");
  FiniteMvAlgebra prod = make_product(factors, max_elements);
  detail::PropertyLog log(prod);
  const std::size_t k = factors.size();
  std::vector<int> dims;
  for (const auto& f : factors) dims.push_back(f.n);

  long long combos = 1;
  std::vector<std::vector<Operator>> factor_ops;
  for (const auto& f : factors) {
    factor_ops.push_back(detail::all_operators(f));
    combos *= static_cast<long long>(factor_ops.back().size());
    if (combos > 1'000'000) {
      throw CapExceeded("check_product_properties: operator combination space too large");
    }
  }

  std::vector<std::vector<Operator>> factor_ders;
  std::vector<std::vector<Operator>> factor_isotone_ders;
  for (std::size_t i = 0; i < k; ++i) {
    factor_ders.push_back({});
    factor_isotone_ders.push_back({});
    for (const auto& r : enumerate_derivations(factors[i], opts)) {
      factor_ders[i].push_back(r.op);
      if (r.is_isotone) factor_isotone_ders[i].push_back(r.op);
    }
  }

  auto is_isotone_op = [](const FiniteMvAlgebra& alg, const Operator& f) {
    for (int x = 0; x < alg.n; ++x) {
      for (int y = 0; y < alg.n; ++y) {
        if (alg.leq(x, y) && !alg.leq(f(x), f(y))) return false;
      }
    }
    return true;
  };
  auto is_principal_op = [](const FiniteMvAlgebra& alg, const Operator& f) {
    for (int c = 0; c < alg.n; ++c) {
      if (principal(alg, c) == f) return true;
    }
    return false;
  };

  // Scan every combination of factor operators once, exercising the
  // projection identities and all three product equivalences.
  bool proj_ok = true, der_iff_ok = true, isotone_iff_ok = true, principal_iff_ok = true,
       embed_ok = true;
  std::string proj_w, der_iff_w, isotone_iff_w, principal_iff_w, embed_w;
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    std::vector<Operator> ds;
    ds.reserve(k);
    for (std::size_t i = 0; i < k; ++i) ds.push_back(factor_ops[i][pick[i]]);
    Operator big = product_derivation(factors, ds, max_elements);

    if (proj_ok) {
      for (std::size_t i = 0; i < k && proj_ok; ++i) {
        proj_ok = project_derivation(factors, big, i) == ds[i];
        for (int z = 0; z < prod.n && proj_ok; ++z) {
          proj_ok = product_tuple(dims, big(z))[i] == ds[i](product_tuple(dims, z)[i]);
        }
        if (!proj_ok) proj_w = "factor " + std::to_string(i);
      }
    }
    if (der_iff_ok) {
      bool all_der = true;
      for (std::size_t i = 0; i < k; ++i) all_der = all_der && is_derivation(factors[i], ds[i]);
      if (is_derivation(prod, big) != all_der) {
        der_iff_ok = false;
        der_iff_w = "combination " + operator_label(prod, big);
      }
    }
    if (isotone_iff_ok) {
      bool all_iso_der = true;
      for (std::size_t i = 0; i < k; ++i) {
        all_iso_der = all_iso_der && is_derivation(factors[i], ds[i]) &&
                      is_isotone_op(factors[i], ds[i]);
      }
      bool big_iso_der = is_derivation(prod, big) && is_isotone_op(prod, big);
      if (big_iso_der != all_iso_der) {
        isotone_iff_ok = false;
        isotone_iff_w = "combination " + operator_label(prod, big);
      }
    }
    if (principal_iff_ok) {
      bool all_principal = true;
      for (std::size_t i = 0; i < k; ++i) {
        all_principal = all_principal && is_principal_op(factors[i], ds[i]);
      }
      if (is_principal_op(prod, big) != all_principal) {
        principal_iff_ok = false;
        principal_iff_w = "combination " + operator_label(prod, big);
      }
    }
    if (embed_ok) {
      bool zeros_fixed = true;
      for (std::size_t i = 0; i < k; ++i) zeros_fixed = zeros_fixed && ds[i](0) == 0;
      if (zeros_fixed) {
        for (std::size_t i = 0; i < k && embed_ok; ++i) {
          std::vector<int> t(dims.size(), 0);
          for (int x = 0; x < factors[i].n && embed_ok; ++x) {
            t[i] = x;
            int via_big = big(product_index(dims, t));
            t[i] = ds[i](x);
            int via_embed = product_index(dims, t);
            embed_ok = via_big == via_embed;
            if (!embed_ok) embed_w = "factor " + std::to_string(i) + " x=" + factors[i].names[x];
          }
        }
      }
    }

    std::size_t i = k;
    while (i > 0 && pick[i - 1] + 1 == factor_ops[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
    ++pick[i - 1];
  }
  log.report("product-projection-identities", proj_ok, proj_w);
  log.report("product-derivation-equivalence", der_iff_ok, der_iff_w);
  log.report("product-isotone-equivalence", isotone_iff_ok, isotone_iff_w);
  log.report("product-principal-equivalence", principal_iff_ok, principal_iff_w);
  log.report("product-embedding-commutes", embed_ok, embed_w);

  {
    // The principal maps on the product are exactly the products of the
    // factors' principal maps.
    std::vector<Operator> lhs, rhs;
    for (int u = 0; u < prod.n; ++u) lhs.push_back(principal(prod, u));
    for (int u = 0; u < prod.n; ++u) {
      std::vector<int> t = product_tuple(dims, u);
      std::vector<Operator> ds;
      for (std::size_t i = 0; i < k; ++i) ds.push_back(principal(factors[i], t[i]));
      rhs.push_back(product_derivation(factors, ds, max_elements));
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    log.report("principal-product-equality", lhs == rhs);
  }
  {
    // Derivations factor exactly when they equal the product of their
    // projections; chi maps below the top never factor.
    bool ok = true;
    std::string w;
    std::vector<Operator> in_product_set;
    std::vector<std::size_t> dpick(k, 0);
    while (true) {
      std::vector<Operator> ds;
      for (std::size_t i = 0; i < k; ++i) ds.push_back(factor_ders[i][dpick[i]]);
      in_product_set.push_back(product_derivation(factors, ds, max_elements));
      std::size_t i = k;
      while (i > 0 && dpick[i - 1] + 1 == factor_ders[i - 1].size()) dpick[--i] = 0;
      if (i == 0) break;
      ++dpick[i - 1];
    }
    std::sort(in_product_set.begin(), in_product_set.end());
    for (const Operator& d : enumerate_derivation_operators(prod, opts)) {
      bool member = std::binary_search(in_product_set.begin(), in_product_set.end(), d);
      if (factorizes(factors, d, max_elements) != member) {
        ok = false;
        w = operator_label(prod, d);
        break;
      }
    }
    log.report("factorization-via-projections", ok, w);

    ok = true;
    w.clear();
    for (int u = 0; u < prod.n && ok; ++u) {
      Operator chiu = chi(prod, u);
      if (u == prod.one()) continue;  // chi at the top is the identity
      for (std::size_t i = 0; i < k && ok; ++i) {
        ok = project_derivation(factors, chiu, i) == identity_operator(factors[i]);
      }
      ok = ok && !factorizes(factors, chiu, max_elements);
      if (!ok) w = "u=" + log.elem(u);
    }
    log.report("chi-projections-are-identity", ok, w);
  }
  return log.take();
}

/// The full suite: algebra laws, derivation laws, poset structure, and,
/// when the factor list is given, the direct-product facts.
inline std::vector<PropertyResult> run_property_suite(
    const FiniteMvAlgebra& a, const std::vector<FiniteMvAlgebra>* factors = nullptr,
    const EnumerationOptions& opts = {}, int max_elements = kDefaultMaxElements) {
  std::vector<PropertyResult> all = check_algebra_properties(a);
  for (auto& r : check_derivation_properties(a, opts)) all.push_back(std::move(r));
  for (auto& r : check_lattice_properties(a, opts)) all.push_back(std::move(r));
  if (factors && factors->size() >= 2) {
    for (auto& r : check_product_properties(*factors, opts, max_elements)) all.push_back(std::move(r));
  }
  return all;
}

}  // namespace mvder

#endif  // MVDER_PROPERTIES_HPP
