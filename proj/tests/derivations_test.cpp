#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "mvder/algebra.hpp"
#include "mvder/derivations.hpp"
#include "mvder/properties.hpp"
#include "table1_fixture.hpp"

namespace mvder {
namespace {

// Independent oracle: scan every self-map of the carrier (an odometer over
// all n^n image vectors) and keep those satisfying the defining equation,
// evaluated from the raw tables here rather than through the library's
// is_derivation. Only for small carriers.
std::vector<std::vector<int>> brute_force_derivations(const FiniteMvAlgebra& a) {
  std::vector<std::vector<int>> found;
  std::vector<int> img(a.n, 0);
  auto odot = [&](int x, int y) { return a.neg(a.oplus(a.neg(x), a.neg(y))); };
  auto ovee = [&](int x, int y) { return a.oplus(odot(x, a.neg(y)), y); };
  while (true) {
    bool ok = true;
    for (int x = 0; x < a.n && ok; ++x) {
      for (int y = 0; y < a.n && ok; ++y) {
        ok = img[odot(x, y)] == ovee(odot(img[x], y), odot(x, img[y]));
      }
    }
    if (ok) found.push_back(img);
    int i = a.n - 1;
    while (i >= 0 && img[i] == a.n - 1) img[i--] = 0;
    if (i < 0) break;
    ++img[i];
  }
  std::sort(found.begin(), found.end());
  return found;
}

FiniteMvAlgebra l2_l3() { return make_product({make_chain(2), make_chain(3)}); }

TEST(IsDerivation, IdentityAndZeroAlways) {
  for (const FiniteMvAlgebra& a : {make_chain(2), make_chain(5), l2_l3()}) {
    EXPECT_TRUE(is_derivation(a, identity_operator(a)));
    EXPECT_TRUE(is_derivation(a, zero_operator(a)));
  }
}

TEST(IsDerivation, ReportsFailingPair) {
  FiniteMvAlgebra l3 = make_chain(3);
  Operator f{{0, 0, 2}};
  std::pair<int, int> witness{-1, -1};
  ASSERT_FALSE(is_derivation(l3, f, &witness));
  // the witness really violates the equation: lhs 0, rhs 1/2
  int lhs = f(l3.odot(witness.first, witness.second));
  int rhs = l3.ovee(l3.odot(f(witness.first), witness.second),
                    l3.odot(witness.first, f(witness.second)));
  EXPECT_NE(lhs, rhs);
  EXPECT_EQ(lhs, 0);
  EXPECT_EQ(rhs, 1);
}

TEST(IsDerivation, PrincipalOnFourChain) {
  FiniteMvAlgebra l4 = make_chain(4);
  EXPECT_TRUE(is_derivation(l4, principal(l4, 2)));
}

TEST(IsDerivation, RejectsMismatchedOperator) {
  FiniteMvAlgebra l3 = make_chain(3);
  EXPECT_THROW(is_derivation(l3, Operator{{0, 1}}), InvalidInput);
  EXPECT_THROW(is_derivation(l3, Operator{{0, 1, 7}}), InvalidInput);
}

TEST(Principal, TopAndBottomGiveIdentityAndZero) {
  for (const FiniteMvAlgebra& a : {make_chain(4), l2_l3()}) {
    EXPECT_EQ(principal(a, a.one()), identity_operator(a));
    EXPECT_EQ(principal(a, 0), zero_operator(a));
  }
}

TEST(Principal, HalfOnThreeChain) {
  FiniteMvAlgebra l3 = make_chain(3);
  EXPECT_EQ(principal(l3, 1).images, (std::vector<int>{0, 0, 1}));
}

TEST(Principal, ProductElementMatchesTableRow) {
  FiniteMvAlgebra p = l2_l3();
  // principal map of (1,0): images 0 0 0 c c c
  EXPECT_EQ(principal(p, 3).images, (std::vector<int>{0, 0, 0, 3, 3, 3}));
}

TEST(Chi, TopYieldsIdentity) {
  FiniteMvAlgebra l3 = make_chain(3);
  EXPECT_EQ(chi(l3, l3.one()), identity_operator(l3));
}

TEST(Chi, RedirectsOnlyTheTop) {
  FiniteMvAlgebra l4 = make_chain(4);
  EXPECT_EQ(chi(l4, 2).images, (std::vector<int>{0, 1, 2, 2}));
  EXPECT_TRUE(is_derivation(l4, chi(l4, 2)));
}

TEST(Chi, AtZeroIsNotIsotone) {
  FiniteMvAlgebra l3 = make_chain(3);
  DerivationRecord rec = classify(l3, chi(l3, 0));
  EXPECT_FALSE(rec.is_isotone);
  EXPECT_TRUE(rec.is_idempotent);
}

TEST(ModifyAtOne, IdentityRedirectIsChi) {
  for (int n : {2, 3, 5}) {
    FiniteMvAlgebra a = make_chain(n);
    for (int u = 0; u < n; ++u) {
      EXPECT_EQ(modify_at_one(a, identity_operator(a), u), chi(a, u));
    }
  }
}

TEST(ModifyAtOne, PatchesPrincipalMap) {
  FiniteMvAlgebra l4 = make_chain(4);
  Operator patched = modify_at_one(l4, principal(l4, 2), 1);
  EXPECT_EQ(patched.images, (std::vector<int>{0, 0, 1, 1}));
  EXPECT_TRUE(is_derivation(l4, patched));
}

TEST(ModifyAtOne, RejectsImageAboveTop) {
  FiniteMvAlgebra l3 = make_chain(3);
  EXPECT_THROW(modify_at_one(l3, principal(l3, 1), 2), InvalidInput);
}

TEST(Enumerate, ChainCountsFollowClosedForm) {
  for (int n = 2; n <= 6; ++n) {
    auto ders = enumerate_derivation_operators(make_chain(n));
    EXPECT_EQ(static_cast<int>(ders.size()), (n - 1) * (n + 2) / 2) << "n=" << n;
    EXPECT_TRUE(std::is_sorted(ders.begin(), ders.end()));
  }
}

TEST(Enumerate, ThreeChainListsExactFamilies) {
  FiniteMvAlgebra l3 = make_chain(3);
  auto ders = enumerate_derivation_operators(l3);
  std::set<Operator> expected{identity_operator(l3), zero_operator(l3), principal(l3, 1),
                              chi(l3, 0), chi(l3, 1)};
  EXPECT_EQ(std::set<Operator>(ders.begin(), ders.end()), expected);
}

TEST(Enumerate, MatchesBruteForceOracle) {
  for (const FiniteMvAlgebra& a :
       {make_chain(2), make_chain(3), make_chain(4), make_chain(5),
        make_product({make_chain(2), make_chain(2)}), l2_l3()}) {
    std::vector<std::vector<int>> expected = brute_force_derivations(a);
    std::vector<std::vector<int>> got;
    for (const Operator& op : enumerate_derivation_operators(a)) got.push_back(op.images);
    EXPECT_EQ(got, expected) << "n=" << a.n;
  }
}

TEST(Enumerate, ProductOfTwoAndThreeMatchesFixture) {
  auto ders = enumerate_derivation_operators(l2_l3());
  std::vector<std::vector<int>> expected = mvder::testing::table1_images();
  std::sort(expected.begin(), expected.end());
  std::vector<std::vector<int>> got;
  for (const Operator& op : ders) got.push_back(op.images);
  EXPECT_EQ(got, expected);
}

TEST(Enumerate, SearchCapIsEnforced) {
  EnumerationOptions opts;
  opts.max_nodes = 10;
  EXPECT_THROW(enumerate_derivation_operators(make_chain(6), opts), CapExceeded);
}

TEST(Enumerate, WorksOnPermutedTables) {
  // The three-chain relabelled by 0->0, 1/2->2, 1->1: index order no longer
  // extends the natural order, so the enumerator has to pick its own linear
  // extension instead of trusting the indices.
  FiniteMvAlgebra l3 = make_chain(3);
  std::vector<int> perm{0, 2, 1};
  std::vector<std::vector<int>> oplus(3, std::vector<int>(3));
  std::vector<int> neg(3);
  for (int i = 0; i < 3; ++i) {
    neg[perm[i]] = perm[l3.neg(i)];
    for (int j = 0; j < 3; ++j) oplus[perm[i]][perm[j]] = perm[l3.oplus(i, j)];
  }
  FiniteMvAlgebra permuted = from_tables(3, oplus, neg);
  ASSERT_TRUE(check_axioms(permuted).passed);
  ASSERT_EQ(permuted.one(), 1);  // the top sits at index 1 now
  auto ders = enumerate_derivation_operators(permuted);
  EXPECT_EQ(ders.size(), 5u);
  std::vector<std::vector<int>> expected = brute_force_derivations(permuted);
  std::vector<std::vector<int>> got;
  for (const Operator& op : ders) got.push_back(op.images);
  EXPECT_EQ(got, expected);
}

TEST(ChainDerivations, CountsAndSetEquality) {
  EXPECT_EQ(chain_derivations(2).size(), 2u);
  EXPECT_EQ(chain_derivations(3).size(), 5u);
  EXPECT_EQ(chain_derivations(5).size(), 14u);
  for (int n : {2, 3, 4, 5}) {
    std::vector<Operator> closed = chain_derivations(n);
    std::set<Operator> closed_set(closed.begin(), closed.end());
    EXPECT_EQ(closed_set.size(), closed.size()) << "duplicates at n=" << n;
    auto enumerated = enumerate_derivation_operators(make_chain(n));
    EXPECT_EQ(closed_set, std::set<Operator>(enumerated.begin(), enumerated.end()));
  }
}

TEST(Classify, ChiOnFourChainIsIsotoneNotPrincipal) {
  FiniteMvAlgebra l4 = make_chain(4);
  DerivationRecord rec = classify(l4, chi(l4, 2));
  EXPECT_TRUE(rec.is_isotone);
  EXPECT_FALSE(rec.is_principal);
  EXPECT_FALSE(rec.principal_witness.has_value());
  EXPECT_TRUE(rec.is_chi);
  EXPECT_EQ(rec.chi_witness, 2);
}

TEST(Classify, PrincipalMapsAreIsotone) {
  for (const FiniteMvAlgebra& a : {make_chain(5), l2_l3()}) {
    for (int u = 0; u < a.n; ++u) {
      DerivationRecord rec = classify(a, principal(a, u));
      EXPECT_TRUE(rec.is_isotone);
      EXPECT_TRUE(rec.is_principal);
      EXPECT_EQ(rec.principal_witness, u);
    }
  }
}

TEST(Classify, ZeroOnTwoChainIsAlsoChi) {
  FiniteMvAlgebra l2 = make_chain(2);
  DerivationRecord rec = classify(l2, zero_operator(l2));
  EXPECT_TRUE(rec.is_chi);  // redirecting the top of the two-chain to 0 is the zero map
  EXPECT_TRUE(rec.is_principal);
  EXPECT_TRUE(rec.in_ider);
}

TEST(Classify, RejectsNonDerivation) {
  FiniteMvAlgebra l3 = make_chain(3);
  EXPECT_THROW(classify(l3, Operator{{0, 0, 2}}), InvalidInput);
}

TEST(FixedPoints, LatticeIdealOnChains) {
  FiniteMvAlgebra l3 = make_chain(3);
  DerivationRecord half = classify(l3, principal(l3, 1));
  EXPECT_EQ(half.fixed_points.elements(), (std::vector<int>{0}));
  EXPECT_TRUE(fixed_point_ideal_check(l3, half.op));

  DerivationRecord chi_half = classify(l3, chi(l3, 1));
  EXPECT_EQ(chi_half.fixed_points.elements(), (std::vector<int>{0, 1}));
  EXPECT_TRUE(fixed_point_ideal_check(l3, chi_half.op));

  EXPECT_TRUE(fixed_point_ideal_check(l3, zero_operator(l3)));
}

TEST(FixedPoints, ChiAtZeroOnSquareIsNotALatticeIdeal) {
  // fixed points of the top-redirect-to-0 map on the four-element Boolean
  // algebra are {0, (0,1), (1,0)}, whose join escapes the set
  FiniteMvAlgebra b4 = make_product({make_chain(2), make_chain(2)});
  EXPECT_FALSE(fixed_point_ideal_check(b4, chi(b4, 0)));
}

TEST(ProductDerivation, MatchesTableRow) {
  FiniteMvAlgebra p = l2_l3();
  FiniteMvAlgebra l2 = make_chain(2), l3 = make_chain(3);
  Operator d2 = product_derivation({l2, l3}, {identity_operator(l2), chi(l3, 1)});
  EXPECT_EQ(d2.images, (std::vector<int>{0, 1, 1, 3, 4, 4}));  // 0 a a c d d
  Operator zz = product_derivation({l2, l3}, {zero_operator(l2), zero_operator(l3)});
  EXPECT_EQ(zz, zero_operator(p));
}

TEST(ProductDerivation, ExactlyTenOfThirtyThreeFactorize) {
  FiniteMvAlgebra l2 = make_chain(2), l3 = make_chain(3);
  std::vector<FiniteMvAlgebra> factors{l2, l3};
  int factorizing = 0;
  auto ders = enumerate_derivation_operators(l2_l3());
  for (const Operator& d : ders) {
    if (factorizes(factors, d)) ++factorizing;
  }
  EXPECT_EQ(factorizing, 10);
  EXPECT_EQ(static_cast<int>(ders.size()) - factorizing, 23);
}

TEST(ProductDerivation, RejectsArityMismatch) {
  FiniteMvAlgebra l2 = make_chain(2), l3 = make_chain(3);
  EXPECT_THROW(product_derivation({l2, l3}, {identity_operator(l2)}), InvalidInput);
  EXPECT_THROW(product_derivation({l2, l3}, {identity_operator(l3), identity_operator(l3)}),
               InvalidInput);
}

TEST(ProjectDerivation, RecoversFactors) {
  FiniteMvAlgebra l2 = make_chain(2), l3 = make_chain(3);
  std::vector<FiniteMvAlgebra> factors{l2, l3};
  Operator d2 = product_derivation(factors, {identity_operator(l2), chi(l3, 1)});
  EXPECT_EQ(project_derivation(factors, d2, 0), identity_operator(l2));
  EXPECT_EQ(project_derivation(factors, d2, 1), chi(l3, 1));
  EXPECT_THROW(project_derivation(factors, d2, 2), InvalidInput);
}

TEST(ProjectDerivation, ChiProjectsToIdentityButDoesNotFactorize) {
  FiniteMvAlgebra l2 = make_chain(2), l3 = make_chain(3);
  std::vector<FiniteMvAlgebra> factors{l2, l3};
  FiniteMvAlgebra p = l2_l3();
  for (int u = 0; u < p.n - 1; ++u) {
    Operator c = chi(p, u);
    EXPECT_EQ(project_derivation(factors, c, 0), identity_operator(l2)) << "u=" << u;
    EXPECT_EQ(project_derivation(factors, c, 1), identity_operator(l3)) << "u=" << u;
    EXPECT_FALSE(factorizes(factors, c)) << "u=" << u;
  }
}

TEST(ProjectDerivation, PrincipalMapsAlwaysFactorize) {
  FiniteMvAlgebra l2 = make_chain(2), l3 = make_chain(3);
  std::vector<FiniteMvAlgebra> factors{l2, l3};
  FiniteMvAlgebra p = l2_l3();
  for (int u = 0; u < p.n; ++u) {
    EXPECT_TRUE(factorizes(factors, principal(p, u))) << "u=" << u;
  }
}

TEST(Ider, ChainsHaveOnlyZeroAndIdentity) {
  for (int n : {2, 4, 6}) {
    FiniteMvAlgebra a = make_chain(n);
    std::vector<Operator> members = ider(a);
    ASSERT_EQ(members.size(), 2u);
    EXPECT_EQ(members[0], zero_operator(a));
    EXPECT_EQ(members[1], identity_operator(a));
  }
}

TEST(Ider, SizeMatchesBooleanCenter) {
  FiniteMvAlgebra p = l2_l3();
  EXPECT_EQ(ider(p).size(), 4u);
}

TEST(Ider, MembersPreserveBothOperations) {
  FiniteMvAlgebra p = l2_l3();
  for (const Operator& d : ider(p)) {
    for (int x = 0; x < p.n; ++x) {
      for (int y = 0; y < p.n; ++y) {
        EXPECT_EQ(d(p.oplus(x, y)), p.oplus(d(x), d(y)));
        EXPECT_EQ(d(p.odot(x, y)), p.odot(d(x), d(y)));
      }
    }
  }
}

TEST(DerivationProperties, HoldOnSmallAlgebras) {
  for (const FiniteMvAlgebra& a :
       {make_chain(2), make_chain(3), make_chain(4), make_chain(5),
        make_product({make_chain(2), make_chain(2)})}) {
    for (const PropertyResult& r : check_derivation_properties(a)) {
      EXPECT_TRUE(r.passed) << r.name << " failed at " << r.witness;
    }
  }
}

}  // namespace
}  // namespace mvder
