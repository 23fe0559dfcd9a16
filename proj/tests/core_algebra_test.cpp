#include <gtest/gtest.h>

#include "mvder/algebra.hpp"
#include "mvder/json_io.hpp"
#include "mvder/properties.hpp"

namespace mvder {
namespace {

TEST(MakeChain, TwoElementBooleanCase) {
  FiniteMvAlgebra l2 = make_chain(2);
  EXPECT_EQ(l2.oplus(1, 1), 1);
  EXPECT_EQ(l2.neg(0), 1);
  EXPECT_EQ(l2.one(), 1);
  EXPECT_EQ(l2.names, (std::vector<std::string>{"0", "1"}));
}

TEST(MakeChain, TruncatedAddition) {
  FiniteMvAlgebra l3 = make_chain(3);
  EXPECT_EQ(l3.oplus(1, 1), 2);  // 1/2 + 1/2 saturates at 1
  EXPECT_EQ(l3.names, (std::vector<std::string>{"0", "1/2", "1"}));
  FiniteMvAlgebra l5 = make_chain(5);
  EXPECT_EQ(l5.names, (std::vector<std::string>{"0", "1/4", "2/4", "3/4", "1"}));
}

TEST(MakeChain, AxiomsHold) {
  for (int n = 2; n <= 8; ++n) {
    AxiomReport report = check_axioms(make_chain(n));
    EXPECT_TRUE(report.passed) << "chain of size " << n;
    EXPECT_TRUE(report.violations.empty());
  }
}

TEST(MakeChain, RejectsTooSmall) {
  EXPECT_THROW(make_chain(1), InvalidInput);
  EXPECT_THROW(make_chain(0), InvalidInput);
}

TEST(MakeProduct, NamesFollowLexicographicTupleOrder) {
  FiniteMvAlgebra p = make_product({make_chain(2), make_chain(3)});
  ASSERT_EQ(p.n, 6);
  EXPECT_EQ(p.names, (std::vector<std::string>{"(0,0)", "(0,1/2)", "(0,1)", "(1,0)", "(1,1/2)",
                                               "(1,1)"}));
  EXPECT_TRUE(check_axioms(p).passed);
}

TEST(MakeProduct, SingleFactorKeepsTables) {
  FiniteMvAlgebra p = make_product({make_chain(2)});
  EXPECT_TRUE(p.same_tables(make_chain(2)));
}

TEST(MakeProduct, PointwiseJoinOfComplementaryBooleans) {
  FiniteMvAlgebra p = make_product({make_chain(2), make_chain(2)});
  // (1,0) has index 2, (0,1) index 1, (1,1) index 3
  EXPECT_EQ(p.oplus(2, 1), 3);
}

TEST(MakeProduct, RejectsEmptyAndOversized) {
  EXPECT_THROW(make_product({}), InvalidInput);
  EXPECT_THROW(make_product({make_chain(100), make_chain(100)}, 4096), CapExceeded);
}

TEST(ProductIndexing, TupleRoundTrip) {
  std::vector<int> dims{2, 3, 4};
  for (int i = 0; i < 24; ++i) {
    EXPECT_EQ(product_index(dims, product_tuple(dims, i)), i);
  }
  EXPECT_EQ(product_tuple(dims, 23), (std::vector<int>{1, 2, 3}));
}

TEST(FromTables, RoundTripsChain) {
  FiniteMvAlgebra l3 = make_chain(3);
  std::vector<std::vector<int>> oplus(3, std::vector<int>(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) oplus[i][j] = l3.oplus(i, j);
  }
  FiniteMvAlgebra rebuilt = from_tables(3, oplus, l3.neg_table, l3.names);
  EXPECT_EQ(rebuilt, l3);
}

TEST(FromTables, BrokenTableFailsAxiomsWithWitness) {
  // oplus(1,1) pulled down to 1 keeps MV1-MV5 but breaks MV6 at (1,2).
  FiniteMvAlgebra broken = from_tables(3, {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}}, {2, 1, 0});
  AxiomReport report = check_axioms(broken);
  ASSERT_FALSE(report.passed);
  ASSERT_FALSE(report.violations.empty());
  EXPECT_EQ(report.violations.front().axiom, "MV6");
  EXPECT_EQ(report.violations.front().witness, (std::vector<int>{1, 2}));
}

TEST(FromTables, ProductTablesPassAxioms) {
  FiniteMvAlgebra p = make_product({make_chain(2), make_chain(3)});
  std::vector<std::vector<int>> oplus(p.n, std::vector<int>(p.n));
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) oplus[i][j] = p.oplus(i, j);
  }
  FiniteMvAlgebra rebuilt = from_tables(p.n, oplus, p.neg_table);
  EXPECT_TRUE(check_axioms(rebuilt).passed);
  EXPECT_TRUE(rebuilt.same_tables(p));
}

TEST(FromTables, RejectsMalformedTables) {
  EXPECT_THROW(from_tables(2, {{0, 1}}, {1, 0}), InvalidInput);            // missing row
  EXPECT_THROW(from_tables(2, {{0, 1}, {1}}, {1, 0}), InvalidInput);       // ragged row
  EXPECT_THROW(from_tables(2, {{0, 1}, {1, 5}}, {1, 0}), InvalidInput);    // out of range
  EXPECT_THROW(from_tables(2, {{0, 1}, {1, 1}}, {1, -1}), InvalidInput);   // bad neg
}

TEST(CheckAxioms, ReportsCommutativityBreak) {
  FiniteMvAlgebra l4 = make_chain(4);
  std::vector<std::vector<int>> oplus(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) oplus[i][j] = l4.oplus(i, j);
  }
  oplus[1][2] = 1;  // was 3
  AxiomReport report = check_axioms(from_tables(4, oplus, l4.neg_table), /*all_violations=*/true);
  ASSERT_FALSE(report.passed);
  bool found_mv2 = false;
  for (const auto& v : report.violations) {
    if (v.axiom == "MV2" && v.witness == std::vector<int>{1, 2}) found_mv2 = true;
  }
  EXPECT_TRUE(found_mv2);
}

TEST(DerivedOperations, ChainOdot) {
  FiniteMvAlgebra l4 = make_chain(4);
  // 2/3 . 2/3 = 1/3 under truncated subtraction
  EXPECT_EQ(l4.odot(2, 2), 1);
  EXPECT_EQ(l4.odot(1, 1), 0);
  EXPECT_EQ(l4.odot(3, 2), 2);
}

TEST(DerivedOperations, BoundedLatticeIdentities) {
  for (const FiniteMvAlgebra& a :
       {make_chain(2), make_chain(5), make_product({make_chain(2), make_chain(3)})}) {
    for (int x = 0; x < a.n; ++x) {
      EXPECT_EQ(a.ovee(x, 0), x);
      EXPECT_EQ(a.owedge(x, a.one()), x);
    }
  }
}

TEST(DerivedOperations, ProductMeetIsCoordinatewise) {
  FiniteMvAlgebra p = make_product({make_chain(2), make_chain(3)});
  // (1,0) /\ (0,1) = (0,0)
  EXPECT_EQ(p.owedge(3, 2), 0);
  EXPECT_FALSE(p.leq(3, 2));
  EXPECT_FALSE(p.leq(2, 3));
}

TEST(AlgebraProperties, HoldOnSmallAlgebras) {
  std::vector<FiniteMvAlgebra> algebras{make_chain(2), make_chain(3), make_chain(6),
                                        make_product({make_chain(2), make_chain(3)}),
                                        make_product({make_chain(2), make_chain(2), make_chain(2)})};
  for (const auto& a : algebras) {
    for (const PropertyResult& r : check_algebra_properties(a)) {
      EXPECT_TRUE(r.passed) << r.name << " failed at " << r.witness;
    }
  }
}

TEST(FromTables, PublishedProductTablesAgreeWithConstruction) {
  // The 6-element product algebra given directly by its odot and join
  // tables over the labels 0,a,b,c,d,1; oplus is recovered through
  // x+y = (x* . y*)* and the whole thing must agree with make_product.
  auto idx = [](char c) {
    return std::string("0abcd1").find(c);
  };
  const char* odot_rows[6] = {"000000", "00a00a", "0ab0ab", "000ccc", "00accd", "0abcd1"};
  const char* join_rows[6] = {"0abcd1", "aabdd1", "bbb111", "cd1cd1", "dd1dd1", "111111"};
  std::vector<int> neg{5, 4, 3, 2, 1, 0};
  std::vector<std::vector<int>> oplus(6, std::vector<int>(6));
  for (int x = 0; x < 6; ++x) {
    for (int y = 0; y < 6; ++y) {
      oplus[x][y] = neg[idx(odot_rows[neg[x]][neg[y]])];
    }
  }
  FiniteMvAlgebra rebuilt = from_tables(6, oplus, neg);
  EXPECT_TRUE(check_axioms(rebuilt).passed);
  EXPECT_TRUE(rebuilt.same_tables(make_product({make_chain(2), make_chain(3)})));
  for (int x = 0; x < 6; ++x) {
    for (int y = 0; y < 6; ++y) {
      EXPECT_EQ(rebuilt.odot(x, y), static_cast<int>(idx(odot_rows[x][y])));
      EXPECT_EQ(rebuilt.ovee(x, y), static_cast<int>(idx(join_rows[x][y])));
    }
  }
}

TEST(AlgebraProperties, SeededFailureIsReportedWithWitness) {
  FiniteMvAlgebra l4 = make_chain(4);
  std::vector<std::vector<int>> oplus(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) oplus[i][j] = l4.oplus(i, j);
  }
  oplus[1][2] = 1;  // break commutativity
  FiniteMvAlgebra broken = from_tables(4, oplus, l4.neg_table);
  bool any_failed = false;
  for (const PropertyResult& r : check_algebra_properties(broken)) {
    if (!r.passed) {
      any_failed = true;
      EXPECT_FALSE(r.witness.empty()) << r.name;
    }
  }
  EXPECT_TRUE(any_failed);
}

TEST(JsonIo, AlgebraRoundTrip) {
  FiniteMvAlgebra p = make_product({make_chain(2), make_chain(3)});
  nlohmann::json j = algebra_to_json(p);
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["neg"].size(), 6u);
  FiniteMvAlgebra back = algebra_from_json(j);
  EXPECT_EQ(back, p);
}

TEST(JsonIo, RejectsMissingFields) {
  EXPECT_THROW(algebra_from_json(nlohmann::json{{"n", 2}}), InvalidInput);
}

}  // namespace
}  // namespace mvder
