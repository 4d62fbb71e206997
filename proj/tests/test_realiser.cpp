#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "zmcenter/abscenter.hpp"
#include "zmcenter/realiser.hpp"

using namespace zmcenter;

TEST(Realise, TrivialN) {
  const auto cert = realiser::realise(1);
  EXPECT_EQ(cert.N, 1u);
  EXPECT_TRUE(cert.factors.empty());
  EXPECT_NO_THROW(realiser::validate(cert));
}

TEST(Realise, PrimePowerFour) {
  const auto cert = realiser::realise(4);
  ASSERT_EQ(cert.factors.size(), 1u);
  EXPECT_EQ(cert.factors[0], (CertificateFactor{2, 2, 5, 2}));
  EXPECT_EQ(cert.factors[0].triple(), ZmTriple::validate(5, 16, 2));
  EXPECT_EQ(abscenter::formula(cert.factors[0].triple()).order, 4u);
}

TEST(Realise, Twelve) {
  const auto cert = realiser::realise(12);
  ASSERT_EQ(cert.factors.size(), 2u);
  EXPECT_EQ(cert.factors[0], (CertificateFactor{2, 2, 5, 2}));
  // p = 7 is the first prime 1 + 3t; g = 2 gives 2^2 = 4, of order 3 mod 7.
  EXPECT_EQ(cert.factors[1], (CertificateFactor{3, 1, 7, 4}));
  u64 order = 1, l = 1;
  for (const auto& t : cert.induced_triples()) {
    order *= t.order();
    l *= abscenter::formula(t).order;
  }
  EXPECT_EQ(order, 5040u);
  EXPECT_EQ(l, 12u);
}

TEST(Realise, TwoUsesThree) {
  const auto cert = realiser::realise(2);
  ASSERT_EQ(cert.factors.size(), 1u);
  EXPECT_EQ(cert.factors[0], (CertificateFactor{2, 1, 3, 2}));
  EXPECT_EQ(cert.factors[0].triple().order(), 12u);
}

TEST(Realise, InvariantsAndDeterminism) {
  for (u64 N = 1; N <= 300; ++N) {
    const auto cert = realiser::realise(N);
    ASSERT_EQ(cert, realiser::realise(N));
    std::set<u64> ps, qs;
    u64 product = 1, l_product = 1;
    for (const auto& f : cert.factors) qs.insert(f.q);
    for (const auto& f : cert.factors) {
      ASSERT_TRUE(oracle::prime_by_trial(f.p));
      ASSERT_EQ((f.p - 1) % f.q_pow(), 0u);
      ASSERT_EQ(oracle::order_by_scan(f.r, f.p), f.q_pow());
      ASSERT_FALSE(qs.contains(f.p));
      ASSERT_TRUE(ps.insert(f.p).second);
      product *= f.q_pow();
      const auto t = f.triple();
      ASSERT_TRUE(t.radical_condition());
      l_product *= abscenter::formula(t).order;
    }
    ASSERT_EQ(product, N);
    ASSERT_EQ(l_product, N);
    const auto triples = cert.induced_triples();
    for (std::size_t i = 0; i < triples.size(); ++i)
      for (std::size_t j = i + 1; j < triples.size(); ++j)
        ASSERT_EQ(std::gcd(triples[i].order(), triples[j].order()), 1u);
  }
}

TEST(Realise, ValidateRejectsTampering) {
  auto cert = realiser::realise(12);
  auto bad = cert;
  bad.factors[1].r = 6;  // order 2 mod 7
  EXPECT_THROW(realiser::validate(bad), DomainError);
  bad = cert;
  bad.factors[1].p = 13;  // r = 4 has order 6 mod 13
  EXPECT_THROW(realiser::validate(bad), DomainError);
  bad = cert;
  bad.N = 24;
  EXPECT_THROW(realiser::validate(bad), DomainError);
  bad = cert;
  bad.factors[0].p = 7;  // 7 is not 1 mod 4
  EXPECT_THROW(realiser::validate(bad), DomainError);

  // p equal to one of the q_j: N = 6 with p_1 = 3 for q = 2.
  RealiserCertificate clash{6, {{2, 1, 3, 2}, {3, 1, 7, 2}}};
  EXPECT_THROW(realiser::validate(clash), DomainError);
  RealiserCertificate dup{6, {{2, 1, 7, 6}, {3, 1, 7, 2}}};
  EXPECT_THROW(realiser::validate(dup), DomainError);
}

TEST(Realise, BudgetExhaustion) {
  // 1 + 8t first hits a prime at t = 2.
  EXPECT_THROW(realiser::realise(8, 1), BudgetExceeded);
  EXPECT_EQ(realiser::realise(8, 2).factors[0].p, 17u);
}

TEST(SubgroupForDivisor, Examples) {
  const auto cert = realiser::realise(12);
  EXPECT_EQ(realiser::subgroup_for_divisor(cert, 12), cert.induced_triples());
  const auto trivial = realiser::subgroup_for_divisor(cert, 1);
  ASSERT_EQ(trivial.size(), 2u);
  EXPECT_EQ(trivial[0], ZmTriple::validate(5, 4, 2));
  EXPECT_EQ(trivial[1], ZmTriple::validate(7, 3, 4));
  for (const auto& t : trivial) EXPECT_EQ(abscenter::formula(t).order, 1u);
  const auto two = realiser::subgroup_for_divisor(cert, 2);
  EXPECT_EQ(two[0], ZmTriple::validate(5, 8, 2));
  EXPECT_EQ(two[1], ZmTriple::validate(7, 3, 4));
  EXPECT_EQ(abscenter::formula(two[0]).order, 2u);
  EXPECT_EQ(abscenter::formula(two[1]).order, 1u);
  EXPECT_THROW(realiser::subgroup_for_divisor(cert, 5), DomainError);
  EXPECT_THROW(realiser::subgroup_for_divisor(cert, 0), DomainError);
}

TEST(VerifyForward, Examples) {
  const auto rows4 = realiser::verify_forward(realiser::realise(4));
  ASSERT_EQ(rows4.size(), 3u);
  for (const auto& row : rows4) {
    EXPECT_TRUE(row.pass);
    EXPECT_EQ(row.mode(), "oracle");
  }
  EXPECT_EQ(rows4.back().divisor, 4u);
  EXPECT_EQ(rows4.back().formula_product, 4u);
  EXPECT_EQ(*rows4.back().oracle_orders[0], 4u);

  const auto rows1 = realiser::verify_forward(realiser::realise(1));
  ASSERT_EQ(rows1.size(), 1u);
  EXPECT_TRUE(rows1[0].pass);

  const auto rows12 = realiser::verify_forward(realiser::realise(12));
  std::vector<u64> orders;
  for (const auto& row : rows12) {
    EXPECT_TRUE(row.pass) << row.divisor;
    orders.push_back(row.formula_product);
  }
  EXPECT_EQ(orders, (std::vector<u64>{1, 2, 3, 4, 6, 12}));
}

TEST(VerifyForward, CompletenessAndFormulaOnlyRows) {
  for (u64 N = 1; N <= 64; ++N) {
    const auto rows = realiser::verify_forward(realiser::realise(N));
    std::vector<u64> realized;
    for (const auto& row : rows) {
      ASSERT_TRUE(row.pass) << "N=" << N << " N1=" << row.divisor;
      realized.push_back(row.formula_product);
    }
    std::vector<u64> divs;
    for (u64 d = 1; d <= N; ++d)
      if (N % d == 0) divs.push_back(d);
    ASSERT_EQ(realized, divs);
  }
  // N = 32: H = ZM(97, 1024, r) is far beyond the oracle bound.
  const auto rows = realiser::verify_forward(realiser::realise(32));
  EXPECT_EQ(rows.back().mode(), "formula-only");
  EXPECT_TRUE(rows.back().pass);
}

TEST(VerifyConverse, SmallCertificates) {
  for (u64 N : {1, 2, 3, 4}) {
    const auto rep = realiser::verify_converse(realiser::realise(N));
    EXPECT_TRUE(rep.pass) << N;
    EXPECT_FALSE(rep.bound_exceeded);
    EXPECT_EQ(N % rep.max_l_product, 0u);
  }
  const auto rep2 = realiser::verify_converse(realiser::realise(2));
  ASSERT_EQ(rep2.factors.size(), 1u);
  EXPECT_EQ(rep2.factors[0].triple, ZmTriple::validate(3, 4, 2));
  EXPECT_EQ(rep2.factors[0].rows.size(), 8u);  // subgroups of the dicyclic group of order 12
  EXPECT_EQ(rep2.max_l_product, 2u);
}

TEST(VerifyConverse, BoundExceededIsReported) {
  const auto rep = realiser::verify_converse(realiser::realise(8));
  EXPECT_TRUE(rep.bound_exceeded);
  EXPECT_FALSE(rep.pass);
  ASSERT_TRUE(rep.factors[0].error.has_value());
}

TEST(VerifyFullProduct, TwoIsDirect) {
  const auto check = realiser::verify_full_product(realiser::realise(2), {});
  EXPECT_EQ(check.group_order, 12u);
  EXPECT_EQ(check.subgroup_count, 8u);
  EXPECT_TRUE(check.pass);
}

TEST(Verify, OverallFlag) {
  const auto rep = realiser::verify(realiser::realise(6), true);
  EXPECT_TRUE(rep.forward_pass);
  ASSERT_TRUE(rep.converse.has_value());
  EXPECT_TRUE(rep.pass);
}
