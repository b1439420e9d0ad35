#include <gtest/gtest.h>

#include <sstream>

#include "polyomino/aggregate.hpp"
#include "polyomino/oracle.hpp"
#include "polyomino/pipeline.hpp"

using namespace polyomino;

namespace {

ClassBundle oracle_bundle(int n_max) {
  ClassBundle b;
  for (auto& [c, t] : oracle::oracle_tables(n_max)) b.put(c, t, "oracle");
  return b;
}

}  // namespace

TEST(M90V, ComesFromHalfSizeFixed) {
  CountTable fixed = CountTable::from_weights("fixed", std::vector<std::uint64_t>{0, 1, 2, 6, 19});
  CountTable t = m90v_table(fixed, 8);
  EXPECT_EQ(t.at(1), BigCount(0));
  EXPECT_EQ(t.at(2), BigCount(1));
  EXPECT_EQ(t.at(6), BigCount(6));
  EXPECT_EQ(t.at(8), BigCount(19));
  EXPECT_THROW(m90v_table(fixed, 10), MissingEntry);
  auto oracle = oracle::oracle_tables(8);
  EXPECT_TRUE(m90v_table(oracle.at(SymmetryClass::fixed), 8).same_values(oracle.at(SymmetryClass::m90v)));
}

TEST(Burnside, SmallFreeAndOneSided) {
  ClassBundle b = oracle_bundle(6);
  EXPECT_EQ(free_count(b, 4), BigCount(5));
  EXPECT_EQ(one_sided_count(b, 4), BigCount(7));
  EXPECT_EQ(free_count(b, 6), BigCount(35));
  EXPECT_EQ(one_sided_count(b, 6), BigCount(60));
}

TEST(Burnside, CorruptedInputIsCaught) {
  ClassBundle b = oracle_bundle(6);
  CountTable bad = b.table(SymmetryClass::r180c);
  CountTable patched("r180c");
  for (const auto& [n, e] : bad.entries()) patched.set(n, n == 5 ? e.value + BigCount(1) : e.value);
  b.put(SymmetryClass::r180c, patched, "tampered");
  EXPECT_THROW((void)free_count(b, 5), DivisibilityError);
  EXPECT_THROW((void)one_sided_count(b, 5), DivisibilityError);
  EXPECT_NO_THROW((void)free_count(b, 4));
}

TEST(Burnside, MissingTablesAreReported) {
  ClassBundle b = oracle_bundle(5);
  EXPECT_THROW((void)free_count(b, 6), MissingEntry);
  auto [free_t, one_t] = free_and_one_sided(b, 7);
  EXPECT_EQ(free_t.max_n(), 5);
  EXPECT_EQ(one_t.max_n(), 5);
  ClassBundle empty;
  EXPECT_THROW((void)empty.table(SymmetryClass::m45), MissingEntry);
}

TEST(Reference, ParsesAndLooksUp) {
  std::istringstream in("# comment\nkind,n,value,source\nfree,3,2,somewhere\nm90,40,87577573856,t\n");
  auto ref = ReferenceTable::parse(in);
  EXPECT_EQ(ref.size(), 2u);
  ASSERT_NE(ref.find("m90", 40), nullptr);
  EXPECT_EQ(ref.find("m90", 40)->value, BigCount(87577573856ULL));
  EXPECT_EQ(ref.find("free", 3)->source, "somewhere");
  EXPECT_EQ(ref.find("free", 4), nullptr);
}

TEST(Reference, RejectsMalformedData) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return ReferenceTable::parse(in);
  };
  EXPECT_THROW(parse(""), MalformedReference);
  EXPECT_THROW(parse("kind,value\n"), MalformedReference);
  EXPECT_THROW(parse("kind,n,value,source\nfree,x,2,s\n"), MalformedReference);
  EXPECT_THROW(parse("kind,n,value,source\nfree,3,-2,s\n"), MalformedReference);
  EXPECT_THROW(parse("kind,n,value,source\nfree,3,2\n"), MalformedReference);
  EXPECT_THROW(parse("kind,n,value,source\nfree,3,2,a\nfree,3,5,b\n"), MalformedReference);
  EXPECT_NO_THROW(parse("kind,n,value,source\nfree,3,2,a\nfree,3,2,b\n"));
  EXPECT_THROW(ReferenceTable::load("/nonexistent/reference.csv"), std::ios_base::failure);
}

TEST(Reference, ShippedFileIsConsistent) {
  auto ref = ReferenceTable::load(REFERENCE_CSV);
  EXPECT_GT(ref.size(), 400u);
  // Fixed counts satisfy the one-sided identity with the point-class columns;
  // the quarter-turn classes are computed since they are not tabulated.
  const CountTable r90c = count_r90(*center_for(SymmetryClass::r90c), 28);
  const CountTable r90v = count_r90(*center_for(SymmetryClass::r90v), 28);
  // Odd sizes are not listed for the even-only classes.
  auto value = [&](const std::string& kind, int n) {
    const auto* rec = ref.find(kind, n);
    return rec ? rec->value : BigCount(0);
  };
  for (int n = 1; n <= 28; ++n) {
    ASSERT_NE(ref.find("fixed", n), nullptr) << n;
    BigCount rhs = BigCount(4) * value("one_sided", n);
    rhs -= value("r180c", n) + BigCount(2) * value("r180m", n) + value("r180v", n) +
           BigCount(2) * r90c.at(n) + BigCount(2) * r90v.at(n);
    EXPECT_EQ(ref.find("fixed", n)->value, rhs) << n;
  }
  // Core and rings columns add up to the totals.
  for (const char* k : {"r180m", "r180v"}) {
    for (int n = 2; n <= 26; n += 2) {
      const std::string kind(k);
      const auto* core = ref.find(kind + "_core", n);
      const auto* rings = ref.find(kind + "_rings", n);
      if (!core || !rings) continue;
      EXPECT_EQ(core->value + rings->value, ref.find(kind, n)->value) << kind << n;
    }
  }
}

TEST(Verify, FlagsMismatchesAndMissing) {
  std::istringstream in("kind,n,value,source\nm90,4,3,a\nm90,5,4,a\n");
  auto ref = ReferenceTable::parse(in);
  CountTable t = CountTable::from_weights("m90", std::vector<std::uint64_t>{0, 1, 1, 2, 3, 5, 9});
  auto report = verify({{"m90", t}}, ref);
  EXPECT_EQ(report.count(Verdict::match), 1u);
  EXPECT_EQ(report.count(Verdict::mismatch), 1u);
  EXPECT_EQ(report.count(Verdict::missing), 4u);
  EXPECT_FALSE(report.ok());
  EXPECT_STREQ(to_string(Verdict::mismatch), "mismatch");
}

TEST(Pipeline, BundleMatchesOracleForEveryEngine) {
  auto oracle = oracle::oracle_tables(10);
  for (Engine e : {Engine::automatic, Engine::growth}) {
    RunSettings s;
    s.engine = e;
    ClassBundle b = compute_bundle(10, s);
    for (SymmetryClass c : kAllClasses) {
      EXPECT_TRUE(b.table(c).same_values(oracle.at(c))) << name_of(c) << " " << to_string(e);
    }
  }
  RunSettings threaded;
  threaded.threads = 3;
  ClassBundle b = compute_bundle(10, threaded);
  auto [free_t, one_t] = free_and_one_sided(b, 10);
  EXPECT_EQ(free_t.at(10), BigCount(4655));
  EXPECT_EQ(one_t.at(10), BigCount(9189));
}

TEST(Pipeline, RejectsUnsupportedCombinations) {
  RunSettings s;
  s.engine = Engine::transfer_matrix;
  EXPECT_THROW(compute_class(SymmetryClass::fixed, 5, s), std::invalid_argument);
  EXPECT_THROW(compute_class(SymmetryClass::r90c, 5, s), std::invalid_argument);
  RunSettings split;
  split.split = PointSplit::core;
  EXPECT_THROW(compute_class(SymmetryClass::m45, 5, split), std::invalid_argument);
  RunSettings o;
  o.engine = Engine::oracle;
  EXPECT_THROW(compute_class(SymmetryClass::m45, 13, o), oracle::LimitExceeded);
}
