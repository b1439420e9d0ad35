#include <gtest/gtest.h>

#include "polyomino/aggregate.hpp"
#include "polyomino/oracle.hpp"

using namespace polyomino;

namespace {

bool has(const CellSet& s, SymmetryClass c) { return oracle::has_class(oracle::classify(s), c); }

}  // namespace

TEST(Oracle, SmallFixedCounts) {
  EXPECT_EQ(oracle::enumerate_fixed(1).size(), 1u);
  EXPECT_EQ(oracle::enumerate_fixed(2).size(), 2u);
  EXPECT_EQ(oracle::enumerate_fixed(4).size(), 19u);
  for (const CellSet& s : oracle::enumerate_fixed(5)) {
    EXPECT_TRUE(is_connected(s));
    EXPECT_EQ(normalize(s), s);
  }
}

TEST(Oracle, CountsGrowWithN) {
  std::size_t prev = 0;
  oracle::for_each_size(9, oracle::kDefaultLimit, [&](int, const std::vector<CellSet>& shapes) {
    EXPECT_GT(shapes.size(), prev);
    prev = shapes.size();
  });
}

TEST(Oracle, LimitIsEnforced) {
  EXPECT_THROW(oracle::enumerate_fixed(13), oracle::LimitExceeded);
  EXPECT_THROW(oracle::oracle_count(SymmetryClass::m90, 5, 4), oracle::LimitExceeded);
}

TEST(Classify, Tromino) {
  CellSet bar{{0, 0}, {1, 0}, {2, 0}};
  EXPECT_TRUE(has(bar, SymmetryClass::m90));
  EXPECT_TRUE(has(bar, SymmetryClass::r180c));
  EXPECT_FALSE(has(bar, SymmetryClass::m90v));
}

TEST(Classify, Square) {
  CellSet sq{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  for (SymmetryClass c : {SymmetryClass::m90v, SymmetryClass::m45, SymmetryClass::r180v, SymmetryClass::r90v}) {
    EXPECT_TRUE(has(sq, c)) << name_of(c);
  }
  EXPECT_FALSE(has(sq, SymmetryClass::m90));
  EXPECT_FALSE(has(sq, SymmetryClass::r180c));
}

TEST(Classify, SingleCell) {
  CellSet one{{0, 0}};
  for (SymmetryClass c : {SymmetryClass::m90, SymmetryClass::m45, SymmetryClass::r180c, SymmetryClass::r90c}) {
    EXPECT_TRUE(has(one, c)) << name_of(c);
  }
}

TEST(Classify, RejectsDisconnected) {
  EXPECT_THROW(oracle::classify(CellSet{{0, 0}, {2, 0}}), std::invalid_argument);
  EXPECT_THROW(oracle::classify(CellSet{}), std::invalid_argument);
}

TEST(Classify, QuarterTurnMapsVerticalAxesToHorizontal) {
  for (const CellSet& s : oracle::enumerate_fixed(6)) {
    CellSet r = transform(s, Dihedral::rotate90);
    auto ws = oracle::classify(s);
    auto wr = oracle::classify(r);
    auto count = [](const std::vector<oracle::SymmetryWitness>& w, oracle::WitnessKind k) {
      return std::count_if(w.begin(), w.end(), [k](const auto& x) { return x.kind == k; });
    };
    EXPECT_EQ(count(ws, oracle::WitnessKind::mirror_vertical), count(wr, oracle::WitnessKind::mirror_horizontal));
    EXPECT_EQ(count(ws, oracle::WitnessKind::half_turn), count(wr, oracle::WitnessKind::half_turn));
  }
}

TEST(Classify, WitnessesFixTheShape) {
  for (const CellSet& s : oracle::enumerate_fixed(7)) {
    for (const auto& w : oracle::classify(s)) {
      std::vector<Cell> img;
      for (const Cell& c : s) img.push_back(w.apply(c));
      EXPECT_EQ(CellSet(img), s);
    }
  }
}

TEST(OracleCount, TableValues) {
  EXPECT_EQ(oracle::oracle_count(SymmetryClass::m90, 4), BigCount(3));
  EXPECT_EQ(oracle::oracle_count(SymmetryClass::m45, 5), BigCount(5));
  EXPECT_EQ(oracle::oracle_count(SymmetryClass::r180m, 6), BigCount(10));
  EXPECT_EQ(oracle::oracle_count(SymmetryClass::r90v, 4), BigCount(1));
  EXPECT_EQ(oracle::oracle_count(SymmetryClass::r90c, 5), BigCount(1));
}

TEST(OracleCount, BurnsideReproducesFreeAndOneSided) {
  auto tables = oracle::oracle_tables(10);
  ClassBundle b;
  for (auto& [c, t] : tables) b.put(c, t, "oracle");
  const std::uint64_t free_ref[] = {1, 1, 2, 5, 12, 35, 108, 369, 1285, 4655};
  const std::uint64_t one_ref[] = {1, 1, 2, 7, 18, 60, 196, 704, 2500, 9189};
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(free_count(b, n), BigCount(free_ref[n - 1])) << n;
    EXPECT_EQ(one_sided_count(b, n), BigCount(one_ref[n - 1])) << n;
  }
}
