#include <gtest/gtest.h>

#include "polyomino/aggregate.hpp"
#include "polyomino/oracle.hpp"
#include "polyomino/point_symmetry.hpp"

using namespace polyomino;

namespace {

const std::map<SymmetryClass, CountTable>& oracle11() {
  static const auto tables = oracle::oracle_tables(11);
  return tables;
}

constexpr std::array<SymmetryClass, 5> kPointClasses{SymmetryClass::r180c, SymmetryClass::r180m,
                                                     SymmetryClass::r180v, SymmetryClass::r90c,
                                                     SymmetryClass::r90v};

}  // namespace

TEST(PointSymmetry, SmallValues) {
  auto r180c = count_class(*center_for(SymmetryClass::r180c), 9);
  EXPECT_EQ(r180c.at(1), BigCount(1));
  EXPECT_EQ(r180c.at(8), BigCount(1));  // the ring around the center cell
  EXPECT_EQ(r180c.at(9), BigCount(86));
  auto r180m = count_class(*center_for(SymmetryClass::r180m), 6);
  EXPECT_EQ(r180m.at(2), BigCount(1));
  EXPECT_EQ(r180m.at(6), BigCount(10));
  auto r90v = count_r90(*center_for(SymmetryClass::r90v), 8);
  EXPECT_EQ(r90v.at(4), BigCount(1));
  EXPECT_EQ(r90v.at(6), BigCount(0));
}

TEST(PointSymmetry, EveryClassMatchesOracle) {
  for (SymmetryClass c : kPointClasses) {
    const CenterSpec center = *center_for(c);
    CountTable t = count_class(center, 11);
    EXPECT_TRUE(t.same_values(oracle11().at(c))) << name_of(c);
  }
}

TEST(PointSymmetry, ShortcutOffMatchesOracle) {
  for (SymmetryClass c : kPointClasses) {
    CountTable t = count_class(*center_for(c), 11, PointSplit::total, 1, 0, 1, SearchOptions{false});
    EXPECT_TRUE(t.same_values(oracle11().at(c))) << name_of(c);
  }
}

TEST(PointSymmetry, CorePlusRingsIsTotal) {
  for (SymmetryClass c : {SymmetryClass::r180c, SymmetryClass::r180m, SymmetryClass::r180v}) {
    const CenterSpec center = *center_for(c);
    CountTable core = count_class(center, 14, PointSplit::core);
    CountTable rings = count_class(center, 14, PointSplit::rings);
    CountTable total = count_class(center, 14);
    core += rings;
    EXPECT_TRUE(core.same_values(total)) << name_of(c);
  }
}

TEST(PointSymmetry, SmallestHoles) {
  // A single empty center cell needs an 8-cell ring around it.
  auto holes = enumerate_holes(CenterSpec{CenterKind::cell_center_180}, 8);
  ASSERT_EQ(holes.size(), 1u);
  EXPECT_EQ(holes[0].hole, (CellSet{{0, 0}}));
  EXPECT_EQ(holes[0].boundary.size(), 4u);
  EXPECT_TRUE(enumerate_holes(CenterSpec{CenterKind::cell_center_180}, 7).empty());
  // Edge-midpoint center: the smallest hole is the domino.
  auto mid = enumerate_holes(CenterSpec{CenterKind::edge_mid_180}, 10);
  ASSERT_EQ(mid.size(), 1u);
  EXPECT_EQ(mid[0].hole, (CellSet{{0, 0}, {1, 0}}));
}

TEST(PointSymmetry, HolesAreSymmetric) {
  for (SymmetryClass c : kPointClasses) {
    const CenterSpec center = *center_for(c);
    const Isometry g = center.generator();
    for (const HoleRegion& r : enumerate_holes(center, 16)) {
      std::vector<Cell> img;
      for (const Cell& cell : r.hole) img.push_back(g.apply(cell));
      EXPECT_EQ(CellSet(img), r.hole) << name_of(c) << " " << to_string(r.hole);
      for (const Cell& cell : r.boundary) EXPECT_FALSE(r.hole.contains(cell));
    }
  }
}

TEST(PointSymmetry, RingsAreIndependentOfWorkerCount) {
  const CenterSpec center = *center_for(SymmetryClass::r180v);
  CountTable one = count_rings(center, 16, 1, 1);
  for (int workers : {2, 3, 8}) EXPECT_TRUE(count_rings(center, 16, workers, 1).same_values(one)) << workers;
}

TEST(PointSymmetry, CoreSplitMatchesReferenceAt16) {
  auto ref = ReferenceTable::load(REFERENCE_CSV);
  const CenterSpec m = *center_for(SymmetryClass::r180m);
  EXPECT_EQ(count_class(m, 16, PointSplit::core).at(16), ref.find("r180m_core", 16)->value);
  EXPECT_EQ(count_class(m, 16, PointSplit::rings).at(16), ref.find("r180m_rings", 16)->value);
  const CenterSpec v = *center_for(SymmetryClass::r180v);
  EXPECT_EQ(count_class(v, 16, PointSplit::core).at(16), ref.find("r180v_core", 16)->value);
  EXPECT_EQ(count_class(v, 16, PointSplit::rings).at(16), ref.find("r180v_rings", 16)->value);
}

TEST(PointSymmetry, RejectsNonPointClasses) {
  EXPECT_FALSE(center_for(SymmetryClass::m45).has_value());
  EXPECT_FALSE(center_for(SymmetryClass::fixed).has_value());
  EXPECT_THROW(count_r90(*center_for(SymmetryClass::r180c), 5), std::invalid_argument);
  EXPECT_THROW(build_board(CenterSpec{CenterKind::vertex_90}, 0), std::invalid_argument);
}

TEST(Burnside, OracleTablesThroughEleven) {
  ClassBundle b;
  for (const auto& [c, t] : oracle11()) b.put(c, t, "oracle");
  auto [free_t, one_t] = free_and_one_sided(b, 11);
  EXPECT_EQ(free_t.at(11), BigCount(17073));
  EXPECT_EQ(one_t.at(11), BigCount(33896));
}
