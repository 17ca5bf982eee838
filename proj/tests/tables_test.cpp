#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "pretenders/pretender.hpp"
#include "pretenders/tables.hpp"

namespace pretenders {
namespace {

const Cascade& cascade() { return default_cascade(); }

Cell at(const Grid& g, u64 column, u64 row) {
  for (const GridCell& c : g)
    if (c.column == column && c.row == row) return c.value;
  ADD_FAILURE() << "no cell (" << column << "," << row << ")";
  return std::nullopt;
}

TEST(Mod36, Display) {
  const Grid g = gen_mod36(cascade());
  ASSERT_EQ(g.size(), 36u);
  EXPECT_EQ(at(g, 26, 0), Cell(9));
  EXPECT_EQ(at(g, 35, 0), Cell(9));
  EXPECT_EQ(at(g, 0, 0), Cell(4));
  std::vector<u64> open;
  for (const GridCell& c : g)
    if (!c.value) open.push_back(c.column);
  EXPECT_EQ(open, (std::vector<u64>{2, 11, 14, 23}));
  // a decided class really is constant
  for (const GridCell& c : g)
    if (c.value)
      for (u64 j = 0; j < 500; ++j) ASSERT_EQ(cascade().classify(c.column + 36 * j), *c.value);
}

TEST(Table1, ShapeAndExamples) {
  const Grid g = gen_table1(cascade());
  ASSERT_EQ(g.size(), 140u);
  EXPECT_EQ(grid_columns(g), (std::vector<u64>{2, 11, 14, 23, 38, 47, 50, 59, 74, 83, 86, 95, 110, 119, 122,
                                                131, 146, 155, 158, 167}));
  EXPECT_EQ(at(g, 83, 0), Cell(21));
  EXPECT_EQ(at(g, 2, 180), Cell(14));
  const auto unknown = std::count_if(g.begin(), g.end(), [](const GridCell& c) { return !c.value; });
  EXPECT_EQ(unknown, 32);
  for (const GridCell& c : g)
    if (c.value) {
      EXPECT_TRUE(*c.value == 10 || *c.value == 14 || *c.value == 15 || *c.value == 21);
      for (u64 j = 0; j < 1000; ++j) ASSERT_EQ(cascade().classify(c.column + c.row + 1260 * j), *c.value);
    }
}

TEST(Table2, ShapeAndExamples) {
  const Grid t1 = gen_table1(cascade());
  const Grid g = gen_table2(cascade());
  ASSERT_EQ(g.size(), 32u * 41u);

  std::vector<u64> open1;
  for (const GridCell& c : t1)
    if (!c.value) open1.push_back(c.column + c.row);
  std::sort(open1.begin(), open1.end());
  EXPECT_EQ(grid_columns(g), open1);

  EXPECT_EQ(at(g, 2, 0), Cell(341));
  EXPECT_EQ(at(g, 23, 8), Cell(561));
  EXPECT_EQ(at(g, 38, 0), Cell(38));
  EXPECT_EQ(at(g, 158, 0), Cell(158));

  u64 lo = ~u64{0}, hi = 0;
  for (const GridCell& c : g) {
    ASSERT_TRUE(c.value);
    EXPECT_LE(*c.value, 561u);
    EXPECT_GE(*c.value, 22u);
    EXPECT_TRUE(carmichael_sieve().is_composite(*c.value));
    lo = std::min(lo, c.column + 1260 * c.row);
    hi = std::max(hi, c.column + 1260 * c.row);
  }
  EXPECT_EQ(lo, 2u);
  EXPECT_EQ(hi, 51602u);
}

TEST(ClassValue, StopsAtNonDividingModulus) {
  EXPECT_EQ(class_value(cascade(), 0, 4), Cell(4));
  EXPECT_EQ(class_value(cascade(), 2, 4), std::nullopt);  // entry 6 has modulus 3
  EXPECT_EQ(class_value(cascade(), 3, 12), Cell(6));
}

TEST(Regression, GoldenMod36AndTable1) {
  EXPECT_TRUE(regression(TableId::mod36, gen_mod36(cascade()), load_golden(PRETENDERS_GOLDEN_DIR, TableId::mod36)).ok());
  const RegressionReport r = regression(TableId::t1, gen_table1(cascade()), load_golden(PRETENDERS_GOLDEN_DIR, TableId::t1));
  EXPECT_EQ(r.compared, 140u);
  EXPECT_TRUE(r.ok());
}

TEST(Regression, GoldenTable2HasFourPrintedErrors) {
  const RegressionReport r = regression(TableId::t2, gen_table2(cascade()), load_golden(PRETENDERS_GOLDEN_DIR, TableId::t2));
  EXPECT_EQ(r.compared, 1312u);
  ASSERT_EQ(r.cells.size(), 4u);
  const std::vector<std::tuple<u64, u64, u32, u32>> expected = {
      {338, 2, 113, 133}, {362, 18, 85, 82}, {527, 25, 51, 49}, {1118, 39, 25, 26}};
  for (std::size_t i = 0; i < 4; ++i) {
    const CellMismatch& m = r.cells[i];
    const auto [col, row, printed, derived] = expected[i];
    EXPECT_EQ(m.column, col);
    EXPECT_EQ(m.row, row);
    EXPECT_EQ(m.golden, std::optional<Cell>(printed));
    EXPECT_EQ(m.derived, std::optional<Cell>(derived));
    const Adjudication a = adjudicate_t2(m);
    EXPECT_TRUE(a.derived_agrees);
    EXPECT_EQ(a.oracle, derived);
    EXPECT_FALSE(a.reason.empty());
  }
  EXPECT_EQ(adjudicate_t2(r.cells[0]).reason, "printed 113 is not composite");
  EXPECT_EQ(adjudicate_t2(r.cells[2]).reason, "printed 51 is a pretender but 49 is smaller");
}

TEST(Regression, DetectsChangedMissingAndExtraCells) {
  GoldenTable golden{TableId::mod36, {{0, 0, 4}, {1, 0, 6}, {99, 0, 4}}, {}, "test"};
  const Grid generated = {{0, 0, 4}, {1, 0, 4}, {2, 0, std::nullopt}};
  const RegressionReport r = regression(TableId::mod36, generated, golden);
  EXPECT_EQ(r.compared, 3u);
  EXPECT_EQ(r.cells.size(), 3u);  // changed (1), missing (99), extra (2)
}

TEST(Golden, LoadsAllAssets) {
  EXPECT_EQ(load_golden(PRETENDERS_GOLDEN_DIR, TableId::mod36).cells.size(), 36u);
  const GoldenTable t1 = load_golden(PRETENDERS_GOLDEN_DIR, TableId::t1);
  EXPECT_EQ(t1.cells.size(), 140u);
  EXPECT_EQ(std::count_if(t1.cells.begin(), t1.cells.end(), [](const GridCell& c) { return !c.value; }), 32);
  EXPECT_EQ(load_golden(PRETENDERS_GOLDEN_DIR, TableId::t2).cells.size(), 1312u);
  EXPECT_EQ(load_golden(PRETENDERS_GOLDEN_DIR, TableId::t3).rows.size(), 132u);
  EXPECT_EQ(load_golden_period(PRETENDERS_GOLDEN_DIR).size(), 122u);
}

class GoldenErrors : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = std::filesystem::temp_directory_path() /
          ("pretenders-golden-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
           ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir);
  }
  void TearDown() override { std::filesystem::remove_all(dir); }
  void write(const std::string& name, const std::string& body) { std::ofstream(dir / name) << body; }

  GoldenError::Kind kind_of(TableId id) {
    try {
      load_golden(dir, id);
    } catch (const GoldenError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error";
    return GoldenError::Kind::io;
  }

  std::filesystem::path dir;
};

TEST_F(GoldenErrors, MissingFileIsIo) { EXPECT_EQ(kind_of(TableId::t1), GoldenError::Kind::io); }

TEST_F(GoldenErrors, BadHeaderIsSchema) {
  write("t1.csv", "a,b,c\n2,0,?\n");
  EXPECT_EQ(kind_of(TableId::t1), GoldenError::Kind::schema);
}

TEST_F(GoldenErrors, BadFieldIsSchema) {
  write("t2.csv", "class,row,value\n2,0,?\n");
  EXPECT_EQ(kind_of(TableId::t2), GoldenError::Kind::schema);
  write("t3.csv", "q,k,m,first_base,rarity\n4,1,4,0,two\n");
  EXPECT_EQ(kind_of(TableId::t3), GoldenError::Kind::schema);
  write("mod36.csv", "residue,value\n0\n");
  EXPECT_EQ(kind_of(TableId::mod36), GoldenError::Kind::schema);
}

TEST_F(GoldenErrors, PeriodFile) {
  EXPECT_THROW(load_golden_period(dir), GoldenError);
  write("period.txt", "19 56\n");
  try {
    load_golden_period(dir);
    FAIL();
  } catch (const GoldenError& e) {
    EXPECT_EQ(e.kind(), GoldenError::Kind::schema);
  }
}

TEST(Render, CsvAndText) {
  const std::string csv = render_grid_csv(TableId::mod36, gen_mod36(cascade()));
  EXPECT_EQ(csv.substr(0, 25), "residue,value\n0,4\n1,4\n2,?");
  const std::string t2 = render_grid_csv(TableId::t2, gen_table2(cascade()));
  EXPECT_EQ(t2.substr(0, t2.find('\n', 16)), "class,row,value\n2,0,341");
  const std::string txt = render_grid_txt(TableId::t1, gen_table1(cascade()));
  EXPECT_NE(txt.find("+1080 |"), std::string::npos);
  EXPECT_EQ(parse_table_id("t2"), TableId::t2);
  EXPECT_THROW(parse_table_id("t4"), std::invalid_argument);
}

}  // namespace
}  // namespace pretenders
