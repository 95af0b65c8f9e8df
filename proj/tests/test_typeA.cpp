#include <gtest/gtest.h>

#include "wtab/frames.hpp"
#include "wtab/perm.hpp"
#include "wtab/rs.hpp"
#include "wtab/swaps.hpp"
#include "wtab/tables.hpp"

using namespace wtab;

namespace {

Row row(std::initializer_list<int> xs) {
  Row r;
  for (int x : xs) r.push_back(Entry(x));
  return r;
}

RowClass rc(std::vector<RowGeom> geom, std::vector<Row> rows) {
  return RowClass(Table(Frame(std::move(geom)), std::move(rows)));
}

// Rows [3,3,5,5],[4],[1,2] with the box positions of the row-swap figure.
RowClass swap_figure_input() {
  return rc({{1, 4}, {4, 1}, {3, 2}}, {row({3, 3, 5, 5}), row({4}), row({1, 2})});
}

RowClass star_figure_input() {
  return rc({{3, 1}, {3, 1}, {1, 3}, {1, 3}},
            {row({4}), row({-2}), row({-3, 1, 3}), row({-4, -1, 2})});
}

}  // namespace

TEST(Frames, PyramidIsValidAndBadFrameReportsBox) {
  Frame p = pyramid(Partition({4, 2, 1}));
  EXPECT_TRUE(p.is_pyramid());
  // Centred on x = 0.
  EXPECT_EQ(p.row(1).offset, 0);
  EXPECT_EQ(p.row(2).offset, -1);
  EXPECT_EQ(p.row(3).offset, -3);
  EXPECT_EQ(pyramid(Partition({4, 2, 1}), Justification::Left).row(1).offset, 0);
  try {
    validate_frame({{10, 1}, {0, 2}});
    FAIL() << "expected FrameError";
  } catch (const FrameError& e) {
    EXPECT_EQ(e.x(), 10);
    EXPECT_EQ(e.y(), 2);
  }
}

TEST(Frames, SymmetricPyramidMirrors) {
  SFrame f = symmetric_pyramid({3, 2});
  EXPECT_EQ(f.rank(), 2);
  EXPECT_EQ(f.row(2).len, 3);
  EXPECT_EQ(f.row(1).len, 2);
  EXPECT_EQ(f.row(-2), f.row(2).mirrored());
  EXPECT_EQ(f.full().num_rows(), 4);
}

TEST(Perm, ReducedWordsAndLength) {
  Perm s = Perm::parse("(1 2 3)", 3);
  EXPECT_EQ(reduced_word(s), (std::vector<int>{1, 2}));
  EXPECT_EQ(s.length(), 2);
  Perm w0 = Perm::parse("(1 3)", 3);
  EXPECT_EQ(all_reduced_words(w0).size(), 2u);
  for (const auto& p : all_perms(4)) {
    EXPECT_EQ(from_word(4, reduced_word(p)), p);
    EXPECT_EQ(static_cast<int>(reduced_word(p).size()), p.length());
  }
}

TEST(Tables, ColumnStrictWitness) {
  RowClass a = star_figure_input();
  EXPECT_TRUE(column_strict_witness(RowClass(left_justify(a.table()))).has_value());
  Table bad = Table::justified({row({0}), row({0, 1})});
  EXPECT_FALSE(column_strict_witness(RowClass(bad)).has_value());
}

TEST(Swaps, RowSwapFigure) {
  auto out = swap_adjacent(swap_figure_input(), 1);
  ASSERT_TRUE(out);
  EXPECT_EQ(out->rows(), (std::vector<Row>{row({5}), row({3, 3, 4, 5}), row({1, 2})}));
  EXPECT_EQ(out->frame().row(1), (RowGeom{4, 1}));
  EXPECT_EQ(rs_class(*out).row_class(), rs_class(swap_figure_input()).row_class());
}

TEST(Swaps, SmallCases) {
  RowClass undefined = rc({{1, 1}, {0, 2}}, {row({0}), row({1, 2})});
  EXPECT_FALSE(swap_adjacent(undefined, 1));
  RowClass a = rc({{1, 1}, {0, 2}}, {row({3}), row({1, 2})});
  auto out = swap_adjacent(a, 1);
  ASSERT_TRUE(out);
  EXPECT_EQ(out->rows(), (std::vector<Row>{row({1, 3}), row({2})}));
  RowClass same = rc({{0, 1}, {0, 1}}, {row({0}), row({5})});
  EXPECT_EQ(swap_adjacent(same, 1), same);
  EXPECT_THROW(swap_adjacent(same, 2), std::out_of_range);
}

TEST(Swaps, StarActionFigure) {
  RowClass a = star_figure_input();
  Perm sigma = Perm::parse("(1 2 3)", 4);
  auto out = star_act(sigma, a);
  ASSERT_TRUE(out);
  EXPECT_EQ(out->rows(), (std::vector<Row>{row({-2, 1, 4}), row({3}), row({-3}),
                                           row({-4, -1, 2})}));
  EXPECT_FALSE(column_strict_witness(RowClass(left_justify(out->table()))));
  EXPECT_TRUE(is_fd_typeA(a, Perm(4)));
  EXPECT_TRUE(is_fd_typeA(*out, sigma));
  EXPECT_TRUE(iso_typeA(Perm(4), a, sigma, *out));
  EXPECT_TRUE(verify_star_well_defined(a, sigma).agree());
}

TEST(Swaps, NotFiniteDimensional) {
  RowClass a = RowClass(Table(pyramid(Partition({2, 1})), {row({0}), row({0, 1})}));
  EXPECT_FALSE(is_fd_typeA(a, Perm(2)));
  EXPECT_FALSE(fd_typeA_report(a, Perm(2)).rs_shape_matches);
}

TEST(RS, PyramidExampleWord) {
  std::vector<Entry> w;
  for (int x : {5, -1, 3, -3, 1, 1, 4}) w.push_back(Entry(x));
  Tableau t = rs_tableau(w);
  EXPECT_EQ(t.rows, (std::vector<Row>{row({-3, 1, 1, 4}), row({-1, 3}), row({5})}));
  EXPECT_EQ(greene_shape(w), t.shape());
  EXPECT_TRUE(t.is_valid());
}
