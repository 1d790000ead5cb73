#include "lpdeinv/io.hpp"
#include "support.hpp"

namespace lpdeinv::test {
namespace {

TEST(ParseEquation, ReadsSixKeyedLines) {
  const Lpde v = parse_equation("# stratum d\nA = 1\nB = 0\n\nC = -1\na = 0\nb = 1/y\nc = 0\n");
  EXPECT_TRUE(EquivLpde(v, V("1", "0", "-1", "0", "1/y", "0")));
}

TEST(ParseEquation, ReportsLineNumbers) {
  try {
    parse_equation("A = 1\nB = 0\nD = -1\na = 0\nb = 0\nc = 0\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("expected key 'C'"), std::string::npos);
  }
  try {
    parse_equation("A = 1\nB = x^^2\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_equation("A = 1\nB = 0\nC = 1\n"), FormatError);
  EXPECT_THROW(parse_equation("A = 1\nB = 0\nC = 1\na = 0\nb = 0\nc = 0\nc = 1\n"), FormatError);
  EXPECT_THROW(parse_equation("A 1\n"), FormatError);
}

TEST(ParseEquation, FormatRoundTrip) {
  const Lpde v = V("1 - 4*y^2", "-4*y", "-1", "x/(x + y)^2", "0", "1");
  const Lpde w = parse_equation(format_equation(v));
  for (std::size_t i = 0; i < 6; ++i) EXPECT_TRUE(tree_equal(v[i], w[i]));
}

TEST(ParseTransformation, MapsAndMatrixForms) {
  const TransformationSpec maps = parse_transformation("eta = y\nh = 1\nxi = x + y^2\n");
  ASSERT_TRUE(maps.maps.has_value());
  EXPECT_FALSE(maps.g.has_value());
  EXPECT_TRUE(Equiv(maps.maps->first, "x + y^2"));

  const TransformationSpec mat = parse_transformation("h = y\ng11 = 1\ng12 = 0\ng21 = 0\ng22 = x\n");
  ASSERT_TRUE(mat.g.has_value());
  EXPECT_TRUE(EquivMatrix(*mat.g, M2("1", "0", "0", "x")));
  EXPECT_TRUE(Equiv(mat.h, "y"));
}

TEST(ParseTransformation, RejectsIncompleteOrMixedSpecs) {
  EXPECT_THROW(parse_transformation("xi = x\neta = y\n"), FormatError);
  EXPECT_THROW(parse_transformation("h = 1\nxi = x\n"), FormatError);
  EXPECT_THROW(parse_transformation("h = 1\nxi = x\neta = y\ng11 = 1\n"), FormatError);
  EXPECT_THROW(parse_transformation("h = 1\nh = 2\nxi = x\neta = y\n"), FormatError);
  EXPECT_THROW(parse_transformation("h = 1\nzeta = x\n"), FormatError);
}

TEST(ParseFrameMatrix, FourExpressionsRowMajor) {
  const ExprMatrix2 e = parse_frame_matrix("1\n0\n2*y\n1\n");
  EXPECT_TRUE(EquivMatrix(e, M2("1", "0", "2*y", "1")));
  EXPECT_TRUE(EquivMatrix(parse_frame_matrix(format_frame_matrix(e)), e));
  EXPECT_THROW(parse_frame_matrix("1\n0\n"), FormatError);
}

TEST(ReadFile, MissingFileIsAFormatError) { EXPECT_THROW(read_file("/nonexistent/equation.txt"), FormatError); }

}  // namespace
}  // namespace lpdeinv::test
