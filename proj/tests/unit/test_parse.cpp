#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include <gtest/gtest.h>

#include "gen.hpp"
#include "hbu/error.hpp"
#include "hbu/parse.hpp"

namespace p = hbu::parse;
using hbu::ParseError;

namespace {

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("hbu_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(ParseNumber, Accepts) {
  EXPECT_EQ(p::number("1.5"), 1.5);
  EXPECT_EQ(p::number("-2e-3"), -2e-3);
  EXPECT_EQ(p::number("inf"), std::numeric_limits<double>::infinity());
  EXPECT_EQ(p::number("-inf"), -std::numeric_limits<double>::infinity());
  EXPECT_EQ(p::integer("-12"), -12);
}

TEST(ParseNumber, Rejects) {
  for (const char* s : {"", "1.5x", "abc", "1e", "nan?", "1 2"}) EXPECT_THROW(p::number(s), ParseError) << s;
  EXPECT_THROW(p::integer("1.5"), ParseError);
  EXPECT_THROW(p::integer("99999999999"), ParseError);
}

TEST(ParseComplex, Forms) {
  using C = std::complex<double>;
  EXPECT_EQ(p::complex_number("2"), C(2, 0));
  EXPECT_EQ(p::complex_number("0.5i"), C(0, 0.5));
  EXPECT_EQ(p::complex_number("1+2i"), C(1, 2));
  EXPECT_EQ(p::complex_number("1-2i"), C(1, -2));
  EXPECT_EQ(p::complex_number("1e-3+2e-2i"), C(1e-3, 2e-2));
  EXPECT_EQ(p::complex_number("i"), C(0, 1));
  EXPECT_EQ(p::complex_number("-i"), C(0, -1));
  EXPECT_EQ(p::complex_list("1,0.5+0.1i,-i").size(), 3u);
  for (const char* s : {"", "1+", "2ii", "1+2j", "i1"}) EXPECT_THROW(p::complex_number(s), ParseError) << s;
}

TEST(ParseComplex, RoundTrip) {
  gen::Rng r(71);
  for (int k = 0; k < 500; ++k) {
    const std::complex<double> z(r.normal(), r.normal());
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    ASSERT_EQ(p::complex_number(buf), z) << buf;
  }
}

TEST(ParseApproach, Literals) {
  using K = hbu::geometry::ApproachFunction::Kind;
  EXPECT_EQ(p::approach_function("zero").kind(), K::Zero);
  EXPECT_EQ(p::approach_function("linear:2").parameter(), 2.0);
  EXPECT_EQ(p::approach_function("cubic:1").kind(), K::Cubic);
  EXPECT_EQ(p::approach_function("power:0.5").parameter(), 0.5);
  const auto path = temp_file("h.txt", "# t h\n0 0\n0.5, 0.25\n1 0.5\n");
  const auto h = p::approach_function("custom:" + path);
  EXPECT_EQ(h.kind(), K::Custom);
  EXPECT_NEAR(h(0.75), 0.375, 1e-15);
  for (const char* s : {"", "lin:1", "linear:", "linear:-1", "power:4", "custom:/no/such/file"})
    EXPECT_THROW(p::approach_function(s), hbu::Error) << s;
}

TEST(ParseApproach, LiteralRoundTrip) {
  for (const char* s : {"zero", "linear:1.5", "cubic:2", "power:0.25"})
    EXPECT_EQ(p::approach_function(s).literal(), s);
}

TEST(ParseMajorant, Literals) {
  using K = hbu::potential::Majorant::Kind;
  EXPECT_EQ(p::majorant("const:1").kind(), K::Constant);
  EXPECT_EQ(p::majorant("pow:2").parameter(), 2.0);
  EXPECT_EQ(p::majorant("exp:1").kind(), K::ExpLaw);
  const auto path = temp_file("w.txt", "0.1 100\n0.5 10\n1.5 1\n");
  EXPECT_EQ(p::majorant("custom:" + path).kind(), K::Custom);
  for (const char* s : {"", "pow", "pow:-1", "const:0.5", "bogus:1"}) EXPECT_THROW(p::majorant(s), hbu::Error) << s;
}

TEST(ParseRealSet, Literals) {
  const auto f = p::real_set("[-inf,0]u[2,3.5]");
  ASSERT_EQ(f.intervals().size(), 2u);
  EXPECT_TRUE(f.contains(-1e300));
  EXPECT_TRUE(f.contains(3.5));
  EXPECT_FALSE(f.contains(1.0));
  EXPECT_TRUE(p::real_set("empty").empty());
  EXPECT_TRUE(p::real_set("{}").empty());
  for (const char* s : {"", "[1,2", "[2,1]", "[1,2]v[3,4]", "(1,2)", "[1,2]u"}) EXPECT_THROW(p::real_set(s), hbu::Error) << s;
}

TEST(ParseRealSet, LiteralRoundTrip) {
  gen::Rng r(72);
  for (int k = 0; k < 300; ++k) {
    const auto f = gen::real_set(r);
    const auto g = p::real_set(f.literal());
    ASSERT_EQ(g.intervals().size(), f.intervals().size()) << f.literal();
    for (std::size_t i = 0; i < f.intervals().size(); ++i) {
      ASSERT_EQ(g.intervals()[i].a, f.intervals()[i].a);
      ASSERT_EQ(g.intervals()[i].b, f.intervals()[i].b);
    }
  }
}

TEST(ParseJordan, Literals) {
  const auto s = p::jordan_spec("jordan:[(0,2),(1.5,1)]");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].height, 0.0);
  EXPECT_EQ(s[0].size, 2);
  EXPECT_EQ(s[1].height, 1.5);
  for (const char* t : {"jordan:[]", "jordan:[(0,0)]", "jordan:[(0,2)", "jordan:(0,2)", "[(0,2)]"})
    EXPECT_THROW(p::jordan_spec(t), ParseError) << t;
  EXPECT_EQ(p::matrix_source("jordan:[(0,2)]").dim(), 2);
}

TEST(ParseMatrix, Text) {
  const auto m = p::matrix_text("n = 2\nre = 0 1\n     0 0\nim = 1 0 0 -1\n");
  EXPECT_EQ(m(0, 0), std::complex<double>(0, 1));
  EXPECT_EQ(m(0, 1), std::complex<double>(1, 0));
  EXPECT_EQ(m(1, 1), std::complex<double>(0, -1));
  EXPECT_EQ(p::matrix_text("n = 1\nre = 3\n")(0, 0), std::complex<double>(3, 0));
  EXPECT_THROW(p::matrix_text("n = 2\nre = 1 2 3\n"), ParseError);
  EXPECT_THROW(p::matrix_text("n = 1\nre = 1\nfoo = 2\n"), ParseError);
  EXPECT_THROW(p::matrix_text("n = 1\nre = 1\nre = 2\n"), ParseError);
  EXPECT_THROW(p::matrix_text("re = 1\n"), ParseError);
  EXPECT_THROW(p::matrix_text("n = 1\nre = x\n"), ParseError);
  EXPECT_THROW(p::matrix_file("/no/such/matrix"), ParseError);
  const auto path = temp_file("m.txt", "# generator\nn = 1\nre = 0\nim = 2\n");
  EXPECT_EQ(p::matrix_source(path).matrix()(0, 0), std::complex<double>(0, 2));
}
