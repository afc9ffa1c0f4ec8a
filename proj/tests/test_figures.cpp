#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "fjb/bounds.hpp"
#include "fjb/figures.hpp"
#include "fjb/fjsums.hpp"

using namespace fjb;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (const char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double num(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

}  // namespace

TEST_CASE("partial-sum figure: layout, ordering, and window geometry") {
  std::ostringstream os;
  figures::write_fig1(os, 10, 400);
  const auto text = os.str();

  std::ostringstream again;
  figures::write_fig1(again, 10, 400);
  CHECK(text == again.str());

  const auto rows = lines_of(text);
  REQUIRE(rows.size() == 401);
  CHECK(rows[0] ==
        "x,S_n,arccot_upper,arccot_lower,fejer1928,turan1952,ak2003,bk1998,"
        "koumandos2012,alkou12");

  const double wlo = bounds::bk1998_window_lo(10);
  const double whi = bounds::bk1998_window_hi(10);
  long empty_bk = 0;
  long expected_empty = 0;
  double prev_x = -1.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields_of(rows[i]);
    REQUIRE(f.size() == 10);
    const double x = num(f[0]);
    CHECK(x > prev_x);
    prev_x = x;

    const double sn = num(f[1]);
    const double upper = num(f[2]);
    const double lower = num(f[3]);
    CHECK(lower - 1e-9 <= sn);
    CHECK(sn <= upper + 1e-9);
    CHECK(num(f[4]) <= sn + 1e-9);
    CHECK(num(f[5]) <= sn + 1e-9);
    CHECK(num(f[6]) <= sn + 1e-9);
    CHECK(num(f[8]) <= sn + 1e-9);
    CHECK(num(f[9]) <= sn + 1e-9);

    if (f[7].empty()) {
      ++empty_bk;
    } else {
      CHECK(num(f[7]) <= sn + 1e-9);
    }
    const double xi = kPi * (static_cast<double>(i - 1) + 0.5) / 400.0;
    if (xi < wlo || xi > whi) ++expected_empty;
  }
  CHECK(empty_bk == expected_empty);
}

TEST_CASE("partial-sum figure: printed values round-trip exactly") {
  std::ostringstream os;
  figures::write_fig1(os, 10, 50);
  const auto rows = lines_of(os.str());
  REQUIRE(rows.size() == 51);
  for (const std::size_t i : {1UL, 17UL, 50UL}) {
    const auto f = fields_of(rows[i]);
    const double x = num(f[0]);
    CHECK(num(f[1]) == fjsums::sine_partial_sum(x, 10));
  }
}

TEST_CASE("integrated-secant figure: layout and envelope domination") {
  std::ostringstream os;
  figures::write_fig2(os, 12.0, 200);
  const auto rows = lines_of(os.str());
  REQUIRE(rows.size() == 201);
  CHECK(rows[0] == "x,lambda_Cci,lambda_Sci_minus_1,sec_x,neg_sec_x");

  double prev_x = -1.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields_of(rows[i]);
    REQUIRE(f.size() == 5);
    const double x = num(f[0]);
    CHECK(x > prev_x);
    CHECK(x < kPi / 2.0);
    prev_x = x;
    const double c = num(f[1]);
    const double s = num(f[2]);
    const double sec = num(f[3]);
    CHECK(num(f[4]) == -sec);
    CHECK(std::abs(c) <= sec + 1e-9);
    CHECK(std::abs(s) <= sec + 1e-9);
    CHECK(c * c + s * s <= sec * sec + 1e-9);
  }
}

TEST_CASE("figure emitters validate their parameters") {
  std::ostringstream os;
  CHECK_THROWS_AS(figures::write_fig1(os, 1, 10), std::domain_error);
  CHECK_THROWS_AS(figures::write_fig1(os, 10, 0), std::domain_error);
  CHECK_THROWS_AS(figures::write_fig2(os, 0.0, 10), std::domain_error);
  CHECK_THROWS_AS(figures::write_fig2(os, 12.0, -1), std::domain_error);
}
