#include <catch_amalgamated.hpp>

#include <cmath>

#include "tvdlab/errors.hpp"
#include "tvdlab/field_expr.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace tvdlab;

namespace {

double value_of(std::string_view text) {
  return Expression::parse(text, {}).eval({}).v;
}

}  // namespace

TEST_CASE("arithmetic and precedence") {
  CHECK(value_of("1 + 2 * 3") == 7.0);
  CHECK(value_of("(1 + 2) * 3") == 9.0);
  CHECK(value_of("2 ^ 3 ^ 2") == 512.0);
  CHECK(value_of("-2 ^ 2") == -4.0);
  CHECK(value_of("8 / 4 / 2") == 1.0);
  CHECK(value_of("1 - 2 - 3") == -4.0);
  CHECK(value_of("+3") == 3.0);
  CHECK(value_of("1.5e2") == 150.0);
  CHECK(value_of("sqrt(16)") == 4.0);
  CHECK_THAT(value_of("pi"), WithinRel(M_PI, 1e-16));
  CHECK_THAT(value_of("log(e)"), WithinRel(1.0, 1e-16));
  CHECK_THAT(value_of("exp(1)"), WithinRel(M_E, 1e-15));
  CHECK(value_of("id(2.5)") == 2.5);
}

TEST_CASE("jets carry exact derivatives") {
  const Expression e = Expression::parse("r*s + exp(r) - s^3/3 + log(s) * sqrt(s)", {"r", "s"});
  const double r = 0.3, s = 1.7;
  const Jet2 j = e.eval({Jet2::var_r(r), Jet2::var_s(s)});
  CHECK_THAT(j.v, WithinRel(r * s + std::exp(r) - s * s * s / 3 + std::log(s) * std::sqrt(s), 1e-15));
  CHECK_THAT(j.dr, WithinRel(s + std::exp(r), 1e-15));
  CHECK_THAT(j.drr, WithinRel(std::exp(r), 1e-15));
  CHECK_THAT(j.drs, WithinRel(1.0, 1e-15));
  const double ds = r - s * s + (1 / s) * std::sqrt(s) + std::log(s) / (2 * std::sqrt(s));
  CHECK_THAT(j.ds, WithinRel(ds, 1e-14));
  // (log s * sqrt s)'' = -s^-1.5 + s^-1.5 - log(s) s^-1.5 / 4
  const double dss = -2 * s - std::log(s) / (4 * std::pow(s, 1.5));
  CHECK_THAT(j.dss, WithinRel(dss, 1e-13));

  const Expression q = Expression::parse("r / s + r ^ 2.5", {"r", "s"});
  const Jet2 k = q.eval({Jet2::var_r(2.0), Jet2::var_s(4.0)});
  CHECK_THAT(k.dr, WithinRel(0.25 + 2.5 * std::pow(2.0, 1.5), 1e-15));
  CHECK_THAT(k.ds, WithinRel(-2.0 / 16.0, 1e-15));
  CHECK_THAT(k.dss, WithinRel(4.0 / 64.0, 1e-15));
  CHECK_THAT(k.drs, WithinRel(-1.0 / 16.0, 1e-15));
  CHECK_THAT(k.drr, WithinRel(2.5 * 1.5 * std::sqrt(2.0), 1e-15));
}

TEST_CASE("syntax errors name the position") {
  for (const char* bad : {"", "1 +", "(1", "1)", "2 ** 3", "foo", "exp(", "sin(1)", "1 2", "r"}) {
    INFO(bad);
    CHECK_THROWS_AS(Expression::parse(bad, {"s"}), DomainError);
  }
  try {
    Expression::parse("1 + )", {});
    FAIL("no throw");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("univariate functions") {
  const Univariate f = parse_univariate("2*v + v^2");
  CHECK(f(3.0) == 15.0);
  CHECK(f.d1(3.0) == 8.0);
  CHECK(f.d2(3.0) == 2.0);
  CHECK(parse_univariate("x")(4.0) == 4.0);
  CHECK(parse_univariate("id")(4.0) == 4.0);
  CHECK(parse_univariate("exp(id)").d2(0.0) == 1.0);
  CHECK_THROWS_AS(parse_univariate("r"), DomainError);
}

TEST_CASE("field specs") {
  const GasModel m(3.0);
  const ScalarField raw = parse_field("raw:r*s");
  CHECK(!raw.split_form());
  const Jet2 j = raw.jet(-std::sqrt(3.0), std::sqrt(3.0));
  CHECK_THAT(j.v, WithinRel(-3.0, 1e-15));
  CHECK(j.drs == 1.0);

  const ScalarField sp = parse_field("split:theta=2*v;psi=v");
  REQUIRE(sp.split_form());
  CHECK(sp.value(1.0, 3.0) == 5.0);
  const Jet2 k = sp.jet(1.0, 3.0);
  CHECK(k.ds == 2.0);
  CHECK(k.dr == -1.0);
  CHECK(k.drs == 0.0);

  const ScalarField only_theta = parse_field("split:theta=v^2");
  CHECK(only_theta.value(1.0, 3.0) == 8.0);
  const ScalarField only_psi = parse_field("split:psi=3*v");
  CHECK(only_psi.value(1.0, 3.0) == 0.0);
  CHECK(parse_field("split:").value(1.0, 3.0) == 2.0);

  CHECK_THROWS_AS(parse_field("r*s"), DomainError);
  CHECK_THROWS_AS(parse_field("split:phi=v"), DomainError);
  CHECK_THROWS_AS(parse_field("split:theta"), DomainError);
  CHECK_THROWS_AS(parse_field("raw:r*q"), DomainError);
}
