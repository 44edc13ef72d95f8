#include <string>
#include <vector>

#include "doctest.h"
#include "mmp3/error.hpp"
#include "mmp3/ring.hpp"

using namespace mmp3;

namespace {

RingPtr p3() {
  return Ring::make({"x0", "x1", "x2", "x3"},
                    {Deg::of(1), Deg::of(1), Deg::of(1), Deg::of(1)});
}

RingPtr weighted() {
  return Ring::make({"x", "y", "z"}, {Deg::of(1), Deg::of(2), Deg::of(3)});
}

RingPtr bigraded() {
  return Ring::make({"s", "t", "u", "v"},
                    {Deg::of2(1, 0), Deg::of2(1, 0), Deg::of2(0, 1), Deg::of2(0, 1)});
}

}  // namespace

TEST_SUITE("polyalg") {

TEST_CASE("ring construction and lookup") {
  auto R = weighted();
  CHECK(R->nvars() == 3);
  CHECK(R->rank() == 1);
  CHECK(R->var_index("y") == 1);
  CHECK(R->var_index("w") == -1);
  CHECK(R->scalar_weight(2) == 3);
  CHECK(R->fresh_name("x") == "x_0");
  CHECK(R->fresh_name("q") == "q");
  CHECK_THROWS_AS(Ring::make({"x", "x"}, {Deg::of(1), Deg::of(1)}), error);
}

TEST_CASE("polynomial arithmetic and canonical form") {
  auto R = p3();
  Poly x0 = Poly::var(R, 0), x1 = Poly::var(R, 1), x2 = Poly::var(R, 2);
  Poly p = (x0 + x1) * (x0 - x1);
  CHECK(p == x0 * x0 - x1 * x1);
  CHECK((p - p).is_zero());
  CHECK((x0 + x1).pow(2) == x0 * x0 + Poly(R, Scalar(2)) * x0 * x1 + x1 * x1);
  CHECK((x0 * x1 + x2).nterms() == 2);
  Poly zero(R);
  CHECK((zero * p).is_zero());
  CHECK(p.pow(0) == Poly(R, Scalar(1)));
}

TEST_CASE("grading checks") {
  auto R = weighted();
  Poly x = Poly::var(R, 0), y = Poly::var(R, 1), z = Poly::var(R, 2);
  Poly h = x * y + z;  // both terms weight 3
  CHECK(h.is_homogeneous());
  CHECK(h.deg() == Deg::of(3));
  Poly nh = x + y;
  CHECK(!nh.is_homogeneous());
  CHECK_THROWS_AS(nh.deg(), error);

  auto B = bigraded();
  Poly su = Poly::var(B, 0) * Poly::var(B, 2);
  Poly tv = Poly::var(B, 1) * Poly::var(B, 3);
  CHECK((su - tv).is_homogeneous());
  CHECK((su - tv).deg() == Deg::of2(1, 1));
  CHECK(!(su + Poly::var(B, 0)).is_homogeneous());
}

TEST_CASE("canonical term order puts higher weighted degree first") {
  auto R = weighted();
  Poly p = Poly::var(R, 0) + Poly::var(R, 2);  // z has weight 3 > 1
  CHECK(p.lead_mono() == Mono::var(2, 3));
  // same weighted degree: revlex tie-break, later variables lose
  Poly q = Poly::var(R, 0, 2) + Poly::var(R, 1);  // x^2 vs y, both weight 2
  CHECK(q.lead_mono() == Mono::var(0, 3, 2));
}

TEST_CASE("substitution and transport") {
  auto R = p3();
  auto S = weighted();
  Poly x = Poly::var(S, 0), y = Poly::var(S, 1), z = Poly::var(S, 2);
  // x0,x1,x2,x3 -> x^2, y, x*y... pick images and check a product relation
  std::vector<Poly> im = {x * x, y, z, x * y};
  Poly p = Poly::var(R, 0) * Poly::var(R, 1) - Poly::var(R, 2) * Poly::var(R, 0);
  Poly q = p.substituted(S, im);
  CHECK(q == x * x * y - z * x * x);

  auto R2 = R->extended({"w"}, {Deg::of(5)});
  Poly moved = p.transported(R2);
  CHECK(moved.ring() == R2);
  CHECK(moved.nterms() == 2);
  Poly back = moved.transported(R);
  CHECK(back == p);
}

TEST_CASE("elimination order sorts the first block in front") {
  auto R = p3();
  Order o = Order::elim({0, 1}, 4);
  // x2^5 has huge degree but no block-one content: x0 beats it
  Mono a = Mono::var(0, 4);
  Mono b = Mono::var(2, 4, 5);
  CHECK(o.cmp(*R, a, b) > 0);
  CHECK(o.cmp(*R, b, a) < 0);
  CHECK(o.cmp(*R, a, a) == 0);
}

TEST_CASE("lex order compares variables front to back") {
  auto R = p3();
  Order o = Order::lexi();
  CHECK(o.cmp(*R, Mono::var(0, 4), Mono::var(1, 4, 7)) > 0);
  Poly p = Poly::var(R, 1, 3) + Poly::var(R, 0);
  CHECK(p.mono(p.lead_index(o)) == Mono::var(0, 4));
}

TEST_CASE("parse and print round-trip") {
  auto R = p3();
  const std::vector<std::string> canon = {
      "x0*x1 - x2*x3",
      "x0^2 + 2*x1*x2 - 3/2*x3^2",
      "x0^3 - x1^3 + x2^3 - x3^3",
      "0",
      "1",
      "-x0 + 1",
  };
  for (const auto& s : canon) {
    Poly p = parse_poly(R, s);
    CHECK(poly_str(p) == s);
    CHECK(parse_poly(R, poly_str(p)) == p);
  }
  // non-canonical input normalizes
  CHECK(poly_str(parse_poly(R, "x2*x3*(-1) + x1*x0")) == "x0*x1 - x2*x3");
  CHECK(poly_str(parse_poly(R, "(x0 + x1)^2 - x0^2 - x1^2")) == "2*x0*x1");
  CHECK(poly_str(parse_poly(R, "4/6*x0")) == "2/3*x0");
}

TEST_CASE("parsing over a number field") {
  auto F = std::make_shared<NumberField>(NumberField{"i", {Rat(1), Rat(0)}});
  auto R = Ring::make({"x", "y"}, {Deg::of(1), Deg::of(1)}, F);
  Poly p = parse_poly(R, "x^2 + i*y^2");
  CHECK(p.nterms() == 2);
  CHECK(poly_str(p) == "x^2 + i*y^2");
  Poly q = parse_poly(R, "(i + 1)*x*y");
  CHECK(poly_str(q) == "(i + 1)*x*y");
  CHECK(parse_poly(R, poly_str(q)) == q);
  Poly r = parse_poly(R, "-i*x");
  CHECK(poly_str(r) == "-i*x");
  CHECK(parse_poly(R, poly_str(r)) == r);
}

TEST_CASE("parse errors carry a column") {
  auto R = p3();
  auto col_of = [&](const std::string& s) -> std::string {
    try {
      parse_poly(R, s);
    } catch (const error& e) {
      CHECK(e.code() == errc::parse_error);
      return e.what();
    }
    return "(no error)";
  };
  CHECK(col_of("x0 + w").find("column 6") != std::string::npos);
  CHECK(col_of("x0 + ").find("end of input") != std::string::npos);
  CHECK(col_of("x0 ^").find("expected a number") != std::string::npos);
  CHECK(col_of("").find("empty") != std::string::npos);
  CHECK(col_of("x0 x1").find("trailing") != std::string::npos);
  CHECK(col_of("x0 + 1/0").find("zero denominator") != std::string::npos);
}

TEST_CASE("polynomial height") {
  auto R = p3();
  CHECK(parse_poly(R, "x0 - 17/3*x1").height() == 17);
  CHECK(parse_poly(R, "x0").height() == 1);
}

}  // TEST_SUITE
