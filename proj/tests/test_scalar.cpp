#include "doctest.h"
#include "mmp3/error.hpp"
#include "mmp3/scalar.hpp"

using namespace mmp3;

namespace {

FieldPtr gaussian() {
  // t^2 + 1
  return std::make_shared<NumberField>(NumberField{"i", {Rat(1), Rat(0)}});
}

FieldPtr sqrt2() {
  // t^2 - 2
  return std::make_shared<NumberField>(NumberField{"a", {Rat(-2), Rat(0)}});
}

}  // namespace

TEST_SUITE("polyalg") {

TEST_CASE("rational scalar arithmetic") {
  Scalar half(Rat(1, 2));
  Scalar third(Rat(1, 3));
  CHECK((half + third).rational_part() == Rat(5, 6));
  CHECK((half - third).rational_part() == Rat(1, 6));
  CHECK((half * third).rational_part() == Rat(1, 6));
  CHECK((half / third).rational_part() == Rat(3, 2));
  CHECK((-half).rational_part() == Rat(-1, 2));
  CHECK(Scalar(7).is_rational());
  CHECK(Scalar().is_zero());
  CHECK(Scalar(1).is_one());
  CHECK(half.inverse().rational_part() == 2);
}

TEST_CASE("field scalar arithmetic in the gaussian field") {
  auto F = gaussian();
  Scalar i = Scalar::generator(F);
  CHECK((i * i) == Scalar(Rat(-1), F));
  CHECK((i * i).is_rational());

  Scalar two_plus_i = Scalar(Rat(2), F) + i;
  Scalar two_minus_i = Scalar(Rat(2), F) - i;
  CHECK((two_plus_i * two_minus_i) == Scalar(Rat(5), F));

  // (1+i)^{-1} = (1-i)/2
  Scalar one_plus_i = Scalar(Rat(1), F) + i;
  Scalar inv = one_plus_i.inverse();
  CHECK(inv == (Scalar(Rat(1), F) - i) * Scalar(Rat(1, 2), F));
  CHECK((one_plus_i * inv).is_one());
  CHECK((one_plus_i / one_plus_i).is_one());
}

TEST_CASE("rationals coerce into the field automatically") {
  auto F = gaussian();
  Scalar i = Scalar::generator(F);
  Scalar sum = Scalar(Rat(3)) + i;  // plain rational on the left
  CHECK(sum == Scalar(Rat(3), F) + i);
  CHECK((Scalar(2) * i + i) == Scalar(Rat(3), F) * i);
}

TEST_CASE("distinct number fields never mix") {
  Scalar i = Scalar::generator(gaussian());
  Scalar a = Scalar::generator(sqrt2());
  CHECK_THROWS_AS(i + a, error);
  try {
    i* a;
  } catch (const error& e) {
    CHECK(e.code() == errc::field_mismatch);
  }
}

TEST_CASE("equal fields in distinct objects are compatible") {
  Scalar i1 = Scalar::generator(gaussian());
  Scalar i2 = Scalar::generator(gaussian());
  CHECK((i1 * i2) == Scalar(Rat(-1), gaussian()));
}

TEST_CASE("scalar text form") {
  auto F = gaussian();
  Scalar i = Scalar::generator(F);
  CHECK(Scalar(Rat(3, 2)).str() == "3/2");
  CHECK(Scalar(Rat(-3)).str() == "-3");
  CHECK(i.str() == "i");
  CHECK((Scalar(Rat(1), F) + i).str() == "i + 1");
  CHECK((Scalar(Rat(1), F) - i).str() == "-i + 1");
  CHECK((Scalar(Rat(2), F) * i).str() == "2*i");

  bool atomic = false;
  i.str(&atomic);
  CHECK(atomic);
  (Scalar(Rat(1), F) + i).str(&atomic);
  CHECK(!atomic);
  (-i).str(&atomic);
  CHECK(!atomic);
}

TEST_CASE("scalar order and height") {
  Scalar a(Rat(1, 2)), b(Rat(2, 3));
  CHECK(a.cmp(b) < 0);
  CHECK(b.cmp(a) > 0);
  CHECK(a.cmp(a) == 0);
  CHECK(Scalar(Rat(3, 7)).height() == 7);
  auto F = gaussian();
  Scalar z = Scalar(Rat(5), F) + Scalar::generator(F);  // 5 + i
  CHECK(z.height() == 5);
}

TEST_CASE("degree-three extension inverts correctly") {
  // t^3 - 2:  (c = cbrt(2)) => c^{-1} = c^2 / 2
  auto F = std::make_shared<NumberField>(
      NumberField{"c", {Rat(-2), Rat(0), Rat(0)}});
  Scalar c = Scalar::generator(F);
  Scalar inv = c.inverse();
  CHECK(inv == c * c * Scalar(Rat(1, 2), F));
  CHECK((c * inv).is_one());
  // (1 + c + c^2) has an inverse too
  Scalar u = Scalar(Rat(1), F) + c + c * c;
  CHECK((u * u.inverse()).is_one());
}

}  // TEST_SUITE
