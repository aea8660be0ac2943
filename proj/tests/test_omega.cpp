#include "doctest.h"
#include "udc/omega.hpp"

using namespace udc;

namespace {

template <class Fn>
void sweep_cube(int radius, Fn&& fn) {
  XPoint p;
  p.x.fill(-radius);
  while (true) {
    fn(p);
    int k = 0;
    for (; k < 6; ++k) {
      if (p.x[k] < radius) {
        ++p.x[k];
        break;
      }
      p.x[k] = -radius;
    }
    if (k == 6) break;
  }
}

std::vector<BElt> limit_grid(int r) {
  std::vector<BElt> out;
  std::array<int, 6> t;
  t.fill(-r);
  while (true) {
    if (congruences_ok(t)) out.push_back(BElt::limit(t));
    int k = 0;
    for (; k < 6; ++k) {
      if (t[k] < r) {
        ++t[k];
        break;
      }
      t[k] = -r;
    }
    if (k == 6) break;
  }
  return out;
}

}  // namespace

TEST_CASE("omega point values") {
  CHECK(omega(XPoint{}) == BElt::limit({0, 0, 0, 0, 0, 0}));
  // (1,1,1,1,1,1) -> (1, -2/3, 1/3, -1/3, 2/3, 0)
  BElt b = omega(XPoint{{1, 1, 1, 1, 1, 1}});
  CHECK(b.t == std::array<int, 6>{3, -2, 1, -1, 2, 0});
  CHECK(s(b) == 1);
  CHECK(s(omega(XPoint{{6, 5, 9, 4, 3, 1}})) == 6);
}

TEST_CASE("s after omega reads off x0") {
  sweep_cube(3, [](const XPoint& p) { CHECK(s(omega(p)) == p.x[0]); });
}

TEST_CASE("omega and omega_inv are mutually inverse") {
  sweep_cube(4, [](const XPoint& p) { CHECK(omega_inv(omega(p)) == p); });
  for (const BElt& b : limit_grid(6)) CHECK(omega(omega_inv(b)) == b);
  CHECK_THROWS_AS(omega_inv(BElt::at_level({0, 0, 0, 0, 0, 0}, 1)),
                  std::invalid_argument);
}

TEST_CASE("classification") {
  CHECK(classify_f(XPoint{}) == FClass::f1);
  CHECK(to_string(FClass::f4p) == "f4'");
  // exactly one class everywhere, and it matches the F case across omega
  sweep_cube(2, [](const XPoint& p) {
    FClass c = FClass::f1;
    REQUIRE_NOTHROW(c = classify_f(p));
    BElt b = omega(p);
    FCase F = case_F(b);
    int coarse = 0;
    switch (c) {
      case FClass::f1: coarse = 1; break;
      case FClass::f2: coarse = 2; break;
      case FClass::f3: coarse = 3; break;
      case FClass::f4:
      case FClass::f4p:
      case FClass::f4pp: coarse = 4; break;
      case FClass::f5: coarse = 5; break;
      case FClass::f6: coarse = 6; break;
    }
    CHECK(coarse == static_cast<int>(F));
    int w = zvec(b).three_z4;
    if (c == FClass::f4) CHECK(w == 1);
    if (c == FClass::f4p) CHECK(w == 2);
    if (c == FClass::f4pp) {
      CHECK(w != 1);
      CHECK(w != 2);
    }
    // epsilon - gamma recovers 3 z4
    GreekCombos g = combos(p);
    CHECK(g.epsilon - g.gamma == w);
  });
}

TEST_CASE("verify_iso passes at radius 1 and 2") {
  IsoReport r1 = verify_iso(1);
  CHECK(r1.pass());
  CHECK(r1.points_checked == 729);
  IsoReport r2 = verify_iso(2);
  CHECK(r2.pass());
  CHECK(r2.points_checked == 15625);
  nlohmann::json j = r2.to_json();
  CHECK(j["pass"] == true);
  CHECK(j["violations"].empty());
  CHECK(j["radius"] == 2);
  CHECK_THROWS_AS(verify_iso(0), std::invalid_argument);
}

TEST_CASE("a corrupted correspondence is caught") {
  // swap the roles of b2 and b3 after omega: the operator checks must fail
  auto corrupt = [](const XPoint& p) {
    BElt b = omega(p);
    std::swap(b.t[1], b.t[2]);
    return b;
  };
  int violations = 0;
  sweep_cube(1, [&](const XPoint& p) {
    BElt b = corrupt(p);
    if (!congruences_ok(b.t)) {
      ++violations;  // not even a member
      return;
    }
    for (int i = 0; i < 3; ++i) {
      if (!(corrupt(act(i, -1, p)) == *f(i, b))) ++violations;
      if (eps_i(i, p) != eps(i, b)) ++violations;
    }
  });
  CHECK(violations > 0);
}
