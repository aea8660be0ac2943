#include <algorithm>
#include <set>

#include "doctest.h"
#include "udc/bcrystal.hpp"

using namespace udc;

namespace {

BElt z_inf() { return BElt::limit({0, 0, 0, 0, 0, 0}); }

// limit-context grid t in [-r, r]^6 filtered by the congruence invariants
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

TEST_CASE("construction validates the congruence invariants") {
  CHECK_THROWS_AS(BElt::limit({1, 0, 0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(BElt::limit({0, 1, 0, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(BElt::limit({0, 0, 1, 0, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(BElt::limit({0, 0, 0, 1, 0, 0}), std::invalid_argument);
  CHECK_NOTHROW(BElt::limit({0, 1, 1, 1, 1, 0}));
  CHECK_NOTHROW(BElt::limit({0, -1, -1, 1, 1, 0}));
  // level context: negativity and s(b) <= l
  CHECK_THROWS_AS(BElt::at_level({0, -1, -1, 1, 1, 0}, 1), std::invalid_argument);
  CHECK_THROWS_AS(BElt::at_level({3, 1, 1, 1, 1, 0}, 1), std::invalid_argument);
  CHECK_NOTHROW(BElt::at_level({0, 1, 1, 1, 1, 0}, 1));
}

TEST_CASE("s values") {
  CHECK(s(z_inf()) == 0);
  CHECK(s(BElt::limit({0, 1, 1, 1, 1, 0})) == 1);
  // symmetric elements (a,b,b,b,b,a): s = 2a + 3b
  for (int a = 0; a <= 2; ++a)
    for (int tb = 0; tb <= 5; ++tb)
      CHECK(s(BElt::limit({3 * a, tb, tb, tb, tb, 3 * a})) == 2 * a + tb);
}

TEST_CASE("z and A vectors") {
  BElt b = BElt::limit({0, 1, 1, 3, 3, 3});
  ZVector z = zvec(b);
  CHECK(z.z1 == 1);   // bb1 - b1
  CHECK(z.z2 == 0);   // bb2 - bb3
  CHECK(z.z3 == 0);   // b3 - b2
  CHECK(z.three_z4 == 1);
  auto A = avec(b);
  CHECK(A == std::array<int, 6>{0, 1, 1, 2, 2, 3});
}

TEST_CASE("case dispatch") {
  CHECK(case_F(z_inf()) == FCase::F1);
  // at the zero element every E-side inequality is an equality, which lands
  // in E6 under the strict/weak swap
  CHECK(case_E(z_inf()) == ECase::E6);
  // z = (1,0,0,0): bb1 = b1 + 1
  CHECK(case_F(BElt::limit({0, 0, 0, 0, 0, 3})) == FCase::F6);
}

TEST_CASE("exactly one F case and one E case on the limit grid and B1, B2") {
  for (const BElt& b : limit_grid(6)) {
    CHECK_NOTHROW(case_F(b));  // throws unless the hit is unique
    CHECK_NOTHROW(case_E(b));
  }
  for (int l : {1, 2})
    for (const BElt& b : enumerate_level(l)) {
      CHECK_NOTHROW(case_F(b));
      CHECK_NOTHROW(case_E(b));
    }
}

TEST_CASE("operator examples") {
  BElt z = z_inf();
  CHECK(*f(1, z) == BElt::limit({-3, 3, 0, 0, 0, 0}));
  CHECK(*f(2, z) == BElt::limit({0, -1, 2, 0, 0, 0}));
  CHECK(*f(0, z) == BElt::limit({3, 0, 0, 0, 0, 0}));
  CHECK(*e(0, BElt::limit({3, 0, 0, 0, 0, 0})) == z);
  // level context: boundary results are null
  BElt z1 = BElt::at_level({0, 0, 0, 0, 0, 0}, 1);
  CHECK(!f(1, z1));
  CHECK(!f(2, z1));
  CHECK(f(0, z1).has_value());
  // eps_0(0) = 1 at level 1, so e_0 acts exactly once before hitting the
  // boundary
  BElt up = *e(0, z1);
  CHECK(up == BElt::at_level({0, 0, 0, 0, 0, 3}, 1));
  CHECK(eps(0, up) == 0);
  CHECK(!e(0, up));
  CHECK_THROWS_AS(f(3, z), std::out_of_range);
}

TEST_CASE("statistics examples") {
  BElt z1 = BElt::at_level({0, 0, 0, 0, 0, 0}, 1);
  CHECK(eps(0, z1) == 1);
  CHECK(eps(1, z1) == 0);
  CHECK(eps(2, z1) == 0);
  CHECK(level(Algebra::G2_1, WeightVec{{eps(0, z1), eps(1, z1), eps(2, z1)}, 0}) == 1);
  CHECK(eps(2, BElt::at_level({0, 1, 1, 1, 1, 0}, 1)) == 1);
  BElt z = z_inf();
  for (int i = 0; i < 3; ++i) {
    CHECK(eps(i, z) == 0);
    CHECK(phi(i, z) == 0);
  }
  CHECK(wt(z) == WeightVec{});
  CHECK(wt(*f(1, z)) == -simple_root(Algebra::G2_1, 1).classical());
  // symmetric elements have zero weight
  CHECK(wt(BElt::limit({3, 2, 2, 2, 2, 3})) == WeightVec{});
}

TEST_CASE("enumerate_level") {
  auto B1 = enumerate_level(1);
  CHECK(B1.size() == 15);
  CHECK(std::is_sorted(B1.begin(), B1.end()));
  CHECK(std::count(B1.begin(), B1.end(), BElt::at_level({0, 0, 0, 0, 0, 0}, 1)) == 1);
  CHECK(std::count(B1.begin(), B1.end(), BElt::at_level({0, 1, 1, 1, 1, 0}, 1)) == 1);
  for (const BElt& b : B1) CHECK(s(b) <= 1);

  auto B2 = enumerate_level(2);
  CHECK(B2.size() == 92);
  // B1 embeds in B2 under the identity on coordinates
  std::set<std::array<int, 6>> t2;
  for (const BElt& b : B2) t2.insert(b.t);
  for (const BElt& b : B1) CHECK(t2.count(b.t) == 1);
}

TEST_CASE("operator inverse and statistic steps on B1, B2 and the limit grid") {
  auto sweep = [](const std::vector<BElt>& elts) {
    for (const BElt& b : elts)
      for (int i = 0; i < 3; ++i) {
        CHECK(phi(i, b) == eps(i, b) + coroot_pairing(i, wt(b)));
        if (auto fb = f(i, b)) {
          CHECK(*e(i, *fb) == b);
          CHECK(eps(i, *fb) == eps(i, b) + 1);
          CHECK(phi(i, *fb) == phi(i, b) - 1);
          CHECK(wt(*fb) == wt(b) - simple_root(Algebra::G2_1, i).classical());
        }
        if (auto eb = e(i, b)) CHECK(*f(i, *eb) == b);
      }
  };
  sweep(enumerate_level(1));
  sweep(enumerate_level(2));
  sweep(limit_grid(6));
}

TEST_CASE("phi_0 steps down by one under f_0 in the limit") {
  for (const BElt& b : limit_grid(4)) {
    CHECK(phi(0, *f(0, b)) == phi(0, b) - 1);
    CHECK(s(*f(0, b)) - s(b) <= 1);  // s moves by at most one
  }
}

TEST_CASE("minimal elements") {
  auto M1 = minimal_elements(1);
  REQUIRE(M1.size() == 2);
  CHECK(M1[0].t == std::array<int, 6>{0, 0, 0, 0, 0, 0});
  CHECK(M1[1].t == std::array<int, 6>{0, 1, 1, 1, 1, 0});

  auto M2 = minimal_elements(2);
  REQUIRE(M2.size() == 4);
  std::set<std::array<int, 6>> got;
  for (const BElt& b : M2) got.insert(b.t);
  std::set<std::array<int, 6>> want{{0, 0, 0, 0, 0, 0},
                                    {0, 1, 1, 1, 1, 0},
                                    {0, 2, 2, 2, 2, 0},
                                    {3, 0, 0, 0, 0, 3}};
  CHECK(got == want);

  // definitional characterization: <c, eps(b)> = l, and eps = phi there
  for (int l : {1, 2}) {
    std::set<std::array<int, 6>> by_def;
    for (const BElt& b : enumerate_level(l)) {
      WeightVec ev{{eps(0, b), eps(1, b), eps(2, b)}, 0};
      if (level(Algebra::G2_1, ev) == l) by_def.insert(b.t);
    }
    std::set<std::array<int, 6>> listed;
    for (const BElt& b : minimal_elements(l)) {
      listed.insert(b.t);
      for (int i = 0; i < 3; ++i) CHECK(eps(i, b) == phi(i, b));
    }
    CHECK(by_def == listed);
  }
}

TEST_CASE("perfect_check at levels 1 and 2") {
  PerfectReport r1 = perfect_check(1);
  CHECK(r1.size == 15);
  CHECK(r1.minimal_count == 2);
  CHECK(r1.dominant_count == 2);  // {L0, L2}
  CHECK(r1.tensor_square_connected);
  CHECK(r1.weight_cone_ok);
  CHECK(r1.eps_bijective);
  CHECK(r1.phi_bijective);
  CHECK(r1.pass());
  CHECK(r1.pseudo_base == "out of scope");

  PerfectReport r2 = perfect_check(2);
  CHECK(r2.size == 92);
  CHECK(r2.minimal_count == 4);
  CHECK(r2.dominant_count == 4);  // {2L0, L1, L0+L2, 2L2}
  CHECK(r2.pass());

  CHECK(dominant_weights(1) ==
        std::vector<WeightVec>{WeightVec{{0, 0, 1}, 0}, WeightVec{{1, 0, 0}, 0}});
  nlohmann::json j = r1.to_json();
  CHECK(j["pass"] == true);
  CHECK(j["level"] == 1);
}

TEST_CASE("coherent embedding") {
  // at l=1 with b0 = 0 the embedding is the identity on coordinates
  BElt b0 = BElt::at_level({0, 0, 0, 0, 0, 0}, 1);
  for (const BElt& b : enumerate_level(1))
    CHECK(coherent_embed(1, b0, b).t == b.t);
  // the minimal-element image is the limit zero element
  for (int l : {1, 2})
    for (const BElt& m : minimal_elements(l))
      CHECK(coherent_embed(l, m, m) == z_inf());
  // non-minimal b0 rejected
  CHECK_THROWS_AS(coherent_embed(1, BElt::at_level({0, 0, 2, 0, 0, 0}, 1),
                                 BElt::at_level({0, 0, 0, 0, 0, 0}, 1)),
                  std::invalid_argument);
}

TEST_CASE("coherent embedding commutes with the operators and shifts stats") {
  for (int l : {1, 2}) {
    auto B = enumerate_level(l);
    for (const BElt& b0 : minimal_elements(l)) {
      for (const BElt& b : B) {
        BElt nu = coherent_embed(l, b0, b);
        for (int i = 0; i < 3; ++i) {
          if (auto fb = f(i, b)) CHECK(coherent_embed(l, b0, *fb) == *f(i, nu));
          if (auto eb = e(i, b)) CHECK(coherent_embed(l, b0, *eb) == *e(i, nu));
          // stats of t_eps(b0) (x) b (x) t_-phi(b0)
          CHECK(eps(i, nu) == eps(i, b) - eps(i, b0));
          CHECK(phi(i, nu) == phi(i, b) - phi(i, b0));
        }
        // wt of t_eps(b0) (x) b (x) t_-phi(b0) is wt(b) since eps(b0)=phi(b0)
        CHECK(wt(nu) == wt(b));
      }
    }
  }
}

TEST_CASE("embedding images cover the [-1,1]^6 limit grid for l <= 3") {
  std::set<std::array<int, 6>> covered;
  for (int l : {1, 2, 3})
    for (const BElt& b0 : minimal_elements(l))
      for (const BElt& b : enumerate_level(l))
        covered.insert(coherent_embed(l, b0, b).t);
  int count = 0;
  for (const BElt& b : limit_grid(1)) {
    ++count;
    CHECK(covered.count(b.t) == 1);
  }
  CHECK(count == 5);
}

TEST_CASE("json round trip") {
  for (const BElt& b : enumerate_level(1)) {
    nlohmann::json j = to_json(b);
    CHECK(j["context"]["level"] == 1);
    CHECK(belt_from_json(j) == b);
  }
  BElt z = z_inf();
  CHECK(to_json(z)["context"] == "limit");
  CHECK(belt_from_json(to_json(z)) == z);
  CHECK_THROWS_AS(belt_from_json(nlohmann::json{{"t", {0, 0, 0}}}),
                  std::invalid_argument);
}

TEST_CASE("labels print thirds with explicit denominators") {
  CHECK(to_string(BElt::limit({0, 1, 1, 1, 1, 0})) == "(0,1/3,1/3,1/3,1/3,0)");
  CHECK(to_string(BElt::limit({3, 0, 0, 0, 0, -3})) == "(1,0,0,0,0,-1)");
}
