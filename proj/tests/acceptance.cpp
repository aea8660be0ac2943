// Acceptance suite: runs the eleven verification criteria and prints one
// PASS/FAIL line per criterion.  Exit status is the number of failed
// criteria.
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "udc/bcrystal.hpp"
#include "udc/crystal.hpp"
#include "udc/formulas.hpp"
#include "udc/geom.hpp"
#include "udc/omega.hpp"
#include "udc/trop.hpp"
#include "udc/xcrystal.hpp"

using namespace udc;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  if (!ok) ++failures;
}

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

// ---------------------------------------------------------------- criteria

void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  IsoReport rep = verify_iso(3);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  bool ok = rep.pass() && rep.points_checked == 117649 && secs < 60.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "isomorphism sweep radius 3: %llu points, %zu violations, %.2fs",
                (unsigned long long)rep.points_checked, rep.violations.size(),
                secs);
  report(1, ok, buf);
}

void criterion_2() {
  std::size_t bad = 0;
  bad += check_axioms(enumerate_level(1), Algebra::G2_1).size();
  bad += check_axioms(enumerate_level(2), Algebra::G2_1).size();
  bad += check_axioms(limit_grid(6), Algebra::G2_1).size();
  std::vector<XPoint> xs;
  sweep_cube(3, [&](const XPoint& p) { xs.push_back(p); });
  bad += check_axioms(xs, Algebra::G2_1).size();
  report(2, bad == 0,
         "crystal axioms on B_1, B_2, the [-6,6]^6 limit grid and the "
         "[-3,3]^6 lattice: " +
             std::to_string(bad) + " violations");
}

void criterion_3() {
  std::size_t bad = 0;
  auto partition = [&](const std::vector<BElt>& elts) {
    for (const BElt& b : elts) {
      try {
        (void)case_F(b);
        (void)case_E(b);
      } catch (const std::logic_error&) {
        ++bad;
      }
    }
  };
  partition(enumerate_level(1));
  partition(enumerate_level(2));
  partition(limit_grid(6));
  sweep_cube(3, [&](const XPoint& p) {
    FClass c;
    try {
      c = classify_f(p);
    } catch (const std::logic_error&) {
      ++bad;
      return;
    }
    BElt b = omega(p);
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
    if (coarse != static_cast<int>(case_F(b))) ++bad;
    int w = zvec(b).three_z4;
    if (c == FClass::f4 && w != 1) ++bad;
    if (c == FClass::f4p && w != 2) ++bad;
    if (c == FClass::f4pp && (w == 1 || w == 2)) ++bad;
  });
  report(3, bad == 0,
         "case partitions are exact and match across the bijection: " +
             std::to_string(bad) + " violations");
}

void criterion_4() {
  PerfectReport r1 = perfect_check(1);
  PerfectReport r2 = perfect_check(2);
  bool ok = r1.pass() && r2.pass() && r1.minimal_count == 2 &&
            r2.minimal_count == 4 && r1.dominant_count == 2 &&
            r2.dominant_count == 4 && r1.tensor_square_connected;
  report(4, ok,
         "perfectness at levels 1 and 2 (connectivity, weight cone, "
         "minimal-element bijections)");
}

void criterion_5() {
  std::size_t bad = 0;
  for (int l : {1, 2}) {
    for (const BElt& b0 : minimal_elements(l)) {
      WeightVec lam{{eps(0, b0), eps(1, b0), eps(2, b0)}, 0};
      WeightVec phiw{{phi(0, b0), phi(1, b0), phi(2, b0)}, 0};
      TLambda tl{lam}, tr{-phiw};
      for (const BElt& b : enumerate_level(l)) {
        BElt nu = coherent_embed(l, b0, b);
        Tensor<TLambda, Tensor<BElt, TLambda>> triple{tl, {b, tr}};
        if (crystal_wt(triple) != wt(nu)) ++bad;
        for (int i = 0; i < 3; ++i) {
          if (crystal_eps(i, triple) != ExtInt(eps(i, nu))) ++bad;
          if (crystal_phi(i, triple) != ExtInt(phi(i, nu))) ++bad;
          auto ft = crystal_f(i, triple);
          if (ft) {
            if (!(coherent_embed(l, b0, ft->right.left) == *f(i, nu))) ++bad;
          }
          auto et = crystal_e(i, triple);
          if (et) {
            if (!(coherent_embed(l, b0, et->right.left) == *e(i, nu))) ++bad;
          }
        }
      }
    }
  }
  report(5, bad == 0,
         "coherent-family embeddings commute with the operators and preserve "
         "all statistics: " +
             std::to_string(bad) + " violations");
}

void criterion_6() {
  geom::GeomReport rep = geom::axioms_check(20, 42);
  std::string what =
      "geometric-crystal axioms, 20 seeded samples (gamma scaling, eps "
      "scaling, rank-2 relations, action): " +
      std::to_string(rep.violations.size()) + " violations";
  report(6, rep.pass(), what);
  for (const std::string& n : rep.notes) std::printf("      note: %s\n", n.c_str());
}

void criterion_7() {
  const int word[6] = {0, 1, 2, 1, 2, 1};
  CartanMatrix A = cartan_matrix(Algebra::D4_3);
  std::size_t bad = 0;
  for (int k = 0; k < 100; ++k) {
    geom::RatPoint x = geom::random_point(1234, 3 * k);
    Rat c = geom::random_rat(1234, 3 * k + 1);
    std::vector<Rat> cs(x.x.begin(), x.x.end());
    for (int i : {1, 2}) {
      auto out = geom::schubert_C(word, A, i, c, cs);
      geom::RatPoint y = geom::e_act(i, c, x);
      for (int j = 0; j < 6; ++j)
        if (out[j] != y.x[j]) ++bad;
      if (geom::schubert_eps(word, A, i, cs) != geom::eps_geom(i, x)) ++bad;
      if (geom::schubert_gamma(word, A, i, cs) != geom::gamma_geom(i, x)) ++bad;
    }
    if (geom::schubert_gamma(word, A, 0, cs) != geom::gamma_geom(0, x)) ++bad;
  }
  report(7, bad == 0,
         "generic word formulas reproduce the transcribed actions at 100 "
         "seeded points: " +
             std::to_string(bad) + " mismatches");
}

void criterion_8() {
  std::size_t bad = 0;
  std::vector<std::string> names = formulas::names();
  for (const std::string& name : names) {
    trop::PosExpr e = formulas::expr(name);
    trop::OracleReport rep = trop::oracle_check(e, trop::ud(e), 50, 7);
    if (!rep.pass()) {
      ++bad;
      std::printf("      oracle mismatch for %s\n", name.c_str());
    }
  }
  report(8, bad == 0,
         "degree valuation oracle certifies the tropicalization of all " +
             std::to_string(names.size()) + " catalogued formulas (50 samples each)");
}

void criterion_9() {
  trop::TropRat g = trop::substitute(trop::ud(formulas::expr("G")), "c", -1);
  trop::TropRat s = trop::simplify(g);

  // the reference twelve-term reduction, expanded over x0..x5
  auto lin = [](long long c, std::array<int, 6> e) {
    trop::TropTerm t;
    t.constant = c;
    const char* v[6] = {"x0", "x1", "x2", "x3", "x4", "x5"};
    for (int k = 0; k < 6; ++k)
      if (e[k]) t.exps[v[k]] = e[k];
    return t;
  };
  std::vector<trop::TropTerm> display{
      lin(-3, {6, 0, 3, 3, 0, 0}), lin(0, {0, 3, 3, 6, 0, 3}),
      lin(0, {3, 3, 0, 9, 0, 0}),  lin(0, {3, 0, 3, 6, 0, 0}),
      lin(-3, {3, 3, 3, 0, 3, 0}), lin(-3, {3, 3, 3, 3, 0, 3}),
      lin(-1, {4, 2, 2, 4, 1, 0}), lin(0, {3, 2, 2, 5, 1, 0}),
      lin(0, {3, 3, 2, 3, 2, 0}),  lin(0, {3, 3, 1, 6, 1, 0}),
      lin(-1, {3, 3, 2, 4, 1, 1}), lin(0, {2, 3, 2, 5, 1, 1})};
  std::set<trop::TropTerm> want(display.begin(), display.end());
  std::set<trop::TropTerm> got(s.num.begin(), s.num.end());

  bool set_equal = got == want;
  bool grid_equal = trop::equal_on_grid(g, s, 4).equal;
  report(9, set_equal && grid_equal,
         "simplified ud(G) at parameter -1: matches the twelve-term display (" +
             std::string(set_equal ? "yes" : "no") +
             "), agrees with the raw form on the radius-4 grid (" +
             std::string(grid_equal ? "yes" : "no") + ")");
  if (!set_equal) {
    std::printf(
        "      the twelve-term display is equivalent but not minimal: the\n"
        "      convex-combination reduction leaves %zu terms; for example\n"
        "      gamma+delta+epsilon = 1/2 (gamma+2 epsilon) + 1/6 (3 gamma)\n"
        "      + 1/3 (3 delta), so that term never attains the max alone.\n"
        "      Both forms agree at every grid point (radius-3 check: %s).\n",
        s.num.size(),
        trop::equal_on_grid(
            trop::TropRat{display, {trop::TropTerm{}}}, g, 3)
                .equal
            ? "equal"
            : "UNEQUAL");
  }
}

void criterion_10() {
  // the generated psi5 increment comes from D/(c H); certify it against the
  // valuation oracle, and document which closed form it selects
  trop::PosExpr d = formulas::to_expr(formulas::poly_D());
  trop::PosExpr h = formulas::to_expr(formulas::poly_H());
  trop::PosExpr ratio = trop::PosExpr::quotient(
      d, trop::PosExpr::product({trop::PosExpr::variable("c"), h}));
  trop::OracleReport orep = trop::oracle_check(ratio, generated_form(0, 5), 50, 9);
  Psi5Resolution res = resolve_psi5(3);
  bool ok = orep.pass() && !res.plus_alpha_agrees;
  report(10, ok,
         "psi5 resolution: generated form passes the valuation oracle; the "
         "'1+alpha' closed-form variant " +
             std::string(res.plus_alpha_agrees ? "agrees" : "disagrees"));
  if (res.counterexample)
    std::printf(
        "      note: variant deviates at x=%s (variant %d, generated %d); "
        "the '-1+alpha' form agrees everywhere\n",
        to_string(*res.counterexample).c_str(), res.variant_value,
        res.generated_value);
}

void criterion_11() {
  std::size_t bad = 0;
  sweep_cube(2, [&](const XPoint& p) {
    for (int m = -2; m <= 2; ++m)
      for (int n = -2; n <= 2; ++n) {
        for (int i = 0; i < 3; ++i)
          if (!(act(i, m, act(i, n, p)) == act(i, m + n, p))) ++bad;
        // rank-2 relation for the pair (0,1)
        if (!(act(0, m, act(1, m + n, act(0, n, p))) ==
              act(1, n, act(0, m + n, act(1, m, p)))))
          ++bad;
        // six-factor relation for the pair (1,2)
        XPoint l = p;
        l = act(2, n, l);
        l = act(1, m + n, l);
        l = act(2, 3 * m + 2 * n, l);
        l = act(1, 2 * m + n, l);
        l = act(2, 3 * m + n, l);
        l = act(1, m, l);
        XPoint r = p;
        r = act(1, m, r);
        r = act(2, 3 * m + n, r);
        r = act(1, 2 * m + n, r);
        r = act(2, 3 * m + 2 * n, r);
        r = act(1, m + n, r);
        r = act(2, n, r);
        if (!(l == r)) ++bad;
      }
  });
  report(11, bad == 0,
         "Z-action composition and both tropical rank-2 relations on "
         "[-2,2]^6 with m,n in [-2,2]: " +
             std::to_string(bad) + " violations");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::printf("%d of 11 criteria failed\n", failures);
  return failures;
}
