#include "udc/formulas.hpp"

#include <stdexcept>

namespace udc::formulas {

namespace {

// the six monomials of E, reused (with c powers) by D, F and H
constexpr std::array<int, 6> kAlpha{2, 0, 1, 1, 0, 0};
constexpr std::array<int, 6> kBeta{0, 1, 1, 2, 0, 1};
constexpr std::array<int, 6> kGamma{1, 1, 0, 3, 0, 0};
constexpr std::array<int, 6> kDelta{1, 0, 1, 2, 0, 0};
constexpr std::array<int, 6> kEps{1, 1, 1, 0, 1, 0};
constexpr std::array<int, 6> kPhi{1, 1, 1, 1, 0, 1};

// ladder terms of eps1 and eps2
constexpr std::array<int, 6> kT2{1, -1, 0, 0, 0, 0};
constexpr std::array<int, 6> kT4{1, -2, 1, -1, 0, 0};
constexpr std::array<int, 6> kT6{1, -2, 1, -2, 1, -1};
constexpr std::array<int, 6> kS3{0, 3, -1, 0, 0, 0};
constexpr std::array<int, 6> kS5{0, 3, -2, 3, -1, 0};

}  // namespace

const MonomialSum& poly_E() {
  static const MonomialSum p{{1, 0, kAlpha}, {1, 0, kBeta}, {1, 0, kGamma},
                             {1, 0, kDelta}, {1, 0, kEps},  {1, 0, kPhi}};
  return p;
}

const MonomialSum& poly_D() {
  static const MonomialSum p{{1, 2, kAlpha}, {1, 0, kBeta}, {1, 1, kGamma},
                             {1, 1, kDelta}, {1, 1, kEps},  {1, 1, kPhi}};
  return p;
}

const MonomialSum& poly_F() {
  static const MonomialSum p{{1, 1, kAlpha}, {1, 0, kBeta}, {1, 1, kGamma},
                             {1, 0, kDelta}, {1, 1, kEps},  {1, 1, kPhi}};
  return p;
}

const MonomialSum& poly_H() {
  static const MonomialSum p{{1, 1, kAlpha}, {1, 0, kBeta}, {1, 0, kGamma},
                             {1, 0, kDelta}, {1, 0, kEps},  {1, 1, kPhi}};
  return p;
}

const MonomialSum& poly_G() {
  static const MonomialSum p{
      {1, 3, {6, 0, 3, 3, 0, 0}},  {3, 2, {5, 0, 3, 4, 0, 0}},
      {3, 2, {5, 1, 2, 5, 0, 0}},  {3, 1, {4, 0, 3, 5, 0, 0}},
      {6, 1, {4, 1, 2, 6, 0, 0}},  {1, 0, {3, 0, 3, 6, 0, 0}},
      {3, 1, {4, 2, 1, 7, 0, 0}},  {3, 0, {3, 1, 2, 7, 0, 0}},
      {3, 0, {3, 2, 1, 8, 0, 0}},  {1, 0, {3, 3, 0, 9, 0, 0}},
      {3, 3, {5, 1, 3, 2, 1, 0}},  {6, 2, {4, 1, 3, 3, 1, 0}},
      {3, 1, {4, 2, 2, 4, 1, 0}},  {3, 3, {4, 2, 2, 4, 1, 0}},
      {3, 1, {3, 1, 3, 4, 1, 0}},  {3, 0, {3, 2, 2, 5, 1, 0}},
      {3, 2, {3, 2, 2, 5, 1, 0}},  {2, 0, {3, 3, 1, 6, 1, 0}},
      {1, 3, {3, 3, 1, 6, 1, 0}},  {3, 3, {4, 2, 3, 1, 2, 0}},
      {3, 2, {3, 2, 3, 2, 2, 0}},  {1, 0, {3, 3, 2, 3, 2, 0}},
      {2, 3, {3, 3, 2, 3, 2, 0}},  {1, 3, {3, 3, 3, 0, 3, 0}},
      {3, 3, {5, 1, 3, 3, 0, 1}},  {9, 2, {4, 1, 3, 4, 0, 1}},
      {6, 2, {4, 2, 2, 5, 0, 1}},  {9, 1, {3, 1, 3, 5, 0, 1}},
      {12, 1, {3, 2, 2, 6, 0, 1}}, {3, 0, {2, 1, 3, 6, 0, 1}},
      {3, 1, {3, 3, 1, 7, 0, 1}},  {6, 0, {2, 2, 2, 7, 0, 1}},
      {3, 0, {2, 3, 1, 8, 0, 1}},  {6, 3, {4, 2, 3, 2, 1, 1}},
      {12, 2, {3, 2, 3, 3, 1, 1}}, {3, 1, {3, 3, 2, 4, 1, 1}},
      {3, 3, {3, 3, 2, 4, 1, 1}},  {6, 1, {2, 2, 3, 4, 1, 1}},
      {3, 0, {2, 3, 2, 5, 1, 1}},  {3, 2, {2, 3, 2, 5, 1, 1}},
      {3, 3, {3, 3, 3, 1, 2, 1}},  {3, 2, {2, 3, 3, 2, 2, 1}},
      {3, 3, {4, 2, 3, 3, 0, 2}},  {9, 2, {3, 2, 3, 4, 0, 2}},
      {3, 2, {3, 3, 2, 5, 0, 2}},  {9, 1, {2, 2, 3, 5, 0, 2}},
      {6, 1, {2, 3, 2, 6, 0, 2}},  {3, 0, {1, 2, 3, 6, 0, 2}},
      {3, 0, {1, 3, 2, 7, 0, 2}},  {3, 3, {3, 3, 3, 2, 1, 2}},
      {6, 2, {2, 3, 3, 3, 1, 2}},  {3, 1, {1, 3, 3, 4, 1, 2}},
      {1, 3, {3, 3, 3, 3, 0, 3}},  {3, 2, {2, 3, 3, 4, 0, 3}},
      {3, 1, {1, 3, 3, 5, 0, 3}},  {1, 0, {0, 3, 3, 6, 0, 3}}};
  return p;
}

const Ratio& c_ratio(int j) {
  static const Ratio c1{{{1, 1, kT2}, {1, 0, kT4}, {1, 0, kT6}},
                        {{1, 0, kT2}, {1, 0, kT4}, {1, 0, kT6}}};
  static const Ratio c3{{{1, 1, kT2}, {1, 1, kT4}, {1, 0, kT6}},
                        {{1, 1, kT2}, {1, 0, kT4}, {1, 0, kT6}}};
  static const Ratio c5{{{1, 1, kT2}, {1, 1, kT4}, {1, 1, kT6}},
                        {{1, 1, kT2}, {1, 1, kT4}, {1, 0, kT6}}};
  static const Ratio c2{{{1, 1, kS3}, {1, 0, kS5}}, {{1, 0, kS3}, {1, 0, kS5}}};
  static const Ratio c4{{{1, 1, kS3}, {1, 1, kS5}}, {{1, 1, kS3}, {1, 0, kS5}}};
  switch (j) {
    case 1: return c1;
    case 2: return c2;
    case 3: return c3;
    case 4: return c4;
    case 5: return c5;
  }
  throw std::out_of_range("c_ratio: j in 1..5");
}

const Ratio& eps_ratio(int i) {
  static const Ratio e0{poly_E(), {{1, 0, {3, 0, 1, 1, 0, 0}}}};
  static const Ratio e1{{{1, 0, kT2}, {1, 0, kT4}, {1, 0, kT6}},
                        {{1, 0, {0, 0, 0, 0, 0, 0}}}};
  static const Ratio e2{{{1, 0, kS3}, {1, 0, kS5}}, {{1, 0, {0, 0, 0, 0, 0, 0}}}};
  switch (i) {
    case 0: return e0;
    case 1: return e1;
    case 2: return e2;
  }
  throw std::out_of_range("eps_ratio: i in 0..2");
}

const Ratio& gamma_ratio(int i) {
  static const Ratio g0{{{1, 0, {2, -1, 0, -1, 0, -1}}},
                        {{1, 0, {0, 0, 0, 0, 0, 0}}}};
  static const Ratio g1{{{1, 0, {-1, 2, -1, 2, -1, 2}}},
                        {{1, 0, {0, 0, 0, 0, 0, 0}}}};
  static const Ratio g2{{{1, 0, {0, -3, 2, -3, 2, -3}}},
                        {{1, 0, {0, 0, 0, 0, 0, 0}}}};
  switch (i) {
    case 0: return g0;
    case 1: return g1;
    case 2: return g2;
  }
  throw std::out_of_range("gamma_ratio: i in 0..2");
}

Rat eval(const MonomialSum& p, const Rat& c, const std::array<Rat, 6>& x) {
  Rat out = 0;
  for (const auto& m : p) {
    Rat v = m.coeff;
    v *= rat_pow(c, m.cexp);
    for (int k = 0; k < 6; ++k)
      if (m.xexp[k] != 0) v *= rat_pow(x[k], m.xexp[k]);
    out += v;
  }
  return out;
}

Rat eval(const Ratio& r, const Rat& c, const std::array<Rat, 6>& x) {
  return eval(r.num, c, x) / eval(r.den, c, x);
}

trop::PosExpr to_expr(const MonomialSum& p) {
  using trop::PosExpr;
  std::vector<PosExpr> terms;
  for (const auto& m : p) {
    std::vector<PosExpr> fac;
    if (m.coeff != 1) fac.push_back(PosExpr::constant(Rat(m.coeff)));
    if (m.cexp != 0) fac.push_back(PosExpr::power(PosExpr::variable("c"), m.cexp));
    for (int k = 0; k < 6; ++k)
      if (m.xexp[k] != 0)
        fac.push_back(
            PosExpr::power(PosExpr::variable("x" + std::to_string(k)), m.xexp[k]));
    if (fac.empty()) fac.push_back(PosExpr::constant(Rat(1)));
    terms.push_back(PosExpr::product(std::move(fac)));
  }
  return PosExpr::sum(std::move(terms));
}

trop::PosExpr to_expr(const Ratio& r) {
  return trop::PosExpr::quotient(to_expr(r.num), to_expr(r.den));
}

std::vector<std::string> names() {
  return {"C1",   "C2",   "C3",   "C4",     "C5",     "D",      "E",      "F",
          "G",    "H",    "eps0", "eps1",   "eps2",   "gamma0", "gamma1", "gamma2"};
}

trop::PosExpr expr(const std::string& name) {
  if (name == "D") return to_expr(poly_D());
  if (name == "E") return to_expr(poly_E());
  if (name == "F") return to_expr(poly_F());
  if (name == "G") return to_expr(poly_G());
  if (name == "H") return to_expr(poly_H());
  for (int j = 1; j <= 5; ++j)
    if (name == "C" + std::to_string(j)) return to_expr(c_ratio(j));
  for (int i = 0; i < 3; ++i) {
    if (name == "eps" + std::to_string(i)) return to_expr(eps_ratio(i));
    if (name == "gamma" + std::to_string(i)) return to_expr(gamma_ratio(i));
  }
  throw std::invalid_argument("unknown formula name: " + name);
}

}  // namespace udc::formulas
