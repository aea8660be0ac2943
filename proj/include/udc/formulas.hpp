#pragma once

#include <array>
#include <string>
#include <vector>

#include "udc/rat.hpp"
#include "udc/trop.hpp"

// Rational-function data of the degree-8 geometric crystal on the variety
// V1: the unipotent-action numerator/denominator sums C1..C5, the index-0
// action polynomials D, E, F, G, H, and the eps/gamma functions.  All of
// them are positive sums of Laurent monomials in c and x0..x5, so one table
// type covers everything; the geometric side evaluates the tables exactly
// over Q and the ultra-discretized side tropicalizes them.
namespace udc::formulas {

struct Monomial {
  int coeff;                 // > 0
  int cexp;                  // exponent of c
  std::array<int, 6> xexp;   // exponents of x0..x5 (may be negative)
};

using MonomialSum = std::vector<Monomial>;

struct Ratio {
  MonomialSum num, den;
};

const MonomialSum& poly_D();
const MonomialSum& poly_E();
const MonomialSum& poly_F();
const MonomialSum& poly_G();  // 56 monomials; G at c=1 equals E cubed
const MonomialSum& poly_H();

// C_j for j = 1..5 (the coordinate multipliers of the index-1/2 actions)
const Ratio& c_ratio(int j);

const Ratio& eps_ratio(int i);    // i = 0,1,2
const Ratio& gamma_ratio(int i);  // single-monomial ratios

Rat eval(const MonomialSum& p, const Rat& c, const std::array<Rat, 6>& x);
Rat eval(const Ratio& r, const Rat& c, const std::array<Rat, 6>& x);

trop::PosExpr to_expr(const MonomialSum& p);
trop::PosExpr to_expr(const Ratio& r);

// named registry: C1..C5, D, E, F, G, H, eps0..eps2, gamma0..gamma2
std::vector<std::string> names();
trop::PosExpr expr(const std::string& name);

}  // namespace udc::formulas
