#pragma once

#include <array>
#include <optional>
#include <string>

#include "json.hpp"
#include "udc/crystal.hpp"
#include "udc/trop.hpp"

namespace udc {

// Point of the ultra-discretized crystal on Z^6.
struct XPoint {
  std::array<int, 6> x{0, 0, 0, 0, 0, 0};
  auto operator<=>(const XPoint&) const = default;
};

struct GreekCombos {
  int alpha, beta, gamma, delta, epsilon, phi;
};

// alpha = 2x0+x2+x3, beta = x1+x2+2x3+x5, gamma = x0+x1+3x3,
// delta = x0+x2+2x3, epsilon = x0+x1+x2+x4, phi = x0+x1+x2+x3+x5
GreekCombos combos(const XPoint& p);

int wt_i(int i, const XPoint& p);
int eps_i(int i, const XPoint& p);

// e_i^n with integer tropical parameter n: act(i,-1,.) is the lowering
// operator, act(i,+1,.) the raising one.  The coordinate increments are
// generated from the rational formulas via the ultra-discretization functor
// (see udc::formulas), so the maps are total on Z^6 and form a Z-action.
XPoint act(int i, int n, const XPoint& p);

// Read-only access to the generated increment forms (variables c, x0..x5);
// slot order: C1,C3,C5 for i=1; C2,C4 for i=2; the six index-0 multipliers.
const trop::TropRat& generated_form(int i, int slot);

// Hand-simplified closed forms of the increments at parameter -1, kept as an
// independent transcription and cross-checked against the generated
// operators.  xi slots j in {1..5}; psi slots j in {0..5}.
namespace closed_form {
int xi(int j, const XPoint& p);
int psi(int j, const XPoint& p);
// variant of psi5 whose second max carries "1+alpha" instead of "-1+alpha";
// kept to document which of the two candidate forms the tropicalization
// selects
int psi5_plus_alpha(const XPoint& p);
}  // namespace closed_form

struct Psi5Resolution {
  bool plus_alpha_agrees = true;           // the "1+alpha" candidate
  std::optional<XPoint> counterexample;    // where it deviates
  int variant_value = 0, generated_value = 0;
  nlohmann::json to_json() const;
};
// sweeps [-radius, radius]^6 comparing both psi5 candidates to the
// generated increment
Psi5Resolution resolve_psi5(int radius);

nlohmann::json to_json(const XPoint& p);
XPoint xpoint_from_json(const nlohmann::json& j);
std::string to_string(const XPoint& p);

// generic-crystal adapters (weights over the Lambda basis via wt_i)
inline std::optional<XPoint> crystal_f(int i, const XPoint& p) {
  return act(i, -1, p);
}
inline std::optional<XPoint> crystal_e(int i, const XPoint& p) {
  return act(i, +1, p);
}
inline ExtInt crystal_eps(int i, const XPoint& p) { return ExtInt(eps_i(i, p)); }
inline ExtInt crystal_phi(int i, const XPoint& p) {
  return ExtInt(eps_i(i, p) + wt_i(i, p));
}
inline WeightVec crystal_wt(const XPoint& p) {
  return WeightVec{{wt_i(0, p), wt_i(1, p), wt_i(2, p)}, 0};
}
inline std::string crystal_label(const XPoint& p) { return to_string(p); }
inline nlohmann::json crystal_json(const XPoint& p) { return to_json(p); }

}  // namespace udc
