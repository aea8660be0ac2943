#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "udc/bcrystal.hpp"
#include "udc/xcrystal.hpp"

namespace udc {

// The bijection Z^6 -> B_infinity:
//   b1 = x5, b2 = x4/3 - x5, b3 = x3 - 2x4/3, bb3 = 2x2/3 - x3,
//   bb2 = x1 - x2/3, bb1 = x0 - x1.
BElt omega(const XPoint& p);
XPoint omega_inv(const BElt& b);  // requires limit context

enum class FClass { f1 = 1, f2, f3, f4, f4p, f4pp, f5, f6 };
std::string to_string(FClass c);

// Case analysis of the index-0 lowering operator on Z^6 in terms of the
// greek combinations; exactly one class holds at every point.
FClass classify_f(const XPoint& p);

struct IsoViolation {
  XPoint x;
  std::string kind;  // f-commute | e-commute | eps | wt
  int i = -1;
  std::string details;
};

struct IsoReport {
  int radius = 0;
  std::uint64_t points_checked = 0;
  std::vector<IsoViolation> violations;
  bool pass() const { return violations.empty(); }
  nlohmann::json to_json() const;
};

// Exhaustive sweep over [-radius, radius]^6: omega intertwines act(i,-1)
// with f_i and act(i,+1) with e_i, and preserves eps_i and wt_i, for
// i in {0,1,2}; exact integer equality throughout.
IsoReport verify_iso(int radius);

}  // namespace udc
