#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "udc/crystal.hpp"

namespace udc {

// Element of B_l (level context) or B_infinity (limit context).
// Coordinates are stored scaled by 3, in the order
//   t = (t1, t2, t3, tb3, tb2, tb1),  value b_i = t_i / 3.
// Invariants: t1 = tb1 = 0 (mod 3); t2 = t3 and tb3 = tb2 (mod 3);
// t3 = tb3 (mod 2); in level context additionally t >= 0 and s(b) <= l.
struct BElt {
  std::array<int, 6> t{0, 0, 0, 0, 0, 0};
  std::optional<int> level;  // nullopt = B_infinity

  static BElt limit(const std::array<int, 6>& t);
  static BElt at_level(const std::array<int, 6>& t, int l);

  auto operator<=>(const BElt&) const = default;
};

// true iff t satisfies the congruence invariants (context-free part)
bool congruences_ok(const std::array<int, 6>& t);

// s(b) = b1 + b2 + (b3+tb3)/2 + tb2 + tb1; exact integer
int s(const BElt& b);

struct ZVector {
  int z1, z2, z3;
  int three_z4;  // 3*z4 = (tb3 - t3)/2, an integer by the parity invariant
};
ZVector zvec(const BElt& b);

// A = (0, z1, z1+z2, z1+z2+3z4, z1+z2+z3+3z4, 2z1+z2+z3+3z4)
std::array<int, 6> avec(const BElt& b);

enum class FCase { F1 = 1, F2, F3, F4, F5, F6 };
enum class ECase { E1 = 1, E2, E3, E4, E5, E6 };

// Case dispatch for the index-0 operators; throws std::logic_error unless
// exactly one condition holds.
FCase case_F(const BElt& b);
ECase case_E(const BElt& b);

// Kashiwara operators; nullopt encodes the absorbing result at the B_l
// boundary (a coordinate going negative or s exceeding l).  In limit
// context the operators are total.
std::optional<BElt> f(int i, const BElt& b);
std::optional<BElt> e(int i, const BElt& b);

int eps(int i, const BElt& b);
int phi(int i, const BElt& b);
WeightVec wt(const BElt& b);  // classical; Lambda_i coefficient = phi_i - eps_i

// All of B_l in lexicographic t-order.
std::vector<BElt> enumerate_level(int l);

// (B_l)_min = {(a,b,b,b,b,a) : 2a + 3b <= l}, lexicographic t-order.
std::vector<BElt> minimal_elements(int l);

struct PerfectReport {
  int level = 0;
  std::size_t size = 0;
  bool tensor_square_connected = false;          // condition (i)
  bool weight_cone_ok = false;                   // condition (ii)
  WeightVec lambda0;                             // witness for (ii)
  std::string pseudo_base = "out of scope";      // condition (iii)
  bool eps_bijective = false, phi_bijective = false;  // condition (iv)
  std::size_t minimal_count = 0, dominant_count = 0;

  bool pass() const {
    return tensor_square_connected && weight_cone_ok && eps_bijective &&
           phi_bijective;
  }
  nlohmann::json to_json() const;
};

PerfectReport perfect_check(int l);

// Dominant classical weights of level l as WeightVecs (k0+2k1+k2 = l).
std::vector<WeightVec> dominant_weights(int l);

// Image of the middle tensor factor under the coherent-family embedding
// attached to the minimal element b0 = (a,b,b,b,b,a): coordinatewise shift
// into B_infinity.  Rejects a non-minimal b0.
BElt coherent_embed(int l, const BElt& b0, const BElt& b);

nlohmann::json to_json(const BElt& b);
BElt belt_from_json(const nlohmann::json& j);
std::string to_string(const BElt& b);  // thirds with explicit denominators

// generic-crystal adapters
inline std::optional<BElt> crystal_f(int i, const BElt& b) { return f(i, b); }
inline std::optional<BElt> crystal_e(int i, const BElt& b) { return e(i, b); }
inline ExtInt crystal_eps(int i, const BElt& b) { return ExtInt(eps(i, b)); }
inline ExtInt crystal_phi(int i, const BElt& b) { return ExtInt(phi(i, b)); }
inline WeightVec crystal_wt(const BElt& b) { return wt(b); }
inline std::string crystal_label(const BElt& b) { return to_string(b); }
inline nlohmann::json crystal_json(const BElt& b) { return to_json(b); }

}  // namespace udc
