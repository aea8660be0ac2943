#pragma once

#include <array>
#include <compare>
#include <string>

namespace udc {

enum class Algebra { G2_1, D4_3 };

std::string to_string(Algebra a);

// Classical weight: integer coefficients over (Lambda0, Lambda1, Lambda2)
// plus a separate delta coefficient (only simple_root(.,0) carries one).
struct WeightVec {
  std::array<int, 3> lambda{0, 0, 0};
  int delta = 0;

  auto operator<=>(const WeightVec&) const = default;

  WeightVec operator+(const WeightVec& o) const {
    return {{lambda[0] + o.lambda[0], lambda[1] + o.lambda[1],
             lambda[2] + o.lambda[2]},
            delta + o.delta};
  }
  WeightVec operator-(const WeightVec& o) const {
    return {{lambda[0] - o.lambda[0], lambda[1] - o.lambda[1],
             lambda[2] - o.lambda[2]},
            delta - o.delta};
  }
  WeightVec operator-() const {
    return {{-lambda[0], -lambda[1], -lambda[2]}, -delta};
  }
  WeightVec operator*(int k) const {
    return {{k * lambda[0], k * lambda[1], k * lambda[2]}, k * delta};
  }
  // projection to the classical weight lattice (drop delta)
  WeightVec classical() const { return {lambda, 0}; }
  bool is_zero() const { return *this == WeightVec{}; }
};

std::string to_string(const WeightVec& w);

using CartanMatrix = std::array<std::array<int, 3>, 3>;

CartanMatrix cartan_matrix(Algebra a);

// expansion of alpha_i over (Lambda0, Lambda1, Lambda2, delta); i in {0,1,2}
WeightVec simple_root(Algebra a, int i);

// <alpha_i^vee, w>: reads off the Lambda_i coefficient (delta pairs to zero)
inline int coroot_pairing(int i, const WeightVec& w) { return w.lambda.at(i); }

// level <c, w> for G2_1 (c = a0 + 2 a1 + a2 on coroots); D4_3 is rejected
int level(Algebra a, const WeightVec& w);

}  // namespace udc
