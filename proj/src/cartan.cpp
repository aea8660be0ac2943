#include "udc/cartan.hpp"

#include <stdexcept>

namespace udc {

std::string to_string(Algebra a) {
  return a == Algebra::G2_1 ? "G2(1)" : "D4(3)";
}

std::string to_string(const WeightVec& w) {
  std::string out;
  auto add = [&](int c, const std::string& sym) {
    if (c == 0) return;
    if (!out.empty() && c > 0) out += "+";
    if (c == -1)
      out += "-";
    else if (c != 1)
      out += std::to_string(c) + "*";
    out += sym;
  };
  add(w.lambda[0], "L0");
  add(w.lambda[1], "L1");
  add(w.lambda[2], "L2");
  add(w.delta, "d");
  return out.empty() ? "0" : out;
}

CartanMatrix cartan_matrix(Algebra a) {
  if (a == Algebra::G2_1) return {{{2, -1, 0}, {-1, 2, -1}, {0, -3, 2}}};
  return {{{2, -1, 0}, {-1, 2, -3}, {0, -1, 2}}};
}

WeightVec simple_root(Algebra a, int i) {
  if (i < 0 || i > 2) throw std::out_of_range("simple_root: index");
  // column i of the Cartan matrix gives the Lambda coefficients;
  // alpha_0 additionally carries delta with coefficient 1.
  CartanMatrix A = cartan_matrix(a);
  WeightVec w;
  for (int j = 0; j < 3; ++j) w.lambda[j] = A[j][i];
  w.delta = (i == 0) ? 1 : 0;
  return w;
}

int level(Algebra a, const WeightVec& w) {
  if (a != Algebra::G2_1)
    throw std::invalid_argument("level: canonical central element only known for G2(1)");
  return w.lambda[0] + 2 * w.lambda[1] + w.lambda[2];
}

}  // namespace udc
