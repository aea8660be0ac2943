#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "udc/cartan.hpp"
#include "udc/rat.hpp"

// Exact-rational model of the degree-8 geometric crystal: the fundamental
// representation, the matrices Y_i(c), the torus actions e_i^c with their
// eps_i / gamma_i, the generic unipotent-word formulas, and the axiom
// checker.
namespace udc::geom {

// strictly positive point of the torus chart
struct RatPoint {
  std::array<Rat, 6> x;
  static RatPoint of(const std::array<Rat, 6>& coords);
  bool operator==(const RatPoint&) const = default;
};

using Vector8 = std::array<Rat, 8>;
using Matrix8 = std::array<std::array<Rat, 8>, 8>;

// basis order: v1, v2, v3, v0, emptyset, vb3, vb2, vb1
constexpr int kDim = 8;
std::string basis_name(int k);
WeightVec basis_weight(int k);

const Matrix8& rep_f(int i);
const Matrix8& rep_e(int i);

Matrix8 Y(int i, const Rat& c);  // (1 + f/c [+ f^2/(2c^2)]) alpha_i^vee(c)

Vector8 V1(const RatPoint& p);  // Y0(x0)Y1(x1)Y2(x2)Y1(x3)Y2(x4)Y1(x5) v1

// Generic unipotent-word action/statistics on Y_{i1}(c1)...Y_{ik}(ck).
std::vector<Rat> schubert_C(std::span<const int> word, const CartanMatrix& A,
                            int i, const Rat& c, std::span<const Rat> cs);
Rat schubert_eps(std::span<const int> word, const CartanMatrix& A, int i,
                 std::span<const Rat> cs);
Rat schubert_gamma(std::span<const int> word, const CartanMatrix& A, int i,
                   std::span<const Rat> cs);

// The transcribed torus actions (index 0 via the D,E,F,G,H polynomials).
RatPoint e_act(int i, const Rat& c, const RatPoint& p);
Rat eps_geom(int i, const RatPoint& p);
Rat gamma_geom(int i, const RatPoint& p);

struct GeomViolation {
  std::string check;
  int sample = -1;
  std::string details;
};

struct GeomReport {
  int samples = 0;
  unsigned seed = 0;
  std::vector<GeomViolation> violations;
  std::vector<std::string> notes;
  bool pass() const { return violations.empty(); }
  nlohmann::json to_json() const;
};

// Seeded sweep of the geometric-crystal axioms at random positive rational
// points (numerators and denominators bounded by 7): the C*-action property
// for every index, gamma scaling for all index pairs, eps scaling and
// invariance, commutation for the orthogonal pair, and the rank-2
// relations; the orientation of the six-factor relation is determined
// empirically and recorded in notes.
GeomReport axioms_check(int samples, unsigned seed);

// deterministic sampling helpers shared with the verification suites
Rat random_rat(unsigned seed, int stream);
RatPoint random_point(unsigned seed, int stream);

}  // namespace udc::geom
