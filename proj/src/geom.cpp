#include "udc/geom.hpp"

#include <random>
#include <stdexcept>

#include "udc/formulas.hpp"

namespace udc::geom {

RatPoint RatPoint::of(const std::array<Rat, 6>& coords) {
  for (const Rat& v : coords)
    if (v <= 0) throw std::invalid_argument("RatPoint: coordinates must be positive");
  return RatPoint{coords};
}

std::string basis_name(int k) {
  static const char* names[kDim] = {"v1", "v2", "v3", "v0", "o", "vb3", "vb2", "vb1"};
  return names[k];
}

WeightVec basis_weight(int k) {
  static const WeightVec w[kDim] = {
      {{-2, 1, 0}, 0},  // v1
      {{-1, -1, 1}, 0}, // v2
      {{-1, 2, -1}, 0}, // v3
      {{0, 0, 0}, 0},   // v0
      {{0, 0, 0}, 0},   // emptyset
      {{1, -2, 1}, 0},  // vb3
      {{1, 1, -1}, 0},  // vb2
      {{2, -1, 0}, 0},  // vb1
  };
  return w[k];
}

namespace {

enum Basis { V1i = 0, V2i, V3i, V0i, Oi, Vb3i, Vb2i, Vb1i };

Matrix8 zero_matrix() {
  Matrix8 m;
  for (auto& row : m) row.fill(Rat(0));
  return m;
}

// column-action convention: m[r][c] is the coefficient of basis r in the
// image of basis c
Matrix8 build(std::initializer_list<std::tuple<int, int, Rat>> entries) {
  Matrix8 m = zero_matrix();
  for (const auto& [to, from, coeff] : entries) m[to][from] = coeff;
  return m;
}

}  // namespace

const Matrix8& rep_f(int i) {
  static const Matrix8 f0 = build({{V1i, V0i, 1},
                                   {V2i, Vb3i, 1},
                                   {V3i, Vb2i, 1},
                                   {Oi, Vb1i, 1},
                                   {V0i, Vb1i, Rat(1) / 2},
                                   {V1i, Oi, Rat(3) / 2}});
  static const Matrix8 f1 =
      build({{V2i, V1i, 1}, {V0i, V3i, 1}, {Vb3i, V0i, 2}, {Vb1i, Vb2i, 1}});
  static const Matrix8 f2 = build({{V3i, V2i, 1}, {Vb2i, Vb3i, 1}});
  switch (i) {
    case 0: return f0;
    case 1: return f1;
    case 2: return f2;
  }
  throw std::out_of_range("rep_f: index");
}

const Matrix8& rep_e(int i) {
  static const Matrix8 e0 = build({{Oi, V1i, 1},
                                   {V0i, V1i, Rat(1) / 2},
                                   {Vb3i, V2i, 1},
                                   {Vb2i, V3i, 1},
                                   {Vb1i, V0i, 1},
                                   {Vb1i, Oi, Rat(3) / 2}});
  static const Matrix8 e1 =
      build({{V1i, V2i, 1}, {V3i, V0i, 2}, {V0i, Vb3i, 1}, {Vb2i, Vb1i, 1}});
  static const Matrix8 e2 = build({{V2i, V3i, 1}, {Vb3i, Vb2i, 1}});
  switch (i) {
    case 0: return e0;
    case 1: return e1;
    case 2: return e2;
  }
  throw std::out_of_range("rep_e: index");
}

namespace {

Matrix8 mat_mul(const Matrix8& a, const Matrix8& b) {
  Matrix8 r = zero_matrix();
  for (int i = 0; i < kDim; ++i)
    for (int k = 0; k < kDim; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < kDim; ++j)
        if (b[k][j] != 0) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Vector8 mat_apply(const Matrix8& a, const Vector8& v) {
  Vector8 r;
  r.fill(Rat(0));
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      if (a[i][j] != 0 && v[j] != 0) r[i] += a[i][j] * v[j];
  return r;
}

}  // namespace

Matrix8 Y(int i, const Rat& c) {
  if (c == 0) throw std::invalid_argument("Y: c must be nonzero");
  const Matrix8& fi = rep_f(i);
  Matrix8 u = zero_matrix();
  for (int k = 0; k < kDim; ++k) u[k][k] = 1;
  for (int r = 0; r < kDim; ++r)
    for (int col = 0; col < kDim; ++col)
      if (fi[r][col] != 0) u[r][col] += fi[r][col] / c;
  if (i != 2) {
    Matrix8 f2m = mat_mul(fi, fi);
    for (int r = 0; r < kDim; ++r)
      for (int col = 0; col < kDim; ++col)
        if (f2m[r][col] != 0) u[r][col] += f2m[r][col] / (2 * c * c);
  }
  // right-multiply by alpha_i^vee(c): scale column k by c^{<alpha_i^vee, wt_k>}
  for (int col = 0; col < kDim; ++col) {
    Rat scale = rat_pow(c, coroot_pairing(i, basis_weight(col)));
    for (int r = 0; r < kDim; ++r) u[r][col] *= scale;
  }
  return u;
}

Vector8 V1(const RatPoint& p) {
  Vector8 v;
  v.fill(Rat(0));
  v[V1i] = 1;
  static const int word[6] = {0, 1, 2, 1, 2, 1};
  for (int k = 5; k >= 0; --k) v = mat_apply(Y(word[k], p.x[k]), v);
  return v;
}

std::vector<Rat> schubert_C(std::span<const int> word, const CartanMatrix& A,
                            int i, const Rat& c, std::span<const Rat> cs) {
  if (word.size() != cs.size())
    throw std::invalid_argument("schubert_C: word/coordinate length mismatch");
  const std::size_t k = word.size();
  bool occurs = false;
  for (std::size_t m = 0; m < k; ++m) occurs |= word[m] == i;
  std::vector<Rat> out(cs.begin(), cs.end());
  if (!occurs) return out;  // e_i acts trivially
  // term(m) = 1 / (c_1^{a_{i1,i}} ... c_{m-1}^{a_{i(m-1),i}} c_m)
  std::vector<Rat> term(k, Rat(0));
  Rat prefix = 1;
  for (std::size_t m = 0; m < k; ++m) {
    if (word[m] == i) term[m] = Rat(1) / (prefix * cs[m]);
    prefix *= rat_pow(cs[m], A[word[m]][i]);
  }
  for (std::size_t j = 0; j < k; ++j) {
    Rat num = 0, den = 0;
    for (std::size_t m = 0; m < k; ++m) {
      if (word[m] != i) continue;
      num += (m <= j) ? c * term[m] : term[m];
      den += (m < j) ? c * term[m] : term[m];
    }
    out[j] = cs[j] * num / den;
  }
  return out;
}

Rat schubert_eps(std::span<const int> word, const CartanMatrix& A, int i,
                 std::span<const Rat> cs) {
  Rat out = 0, prefix = 1;
  for (std::size_t m = 0; m < word.size(); ++m) {
    if (word[m] == i) out += Rat(1) / (prefix * cs[m]);
    prefix *= rat_pow(cs[m], A[word[m]][i]);
  }
  return out;
}

Rat schubert_gamma(std::span<const int> word, const CartanMatrix& A, int i,
                   std::span<const Rat> cs) {
  Rat out = 1;
  for (std::size_t m = 0; m < word.size(); ++m)
    out *= rat_pow(cs[m], A[word[m]][i]);
  return out;
}

RatPoint e_act(int i, const Rat& c, const RatPoint& p) {
  if (c <= 0) throw std::invalid_argument("e_act: c must be positive");
  namespace fm = udc::formulas;
  std::array<Rat, 6> x = p.x;
  switch (i) {
    case 1:
      x[1] *= fm::eval(fm::c_ratio(1), c, p.x);
      x[3] *= fm::eval(fm::c_ratio(3), c, p.x);
      x[5] *= fm::eval(fm::c_ratio(5), c, p.x);
      break;
    case 2:
      x[2] *= fm::eval(fm::c_ratio(2), c, p.x);
      x[4] *= fm::eval(fm::c_ratio(4), c, p.x);
      break;
    case 0: {
      Rat D = fm::eval(fm::poly_D(), c, p.x), E = fm::eval(fm::poly_E(), c, p.x),
          F = fm::eval(fm::poly_F(), c, p.x), G = fm::eval(fm::poly_G(), c, p.x),
          H = fm::eval(fm::poly_H(), c, p.x);
      x[0] *= D / (c * E);
      x[1] *= F / (c * E);
      x[2] *= G / (c * c * c * E * E * E);
      x[3] *= D * H / (c * c * E * F);
      x[4] *= D * D * D / (c * c * c * G);
      x[5] *= D / (c * H);
      break;
    }
    default: throw std::out_of_range("e_act: index");
  }
  return RatPoint::of(x);
}

Rat eps_geom(int i, const RatPoint& p) {
  return formulas::eval(formulas::eps_ratio(i), Rat(1), p.x);
}

Rat gamma_geom(int i, const RatPoint& p) {
  return formulas::eval(formulas::gamma_ratio(i), Rat(1), p.x);
}

Rat random_rat(unsigned seed, int stream) {
  std::mt19937 rng(seed * 1000003u + static_cast<unsigned>(stream));
  unsigned a = rng() % 7u + 1u, b = rng() % 7u + 1u;
  return Rat(a) / Rat(b);
}

RatPoint random_point(unsigned seed, int stream) {
  std::array<Rat, 6> x;
  for (int k = 0; k < 6; ++k) x[k] = random_rat(seed, stream * 8 + k);
  return RatPoint::of(x);
}

nlohmann::json GeomReport::to_json() const {
  nlohmann::json viol = nlohmann::json::array();
  for (const auto& v : violations)
    viol.push_back({{"check", v.check}, {"sample", v.sample}, {"details", v.details}});
  return {{"samples", samples},
          {"seed", seed},
          {"violations", viol},
          {"notes", notes},
          {"pass", pass()}};
}

namespace {

RatPoint six_factor(int i, int j, const Rat& c1, const Rat& c2, const RatPoint& p) {
  // e_i^{c1} e_j^{c1^3 c2} e_i^{c1^2 c2} e_j^{c1^3 c2^2} e_i^{c1 c2} e_j^{c2}
  RatPoint y = e_act(j, c2, p);
  y = e_act(i, c1 * c2, y);
  y = e_act(j, c1 * c1 * c1 * c2 * c2, y);
  y = e_act(i, c1 * c1 * c2, y);
  y = e_act(j, c1 * c1 * c1 * c2, y);
  return e_act(i, c1, y);
}

RatPoint six_factor_rev(int i, int j, const Rat& c1, const Rat& c2,
                        const RatPoint& p) {
  RatPoint y = e_act(i, c1, p);
  y = e_act(j, c1 * c1 * c1 * c2, y);
  y = e_act(i, c1 * c1 * c2, y);
  y = e_act(j, c1 * c1 * c1 * c2 * c2, y);
  y = e_act(i, c1 * c2, y);
  return e_act(j, c2, y);
}

}  // namespace

GeomReport axioms_check(int samples, unsigned seed) {
  if (samples < 1) throw std::invalid_argument("axioms_check: samples >= 1");
  GeomReport rep;
  rep.samples = samples;
  rep.seed = seed;
  const CartanMatrix A = cartan_matrix(Algebra::D4_3);
  bool orient12_ok = true, orient21_ok = true;
  for (int k = 0; k < samples; ++k) {
    RatPoint x = random_point(seed, 3 * k);
    Rat c1 = random_rat(seed, 3 * k + 1), c2 = random_rat(seed, 3 * k + 2);
    for (int i = 0; i < 3; ++i) {
      if (!(e_act(i, Rat(1), x) == x))
        rep.violations.push_back({"unit-action", k, "i=" + std::to_string(i)});
      if (!(e_act(i, c1, e_act(i, c2, x)) == e_act(i, c1 * c2, x)))
        rep.violations.push_back({"action-multiplicativity", k,
                                  "i=" + std::to_string(i)});
      RatPoint y = e_act(i, c1, x);
      for (int j = 0; j < 3; ++j) {
        if (gamma_geom(j, y) != rat_pow(c1, A[i][j]) * gamma_geom(j, x))
          rep.violations.push_back(
              {"gamma-scaling", k,
               "i=" + std::to_string(i) + " j=" + std::to_string(j)});
      }
      if (eps_geom(i, y) != eps_geom(i, x) / c1)
        rep.violations.push_back({"eps-scaling", k, "i=" + std::to_string(i)});
    }
    // a_{02} = a_{20} = 0: commutation and eps invariance
    if (!(e_act(0, c1, e_act(2, c2, x)) == e_act(2, c2, e_act(0, c1, x))))
      rep.violations.push_back({"commute-0-2", k, ""});
    if (eps_geom(0, e_act(2, c1, x)) != eps_geom(0, x))
      rep.violations.push_back({"eps0-invariance-under-e2", k, ""});
    if (eps_geom(2, e_act(0, c1, x)) != eps_geom(2, x))
      rep.violations.push_back({"eps2-invariance-under-e0", k, ""});
    // a_{01} = a_{10} = -1 relation
    if (!(e_act(0, c1, e_act(1, c1 * c2, e_act(0, c2, x))) ==
          e_act(1, c2, e_act(0, c1 * c2, e_act(1, c1, x)))))
      rep.violations.push_back({"braid-0-1", k, ""});
    // a_{ij} = -3, a_{ji} = -1 six-factor relation, both orientations
    orient12_ok &= six_factor(1, 2, c1, c2, x) == six_factor_rev(1, 2, c1, c2, x);
    orient21_ok &= six_factor(2, 1, c1, c2, x) == six_factor_rev(2, 1, c1, c2, x);
  }
  if (!orient12_ok)
    rep.violations.push_back(
        {"six-factor-1-2", -1, "relation fails with (i,j)=(1,2)"});
  rep.notes.push_back(std::string("six-factor orientation (i,j)=(1,2): ") +
                      (orient12_ok ? "holds" : "fails"));
  rep.notes.push_back(std::string("six-factor orientation (i,j)=(2,1): ") +
                      (orient21_ok ? "holds" : "fails"));
  return rep;
}

}  // namespace udc::geom
