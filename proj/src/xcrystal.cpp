#include "udc/xcrystal.hpp"

#include <algorithm>
#include <stdexcept>

#include "udc/formulas.hpp"

namespace udc {

GreekCombos combos(const XPoint& p) {
  const auto& x = p.x;
  return {2 * x[0] + x[2] + x[3],
          x[1] + x[2] + 2 * x[3] + x[5],
          x[0] + x[1] + 3 * x[3],
          x[0] + x[2] + 2 * x[3],
          x[0] + x[1] + x[2] + x[4],
          x[0] + x[1] + x[2] + x[3] + x[5]};
}

int wt_i(int i, const XPoint& p) {
  const auto& x = p.x;
  switch (i) {
    case 0: return 2 * x[0] - x[1] - x[3] - x[5];
    case 1: return 2 * (x[1] + x[3] + x[5]) - x[0] - x[2] - x[4];
    case 2: return 2 * (x[2] + x[4]) - 3 * (x[1] + x[3] + x[5]);
  }
  throw std::out_of_range("wt_i: index");
}

int eps_i(int i, const XPoint& p) {
  const auto& x = p.x;
  switch (i) {
    case 0: {
      GreekCombos g = combos(p);
      return std::max({g.alpha, g.beta, g.gamma, g.delta, g.epsilon, g.phi}) -
             (3 * x[0] + x[2] + x[3]);
    }
    case 1:
      return std::max({x[0] - x[1], x[0] + x[2] - 2 * x[1] - x[3],
                       x[0] + x[2] + x[4] - 2 * x[1] - 2 * x[3] - x[5]});
    case 2:
      return std::max(3 * x[1] - x[2], 3 * x[1] + 3 * x[3] - 2 * x[2] - x[4]);
  }
  throw std::out_of_range("eps_i: index");
}

// --------------------------------------------------- generated operator data

namespace {

struct FlatTerm {
  long long k;              // constant (zero for these forms)
  int cn;                   // coefficient of the tropical parameter
  std::array<int, 6> xs;    // coefficients of x0..x5
};

struct FlatMax {
  std::vector<FlatTerm> terms;
  long long eval(int n, const std::array<int, 6>& x) const {
    long long best = 0;
    bool first = true;
    for (const auto& t : terms) {
      long long v = t.k + static_cast<long long>(t.cn) * n;
      for (int j = 0; j < 6; ++j) v += static_cast<long long>(t.xs[j]) * x[j];
      if (first || v > best) best = v;
      first = false;
    }
    return best;
  }
};

struct FlatRatio {
  FlatMax num, den;
  int delta(int n, const std::array<int, 6>& x) const {
    return static_cast<int>(num.eval(n, x) - den.eval(n, x));
  }
};

FlatMax flatten(const std::vector<trop::TropTerm>& terms) {
  FlatMax out;
  for (const auto& t : terms) {
    FlatTerm ft{t.constant, 0, {0, 0, 0, 0, 0, 0}};
    for (const auto& [v, e] : t.exps) {
      if (v == "c") {
        ft.cn = e;
      } else if (v.size() == 2 && v[0] == 'x' && v[1] >= '0' && v[1] <= '5') {
        ft.xs[v[1] - '0'] = e;
      } else {
        throw std::logic_error("unexpected variable in operator form: " + v);
      }
    }
    out.terms.push_back(ft);
  }
  return out;
}

struct Forms {
  trop::TropRat rats[11];  // C1,C3,C5, C2,C4, m0..m5
  FlatRatio flat[11];
};

// The operator increments: UD of the geometric coordinate multipliers.  For
// index 1 these are C1, C3, C5; for index 2 C2, C4; for index 0 the six
// ratios D/(cE), F/(cE), G/(c^3 E^3), DH/(c^2 EF), D^3/(c^3 G), D/(cH).
const Forms& forms() {
  static const Forms f = [] {
    using trop::PosExpr;
    namespace fm = udc::formulas;
    Forms out;
    auto c = [] { return PosExpr::variable("c"); };
    PosExpr D = fm::to_expr(fm::poly_D()), E = fm::to_expr(fm::poly_E()),
            F = fm::to_expr(fm::poly_F()), G = fm::to_expr(fm::poly_G()),
            H = fm::to_expr(fm::poly_H());
    std::vector<PosExpr> exprs;
    exprs.push_back(fm::to_expr(fm::c_ratio(1)));
    exprs.push_back(fm::to_expr(fm::c_ratio(3)));
    exprs.push_back(fm::to_expr(fm::c_ratio(5)));
    exprs.push_back(fm::to_expr(fm::c_ratio(2)));
    exprs.push_back(fm::to_expr(fm::c_ratio(4)));
    exprs.push_back(PosExpr::quotient(D, PosExpr::product({c(), E})));
    exprs.push_back(PosExpr::quotient(F, PosExpr::product({c(), E})));
    exprs.push_back(PosExpr::quotient(
        G, PosExpr::product({PosExpr::power(c(), 3), PosExpr::power(E, 3)})));
    exprs.push_back(PosExpr::quotient(
        PosExpr::product({D, H}),
        PosExpr::product({PosExpr::power(c(), 2), E, F})));
    exprs.push_back(PosExpr::quotient(
        PosExpr::power(D, 3), PosExpr::product({PosExpr::power(c(), 3), G})));
    exprs.push_back(PosExpr::quotient(D, PosExpr::product({c(), H})));
    for (int k = 0; k < 11; ++k) {
      out.rats[k] = trop::simplify(trop::ud(exprs[static_cast<std::size_t>(k)]));
      out.flat[k] = FlatRatio{flatten(out.rats[k].num), flatten(out.rats[k].den)};
    }
    return out;
  }();
  return f;
}

}  // namespace

const trop::TropRat& generated_form(int i, int slot) {
  const Forms& f = forms();
  if (i == 1 && slot >= 0 && slot < 3) return f.rats[slot];
  if (i == 2 && slot >= 0 && slot < 2) return f.rats[3 + slot];
  if (i == 0 && slot >= 0 && slot < 6) return f.rats[5 + slot];
  throw std::out_of_range("generated_form: bad (i, slot)");
}

XPoint act(int i, int n, const XPoint& p) {
  const Forms& f = forms();
  XPoint q = p;
  switch (i) {
    case 1:
      q.x[1] += f.flat[0].delta(n, p.x);
      q.x[3] += f.flat[1].delta(n, p.x);
      q.x[5] += f.flat[2].delta(n, p.x);
      return q;
    case 2:
      q.x[2] += f.flat[3].delta(n, p.x);
      q.x[4] += f.flat[4].delta(n, p.x);
      return q;
    case 0:
      for (int k = 0; k < 6; ++k) q.x[k] += f.flat[5 + k].delta(n, p.x);
      return q;
  }
  throw std::out_of_range("act: index");
}

// ------------------------------------------------------- closed-form checks

namespace closed_form {

int xi(int j, const XPoint& p) {
  const auto& x = p.x;
  int A = x[0] - x[1];
  int B = x[0] + x[2] - 2 * x[1] - x[3];
  int C = x[0] + x[2] + x[4] - 2 * x[1] - 2 * x[3] - x[5];
  int L = 3 * x[1] - x[2];
  int M = 3 * x[1] + 3 * x[3] - 2 * x[2] - x[4];
  switch (j) {
    case 1: return std::max({A - 1, B, C}) - std::max({A, B, C});
    case 3: return std::max({A - 1, B - 1, C}) - std::max({A - 1, B, C});
    case 5: return std::max({A - 1, B - 1, C - 1}) - std::max({A - 1, B - 1, C});
    case 2: return std::max(L - 1, M) - std::max(L, M);
    case 4: return std::max(L - 1, M - 1) - std::max(L - 1, M);
  }
  throw std::out_of_range("closed_form::xi: j");
}

namespace {
int twelve_term(const GreekCombos& g) {
  return std::max({-3 + 3 * g.alpha, 3 * g.beta, 3 * g.gamma, 3 * g.delta,
                   -3 + 3 * g.epsilon, -3 + 3 * g.phi,
                   -1 + g.alpha + g.gamma + g.epsilon,
                   g.gamma + g.delta + g.epsilon, g.gamma + 2 * g.epsilon,
                   2 * g.gamma + g.epsilon, -1 + g.gamma + g.epsilon + g.phi,
                   g.beta + g.gamma + g.epsilon});
}
}  // namespace

int psi(int j, const XPoint& p) {
  GreekCombos g = combos(p);
  int m = std::max({g.alpha, g.beta, g.gamma, g.delta, g.epsilon, g.phi});
  int mD = std::max({-2 + g.alpha, g.beta, -1 + g.gamma, -1 + g.delta,
                     -1 + g.epsilon, -1 + g.phi});
  int mF = std::max({-1 + g.alpha, g.beta, -1 + g.gamma, g.delta,
                     -1 + g.epsilon, -1 + g.phi});
  int mH = std::max(
      {-1 + g.alpha, g.beta, g.gamma, g.delta, g.epsilon, -1 + g.phi});
  switch (j) {
    case 0: return mD - m + 1;
    case 1: return mF - m + 1;
    case 2: return twelve_term(g) - 3 * m + 3;
    case 3: return mD + mH - m - mF + 2;
    case 4: return 3 * mD - twelve_term(g) + 3;
    case 5: return mD - mH + 1;
  }
  throw std::out_of_range("closed_form::psi: j");
}

int psi5_plus_alpha(const XPoint& p) {
  GreekCombos g = combos(p);
  int mD = std::max({-2 + g.alpha, g.beta, -1 + g.gamma, -1 + g.delta,
                     -1 + g.epsilon, -1 + g.phi});
  int alt = std::max(
      {1 + g.alpha, g.beta, g.gamma, g.delta, g.epsilon, -1 + g.phi});
  return mD - alt + 1;
}

}  // namespace closed_form

Psi5Resolution resolve_psi5(int radius) {
  Psi5Resolution r;
  XPoint p;
  std::array<int, 6>& x = p.x;
  x.fill(-radius);
  while (true) {
    int gen = act(0, -1, p).x[5] - p.x[5];
    if (closed_form::psi(5, p) != gen)
      throw std::logic_error("psi5 closed form deviates from generated operator");
    if (r.plus_alpha_agrees && closed_form::psi5_plus_alpha(p) != gen) {
      r.plus_alpha_agrees = false;
      r.counterexample = p;
      r.variant_value = closed_form::psi5_plus_alpha(p);
      r.generated_value = gen;
    }
    int k = 0;
    for (; k < 6; ++k) {
      if (x[k] < radius) {
        ++x[k];
        break;
      }
      x[k] = -radius;
    }
    if (k == 6) break;
  }
  return r;
}

nlohmann::json Psi5Resolution::to_json() const {
  nlohmann::json j;
  j["plus_alpha_agrees"] = plus_alpha_agrees;
  if (counterexample) {
    j["counterexample"] = counterexample->x;
    j["variant_value"] = variant_value;
    j["generated_value"] = generated_value;
  }
  return j;
}

nlohmann::json to_json(const XPoint& p) { return {{"x", p.x}}; }

XPoint xpoint_from_json(const nlohmann::json& j) {
  const auto& arr = j.at("x");
  if (!arr.is_array() || arr.size() != 6)
    throw std::invalid_argument("XPoint json: x must be a 6-array");
  XPoint p;
  for (int k = 0; k < 6; ++k) p.x[k] = arr[k].get<int>();
  return p;
}

std::string to_string(const XPoint& p) {
  std::string out = "(";
  for (int k = 0; k < 6; ++k) {
    if (k) out += ",";
    out += std::to_string(p.x[k]);
  }
  return out + ")";
}

}  // namespace udc
