#include "udc/bcrystal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace udc {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

void validate(const std::array<int, 6>& t, const std::optional<int>& level) {
  if (!congruences_ok(t))
    throw std::invalid_argument("BElt: congruence invariants violated");
  if (level) {
    if (*level < 1) throw std::invalid_argument("BElt: level must be >= 1");
    for (int v : t)
      if (v < 0) throw std::invalid_argument("BElt: negative coordinate at level " +
                                             std::to_string(*level));
  }
  const auto& x = t;
  int num = 2 * (x[0] + x[1] + x[4] + x[5]) + (x[2] + x[3]);
  if (num % 6 != 0) throw std::logic_error("BElt: s(b) not an integer");
  if (level && num / 6 > *level)
    throw std::invalid_argument("BElt: s(b) exceeds level");
}

}  // namespace

bool congruences_ok(const std::array<int, 6>& t) {
  return mod(t[0], 3) == 0 && mod(t[5], 3) == 0 && mod(t[1] - t[2], 3) == 0 &&
         mod(t[3] - t[4], 3) == 0 && mod(t[2] - t[3], 2) == 0;
}

BElt BElt::limit(const std::array<int, 6>& t) {
  validate(t, std::nullopt);
  return BElt{t, std::nullopt};
}

BElt BElt::at_level(const std::array<int, 6>& t, int l) {
  validate(t, l);
  return BElt{t, l};
}

int s(const BElt& b) {
  const auto& t = b.t;
  int num = 2 * (t[0] + t[1] + t[4] + t[5]) + (t[2] + t[3]);
  if (num % 6 != 0) throw std::logic_error("s: non-integer");
  return num / 6;
}

ZVector zvec(const BElt& b) {
  const auto& t = b.t;
  return {(t[5] - t[0]) / 3, (t[4] - t[3]) / 3, (t[2] - t[1]) / 3,
          (t[3] - t[2]) / 2};
}

std::array<int, 6> avec(const BElt& b) {
  ZVector z = zvec(b);
  return {0,
          z.z1,
          z.z1 + z.z2,
          z.z1 + z.z2 + z.three_z4,
          z.z1 + z.z2 + z.z3 + z.three_z4,
          2 * z.z1 + z.z2 + z.z3 + z.three_z4};
}

FCase case_F(const BElt& b) {
  ZVector z = zvec(b);
  const int z1 = z.z1, z2 = z.z2, z3 = z.z3, w = z.three_z4;
  bool c[6] = {
      z1 + z2 + z3 + w <= 0 && z1 + z2 + w <= 0 && z1 + z2 <= 0 && z1 <= 0,
      z1 + z2 + z3 + w <= 0 && z2 + w <= 0 && z2 <= 0 && z1 > 0,
      z1 + z3 + w <= 0 && z3 + w <= 0 && w <= 0 && z2 > 0 && z1 + z2 > 0,
      z1 + z2 + w > 0 && z2 + w > 0 && w > 0 && z3 <= 0 && z1 + z3 <= 0,
      z1 + z2 + z3 + w > 0 && z3 + w > 0 && z3 > 0 && z1 <= 0,
      z1 + z2 + z3 + w > 0 && z1 + z3 + w > 0 && z1 + z3 > 0 && z1 > 0,
  };
  int hit = -1;
  for (int k = 0; k < 6; ++k)
    if (c[k]) {
      if (hit >= 0) throw std::logic_error("case_F: multiple cases satisfied");
      hit = k;
    }
  if (hit < 0) throw std::logic_error("case_F: no case satisfied");
  return static_cast<FCase>(hit + 1);
}

// (E_i) is (F_i) with every ">" weakened to ">=" and every "<=" sharpened
// to "<".
ECase case_E(const BElt& b) {
  ZVector z = zvec(b);
  const int z1 = z.z1, z2 = z.z2, z3 = z.z3, w = z.three_z4;
  bool c[6] = {
      z1 + z2 + z3 + w < 0 && z1 + z2 + w < 0 && z1 + z2 < 0 && z1 < 0,
      z1 + z2 + z3 + w < 0 && z2 + w < 0 && z2 < 0 && z1 >= 0,
      z1 + z3 + w < 0 && z3 + w < 0 && w < 0 && z2 >= 0 && z1 + z2 >= 0,
      z1 + z2 + w >= 0 && z2 + w >= 0 && w >= 0 && z3 < 0 && z1 + z3 < 0,
      z1 + z2 + z3 + w >= 0 && z3 + w >= 0 && z3 >= 0 && z1 < 0,
      z1 + z2 + z3 + w >= 0 && z1 + z3 + w >= 0 && z1 + z3 >= 0 && z1 >= 0,
  };
  int hit = -1;
  for (int k = 0; k < 6; ++k)
    if (c[k]) {
      if (hit >= 0) throw std::logic_error("case_E: multiple cases satisfied");
      hit = k;
    }
  if (hit < 0) throw std::logic_error("case_E: no case satisfied");
  return static_cast<ECase>(hit + 1);
}

namespace {

using Delta = std::array<int, 6>;  // in t units, order (t1,t2,t3,tb3,tb2,tb1)

Delta f0_delta(const BElt& b) {
  switch (case_F(b)) {
    case FCase::F1: return {3, 0, 0, 0, 0, 0};
    case FCase::F2: return {0, 0, 3, 3, 0, -3};
    case FCase::F3: return {0, 0, 6, 0, -3, 0};
    case FCase::F4: {
      int w = zvec(b).three_z4;
      if (w == 1) return {0, 1, 4, -2, -2, 0};
      if (w == 2) return {0, 2, 2, -4, -1, 0};
      return {0, 3, 0, -6, 0, 0};
    }
    case FCase::F5: return {3, 0, -3, -3, 0, 0};
    case FCase::F6: return {0, 0, 0, 0, 0, -3};
  }
  throw std::logic_error("f0_delta");
}

Delta e0_delta(const BElt& b) {
  switch (case_E(b)) {
    case ECase::E1: return {-3, 0, 0, 0, 0, 0};
    case ECase::E2: return {0, 0, -3, -3, 0, 3};
    case ECase::E3: {
      int w = zvec(b).three_z4;
      if (w == -1) return {0, -2, -2, 4, 1, 0};
      if (w == -2) return {0, -1, -4, 2, 2, 0};
      return {0, 0, -6, 0, 3, 0};
    }
    case ECase::E4: return {0, -3, 0, 6, 0, 0};
    case ECase::E5: return {-3, 0, 3, 3, 0, 0};
    case ECase::E6: return {0, 0, 0, 0, 0, 3};
  }
  throw std::logic_error("e0_delta");
}

Delta f1_delta(const BElt& b) {
  // u = bb2 - bb3, v = b2 - b3 (both integers)
  int u = (b.t[4] - b.t[3]) / 3, v = (b.t[1] - b.t[2]) / 3;
  if (std::max(u, 0) <= v) return {-3, 3, 0, 0, 0, 0};
  if (u <= 0 && 0 < -v) return {0, 0, -3, 3, 0, 0};
  return {0, 0, 0, 0, -3, 3};  // u > max(v,0)
}

Delta e1_delta(const BElt& b) {
  int u = (b.t[4] - b.t[3]) / 3, v = (b.t[1] - b.t[2]) / 3;
  if (u >= std::max(v, 0)) return {0, 0, 0, 0, 3, -3};
  if (u < 0 && 0 <= -v) return {0, 0, 3, -3, 0, 0};
  return {3, -3, 0, 0, 0, 0};  // max(u,0) < v
}

Delta f2_delta(const BElt& b) {
  return b.t[3] <= b.t[2] ? Delta{0, -1, 2, 0, 0, 0} : Delta{0, 0, 0, -2, 1, 0};
}

Delta e2_delta(const BElt& b) {
  return b.t[3] >= b.t[2] ? Delta{0, 0, 0, 2, -1, 0} : Delta{0, 1, -2, 0, 0, 0};
}

std::optional<BElt> step(const BElt& b, const Delta& d) {
  std::array<int, 6> t;
  for (int k = 0; k < 6; ++k) t[k] = b.t[k] + d[k];
  if (!congruences_ok(t))
    throw std::logic_error("operator result violates congruences");
  if (b.level) {
    for (int v : t)
      if (v < 0) return std::nullopt;
    BElt n{t, b.level};
    if (s(n) > *b.level) return std::nullopt;
    return n;
  }
  return BElt{t, std::nullopt};
}

}  // namespace

std::optional<BElt> f(int i, const BElt& b) {
  switch (i) {
    case 0: return step(b, f0_delta(b));
    case 1: return step(b, f1_delta(b));
    case 2: return step(b, f2_delta(b));
  }
  throw std::out_of_range("f: index");
}

std::optional<BElt> e(int i, const BElt& b) {
  switch (i) {
    case 0: return step(b, e0_delta(b));
    case 1: return step(b, e1_delta(b));
    case 2: return step(b, e2_delta(b));
  }
  throw std::out_of_range("e: index");
}

namespace {
int exact_div(int a, int d, const char* what) {
  if (a % d != 0) throw std::logic_error(std::string("non-integral: ") + what);
  return a / d;
}
}  // namespace

int eps(int i, const BElt& b) {
  const auto& t = b.t;
  switch (i) {
    case 1:
      return exact_div(t[5] + std::max(t[3] - t[4] + std::max(t[1] - t[2], 0), 0),
                       3, "eps1");
    case 2:
      return t[4] + exact_div(std::max(t[2] - t[3], 0), 2, "eps2");
    case 0: {
      ZVector z = zvec(b);
      auto A = avec(b);
      int base = -s(b) + *std::max_element(A.begin(), A.end()) -
                 (2 * z.z1 + z.z2 + z.z3 + z.three_z4);
      return base + b.level.value_or(0);
    }
  }
  throw std::out_of_range("eps: index");
}

int phi(int i, const BElt& b) {
  const auto& t = b.t;
  switch (i) {
    case 1:
      return exact_div(t[0] + std::max(t[2] - t[1] + std::max(t[4] - t[3], 0), 0),
                       3, "phi1");
    case 2:
      return t[1] + exact_div(std::max(t[3] - t[2], 0), 2, "phi2");
    case 0: {
      auto A = avec(b);
      return -s(b) + *std::max_element(A.begin(), A.end()) + b.level.value_or(0);
    }
  }
  throw std::out_of_range("phi: index");
}

WeightVec wt(const BElt& b) {
  WeightVec w;
  for (int i = 0; i < 3; ++i) w.lambda[i] = phi(i, b) - eps(i, b);
  return w;
}

std::vector<BElt> enumerate_level(int l) {
  if (l < 1) throw std::invalid_argument("enumerate_level: l >= 1 required");
  std::vector<BElt> out;
  for (int t1 = 0; t1 <= 3 * l; t1 += 3)
    for (int t2 = 0; t2 <= 3 * l; ++t2)
      for (int t3 = t2 % 3; t3 <= 6 * l; t3 += 3)
        for (int tb3 = t3 % 2; tb3 <= 6 * l; tb3 += 2)
          for (int tb2 = tb3 % 3; tb2 <= 3 * l; tb2 += 3)
            for (int tb1 = 0; tb1 <= 3 * l; tb1 += 3) {
              std::array<int, 6> t{t1, t2, t3, tb3, tb2, tb1};
              int num = 2 * (t1 + t2 + tb2 + tb1) + (t3 + tb3);
              if (num % 6 != 0 || num / 6 > l) continue;
              out.push_back(BElt{t, l});
            }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BElt> minimal_elements(int l) {
  if (l < 1) throw std::invalid_argument("minimal_elements: l >= 1 required");
  std::vector<BElt> out;
  for (int a = 0; 2 * a <= l; ++a)
    for (int tb = 0; 2 * a + tb <= l; ++tb)  // tb = 3*beta
      out.push_back(BElt::at_level({3 * a, tb, tb, tb, tb, 3 * a}, l));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeightVec> dominant_weights(int l) {
  std::vector<WeightVec> out;
  for (int k0 = 0; k0 <= l; ++k0)
    for (int k1 = 0; 2 * k1 <= l - k0; ++k1) {
      int k2 = l - k0 - 2 * k1;
      out.push_back(WeightVec{{k0, k1, k2}, 0});
    }
  std::sort(out.begin(), out.end());
  return out;
}

PerfectReport perfect_check(int l) {
  PerfectReport r;
  r.level = l;
  std::vector<BElt> B = enumerate_level(l);
  r.size = B.size();

  // (i) connectivity of B_l (x) B_l
  std::vector<Tensor<BElt, BElt>> pairs;
  pairs.reserve(B.size() * B.size());
  for (const BElt& a : B)
    for (const BElt& b : B) pairs.push_back({a, b});
  CrystalGraph g = bfs_graph(pairs, {0, 1, 2}, pairs.size() + 1);
  r.tensor_square_connected = is_connected(g);

  // (ii) a unique-weight lambda0 dominating wt(B) modulo Z>=0 cl(alpha_1),
  // cl(alpha_2)
  std::map<WeightVec, int> mult;
  for (const BElt& b : B) ++mult[wt(b)];
  WeightVec a1 = simple_root(Algebra::G2_1, 1).classical();
  WeightVec a2 = simple_root(Algebra::G2_1, 2).classical();
  for (const auto& [cand, count] : mult) {
    if (count != 1) continue;
    bool all_ok = true;
    for (const auto& [w, cnt] : mult) {
      WeightVec d = cand - w;
      int n1 = -d.lambda[0];
      int n2 = 2 * n1 - d.lambda[1];
      if (n1 < 0 || n2 < 0 || (a1 * n1 + a2 * n2) != d) {
        all_ok = false;
        break;
      }
    }
    if (all_ok) {
      r.weight_cone_ok = true;
      r.lambda0 = cand;
      break;
    }
  }

  // (iv) eps and phi restricted to minimal elements biject onto level-l
  // dominant weights
  std::vector<BElt> M = minimal_elements(l);
  r.minimal_count = M.size();
  std::vector<WeightVec> dom = dominant_weights(l);
  r.dominant_count = dom.size();
  auto image = [&](auto stat) {
    std::vector<WeightVec> im;
    for (const BElt& b : M) {
      WeightVec w;
      for (int i = 0; i < 3; ++i) w.lambda[i] = stat(i, b);
      im.push_back(w);
    }
    std::sort(im.begin(), im.end());
    return im;
  };
  auto eps_im = image([](int i, const BElt& b) { return eps(i, b); });
  auto phi_im = image([](int i, const BElt& b) { return phi(i, b); });
  r.eps_bijective =
      eps_im == dom &&
      std::adjacent_find(eps_im.begin(), eps_im.end()) == eps_im.end();
  r.phi_bijective =
      phi_im == dom &&
      std::adjacent_find(phi_im.begin(), phi_im.end()) == phi_im.end();
  return r;
}

nlohmann::json PerfectReport::to_json() const {
  return {{"level", level},
          {"size", size},
          {"tensor_square_connected", tensor_square_connected},
          {"weight_cone_ok", weight_cone_ok},
          {"lambda0", {{"lambda", lambda0.lambda}, {"delta", lambda0.delta}}},
          {"pseudo_base", pseudo_base},
          {"eps_bijective", eps_bijective},
          {"phi_bijective", phi_bijective},
          {"minimal_count", minimal_count},
          {"dominant_count", dominant_count},
          {"pass", pass()}};
}

BElt coherent_embed(int l, const BElt& b0, const BElt& b) {
  if (!b0.level || *b0.level != l || !b.level || *b.level != l)
    throw std::invalid_argument("coherent_embed: both elements must live in B_l");
  const auto& u = b0.t;
  bool minimal = u[0] == u[5] && u[1] == u[2] && u[2] == u[3] && u[3] == u[4] &&
                 2 * (u[0] / 3) + u[1] <= l;
  if (!minimal) throw std::invalid_argument("coherent_embed: b0 not minimal");
  std::array<int, 6> t;
  std::array<int, 6> shift{u[0], u[1], u[1], u[1], u[1], u[0]};
  for (int k = 0; k < 6; ++k) t[k] = b.t[k] - shift[k];
  return BElt::limit(t);
}

std::string to_string(const BElt& b) {
  std::string out = "(";
  for (int k = 0; k < 6; ++k) {
    int v = b.t[k];
    if (k) out += ",";
    if (v % 3 == 0)
      out += std::to_string(v / 3);
    else
      out += std::to_string(v) + "/3";
  }
  out += ")";
  return out;
}

nlohmann::json to_json(const BElt& b) {
  nlohmann::json j;
  j["t"] = b.t;
  if (b.level)
    j["context"] = {{"level", *b.level}};
  else
    j["context"] = "limit";
  return j;
}

BElt belt_from_json(const nlohmann::json& j) {
  std::array<int, 6> t;
  const auto& arr = j.at("t");
  if (!arr.is_array() || arr.size() != 6)
    throw std::invalid_argument("BElt json: t must be a 6-array");
  for (int k = 0; k < 6; ++k) t[k] = arr[k].get<int>();
  const auto& ctx = j.at("context");
  if (ctx.is_string() && ctx.get<std::string>() == "limit") return BElt::limit(t);
  if (ctx.is_object() && ctx.contains("level"))
    return BElt::at_level(t, ctx["level"].get<int>());
  throw std::invalid_argument("BElt json: bad context");
}

}  // namespace udc
