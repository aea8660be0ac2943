#include "udc/omega.hpp"

#include <stdexcept>

namespace udc {

BElt omega(const XPoint& p) {
  const auto& x = p.x;
  std::array<int, 6> t{3 * x[5],          x[4] - 3 * x[5], 3 * x[3] - 2 * x[4],
                       2 * x[2] - 3 * x[3], 3 * x[1] - x[2], 3 * x[0] - 3 * x[1]};
  return BElt::limit(t);  // membership asserted by construction
}

XPoint omega_inv(const BElt& b) {
  if (b.level) throw std::invalid_argument("omega_inv: limit context required");
  const auto& t = b.t;
  XPoint p;
  p.x[0] = s(b);
  p.x[5] = t[0] / 3;
  p.x[1] = p.x[0] - t[5] / 3;
  if ((t[2] + t[3]) % 2 != 0) throw std::logic_error("omega_inv: parity");
  p.x[2] = t[0] + t[1] + (t[2] + t[3]) / 2;
  if ((2 * t[0] + 2 * t[1] + t[2]) % 3 != 0)
    throw std::logic_error("omega_inv: divisibility");
  p.x[3] = (2 * t[0] + 2 * t[1] + t[2]) / 3;
  p.x[4] = t[0] + t[1];
  return p;
}

std::string to_string(FClass c) {
  switch (c) {
    case FClass::f1: return "f1";
    case FClass::f2: return "f2";
    case FClass::f3: return "f3";
    case FClass::f4: return "f4";
    case FClass::f4p: return "f4'";
    case FClass::f4pp: return "f4''";
    case FClass::f5: return "f5";
    case FClass::f6: return "f6";
  }
  return "?";
}

FClass classify_f(const XPoint& p) {
  GreekCombos g = combos(p);
  const int a = g.alpha, b = g.beta, c = g.gamma, d = g.delta, e = g.epsilon,
            f = g.phi;
  bool cond[8] = {
      // f1
      b >= c && b >= d && b >= e && b >= f && f >= a && d >= a,
      // f2
      b < d && d >= a && d >= c && d >= e && a > f && b >= f,
      // f3
      b < c && d < c && c >= a && c >= e && c >= f,
      // f4 / f4' / f4''
      b < e && d < e && e >= a && e >= f && e == c + 1,
      b < e && d < e && e >= a && e >= f && e == c + 2,
      b < e && d < e && e >= a && e >= f && e > c + 2,
      // f5
      b < f && c < f && e < f && f >= a && a > d && b >= d,
      // f6
      a > c && a > d && a > e && a > f && d > b && f > b,
  };
  int hit = -1;
  for (int k = 0; k < 8; ++k)
    if (cond[k]) {
      if (hit >= 0) throw std::logic_error("classify_f: multiple classes");
      hit = k;
    }
  if (hit < 0) throw std::logic_error("classify_f: no class");
  return static_cast<FClass>(hit + 1);
}

nlohmann::json IsoReport::to_json() const {
  nlohmann::json viol = nlohmann::json::array();
  for (const auto& v : violations)
    viol.push_back(
        {{"x", v.x.x}, {"kind", v.kind}, {"i", v.i}, {"details", v.details}});
  return {{"radius", radius},
          {"points_checked", points_checked},
          {"violations", viol},
          {"pass", pass()}};
}

IsoReport verify_iso(int radius) {
  if (radius < 1) throw std::invalid_argument("verify_iso: radius >= 1");
  IsoReport rep;
  rep.radius = radius;
  XPoint p;
  std::array<int, 6>& x = p.x;
  x.fill(-radius);
  while (true) {
    ++rep.points_checked;
    BElt b = omega(p);
    for (int i = 0; i < 3; ++i) {
      auto fb = f(i, b);
      if (!fb || !(omega(act(i, -1, p)) == *fb))
        rep.violations.push_back({p, "f-commute", i, ""});
      auto eb = e(i, b);
      if (!eb || !(omega(act(i, +1, p)) == *eb))
        rep.violations.push_back({p, "e-commute", i, ""});
      if (eps_i(i, p) != eps(i, b))
        rep.violations.push_back(
            {p, "eps", i,
             "x-side " + std::to_string(eps_i(i, p)) + " b-side " +
                 std::to_string(eps(i, b))});
      if (wt_i(i, p) != wt(b).lambda[i])
        rep.violations.push_back(
            {p, "wt", i,
             "x-side " + std::to_string(wt_i(i, p)) + " b-side " +
                 std::to_string(wt(b).lambda[i])});
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
  return rep;
}

}  // namespace udc
