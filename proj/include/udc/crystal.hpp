#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "udc/cartan.hpp"

namespace udc {

// Z extended by a bottom element -inf, absorbing under +.
class ExtInt {
 public:
  constexpr ExtInt() : finite_(false), v_(0) {}  // -inf
  constexpr ExtInt(int v) : finite_(true), v_(v) {}
  static constexpr ExtInt neg_inf() { return ExtInt{}; }

  constexpr bool finite() const { return finite_; }
  int value() const {
    if (!finite_) throw std::domain_error("ExtInt: value of -inf");
    return v_;
  }

  ExtInt operator+(int n) const { return finite_ ? ExtInt(v_ + n) : *this; }
  ExtInt operator-(int n) const { return finite_ ? ExtInt(v_ - n) : *this; }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
  }
  friend constexpr bool operator<(ExtInt a, ExtInt b) {
    if (!a.finite_) return b.finite_;
    if (!b.finite_) return false;
    return a.v_ < b.v_;
  }
  friend constexpr bool operator>(ExtInt a, ExtInt b) { return b < a; }
  friend constexpr bool operator<=(ExtInt a, ExtInt b) { return !(b < a); }
  friend constexpr bool operator>=(ExtInt a, ExtInt b) { return !(a < b); }

  friend std::string to_string(ExtInt a) {
    return a.finite_ ? std::to_string(a.v_) : std::string("-inf");
  }

 private:
  bool finite_;
  int v_;
};

// Element contract used by the generic machinery (tensor, graphs, axiom
// checks).  Concrete crystals provide these via ADL.
template <class T>
concept CrystalElt =
    std::totally_ordered<T> && requires(const T& b, int i) {
      { crystal_f(i, b) } -> std::convertible_to<std::optional<T>>;
      { crystal_e(i, b) } -> std::convertible_to<std::optional<T>>;
      { crystal_eps(i, b) } -> std::convertible_to<ExtInt>;
      { crystal_phi(i, b) } -> std::convertible_to<ExtInt>;
      { crystal_wt(b) } -> std::convertible_to<WeightVec>;
      { crystal_label(b) } -> std::convertible_to<std::string>;
      { crystal_json(b) } -> std::convertible_to<nlohmann::json>;
    };

// ------------------------------------------------------------------ T_lambda

struct TLambda {
  WeightVec lambda;
  auto operator<=>(const TLambda&) const = default;
};

inline std::optional<TLambda> crystal_f(int, const TLambda&) { return std::nullopt; }
inline std::optional<TLambda> crystal_e(int, const TLambda&) { return std::nullopt; }
inline ExtInt crystal_eps(int, const TLambda&) { return ExtInt::neg_inf(); }
inline ExtInt crystal_phi(int, const TLambda&) { return ExtInt::neg_inf(); }
inline WeightVec crystal_wt(const TLambda& t) { return t.lambda; }
inline std::string crystal_label(const TLambda& t) {
  return "t[" + to_string(t.lambda) + "]";
}
inline nlohmann::json crystal_json(const TLambda& t) {
  return {{"t_lambda", {{"lambda", t.lambda.lambda}, {"delta", t.lambda.delta}}}};
}

// --------------------------------------------------------------- tensor rule

template <CrystalElt A, CrystalElt B>
struct Tensor {
  A left;
  B right;
  auto operator<=>(const Tensor&) const = default;
};

template <CrystalElt A, CrystalElt B>
std::optional<Tensor<A, B>> crystal_f(int i, const Tensor<A, B>& t) {
  if (crystal_phi(i, t.left) > crystal_eps(i, t.right)) {
    auto n = crystal_f(i, t.left);
    if (!n) return std::nullopt;
    return Tensor<A, B>{*n, t.right};
  }
  auto n = crystal_f(i, t.right);
  if (!n) return std::nullopt;
  return Tensor<A, B>{t.left, *n};
}

template <CrystalElt A, CrystalElt B>
std::optional<Tensor<A, B>> crystal_e(int i, const Tensor<A, B>& t) {
  if (crystal_phi(i, t.left) < crystal_eps(i, t.right)) {
    auto n = crystal_e(i, t.right);
    if (!n) return std::nullopt;
    return Tensor<A, B>{t.left, *n};
  }
  auto n = crystal_e(i, t.left);
  if (!n) return std::nullopt;
  return Tensor<A, B>{*n, t.right};
}

// Statistics are the closed forms forced by the axioms together with the
// action rule above: eps looks left-shifted, phi right-shifted.
template <CrystalElt A, CrystalElt B>
ExtInt crystal_eps(int i, const Tensor<A, B>& t) {
  ExtInt a = crystal_eps(i, t.left);
  ExtInt b = crystal_eps(i, t.right) - coroot_pairing(i, crystal_wt(t.left));
  return std::max(a, b);
}

template <CrystalElt A, CrystalElt B>
ExtInt crystal_phi(int i, const Tensor<A, B>& t) {
  ExtInt a = crystal_phi(i, t.right);
  ExtInt b = crystal_phi(i, t.left) + coroot_pairing(i, crystal_wt(t.right));
  return std::max(a, b);
}

template <CrystalElt A, CrystalElt B>
WeightVec crystal_wt(const Tensor<A, B>& t) {
  return crystal_wt(t.left) + crystal_wt(t.right);
}

template <CrystalElt A, CrystalElt B>
std::string crystal_label(const Tensor<A, B>& t) {
  return crystal_label(t.left) + " (x) " + crystal_label(t.right);
}

template <CrystalElt A, CrystalElt B>
nlohmann::json crystal_json(const Tensor<A, B>& t) {
  return {{"tensor", {crystal_json(t.left), crystal_json(t.right)}}};
}

// ------------------------------------------------------------ crystal graphs

struct CrystalGraph {
  std::vector<std::string> labels;          // node id -> label
  std::vector<nlohmann::json> nodes;        // node id -> serialized element
  std::vector<std::array<int, 3>> edges;    // (src, i, dst) with f(i,src)=dst
  bool truncated = false;

  std::string to_dot() const;
  nlohmann::json to_json() const;
};

// Closure of the seeds under f_i and e_i for i in ops, capped at node_cap.
// Node ids follow BFS discovery order (seeds first, in the given order);
// edges hold every f-arrow between discovered nodes.
template <CrystalElt T>
CrystalGraph bfs_graph(const std::vector<T>& seeds, const std::vector<int>& ops,
                       std::size_t node_cap) {
  if (node_cap < 1) throw std::invalid_argument("bfs_graph: node_cap must be >= 1");
  std::map<T, int> index;
  std::vector<T> order;
  CrystalGraph g;
  std::queue<T> work;
  auto discover = [&](const T& b) {
    if (index.count(b)) return true;
    if (order.size() >= node_cap) {
      g.truncated = true;
      return false;
    }
    index.emplace(b, static_cast<int>(order.size()));
    order.push_back(b);
    work.push(b);
    return true;
  };
  for (const T& s : seeds) discover(s);
  while (!work.empty()) {
    T b = work.front();
    work.pop();
    for (int i : ops) {
      if (auto n = crystal_f(i, b)) discover(*n);
      if (auto n = crystal_e(i, b)) discover(*n);
    }
  }
  for (const T& b : order) {
    g.labels.push_back(crystal_label(b));
    g.nodes.push_back(crystal_json(b));
  }
  for (const T& b : order) {
    for (int i : ops) {
      if (auto n = crystal_f(i, b)) {
        auto it = index.find(*n);
        if (it != index.end())
          g.edges.push_back({index.at(b), i, it->second});
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

// Connectivity of the underlying undirected graph; truncated graphs are
// rejected because missing nodes could join components.
bool is_connected(const CrystalGraph& g);

// --------------------------------------------------------------- axiom check

struct AxiomViolation {
  std::string element;
  int i = -1;
  std::string kind;     // one of: phi-eps-wt, f-e-inverse, e-f-inverse,
                        //         wt-f, wt-e, neg-inf-action
  std::string details;
};

// Sweeps phi = eps + <alpha_i^vee, wt>, the mutual-inverse law for the
// operators, the weight shifts by alg's simple roots (classical part), and
// the -inf absorption rule.  Results of f/e may leave `elts`; they are
// checked where computable.
template <CrystalElt T>
std::vector<AxiomViolation> check_axioms(const std::vector<T>& elts, Algebra alg,
                                         const std::vector<int>& indices = {0, 1, 2}) {
  std::vector<AxiomViolation> out;
  for (const T& b : elts) {
    WeightVec w = crystal_wt(b);
    for (int i : indices) {
      ExtInt ep = crystal_eps(i, b), ph = crystal_phi(i, b);
      if (ph != ep + coroot_pairing(i, w))
        out.push_back({crystal_label(b), i, "phi-eps-wt",
                       "phi=" + to_string(ph) + " eps=" + to_string(ep) +
                           " <h,wt>=" + std::to_string(coroot_pairing(i, w))});
      WeightVec root = simple_root(alg, i).classical();
      auto fb = crystal_f(i, b);
      auto eb = crystal_e(i, b);
      if (!ep.finite() && (fb || eb))
        out.push_back({crystal_label(b), i, "neg-inf-action",
                       "eps=-inf but an operator acts"});
      if (fb) {
        auto back = crystal_e(i, *fb);
        if (!back || !(*back == b))
          out.push_back({crystal_label(b), i, "f-e-inverse", crystal_label(*fb)});
        if (crystal_wt(*fb) != w - root)
          out.push_back({crystal_label(b), i, "wt-f",
                         "wt(f b)=" + to_string(crystal_wt(*fb))});
      }
      if (eb) {
        auto back = crystal_f(i, *eb);
        if (!back || !(*back == b))
          out.push_back({crystal_label(b), i, "e-f-inverse", crystal_label(*eb)});
        if (crystal_wt(*eb) != w + root)
          out.push_back({crystal_label(b), i, "wt-e",
                         "wt(e b)=" + to_string(crystal_wt(*eb))});
      }
    }
  }
  return out;
}

}  // namespace udc
