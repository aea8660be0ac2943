#include "udc/trop.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>

namespace udc::trop {

// ------------------------------------------------------------------ PosExpr

PosExpr PosExpr::constant(const Rat& v) {
  if (v <= 0) throw std::invalid_argument("PosExpr: constants must be positive");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = v;
  return PosExpr(n);
}

PosExpr PosExpr::variable(std::string name) {
  if (name.empty()) throw std::invalid_argument("PosExpr: empty variable name");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->name = std::move(name);
  return PosExpr(n);
}

PosExpr PosExpr::sum(std::vector<PosExpr> terms) {
  if (terms.empty()) throw std::invalid_argument("PosExpr: empty sum");
  if (terms.size() == 1) return terms.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->kids = std::move(terms);
  return PosExpr(n);
}

PosExpr PosExpr::product(std::vector<PosExpr> factors) {
  if (factors.empty()) throw std::invalid_argument("PosExpr: empty product");
  if (factors.size() == 1) return factors.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->kids = std::move(factors);
  return PosExpr(n);
}

PosExpr PosExpr::quotient(PosExpr num, PosExpr den) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Quotient;
  n->kids = {std::move(num), std::move(den)};
  return PosExpr(n);
}

PosExpr PosExpr::power(PosExpr base, int exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Power;
  n->kids = {std::move(base)};
  n->expo = exponent;
  return PosExpr(n);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  PosExpr run() {
    PosExpr e = expr();
    skip_ws();
    if (pos_ < s_.size()) fail("trailing input");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  PosExpr expr() {
    std::vector<PosExpr> terms{term()};
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        terms.push_back(term());
      } else if (c == '-') {
        throw SubtractionForbidden(pos_);
      } else {
        break;
      }
    }
    return PosExpr::sum(std::move(terms));
  }

  PosExpr term() {
    PosExpr acc = factor();
    std::vector<PosExpr> prod{acc};
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        prod.push_back(factor());
      } else if (c == '/') {
        ++pos_;
        PosExpr den = factor();
        prod = {PosExpr::quotient(PosExpr::product(std::move(prod)), std::move(den))};
      } else {
        break;
      }
    }
    return PosExpr::product(std::move(prod));
  }

  PosExpr factor() {
    PosExpr b = base();
    if (peek() == '^') {
      ++pos_;
      return PosExpr::power(std::move(b), integer());
    }
    return b;
  }

  int integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected integer exponent");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    return static_cast<int>(neg ? -v : v);
  }

  PosExpr base() {
    char c = peek();
    if (c == '-') throw SubtractionForbidden(pos_);
    if (c == '(') {
      ++pos_;
      PosExpr e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + (s_[pos_] - '0');
        ++pos_;
      }
      if (v == 0) fail("constants must be positive");
      return PosExpr::constant(Rat(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        name += s_[pos_];
        ++pos_;
      }
      return PosExpr::variable(std::move(name));
    }
    fail("unexpected character");
  }
};

}  // namespace

PosExpr parse(std::string_view text) { return Parser(text).run(); }

std::vector<std::pair<std::string, PosExpr>> parse_named(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  std::vector<std::pair<std::string, PosExpr>> out;
  bool named = text.find('=') != std::string_view::npos;
  if (!named) {
    out.emplace_back("", parse(text));
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected 'name = expr'", 0);
    std::string name(trim(line.substr(0, eq)));
    if (name.empty()) throw ParseError("empty expression name", 0);
    out.emplace_back(name, parse(line.substr(eq + 1)));
  }
  if (out.empty()) throw ParseError("no expressions in input", 0);
  return out;
}

namespace {

void collect_vars(const PosExpr& e, std::set<std::string>& out) {
  switch (e.kind()) {
    case PosExpr::Kind::Variable: out.insert(e.name()); break;
    case PosExpr::Kind::Constant: break;
    default:
      for (const auto& k : e.operands()) collect_vars(k, out);
  }
}

int prec(PosExpr::Kind k) {
  switch (k) {
    case PosExpr::Kind::Sum: return 0;
    case PosExpr::Kind::Product:
    case PosExpr::Kind::Quotient: return 1;
    default: return 2;
  }
}

void print(const PosExpr& e, std::string& out, int parent_prec) {
  int p = prec(e.kind());
  bool paren = p < parent_prec;
  if (paren) out += "(";
  switch (e.kind()) {
    case PosExpr::Kind::Constant: {
      std::ostringstream os;
      os << e.value();
      out += os.str();
      break;
    }
    case PosExpr::Kind::Variable: out += e.name(); break;
    case PosExpr::Kind::Sum:
      for (std::size_t k = 0; k < e.operands().size(); ++k) {
        if (k) out += " + ";
        print(e.operands()[k], out, 0);
      }
      break;
    case PosExpr::Kind::Product:
      for (std::size_t k = 0; k < e.operands().size(); ++k) {
        if (k) out += "*";
        print(e.operands()[k], out, 1);
      }
      break;
    case PosExpr::Kind::Quotient:
      print(e.operands()[0], out, 1);
      out += "/";
      print(e.operands()[1], out, 2);
      break;
    case PosExpr::Kind::Power:
      print(e.operands()[0], out, 2);
      out += "^" + std::to_string(e.exponent());
      break;
  }
  if (paren) out += ")";
}

}  // namespace

std::string to_string(const PosExpr& e) {
  std::string out;
  print(e, out, 0);
  return out;
}

std::vector<std::string> variables(const PosExpr& e) {
  std::set<std::string> s;
  collect_vars(e, s);
  return {s.begin(), s.end()};
}

Rat eval_rat(const PosExpr& e, const std::map<std::string, Rat>& point) {
  switch (e.kind()) {
    case PosExpr::Kind::Constant: return e.value();
    case PosExpr::Kind::Variable: {
      auto it = point.find(e.name());
      if (it == point.end())
        throw std::invalid_argument("eval_rat: unassigned variable " + e.name());
      return it->second;
    }
    case PosExpr::Kind::Sum: {
      Rat v = 0;
      for (const auto& k : e.operands()) v += eval_rat(k, point);
      return v;
    }
    case PosExpr::Kind::Product: {
      Rat v = 1;
      for (const auto& k : e.operands()) v *= eval_rat(k, point);
      return v;
    }
    case PosExpr::Kind::Quotient:
      return eval_rat(e.operands()[0], point) / eval_rat(e.operands()[1], point);
    case PosExpr::Kind::Power:
      return rat_pow(eval_rat(e.operands()[0], point), e.exponent());
  }
  throw std::logic_error("eval_rat: bad kind");
}

// ------------------------------------------------------------- tropical ops

namespace {

std::vector<TropTerm> canon(std::vector<TropTerm> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<TropTerm> mul_sets(const std::vector<TropTerm>& a,
                               const std::vector<TropTerm>& b) {
  std::vector<TropTerm> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      TropTerm t = x;
      t.constant += y.constant;
      for (const auto& [v, e] : y.exps) {
        int ne = (t.exps[v] += e);
        if (ne == 0) t.exps.erase(v);
      }
      out.push_back(std::move(t));
    }
  return canon(std::move(out));
}

// max(N) - max({d}) = max(N - d): a one-term denominator folds away, which
// keeps monomial quotients as single numerator terms
TropRat fold_trivial_den(TropRat t) {
  if (t.den.size() != 1 || t.den[0] == TropTerm{}) return t;
  const TropTerm d = t.den[0];
  for (auto& n : t.num) {
    n.constant -= d.constant;
    for (const auto& [v, e] : d.exps) {
      int ne = (n.exps[v] -= e);
      if (ne == 0) n.exps.erase(v);
    }
  }
  t.num = canon(std::move(t.num));
  t.den = {TropTerm{}};
  return t;
}

std::vector<TropTerm> scale_set(const std::vector<TropTerm>& a, int k) {
  std::vector<TropTerm> out;
  out.reserve(a.size());
  for (const auto& x : a) {
    TropTerm t;
    t.constant = x.constant * k;
    for (const auto& [v, e] : x.exps)
      if (e * k != 0) t.exps[v] = e * k;
    out.push_back(std::move(t));
  }
  return canon(std::move(out));
}

}  // namespace

namespace {
TropRat ud_raw(const PosExpr& e) {
  switch (e.kind()) {
    case PosExpr::Kind::Constant: return TropRat{};
    case PosExpr::Kind::Variable: {
      TropRat t;
      t.num = {TropTerm{0, {{e.name(), 1}}}};
      return t;
    }
    case PosExpr::Kind::Product: {
      TropRat acc;
      for (const auto& k : e.operands()) {
        TropRat t = ud_raw(k);
        acc.num = mul_sets(acc.num, t.num);
        acc.den = mul_sets(acc.den, t.den);
      }
      return acc;
    }
    case PosExpr::Kind::Quotient: {
      TropRat a = ud_raw(e.operands()[0]), b = ud_raw(e.operands()[1]);
      return TropRat{mul_sets(a.num, b.den), mul_sets(a.den, b.num)};
    }
    case PosExpr::Kind::Power: {
      TropRat a = ud_raw(e.operands()[0]);
      int k = e.exponent();
      if (k < 0) {
        std::swap(a.num, a.den);
        k = -k;
      }
      // max over the k-fold sumset equals k times the max, so scaling the
      // term vectors preserves the evaluation
      return TropRat{scale_set(a.num, k), scale_set(a.den, k)};
    }
    case PosExpr::Kind::Sum: {
      // common denominator, then union of the lifted numerators
      TropRat acc = ud_raw(e.operands()[0]);
      for (std::size_t k = 1; k < e.operands().size(); ++k) {
        TropRat t = ud_raw(e.operands()[k]);
        std::vector<TropTerm> lifted = mul_sets(acc.num, t.den);
        std::vector<TropTerm> other = mul_sets(t.num, acc.den);
        lifted.insert(lifted.end(), other.begin(), other.end());
        acc.num = canon(std::move(lifted));
        acc.den = mul_sets(acc.den, t.den);
      }
      return acc;
    }
  }
  throw std::logic_error("ud: bad kind");
}
}  // namespace

TropRat ud(const PosExpr& e) { return fold_trivial_den(ud_raw(e)); }

namespace {

long long eval_terms(const std::vector<TropTerm>& terms,
                     const std::map<std::string, long long>& point) {
  bool first = true;
  long long best = 0;
  for (const auto& t : terms) {
    long long v = t.constant;
    for (const auto& [var, e] : t.exps) {
      auto it = point.find(var);
      if (it == point.end())
        throw std::invalid_argument("eval_trop: unassigned variable " + var);
      v += static_cast<long long>(e) * it->second;
    }
    if (first || v > best) best = v;
    first = false;
  }
  if (first) throw std::logic_error("eval_trop: empty term set");
  return best;
}

}  // namespace

long long eval_trop(const TropRat& t, const std::map<std::string, long long>& point) {
  return eval_terms(t.num, point) - eval_terms(t.den, point);
}

TropRat substitute(const TropRat& t, const std::string& var, long long value) {
  auto sub = [&](const std::vector<TropTerm>& terms) {
    std::vector<TropTerm> out;
    out.reserve(terms.size());
    for (const auto& x : terms) {
      TropTerm n = x;
      auto it = n.exps.find(var);
      if (it != n.exps.end()) {
        n.constant += static_cast<long long>(it->second) * value;
        n.exps.erase(it);
      }
      out.push_back(std::move(n));
    }
    return canon(std::move(out));
  };
  return fold_trivial_den(TropRat{sub(t.num), sub(t.den)});
}

std::vector<std::string> variables(const TropRat& t) {
  std::set<std::string> s;
  for (const auto* side : {&t.num, &t.den})
    for (const auto& term : *side)
      for (const auto& [v, e] : term.exps) s.insert(v);
  return {s.begin(), s.end()};
}

// ------------------------------------------------ exact LP term elimination

namespace {

// Phase-1 simplex over Q with Bland's rule: does Ax = b admit x >= 0?
bool lp_feasible(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  const std::size_t m = A.size();
  if (m == 0) return true;
  const std::size_t n = A[0].size();
  for (std::size_t r = 0; r < m; ++r)
    if (b[r] < 0) {
      for (auto& v : A[r]) v = -v;
      b[r] = -b[r];
    }
  const std::size_t cols = n + m;  // artificials appended
  std::vector<std::vector<Rat>> T(m, std::vector<Rat>(cols + 1));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) T[r][c] = A[r][c];
    T[r][n + r] = 1;
    T[r][cols] = b[r];
    basis[r] = n + r;
  }
  // reduced costs for minimizing the artificial sum
  std::vector<Rat> z(cols + 1);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c <= cols; ++c) z[c] += T[r][c];
  while (true) {
    std::size_t enter = cols;
    for (std::size_t c = 0; c < n; ++c)  // artificials never re-enter
      if (z[c] > 0) {
        enter = c;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rat best;
    for (std::size_t r = 0; r < m; ++r) {
      if (T[r][enter] <= 0) continue;
      Rat ratio = T[r][cols] / T[r][enter];
      if (leave == m || ratio < best ||
          (ratio == best && basis[r] < basis[leave])) {
        best = ratio;
        leave = r;
      }
    }
    if (leave == m) break;  // cannot happen for a bounded phase-1, but be safe
    Rat piv = T[leave][enter];
    for (auto& v : T[leave]) v /= piv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || T[r][enter] == 0) continue;
      Rat fac = T[r][enter];
      for (std::size_t c = 0; c <= cols; ++c) T[r][c] -= fac * T[leave][c];
    }
    Rat zf = z[enter];
    for (std::size_t c = 0; c <= cols; ++c) z[c] -= zf * T[leave][c];
    basis[leave] = enter;
  }
  return z[cols] == 0;
}

// is terms[idx] a convex combination of the others (with const allowed to
// come out larger)?
bool term_redundant(const std::vector<TropTerm>& terms, std::size_t idx,
                    const std::vector<std::string>& vars) {
  const std::size_t n = terms.size() - 1;
  if (n == 0) return false;
  const std::size_t dims = vars.size();
  // rows: one per variable dim, one sum-to-1, one constant row with slack
  std::vector<std::vector<Rat>> A(dims + 2, std::vector<Rat>(n + 1, Rat(0)));
  std::vector<Rat> b(dims + 2, Rat(0));
  auto expof = [&](const TropTerm& t, const std::string& v) {
    auto it = t.exps.find(v);
    return it == t.exps.end() ? 0 : it->second;
  };
  std::size_t col = 0;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (j == idx) continue;
    for (std::size_t d = 0; d < dims; ++d) A[d][col] = expof(terms[j], vars[d]);
    A[dims][col] = 1;
    A[dims + 1][col] = Rat(terms[j].constant);
    ++col;
  }
  A[dims + 1][n] = -1;  // slack: sum(lambda_j c_j) - s = c_0, s >= 0
  for (std::size_t d = 0; d < dims; ++d) b[d] = expof(terms[idx], vars[d]);
  b[dims] = 1;
  b[dims + 1] = Rat(terms[idx].constant);
  return lp_feasible(std::move(A), std::move(b));
}

std::vector<TropTerm> simplify_terms(std::vector<TropTerm> terms) {
  terms = canon(std::move(terms));
  std::vector<std::string> vars;
  {
    std::set<std::string> s;
    for (const auto& t : terms)
      for (const auto& [v, e] : t.exps) s.insert(v);
    vars.assign(s.begin(), s.end());
  }
  bool removed = true;
  while (removed && terms.size() > 1) {
    removed = false;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (term_redundant(terms, k, vars)) {
        terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(k));
        removed = true;
        break;
      }
    }
  }
  return terms;
}

}  // namespace

TropRat simplify(const TropRat& t) {
  return fold_trivial_den(TropRat{simplify_terms(t.num), simplify_terms(t.den)});
}

GridCompare equal_on_grid(const TropRat& a, const TropRat& b, int radius) {
  std::set<std::string> vs;
  for (const auto& v : variables(a)) vs.insert(v);
  for (const auto& v : variables(b)) vs.insert(v);
  std::vector<std::string> vars(vs.begin(), vs.end());
  std::map<std::string, long long> point;
  for (const auto& v : vars) point[v] = -radius;
  GridCompare res;
  while (true) {
    long long l = eval_trop(a, point), r = eval_trop(b, point);
    if (l != r) {
      res.equal = false;
      res.counterexample = point;
      res.lhs = l;
      res.rhs = r;
      return res;
    }
    std::size_t k = 0;
    for (; k < vars.size(); ++k) {
      if (point[vars[k]] < radius) {
        ++point[vars[k]];
        break;
      }
      point[vars[k]] = -radius;
    }
    if (k == vars.size()) break;
  }
  return res;
}

std::string to_string(const TropRat& t) {
  auto side = [](const std::vector<TropTerm>& terms) {
    std::string out = "max(";
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (k) out += ", ";
      const auto& tm = terms[k];
      std::string s;
      if (tm.constant != 0 || tm.exps.empty()) s = std::to_string(tm.constant);
      for (const auto& [v, e] : tm.exps) {
        if (!s.empty() && e > 0) s += "+";
        if (e == -1)
          s += "-";
        else if (e != 1)
          s += std::to_string(e) + "*";
        s += v;
      }
      out += s;
    }
    return out + ")";
  };
  std::string out = side(t.num);
  if (!(t.den.size() == 1 && t.den[0] == TropTerm{})) out += " - " + side(t.den);
  return out;
}

nlohmann::json to_json(const TropRat& t) {
  auto side = [](const std::vector<TropTerm>& terms) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& tm : terms) {
      nlohmann::json e = nlohmann::json::object();
      for (const auto& [v, ex] : tm.exps) e[v] = ex;
      arr.push_back({{"const", tm.constant}, {"exp", e}});
    }
    return arr;
  };
  return {{"num", side(t.num)}, {"den", side(t.den)}};
}

// ------------------------------------------------------------------ UniPoly

UniPoly UniPoly::constant(const BigInt& v) {
  UniPoly p;
  if (v != 0) p.c = {v};
  return p;
}

UniPoly UniPoly::monomial(int deg, const BigInt& coeff) {
  UniPoly p;
  if (coeff != 0) {
    p.c.assign(static_cast<std::size_t>(deg) + 1, BigInt(0));
    p.c.back() = coeff;
  }
  return p;
}

int UniPoly::degree() const {
  if (c.empty()) throw std::domain_error("degree of zero polynomial");
  return static_cast<int>(c.size()) - 1;
}

namespace {
void trim(std::vector<BigInt>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

UniPoly UniPoly::operator+(const UniPoly& o) const {
  UniPoly r;
  r.c.resize(std::max(c.size(), o.c.size()), BigInt(0));
  for (std::size_t k = 0; k < c.size(); ++k) r.c[k] += c[k];
  for (std::size_t k = 0; k < o.c.size(); ++k) r.c[k] += o.c[k];
  trim(r.c);
  return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  UniPoly r;
  if (c.empty() || o.c.empty()) return r;
  r.c.assign(c.size() + o.c.size() - 1, BigInt(0));
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (c[a] == 0) continue;
    for (std::size_t b = 0; b < o.c.size(); ++b) r.c[a + b] += c[a] * o.c[b];
  }
  trim(r.c);
  return r;
}

UniPoly UniPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("UniPoly::pow: negative exponent");
  UniPoly acc = UniPoly::constant(1), base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    if (k >>= 1) base = base * base;
  }
  return acc;
}

UniRat substitute_monomial(const PosExpr& e, const std::map<std::string, int>& m) {
  switch (e.kind()) {
    case PosExpr::Kind::Constant:
      return {UniPoly::constant(numerator(e.value())),
              UniPoly::constant(denominator(e.value()))};
    case PosExpr::Kind::Variable: {
      auto it = m.find(e.name());
      if (it == m.end())
        throw std::invalid_argument("substitute_monomial: unassigned variable " +
                                    e.name());
      int d = it->second;
      if (d >= 0) return {UniPoly::monomial(d, 1), UniPoly::constant(1)};
      return {UniPoly::constant(1), UniPoly::monomial(-d, 1)};
    }
    case PosExpr::Kind::Sum: {
      UniRat acc = substitute_monomial(e.operands()[0], m);
      for (std::size_t k = 1; k < e.operands().size(); ++k) {
        UniRat t = substitute_monomial(e.operands()[k], m);
        acc = {acc.num * t.den + t.num * acc.den, acc.den * t.den};
      }
      return acc;
    }
    case PosExpr::Kind::Product: {
      UniRat acc{UniPoly::constant(1), UniPoly::constant(1)};
      for (const auto& k : e.operands()) {
        UniRat t = substitute_monomial(k, m);
        acc = {acc.num * t.num, acc.den * t.den};
      }
      return acc;
    }
    case PosExpr::Kind::Quotient: {
      UniRat a = substitute_monomial(e.operands()[0], m);
      UniRat b = substitute_monomial(e.operands()[1], m);
      return {a.num * b.den, a.den * b.num};
    }
    case PosExpr::Kind::Power: {
      UniRat a = substitute_monomial(e.operands()[0], m);
      int k = e.exponent();
      if (k < 0) {
        std::swap(a.num, a.den);
        k = -k;
      }
      return {a.num.pow(k), a.den.pow(k)};
    }
  }
  throw std::logic_error("substitute_monomial: bad kind");
}

long long deg_inf(const UniRat& u) {
  // subtraction-free inputs have nonnegative coefficients, so neither side
  // can collapse to zero
  return u.num.degree() - u.den.degree();
}

nlohmann::json OracleReport::to_json() const {
  nlohmann::json viol = nlohmann::json::array();
  for (const auto& mm : mismatches)
    viol.push_back(
        {{"point", mm.point}, {"degree", mm.degree}, {"tropical", mm.tropical}});
  return {{"samples", samples}, {"seed", seed}, {"mismatches", viol}, {"pass", pass()}};
}

OracleReport oracle_check(const PosExpr& e, const TropRat& tr, int samples,
                          unsigned seed) {
  OracleReport rep;
  rep.samples = samples;
  rep.seed = seed;
  std::set<std::string> vs;
  for (const auto& v : variables(e)) vs.insert(v);
  for (const auto& v : variables(tr)) vs.insert(v);
  for (int k = 0; k < samples; ++k) {
    std::mt19937 rng(seed * 1000003u + static_cast<unsigned>(k));
    std::map<std::string, int> m;
    std::map<std::string, long long> ml;
    for (const auto& v : vs) {
      int val = static_cast<int>(rng() % 9u) - 4;  // [-4,4]
      m[v] = val;
      ml[v] = val;
    }
    long long d = deg_inf(substitute_monomial(e, m));
    long long t = eval_trop(tr, ml);
    if (d != t) rep.mismatches.push_back({m, d, t});
  }
  return rep;
}

}  // namespace udc::trop
