#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "udc/rat.hpp"

namespace udc::trop {

struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct SubtractionForbidden : ParseError {
  explicit SubtractionForbidden(std::size_t pos)
      : ParseError("subtraction is forbidden in positive expressions", pos) {}
};

// Subtraction-free rational expression: positive constants, variables,
// sums, products, quotients and integer powers.
class PosExpr {
 public:
  enum class Kind { Constant, Variable, Sum, Product, Quotient, Power };

  static PosExpr constant(const Rat& v);
  static PosExpr variable(std::string name);
  static PosExpr sum(std::vector<PosExpr> terms);
  static PosExpr product(std::vector<PosExpr> factors);
  static PosExpr quotient(PosExpr num, PosExpr den);
  static PosExpr power(PosExpr base, int exponent);

  Kind kind() const { return node_->kind; }
  const Rat& value() const { return node_->value; }
  const std::string& name() const { return node_->name; }
  const std::vector<PosExpr>& operands() const { return node_->kids; }
  int exponent() const { return node_->expo; }

 private:
  struct Node {
    Kind kind;
    Rat value;
    std::string name;
    std::vector<PosExpr> kids;
    int expo = 0;
  };
  explicit PosExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// expr := term ('+' term)* ; term := factor (('*'|'/') factor)* ;
// factor := base ('^' int)? ; base := posint | ident | '(' expr ')'
PosExpr parse(std::string_view text);

// Expression-file contents: either a single bare expression, or one
// "name = expr" entry per line (blank lines and '#' comments allowed).
// A bare expression comes back under the empty name.
std::vector<std::pair<std::string, PosExpr>> parse_named(std::string_view text);

std::string to_string(const PosExpr& e);
std::vector<std::string> variables(const PosExpr& e);
Rat eval_rat(const PosExpr& e, const std::map<std::string, Rat>& point);

// ----------------------------------------------------------- tropical side

struct TropTerm {
  long long constant = 0;
  std::map<std::string, int> exps;  // canonical: no zero exponents
  auto operator<=>(const TropTerm&) const = default;
};

// value = max over num - max over den; term vectors are kept sorted+unique
struct TropRat {
  std::vector<TropTerm> num{TropTerm{}};
  std::vector<TropTerm> den{TropTerm{}};
  auto operator<=>(const TropRat&) const = default;
};

// The ultra-discretization functor on subtraction-free expressions:
// x*y -> x+y, x/y -> x-y, x+y -> max(x,y), positive constants -> 0.
TropRat ud(const PosExpr& e);

long long eval_trop(const TropRat& t, const std::map<std::string, long long>& point);

// fold one variable to a fixed integer value (e.g. the tropical parameter)
TropRat substitute(const TropRat& t, const std::string& var, long long value);

// Removes every term lying in the rational convex hull of the remaining
// terms (allowing a smaller constant); decided exactly over Q.  The result
// is the unique minimal term set with the same evaluation everywhere, and
// the operation is idempotent.
TropRat simplify(const TropRat& t);

std::vector<std::string> variables(const TropRat& t);

struct GridCompare {
  bool equal = true;
  std::map<std::string, long long> counterexample;
  long long lhs = 0, rhs = 0;
};
// exhaustive comparison over the integer cube [-radius, radius]^vars
GridCompare equal_on_grid(const TropRat& a, const TropRat& b, int radius);

std::string to_string(const TropRat& t);
nlohmann::json to_json(const TropRat& t);

// -------------------------------------------------- degree-valuation oracle

// univariate polynomial over big integers, coefficient of t^k at c[k]
struct UniPoly {
  std::vector<BigInt> c;

  static UniPoly constant(const BigInt& v);
  static UniPoly monomial(int deg, const BigInt& coeff);
  bool is_zero() const { return c.empty(); }
  int degree() const;  // throws on the zero polynomial
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly pow(int k) const;  // k >= 0
};

struct UniRat {
  UniPoly num, den;  // den never the zero polynomial
};

// substitute every variable v by t^{m_v}; all variables must be assigned
UniRat substitute_monomial(const PosExpr& e, const std::map<std::string, int>& m);

// degree of poles at t = infinity
long long deg_inf(const UniRat& u);

struct OracleMismatch {
  std::map<std::string, int> point;
  long long degree = 0, tropical = 0;
};

struct OracleReport {
  int samples = 0;
  unsigned seed = 0;
  std::vector<OracleMismatch> mismatches;
  bool pass() const { return mismatches.empty(); }
  nlohmann::json to_json() const;
};

// seeded random exponent vectors m in [-4,4]^vars; checks
// deg_inf(substitute_monomial(e,m)) == eval_trop(tr,m) exactly
OracleReport oracle_check(const PosExpr& e, const TropRat& tr, int samples,
                          unsigned seed);

}  // namespace udc::trop
