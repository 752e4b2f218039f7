#pragma once

#include "vtangle/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace vtangle {

using Exponents = std::vector<int>;

/// Orders exponent vectors lexicographically starting from the LAST variable.
/// This is the canonical term order for rendering and JSON.
struct ExponentOrder {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

/// Sparse Laurent polynomial in t_1..t_n with exact rational coefficients.
/// No zero coefficient is ever stored.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Rational, ExponentOrder>;

  explicit LaurentPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  /// Single-term polynomial; zero if coeff is zero. Throws std::invalid_argument
  /// when exps.size() differs from num_vars.
  static LaurentPoly mono(std::size_t num_vars, const Rational& coeff, std::span<const int> exps);
  static LaurentPoly mono(std::size_t num_vars, const Rational& coeff, std::initializer_list<int> exps) {
    return mono(num_vars, coeff, std::span<const int>(exps.begin(), exps.size()));
  }
  static LaurentPoly constant(std::size_t num_vars, const Rational& coeff);

  std::size_t num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the given monomial (zero if absent).
  Rational coeff(std::span<const int> exps) const;
  Rational coeff(std::initializer_list<int> exps) const {
    return coeff(std::span<const int>(exps.begin(), exps.size()));
  }

  /// Adds coeff * t^exps in place.
  void add_term(const Rational& coeff, std::span<const int> exps);

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }

  /// Product of two polynomials; only used by tests and monomial products.
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);

  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) = default;

 private:
  std::size_t num_vars_;
  TermMap terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly scale(const Rational& r, const LaurentPoly& p);
bool is_zero(const LaurentPoly& p);
Rational eval_all_ones(const LaurentPoly& p);

/// Re-expresses p in new_num_vars variables, sending t_k to t_{var_map[k]}.
/// Distinct variables may be merged (quotienting by relations t_k = t_l).
LaurentPoly substitute(const LaurentPoly& p, std::span<const std::size_t> var_map, std::size_t new_num_vars);

/// Deterministic text such as "-2 + 2 t1" or "1 t1 t2^-1 + 2 t1^-1 t2"; "0" for zero.
std::string render_canonical(const LaurentPoly& p);

/// [{"coeff":"p/q","exps":[...]}, ...] in canonical term order.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j, std::size_t num_vars);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace vtangle
