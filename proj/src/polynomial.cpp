#include "vtangle/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vtangle {

bool ExponentOrder::operator()(const Exponents& lhs, const Exponents& rhs) const {
  return std::lexicographical_compare(lhs.rbegin(), lhs.rend(), rhs.rbegin(), rhs.rend());
}

namespace {

void check_vars(std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw std::invalid_argument("variable count mismatch: " + std::to_string(expected) + " vs " +
                                std::to_string(got));
  }
}

}  // namespace

LaurentPoly LaurentPoly::mono(std::size_t num_vars, const Rational& coeff, std::span<const int> exps) {
  LaurentPoly p(num_vars);
  p.add_term(coeff, exps);
  return p;
}

LaurentPoly LaurentPoly::constant(std::size_t num_vars, const Rational& coeff) {
  Exponents zero(num_vars, 0);
  return mono(num_vars, coeff, zero);
}

Rational LaurentPoly::coeff(std::span<const int> exps) const {
  check_vars(num_vars_, exps.size());
  auto it = terms_.find(Exponents(exps.begin(), exps.end()));
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Rational& coeff, std::span<const int> exps) {
  check_vars(num_vars_, exps.size());
  if (coeff.is_zero()) return;
  Exponents key(exps.begin(), exps.end());
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_vars(num_vars_, other.num_vars_);
  for (const auto& [exps, c] : other.terms_) add_term(c, exps);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_vars(num_vars_, other.num_vars_);
  for (const auto& [exps, c] : other.terms_) add_term(-c, exps);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const { return scale(Rational(-1), *this); }

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  check_vars(lhs.num_vars_, rhs.num_vars_);
  LaurentPoly out(lhs.num_vars_);
  Exponents e(lhs.num_vars_);
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(ca * cb, e);
    }
  }
  return out;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }

LaurentPoly scale(const Rational& r, const LaurentPoly& p) {
  LaurentPoly out(p.num_vars());
  for (const auto& [exps, c] : p.terms()) out.add_term(r * c, exps);
  return out;
}

bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

Rational eval_all_ones(const LaurentPoly& p) {
  Rational sum;
  for (const auto& [exps, c] : p.terms()) sum += c;
  return sum;
}

LaurentPoly substitute(const LaurentPoly& p, std::span<const std::size_t> var_map, std::size_t new_num_vars) {
  check_vars(p.num_vars(), var_map.size());
  for (auto target : var_map) {
    if (target >= new_num_vars) throw std::invalid_argument("substitution target out of range");
  }
  LaurentPoly out(new_num_vars);
  Exponents e(new_num_vars);
  for (const auto& [exps, c] : p.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t k = 0; k < exps.size(); ++k) e[var_map[k]] += exps[k];
    out.add_term(c, e);
  }
  return out;
}

std::string render_canonical(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exps, c] : p.terms()) {
    Rational shown = c;
    if (first) {
      os << c.str();
    } else if (c < Rational(0)) {
      shown = -c;
      os << " - " << shown.str();
    } else {
      os << " + " << c.str();
    }
    first = false;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      if (exps[k] == 0) continue;
      os << " t" << (k + 1);
      if (exps[k] != 1) os << '^' << exps[k];
    }
  }
  return os.str();
}

nlohmann::json to_json(const LaurentPoly& p) {
  auto terms = nlohmann::json::array();
  for (const auto& [exps, c] : p.terms()) {
    terms.push_back({{"coeff", c.str()}, {"exps", exps}});
  }
  return terms;
}

LaurentPoly poly_from_json(const nlohmann::json& j, std::size_t num_vars) {
  LaurentPoly p(num_vars);
  for (const auto& term : j) {
    auto exps = term.at("exps").get<Exponents>();
    p.add_term(Rational::parse(term.at("coeff").get<std::string>()), exps);
  }
  return p;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << render_canonical(p); }

}  // namespace vtangle
