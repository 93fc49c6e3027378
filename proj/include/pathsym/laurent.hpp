#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace pathsym {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact Laurent polynomial in q and t with arbitrary-precision integer
/// coefficients. Terms are kept in a canonical sorted map keyed by
/// (e_q, e_t); zero coefficients are never stored, so operator== is
/// structural equality of values.
class LaurentQT {
 public:
  using Exponents = std::pair<int, int>;  // (e_q, e_t)
  using TermMap = std::map<Exponents, Integer>;

  LaurentQT() = default;

  static LaurentQT zero() { return LaurentQT{}; }
  static LaurentQT one() { return constant(1); }
  static LaurentQT constant(Integer c);
  static LaurentQT monomial(Integer c, int e_q, int e_t);
  static LaurentQT var_q() { return monomial(1, 1, 0); }
  static LaurentQT var_t() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  LaurentQT& operator+=(const LaurentQT& rhs);
  LaurentQT& operator-=(const LaurentQT& rhs);
  LaurentQT& operator*=(const LaurentQT& rhs) { return *this = *this * rhs; }

  friend LaurentQT operator+(LaurentQT a, const LaurentQT& b) { return a += b; }
  friend LaurentQT operator-(LaurentQT a, const LaurentQT& b) { return a -= b; }
  friend LaurentQT operator*(const LaurentQT& a, const LaurentQT& b);
  LaurentQT operator-() const;

  bool operator==(const LaurentQT& rhs) const { return terms_ == rhs.terms_; }

  /// Multiply by the monomial q^{e_q} t^{e_t}.
  LaurentQT scale_monomial(int e_q, int e_t) const;

  /// Coefficient of t^k, returned as a Laurent polynomial in q alone
  /// (every term of the result has t-exponent 0).
  LaurentQT t_slice(int k) const;

  /// Substitute t = 1 (collapse all t-exponents, summing coefficients).
  LaurentQT eval_t_one() const;

  /// q -> q^{-1}, t -> t^{-1}; an involution.
  LaurentQT conj_qt() const;

  /// Exact evaluation at rational (q0, t0). Throws std::domain_error when a
  /// negative exponent meets a zero argument.
  Rational evaluate(const Rational& q0, const Rational& t0) const;

  std::optional<int> min_q_degree() const;
  std::optional<int> max_q_degree() const;
  std::optional<int> min_t_degree() const;
  std::optional<int> max_t_degree() const;

  /// True when every coefficient is >= 0.
  bool nonnegative() const;

  std::string str() const;
  nlohmann::json to_json() const;
  static LaurentQT from_json(const nlohmann::json& j);

 private:
  void add_term(const Exponents& e, const Integer& c);

  TermMap terms_;
};

}  // namespace pathsym
