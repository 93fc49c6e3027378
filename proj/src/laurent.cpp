#include "pathsym/laurent.hpp"

#include <sstream>

namespace pathsym {

LaurentQT LaurentQT::constant(Integer c) { return monomial(std::move(c), 0, 0); }

LaurentQT LaurentQT::monomial(Integer c, int e_q, int e_t) {
  LaurentQT p;
  if (c != 0) p.terms_.emplace(Exponents{e_q, e_t}, std::move(c));
  return p;
}

void LaurentQT::add_term(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentQT& LaurentQT::operator+=(const LaurentQT& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentQT& LaurentQT::operator-=(const LaurentQT& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentQT operator*(const LaurentQT& a, const LaurentQT& b) {
  LaurentQT out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return out;
}

LaurentQT LaurentQT::operator-() const {
  LaurentQT out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentQT LaurentQT::scale_monomial(int e_q, int e_t) const {
  LaurentQT out;
  for (const auto& [e, c] : terms_)
    out.terms_.emplace(Exponents{e.first + e_q, e.second + e_t}, c);
  return out;
}

LaurentQT LaurentQT::t_slice(int k) const {
  LaurentQT out;
  for (const auto& [e, c] : terms_)
    if (e.second == k) out.terms_.emplace(Exponents{e.first, 0}, c);
  return out;
}

LaurentQT LaurentQT::eval_t_one() const {
  LaurentQT out;
  for (const auto& [e, c] : terms_) out.add_term({e.first, 0}, c);
  return out;
}

LaurentQT LaurentQT::conj_qt() const {
  LaurentQT out;
  for (const auto& [e, c] : terms_)
    out.terms_.emplace(Exponents{-e.first, -e.second}, c);
  return out;
}

namespace {

Rational rational_pow(const Rational& base, int e) {
  if (e == 0) return Rational(1);
  if (base == 0 && e < 0) throw std::domain_error("zero raised to a negative power");
  const unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
  Integer num = boost::multiprecision::pow(boost::multiprecision::numerator(base), k);
  Integer den = boost::multiprecision::pow(boost::multiprecision::denominator(base), k);
  Rational r(num, den);
  if (e < 0) r = Rational(1) / r;
  return r;
}

}  // namespace

Rational LaurentQT::evaluate(const Rational& q0, const Rational& t0) const {
  Rational sum(0);
  for (const auto& [e, c] : terms_)
    sum += Rational(c) * rational_pow(q0, e.first) * rational_pow(t0, e.second);
  return sum;
}

std::optional<int> LaurentQT::min_q_degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_)
    if (!d || e.first < *d) d = e.first;
  return d;
}

std::optional<int> LaurentQT::max_q_degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_)
    if (!d || e.first > *d) d = e.first;
  return d;
}

std::optional<int> LaurentQT::min_t_degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_)
    if (!d || e.second < *d) d = e.second;
  return d;
}

std::optional<int> LaurentQT::max_t_degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_)
    if (!d || e.second > *d) d = e.second;
  return d;
}

bool LaurentQT::nonnegative() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::string LaurentQT::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    const bool has_var = e.first != 0 || e.second != 0;
    if (a != 1 || !has_var) os << a;
    if (a != 1 && has_var) os << "*";
    if (e.first != 0) {
      os << "q";
      if (e.first != 1) os << "^" << e.first;
    }
    if (e.second != 0) {
      if (e.first != 0) os << "*";
      os << "t";
      if (e.second != 1) os << "^" << e.second;
    }
  }
  return os.str();
}

namespace {

nlohmann::json integer_to_json(const Integer& c) {
  // Desk-scale coefficients fit in 64 bits; fall back to a decimal string
  // instead of overflowing the JSON integer range.
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

}  // namespace

nlohmann::json LaurentQT::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_)
    terms.push_back({{"q", e.first}, {"t", e.second}, {"c", integer_to_json(c)}});
  return {{"terms", terms}};
}

LaurentQT LaurentQT::from_json(const nlohmann::json& j) {
  LaurentQT p;
  for (const auto& term : j.at("terms"))
    p.add_term({term.at("q").get<int>(), term.at("t").get<int>()},
               integer_from_json(term.at("c")));
  return p;
}

}  // namespace pathsym
