#include "dtseries/rational.hpp"

#include <cctype>

namespace dtseries {

Integer floor_of(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

std::string to_string(const Rational& x) {
  if (is_integer(x)) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Integer& x) { return x.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(s)) throw InputError("not a rational number: '" + std::string(text) + "'");
    return Rational(parse_integer(s));
  }
  const auto num = trim(s.substr(0, slash));
  const auto den = trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw InputError("not a rational number: '" + std::string(text) + "'");
  }
  const Integer d = parse_integer(den);
  if (d == 0) throw InputError("zero denominator: '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool to_integer(const RatVector& v, IntVector& out) {
  out.clear();
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!is_integer(x)) return false;
    out.push_back(x.get_num());
  }
  return true;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace dtseries
