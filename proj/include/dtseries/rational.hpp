#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dtseries {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Thrown for malformed user input (fixture files, CLI arguments).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when geometry data violates a model invariant.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

/// n/d in lowest terms. mpq_class(n, d) does not canonicalize by itself.
inline Rational ratio(const Integer& n, const Integer& d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// floor(x) for rationals.
Integer floor_of(const Rational& x);
/// ceil(x) for rationals.
Integer ceil_of(const Rational& x);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Accepts "p", "-p", "p/q"; throws InputError otherwise.
Rational parse_rational(std::string_view text);

RatVector to_rational(const IntVector& v);

/// Returns the integer vector when every entry is integral.
bool to_integer(const RatVector& v, IntVector& out);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);

}  // namespace dtseries
