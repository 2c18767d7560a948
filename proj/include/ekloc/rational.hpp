#ifndef EKLOC_RATIONAL_HPP
#define EKLOC_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ekloc {

/** Base class for all errors raised by the library. */
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Exact rational scalar. GMP keeps values canonical (reduced, positive
// denominator) after every operation.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool rat_is_integer(const Rational& q) {
  return q.get_den() == 1;
}

// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string rat_to_string(const Rational& q) {
  return rat_is_integer(q) ? q.get_num().get_str() : q.get_str();
}

inline Rational rat_parse(const std::string& s) {
  if (s.empty()) throw error("empty rational literal");
  try {
    Rational q(s);
    if (q.get_den() == 0) throw error("bad rational literal: " + s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw error("bad rational literal: " + s);
  }
}

}  // namespace ekloc

#endif
