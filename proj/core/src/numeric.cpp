#include <conewright/numeric.hpp>

#include <conewright/errors.hpp>

#include <limits>
#include <sstream>

namespace conewright {

bool is_integer(const Rat& q) { return denominator(q) == 1; }

long long to_int64(const Rat& q) {
  if (!is_integer(q)) {
    throw InternalError("expected an integer value, got " + rat_to_string(q));
  }
  const Int n = numerator(q);
  if (n > std::numeric_limits<long long>::max() ||
      n < std::numeric_limits<long long>::min()) {
    throw InternalError("integer value out of int64 range: " + n.str());
  }
  return n.convert_to<long long>();
}

Int binomial(long long n, unsigned k) {
  // Generalized falling-factorial definition, valid for negative n as well.
  Int num = 1;
  for (unsigned j = 0; j < k; ++j) {
    num *= Int(n) - j;
  }
  Int den = 1;
  for (unsigned j = 2; j <= k; ++j) {
    den *= j;
  }
  return num / den;  // exact: k consecutive integers are divisible by k!
}

std::optional<Rat> exact_sqrt(const Rat& q) {
  if (q < 0) {
    return std::nullopt;
  }
  const Int num = numerator(q);
  const Int den = denominator(q);
  const Int sn = boost::multiprecision::sqrt(num);
  const Int sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) {
    return std::nullopt;
  }
  return Rat(sn, sd);
}

std::string rat_to_string(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace conewright
