#include "treecount/numeric.hpp"

#include <stdexcept>

namespace treecount {

Count power(const Count& base, unsigned long exponent) {
  Count result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Rational power(const Rational& base, long exponent) {
  if (exponent < 0 && base == 0) throw std::domain_error("zero raised to a negative power");
  const unsigned long magnitude =
      exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
  Count num = power(Count(base.get_num()), magnitude);
  Count den = power(Count(base.get_den()), magnitude);
  Rational result = exponent < 0 ? Rational(den, num) : Rational(num, den);
  result.canonicalize();
  return result;
}

bool is_integral(const Rational& value) { return mpz_divisible_p(value.get_num_mpz_t(), value.get_den_mpz_t()) != 0; }

Count to_count(const Rational& value) {
  if (!is_integral(value)) throw std::domain_error("not an integer: " + to_string(value));
  return Count(value.get_num() / value.get_den());
}

std::string to_string(const Count& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational value;
  if (value.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (value.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  value.canonicalize();
  return value;
}

}  // namespace treecount
