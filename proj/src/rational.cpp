#include "treefpp/rational.hpp"

#include <cmath>
#include <stdexcept>

#include "treefpp/errors.hpp"

namespace treefpp {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int int_pow(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Int factorial(unsigned d) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), d);
  return out;
}

Int binomial(unsigned n, unsigned k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::string rat_to_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    throw parse_error("invalid rational '" + text + "'");
  }
}

std::string decimal_truncated(const Rat& q, std::size_t digits) {
  const bool negative = q < 0;
  Rat a = negative ? Rat(-q) : q;
  Int scaled = a.get_num() * int_pow(10, digits) / a.get_den();  // floor, a >= 0
  std::string s = scaled.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out = s.substr(0, s.size() - digits);
  if (digits > 0) out += "." + s.substr(s.size() - digits);
  if (negative && scaled != 0) out.insert(0, 1, '-');
  return out;
}

std::string decimal_trimmed(const Rat& q, std::size_t digits) {
  std::string s = decimal_truncated(q, digits);
  if (s.find('.') == std::string::npos) return s;
  auto last = s.find_last_not_of('0');
  if (s[last] == '.') last--;
  return s.substr(0, last + 1);
}

std::size_t decimal_digits_for_bits(unsigned precision_bits) {
  const double log10_2 = 0.30102999566398119;
  auto d = static_cast<std::size_t>(precision_bits * log10_2);
  return d == 0 ? 1 : d;
}

}  // namespace treefpp
