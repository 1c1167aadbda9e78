#include "mouldkit/rational.hpp"

#include <stdexcept>

namespace mk {

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string t = s;
  if (t[0] == '+') t = t.substr(1);
  std::size_t start = (!t.empty() && t[0] == '-') ? 1 : 0;
  if (start == t.size()) throw std::invalid_argument("bad rational literal: " + s);
  bool slash = false;
  for (std::size_t i = start; i < t.size(); ++i) {
    char c = t[i];
    if (c == '/') {
      if (slash || i == start || i + 1 == t.size()) throw std::invalid_argument("bad rational literal: " + s);
      slash = true;
    } else if (c < '0' || c > '9') {
      throw std::invalid_argument("bad rational literal: " + s);
    }
  }
  Rational r;
  if (r.set_str(t, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

Integer factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace mk
