#include "mouldkit/arith.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace mk {

Rational bernoulli(int n) {
  if (n < 0) throw std::domain_error("bernoulli index must be >= 0");
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= n) {
    int m = static_cast<int>(table.size());
    Rational s = 0;
    for (int j = 0; j < m; ++j) s += Rational(binomial(m + 1, j)) * table[j];
    Rational b = -s / (m + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[n];
}

Integer sigma(int l, long n) {
  if (n <= 0) throw std::domain_error("sigma requires n >= 1");
  if (l < 0) throw std::domain_error("sigma requires l >= 0");
  Integer s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(l));
    s += p;
    long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(l));
      s += p;
    }
  }
  return s;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace mk
