#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "mouldkit/ncpoly.hpp"
#include "mouldkit/qseries.hpp"

namespace mk {

using EisIndex = std::vector<int>;

// G_{2k}^infinity: -B_{2k}/(4k) for k >= 1, -1 for k = 0.
Rational eisenstein_constant(int k);
// G_{2k}(q) truncated at q^N, L-degree 0.
QSeriesL eisenstein_q(int k, int N);
// G_{2k} - G_{2k}^infinity.
QSeriesL eisenstein_q0(int k, int N);

// F with (q d/dq + d/dL) F = f, zero q^0 L^0 term. L-degree cap grows by one.
QSeriesL primitive_dlog(const QSeriesL& f);

// I(f1..fn) = -primitive_dlog(f1 * I(f2..fn)), I() = 1.
QSeriesL iter_integral(const std::vector<QSeriesL>& fs);
// Independent construction through the R-map and bar-word shuffles.
QSeriesL iter_integral_oracle(const std::vector<QSeriesL>& fs);

// sum (2 k_i + 1)
int index_weight(const EisIndex& k);
// All indices with index_weight <= w, ordered by weight then lexicographically.
std::vector<EisIndex> indices_up_to_weight(int w);
std::string index_to_string(const EisIndex& k);
EisIndex parse_index(const std::string& s);

// Memoized G_k for a fixed q-order.
class IterEisCache {
 public:
  explicit IterEisCache(int N) : N_(N) {}
  int q_order() const { return N_; }
  QSeriesL get(const EisIndex& k);
  QSeriesL oracle(const EisIndex& k) const;

 private:
  int N_;
  std::mutex mu_;
  std::map<EisIndex, QSeriesL> cache_;
};

bool g_coefficient_identity_check(int k, const std::vector<int>& primes, int N = 30);

struct RankCheck {
  int rank = 0;
  int slots = 0;
  bool truncation_too_small = false;
};
RankCheck rank_check(const std::vector<EisIndex>& indices, int N, int M);

// g(tau).a = sum_k G_k eps~_k(a), coefficients per word.
struct GAction {
  int weight_cap = 0, N = 0, M = 0;
  std::map<Word, QSeriesL, ShortLex> terms;
  std::size_t index_count = 0;
};
GAction g_action_on_a(int W, int N);
// Residual of d/dL (g.a) + (sum_k G_{2k} eps~_{2k}) (g.a); true iff identically zero.
bool g_action_residual_zero(const GAction& g);
// log of g in the free algebra on the symbols eps~_{2k}, truncated at index weight W0,
// is Lie-like in every (q^n L^m) slot.
bool g_log_is_lie(int W0, int N);

}  // namespace mk
