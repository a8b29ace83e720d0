#pragma once

#include <functional>
#include <string>
#include <vector>

#include "trace_turan/interval.hpp"

namespace trace_turan {

// Leading-term evaluators for the upper and lower bounds on
// ex(n, Tr_3(K_{2,t})). None of them includes the o(n^{3/2}) error, so none
// may be compared against an exact finite-n value as an upper bound.

/// (1 + ln(delta+1)) / (delta+1). Throws std::invalid_argument for delta < 2.
double epsilon(int delta);

struct BoundTerm {
  std::string name;
  double value = 0.0;
};

struct BoundReport {
  double n = 0.0;
  double t = 0.0;
  std::string g_choice;  ///< empty when no g is involved
  double g = 0.0;
  std::vector<BoundTerm> terms;
  double total = 0.0;
  /// total / n^{3/2}
  double ratio_n32 = 0.0;
  /// total / (t^{3/2} n^{3/2} / 6)
  double ratio_leading = 0.0;
  bool excludes_o_term = true;
};

/// (1/6)(t^{3/2} + 55 t sqrt(ln t)) n^{3/2}. Throws std::invalid_argument for
/// t < 14 or n <= 0.
BoundReport bound_main(double n, double t);

using GFunction = std::function<double(double)>;

/// sqrt(t ln t) / 7.
double default_g(double t);

/// Three terms: sqrt(t-1)/2, (sqrt 6 / 2) t^{3/2}/g(t), (1/6)(t + 5 g(t) ln t)^{3/2},
/// each times n^{3/2}. g must satisfy 14 <= t/g(t) <= t; otherwise
/// std::invalid_argument naming the violated side.
BoundReport bound_k2t(double n, double t, const GFunction& g, std::string g_name = "custom");

/// The same three terms without the range check on g (g(t) must be > 0).
BoundReport bound_k2t_terms(double n, double t, const GFunction& g, std::string g_name = "custom");

/// 14 <= t/g(t) <= t. default_g misses the upper side for t < 18.
bool g_in_domain(double t, const GFunction& g);

/// delta * (1/2) (k + 3t - 3)^{1/2} n^{3/2}. Requires t >= 4, delta >= 2, k >= 2.
double bound_B_delta(double n, int t, double delta, double k);

/// (1/6) k^{3/2} n^{3/2}. Requires k >= 1, n >= 1.
double bound_C_delta(double n, double k);

/// Larger root of d^2 - b d - c n = 0. Requires b, c, n >= 0.
double quadratic_root(double b, double c, double n);

/// One grid point of the interval check that the three-term bound with
/// default_g stays below the main bound (both per n^{3/2}).
struct DerivationPoint {
  double t = 0.0;
  Interval three_term{0.0};
  Interval main{0.0};
  /// three_term.hi() <= main.lo(): the inequality holds for the real t.
  bool holds = false;
};

/// Enclosures at `points` log-spaced t in [t_min, t_max] (endpoints included).
std::vector<DerivationPoint> derivation_check(double t_min, double t_max, int points);

/// Enclosures at one t.
DerivationPoint derivation_at(double t);

/// A row for ratio_table.
struct RatioInput {
  std::string source;
  int n = 0;
  int t = 0;
  long long value = 0;
};

/// CSV: source,n,t,value,ratio_n32,ratio_leading,c4_window_lo,c4_window_hi,in_c4_window.
/// The window [1/2, 5/6] is filled in only for t = 2 and is informational.
std::string ratio_table(const std::vector<RatioInput>& rows);

}  // namespace trace_turan
