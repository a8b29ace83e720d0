#include "trace_turan/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "trace_turan/csv.hpp"
#include "trace_turan/dominated_sets.hpp"

namespace trace_turan {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

void require_positive_n(double n) {
  if (!(n > 0.0)) throw std::invalid_argument("n must be positive");
}

}  // namespace

double epsilon(int delta) { return epsilon_delta(delta); }

BoundReport bound_main(double n, double t) {
  require_positive_n(n);
  if (!(t >= 14.0)) throw std::invalid_argument("bound_main: needs t >= 14, got " + fmt(t));
  const double n32 = std::pow(n, 1.5);
  BoundReport r;
  r.n = n;
  r.t = t;
  r.terms.push_back({"t^{3/2}/6", std::pow(t, 1.5) / 6.0 * n32});
  r.terms.push_back({"55 t sqrt(ln t)/6", 55.0 * t * std::sqrt(std::log(t)) / 6.0 * n32});
  r.total = r.terms[0].value + r.terms[1].value;
  r.ratio_n32 = r.total / n32;
  r.ratio_leading = r.total / (std::pow(t, 1.5) * n32 / 6.0);
  return r;
}

double default_g(double t) { return std::sqrt(t * std::log(t)) / 7.0; }

BoundReport bound_k2t(double n, double t, const GFunction& g, std::string g_name) {
  require_positive_n(n);
  if (!(t >= 2.0)) throw std::invalid_argument("bound_k2t: needs t >= 2");
  const double gt = g(t);
  if (!(gt > 0.0)) throw std::invalid_argument("bound_k2t: g(t) must be positive, got " + fmt(gt));
  const double ratio = t / gt;
  if (ratio < 14.0) {
    throw std::invalid_argument("bound_k2t: lower side violated, t/g(t) = " + fmt(ratio) + " < 14");
  }
  if (ratio > t) {
    throw std::invalid_argument("bound_k2t: upper side violated, t/g(t) = " + fmt(ratio) + " > t");
  }
  return bound_k2t_terms(n, t, g, std::move(g_name));
}

bool g_in_domain(double t, const GFunction& g) {
  const double gt = g(t);
  return gt > 0.0 && t / gt >= 14.0 && t / gt <= t;
}

BoundReport bound_k2t_terms(double n, double t, const GFunction& g, std::string g_name) {
  require_positive_n(n);
  if (!(t >= 2.0)) throw std::invalid_argument("bound_k2t: needs t >= 2");
  const double gt = g(t);
  if (!(gt > 0.0)) throw std::invalid_argument("bound_k2t: g(t) must be positive, got " + fmt(gt));
  const double n32 = std::pow(n, 1.5);
  BoundReport r;
  r.n = n;
  r.t = t;
  r.g_choice = std::move(g_name);
  r.g = gt;
  r.terms.push_back({"A: sqrt(t-1)/2", 0.5 * std::sqrt(t - 1.0) * n32});
  r.terms.push_back({"B: (sqrt6/2) t^{3/2}/g", std::sqrt(6.0) / 2.0 * std::pow(t, 1.5) / gt * n32});
  r.terms.push_back({"C: (t + 5 g ln t)^{3/2}/6", std::pow(t + 5.0 * gt * std::log(t), 1.5) / 6.0 * n32});
  for (const auto& term : r.terms) r.total += term.value;
  r.ratio_n32 = r.total / n32;
  r.ratio_leading = r.total / (std::pow(t, 1.5) * n32 / 6.0);
  return r;
}

double bound_B_delta(double n, int t, double delta, double k) {
  require_positive_n(n);
  if (t < 4) throw std::invalid_argument("bound_B_delta: needs t >= 4");
  if (!(delta >= 2.0)) throw std::invalid_argument("bound_B_delta: needs delta >= 2");
  if (!(k >= 2.0)) throw std::invalid_argument("bound_B_delta: needs k >= 2");
  return delta * 0.5 * std::sqrt(k + 3.0 * t - 3.0) * std::pow(n, 1.5);
}

double bound_C_delta(double n, double k) {
  if (!(n >= 1.0)) throw std::invalid_argument("bound_C_delta: needs n >= 1");
  if (!(k >= 1.0)) throw std::invalid_argument("bound_C_delta: needs k >= 1");
  return std::pow(k, 1.5) * std::pow(n, 1.5) / 6.0;
}

double quadratic_root(double b, double c, double n) {
  if (b < 0.0 || c < 0.0 || n < 0.0) throw std::invalid_argument("quadratic_root: negative input");
  return (b + std::sqrt(b * b + 4.0 * c * n)) / 2.0;
}

DerivationPoint derivation_at(double t) {
  if (!(t >= 14.0)) throw std::invalid_argument("derivation_at: needs t >= 14");
  const Interval T(t);
  const Interval ln_t = log(T);
  const Interval sixth = Interval(1.0) / Interval(6.0);
  const Interval g = sqrt(T * ln_t) / Interval(7.0);
  const Interval three_term = Interval(0.5) * sqrt(T - Interval(1.0)) +
                              sqrt(Interval(6.0)) / Interval(2.0) * pow_three_halves(T) / g +
                              sixth * pow_three_halves(T + Interval(5.0) * g * ln_t);
  const Interval main = sixth * (pow_three_halves(T) + Interval(55.0) * T * sqrt(ln_t));
  return {t, three_term, main, three_term.hi() <= main.lo()};
}

std::vector<DerivationPoint> derivation_check(double t_min, double t_max, int points) {
  if (points < 2) throw std::invalid_argument("derivation_check: needs at least 2 points");
  if (!(t_min >= 14.0) || !(t_max > t_min)) {
    throw std::invalid_argument("derivation_check: needs 14 <= t_min < t_max");
  }
  std::vector<DerivationPoint> out;
  out.reserve(static_cast<std::size_t>(points));
  const double a = std::log(t_min);
  const double b = std::log(t_max);
  for (int i = 0; i < points; ++i) {
    double t = i == 0 ? t_min : (i == points - 1 ? t_max : std::exp(a + (b - a) * i / (points - 1)));
    out.push_back(derivation_at(t));
  }
  return out;
}

std::string ratio_table(const std::vector<RatioInput>& rows) {
  std::string out =
      "source,n,t,value,ratio_n32,ratio_leading,c4_window_lo,c4_window_hi,in_c4_window\n";
  for (const auto& r : rows) {
    const double n32 = std::pow(static_cast<double>(r.n), 1.5);
    const double ratio = n32 > 0 ? static_cast<double>(r.value) / n32 : 0.0;
    const double leading = n32 > 0 ? ratio / (std::pow(static_cast<double>(r.t), 1.5) / 6.0) : 0.0;
    std::vector<std::string> f{r.source, std::to_string(r.n), std::to_string(r.t), std::to_string(r.value),
                               fmt(ratio), fmt(leading)};
    if (r.t == 2) {
      f.insert(f.end(), {"0.5", fmt(5.0 / 6.0), ratio >= 0.5 && ratio <= 5.0 / 6.0 ? "true" : "false"});
    } else {
      f.insert(f.end(), {"", "", ""});
    }
    out += csv_row(f);
    out += '\n';
  }
  return out;
}

}  // namespace trace_turan
