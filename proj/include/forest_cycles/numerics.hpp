#pragma once

// Floating-point layer: the depth-m multiple logarithm Li_{1,...,1} as a
// nested series, the iterated integral I_{1,...,1} over the ordered simplex,
// the change of variables between them, and the integral of a purely
// topological hybrid term. Under the change of variables I = (-1)^m Li.

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "forest_cycles/cycle.hpp"

namespace forest_cycles {

class NumericDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NumericConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NumericContext {
  std::size_t series_truncation = 5000;  // K
  std::size_t quadrature_order = 48;     // Gauss-Legendre nodes per nesting level
  double tolerance = 1e-8;
  double margin = 1e-3;                  // |z_i| <= 1 - margin

  void validate() const {
    if (series_truncation < 1) throw std::invalid_argument("series truncation must be positive");
    if (quadrature_order < 2) throw std::invalid_argument("quadrature order must be at least 2");
    if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
    if (!(margin > 0 && margin < 1)) throw std::invalid_argument("margin must lie in (0, 1)");
  }
};

using Complex = std::complex<double>;

inline Complex li1(Complex z) { return -std::log(1.0 - z); }

struct SeriesResult {
  Complex value;         // innermost-first accumulation
  Complex value_reverse; // outermost-first accumulation over the same index set
  double tail_bound = 0; // bound on the omitted terms with k_m > K
};

/// Sum over 0 < k_1 < ... < k_m <= K of prod z_i^{k_i} / k_i.
inline SeriesResult multiple_log_series(const std::vector<Complex>& z, const NumericContext& ctx = {}) {
  ctx.validate();
  const std::size_t m = z.size();
  const std::size_t K = ctx.series_truncation;
  SeriesResult res;
  if (m == 0) {
    res.value = res.value_reverse = 1.0;
    return res;
  }
  for (const auto& zi : z)
    if (!(std::abs(zi) <= 1.0 - ctx.margin))
      throw NumericDomainError("series argument outside the polydisc margin");

  // powers[i][k] = z_i^k / k for k = 1..K
  std::vector<std::vector<Complex>> terms(m, std::vector<Complex>(K + 2, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    Complex p = 1.0;
    for (std::size_t k = 1; k <= K; ++k) {
      p *= z[i];
      terms[i][k] = p / static_cast<double>(k);
    }
  }

  // Forward: prefix[k] = sum over chains of length i ending at index <= k.
  std::vector<Complex> prefix(K + 1, 0.0);
  for (std::size_t k = 1; k <= K; ++k) prefix[k] = prefix[k - 1] + terms[0][k];
  for (std::size_t i = 1; i < m; ++i) {
    std::vector<Complex> next(K + 1, 0.0);
    for (std::size_t k = 1; k <= K; ++k) next[k] = next[k - 1] + terms[i][k] * prefix[k - 1];
    prefix.swap(next);
  }
  res.value = prefix[K];

  // Reverse: suffix[k] = sum over chains of the last indices starting at index >= k.
  std::vector<Complex> suffix(K + 2, 0.0);
  for (std::size_t k = K; k >= 1; --k) suffix[k] = suffix[k + 1] + terms[m - 1][k];
  for (std::size_t i = m - 1; i-- > 0;) {
    std::vector<Complex> next(K + 2, 0.0);
    for (std::size_t k = K; k >= 1; --k) next[k] = next[k + 1] + terms[i][k] * suffix[k + 1];
    suffix.swap(next);
  }
  res.value_reverse = suffix[1];

  double head = 1.0;
  for (std::size_t i = 0; i + 1 < m; ++i) head *= -std::log(1.0 - std::abs(z[i]));
  double a = std::abs(z[m - 1]);
  res.tail_bound = head * std::pow(a, static_cast<double>(K + 1)) / (static_cast<double>(K + 1) * (1.0 - a));
  if (res.tail_bound > ctx.tolerance)
    throw NumericConvergenceError("series truncation too small for the requested tolerance");
  return res;
}

inline SeriesResult multiple_log_series(const std::vector<double>& z, const NumericContext& ctx = {}) {
  return multiple_log_series(std::vector<Complex>(z.begin(), z.end()), ctx);
}

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// Gauss-Legendre nodes by Newton iteration on P_n.
inline GaussRule gauss_legendre(std::size_t n) {
  GaussRule g;
  g.nodes.resize(n);
  g.weights.resize(n);
  const double pi = std::numbers::pi;
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        double pk = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 - (static_cast<double>(k) - 1.0) * p0) /
                    static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute the derivative at the converged node
    double p0 = 1.0;
    double p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      double pk = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 - (static_cast<double>(k) - 1.0) * p0) /
                  static_cast<double>(k);
      p0 = p1;
      p1 = pk;
    }
    dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    g.nodes[i] = -x;
    g.nodes[n - 1 - i] = x;
    g.weights[i] = w;
    g.weights[n - 1 - i] = w;
  }
  return g;
}

namespace detail {

// Integral over 0 <= s_1 <= ... <= s_j <= b of prod_{i<=j} 1/(s_i - x_i).
inline double simplex_upto(const std::vector<double>& x, std::size_t j, double b, const GaussRule& g) {
  if (j == 0) return 1.0;
  double half = 0.5 * b;
  double sum = 0;
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    double s = half * (g.nodes[n] + 1.0);
    sum += g.weights[n] * simplex_upto(x, j - 1, s, g) / (s - x[j - 1]);
  }
  return half * sum;
}

}  // namespace detail

struct IntegralResult {
  double value = 0;
  double error_estimate = 0;  // |Q_N - Q_{N/2}|
};

/// I_{1,...,1}(x) = integral over 0 <= s_1 <= ... <= s_m <= 1 of prod ds_i / (s_i - x_i).
inline IntegralResult simplex_integral(const std::vector<double>& x, const NumericContext& ctx = {}) {
  ctx.validate();
  for (double xi : x)
    if (!std::isfinite(xi) || (xi >= 0.0 && xi <= 1.0))
      throw NumericDomainError("integrand is singular: x_i lies in [0, 1]");
  IntegralResult res;
  if (x.empty()) {
    res.value = 1.0;
    return res;
  }
  const std::size_t n = ctx.quadrature_order;
  res.value = detail::simplex_upto(x, x.size(), 1.0, gauss_legendre(n));
  double coarse = detail::simplex_upto(x, x.size(), 1.0, gauss_legendre(std::max<std::size_t>(n / 2, 1)));
  res.error_estimate = std::abs(res.value - coarse);
  return res;
}

/// x_i = (z_i ... z_m)^(-1).
template <typename T>
std::vector<T> x_from_z(const std::vector<T>& z) {
  std::vector<T> x(z.size());
  T prod = T(1);
  for (std::size_t i = z.size(); i-- > 0;) {
    if (z[i] == T(0)) throw NumericDomainError("z entries must be nonzero");
    prod *= z[i];
    x[i] = T(1) / prod;
  }
  return x;
}

/// z_m = 1/x_m and z_i = x_{i+1}/x_i.
template <typename T>
std::vector<T> z_from_x(const std::vector<T>& x) {
  std::vector<T> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == T(0)) throw NumericDomainError("x entries must be nonzero");
    z[i] = i + 1 < x.size() ? x[i + 1] / x[i] : T(1) / x[i];
  }
  return z;
}

struct Correspondence {
  double integral = 0;         // I(x)
  double integral_error = 0;
  double series = 0;           // Li(z_from_x(x))
  double expected_integral = 0;  // (-1)^m Li
  double difference = 0;       // |I - (-1)^m Li|
};

inline Correspondence compare_series_integral(const std::vector<double>& x, const NumericContext& ctx = {}) {
  Correspondence c;
  IntegralResult ir = simplex_integral(x, ctx);
  SeriesResult sr = multiple_log_series(z_from_x(x), ctx);
  c.integral = ir.value;
  c.integral_error = ir.error_estimate;
  c.series = sr.value.real();
  c.expected_integral = x.size() % 2 == 0 ? c.series : -c.series;
  c.difference = std::abs(c.integral - c.expected_integral);
  return c;
}

using ConstantValues = std::map<std::string, double>;

inline double evaluate_constant(const Monomial& q, const ConstantValues& values) {
  double v = 1.0;
  for (const auto& [s, e] : q.entries()) {
    if (!s.is_constant()) throw UnsupportedClass("monomial is not constant");
    auto it = values.find(s.name);
    if (it == values.end()) throw std::invalid_argument("no value for constant " + s.name);
    v *= std::pow(it->second, e);
  }
  return v;
}

struct TopologicalData {
  std::vector<double> x;  // x attached to s_1..s_r in simplex order
  int sign = 0;           // orientation sign; 0 when the form vanishes
};

/// Reads a topological term whose coordinates are 1 - s_j * c_j: each
/// contributes dlog(1 - s c) = ds / (s - 1/c).
inline TopologicalData topological_data(const HybridTerm& t, const ConstantValues& values) {
  const int r = t.topo_dim;
  if (static_cast<int>(t.coords.size()) != r)
    throw UnsupportedClass("topological term needs exactly one coordinate per s variable");
  TopologicalData out;
  out.x.assign(static_cast<std::size_t>(r), 0.0);
  std::vector<int> order;
  std::vector<bool> used(static_cast<std::size_t>(r) + 1, false);
  bool repeated = false;
  for (const auto& c : t.coords) {
    if (c.form != CoordForm::OneMinus) throw UnsupportedClass("plain coordinate in topological term");
    int which = 0;
    for (const auto& [s, e] : c.q.entries()) {
      if (s.is_parameter()) throw UnsupportedClass("topological term has an algebraic parameter");
      if (s.is_topological()) {
        if (which != 0 || e != 1) throw UnsupportedClass("coordinate must be linear in one s variable");
        which = s.index;
      }
    }
    if (which < 1 || which > r) throw UnsupportedClass("coordinate must contain one s variable");
    if (used[static_cast<std::size_t>(which)]) repeated = true;
    used[static_cast<std::size_t>(which)] = true;
    order.push_back(which);
    double cval = evaluate_constant(c.q.without(Sym::topological(which)), values);
    out.x[static_cast<std::size_t>(which - 1)] = 1.0 / cval;
  }
  out.sign = repeated ? 0 : permutation_sign(order);
  return out;
}

/// Integral of the product of dlog coordinates over the ordered simplex.
/// The (2 pi i)^(-r) normalization is not applied.
inline double eval_topological_cycle(const HybridTerm& t, const ConstantValues& values,
                                     const NumericContext& ctx = {}) {
  TopologicalData data = topological_data(t, values);
  if (data.sign == 0) return 0.0;
  return data.sign * simplex_integral(data.x, ctx).value;
}

inline double eval_topological_cycle(const HybridSum& s, const ConstantValues& values,
                                     const NumericContext& ctx = {}) {
  double total = 0;
  for (const auto& [t, c] : s) total += c.template convert_to<double>() * eval_topological_cycle(t, values, ctx);
  return total;
}

inline double li11(double x, double y, const NumericContext& ctx = {}) {
  return multiple_log_series(std::vector<double>{x, y}, ctx).value.real();
}

struct DiffCoefficients {
  double dx = 0;
  double dy = 0;
};

/// Closed-form partial derivatives of Li_{1,1}(x, y):
///   d/dx = Li_1(y)/(1-x) - Li_1(xy)/(x(1-x)),  d/dy = Li_1(xy)/(1-y).
/// At x = 0 the x-derivative is the limit Li_1(y) - y.
inline DiffCoefficients diffLi_coefficients(double x, double y) {
  DiffCoefficients c;
  double l1y = li1(y).real();
  double l1xy = li1(x * y).real();
  c.dx = x == 0.0 ? l1y - y : l1y / (1.0 - x) - l1xy / (x * (1.0 - x));
  c.dy = l1xy / (1.0 - y);
  return c;
}

struct DiffLiReport {
  DiffCoefficients closed;
  DiffCoefficients finite;
  double residual = 0;  // max over both partials
};

/// Central finite differences of the series against the closed-form
/// coefficients.
inline DiffLiReport check_diffLi(double x, double y, double h, const NumericContext& ctx = {}) {
  for (double v : {x - h, x + h, y - h, y + h})
    if (!(std::abs(v) <= 1.0 - ctx.margin)) throw NumericDomainError("finite-difference stencil leaves the polydisc");
  DiffLiReport rep;
  rep.closed = diffLi_coefficients(x, y);
  rep.finite.dx = (li11(x + h, y, ctx) - li11(x - h, y, ctx)) / (2 * h);
  rep.finite.dy = (li11(x, y + h, ctx) - li11(x, y - h, ctx)) / (2 * h);
  rep.residual = std::max(std::abs(rep.finite.dx - rep.closed.dx), std::abs(rep.finite.dy - rep.closed.dy));
  return rep;
}

}  // namespace forest_cycles
