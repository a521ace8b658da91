#include "steam/interp.hpp"

#include <algorithm>
#include <cmath>

#include "support/errors.hpp"

namespace bsim {

std::size_t find_interval(const std::vector<double>& x, double v) {
  if (v <= x.front()) return 0;
  if (v >= x.back()) return x.size() - 2;
  auto it = std::upper_bound(x.begin(), x.end(), v);
  return static_cast<std::size_t>(it - x.begin()) - 1;
}

namespace {

// Fritsch-Carlson slopes: monotone data yields a monotone interpolant.
std::vector<double> fritsch_carlson_slopes(const std::vector<double>& x,
                                           const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> m(n);
  std::vector<double> h(n - 1), d(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    d[i] = (y[i + 1] - y[i]) / h[i];
  }
  if (n == 2) {
    m[0] = m[1] = d[0];
    return m;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (d[i - 1] * d[i] <= 0.0) {
      m[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
  }
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    double m0 = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (m0 * d0 <= 0.0) return 0.0;
    if (d0 * d1 < 0.0 && std::abs(m0) > 3.0 * std::abs(d0)) return 3.0 * d0;
    return m0;
  };
  m[0] = end_slope(h[0], h[1], d[0], d[1]);
  m[n - 1] = end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
  return m;
}

inline void hermite(double t, double h, double y0, double y1, double m0,
                    double m1, double& value, double& deriv) {
  const double t2 = t * t;
  const double t3 = t2 * t;
  value = y0 * (2.0 * t3 - 3.0 * t2 + 1.0) + h * m0 * (t3 - 2.0 * t2 + t) +
          y1 * (-2.0 * t3 + 3.0 * t2) + h * m1 * (t3 - t2);
  deriv = (y0 * (6.0 * t2 - 6.0 * t) + y1 * (6.0 * t - 6.0 * t2)) / h +
          m0 * (3.0 * t2 - 4.0 * t + 1.0) + m1 * (3.0 * t2 - 2.0 * t);
}

}  // namespace

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() < 2 || x_.size() != y_.size()) {
    fail(ErrorKind::config, "interpolant needs >= 2 matching nodes");
  }
  for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
    if (!(x_[i + 1] > x_[i])) {
      fail(ErrorKind::config, "interpolant grid must be strictly increasing");
    }
  }
  m_ = fritsch_carlson_slopes(x_, y_);
}

void MonotoneCubic::eval_at(std::size_t k, double x, double& value,
                            double& deriv) const {
  const double h = x_[k + 1] - x_[k];
  const double t = (x - x_[k]) / h;
  hermite(t, h, y_[k], y_[k + 1], m_[k], m_[k + 1], value, deriv);
}

void MonotoneCubic::eval(double x, double& value, double& deriv) const {
  eval_at(find_interval(x_, x), x, value, deriv);
}

double MonotoneCubic::operator()(double x) const {
  double v, d;
  eval(x, v, d);
  return v;
}

double MonotoneCubic::derivative(double x) const {
  double v, d;
  eval(x, v, d);
  return d;
}

BoundaryFittedGrid::BoundaryFittedGrid(std::vector<double> p,
                                       std::vector<double> sigma,
                                       std::vector<std::vector<double>> values)
    : p_(std::move(p)), sigma_(std::move(sigma)), v_(std::move(values)) {
  if (p_.size() < 4 || sigma_.size() < 4) {
    fail(ErrorKind::config, "superheated grid needs >= 4 nodes per axis");
  }
  if (v_.size() != p_.size()) {
    fail(ErrorKind::config, "superheated grid row count mismatch");
  }
  vm_.resize(v_.size());
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_[i].size() != sigma_.size()) {
      fail(ErrorKind::config, "superheated grid column count mismatch");
    }
    vm_[i] = fritsch_carlson_slopes(sigma_, v_[i]);
  }
}

BoundaryFittedGrid::Eval BoundaryFittedGrid::eval(double p,
                                                  double sigma) const {
  const std::size_t n = p_.size();
  const std::size_t k = find_interval(p_, p);

  // Column values and sigma-derivatives at the four nodes feeding the
  // P-direction Hermite (three-point slopes at k and k+1).
  const std::size_t ks = sigma_.empty() ? 0 : find_interval(sigma_, sigma);
  double c[4] = {0, 0, 0, 0};
  double g[4] = {0, 0, 0, 0};
  const std::size_t lo = (k == 0) ? 0 : k - 1;
  const std::size_t hi = std::min(k + 2, n - 1);
  for (std::size_t i = lo; i <= hi; ++i) {
    const double h = sigma_[ks + 1] - sigma_[ks];
    const double t = (sigma - sigma_[ks]) / h;
    hermite(t, h, v_[i][ks], v_[i][ks + 1], vm_[i][ks], vm_[i][ks + 1],
            c[i - lo], g[i - lo]);
  }
  auto node = [&](std::size_t i, const double* arr) { return arr[i - lo]; };

  // Three-point slope in P (one-sided secant at the ends). Linear in the
  // node values, so the same weights apply to the sigma-derivatives.
  auto slope = [&](std::size_t i, const double* arr) {
    if (i == 0) return (node(1, arr) - node(0, arr)) / (p_[1] - p_[0]);
    if (i == n - 1)
      return (node(n - 1, arr) - node(n - 2, arr)) / (p_[n - 1] - p_[n - 2]);
    const double hl = p_[i] - p_[i - 1];
    const double hr = p_[i + 1] - p_[i];
    const double dl = (node(i, arr) - node(i - 1, arr)) / hl;
    const double dr = (node(i + 1, arr) - node(i, arr)) / hr;
    return (dl * hr + dr * hl) / (hl + hr);
  };

  const double h = p_[k + 1] - p_[k];
  const double t = (p - p_[k]) / h;
  Eval out{};
  double dv_dsigma_slopeblend;
  hermite(t, h, node(k, c), node(k + 1, c), slope(k, c), slope(k + 1, c),
          out.value, out.d_dp);
  hermite(t, h, node(k, g), node(k + 1, g), slope(k, g), slope(k + 1, g),
          out.d_dsigma, dv_dsigma_slopeblend);
  (void)dv_dsigma_slopeblend;
  return out;
}

}  // namespace bsim
