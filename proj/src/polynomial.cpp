#include "bmodel/polynomial.hpp"

#include <algorithm>
#include <limits>

namespace bmodel {

Polynomial Polynomial::from_roots(std::span<const Complex> roots) {
  std::vector<Complex> c{Complex(1.0)};
  for (Complex r : roots) {
    std::vector<Complex> next(c.size() + 1, Complex(0.0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc(0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::pair<Complex, Complex> Polynomial::eval_with_derivative(Complex z) const {
  Complex val(0.0), der(0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    der = der * z + val;
    val = val * z + *it;
  }
  return {val, der};
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial({Complex(0.0)});
  std::vector<Complex> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<double>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Complex> r(std::max(c_.size(), o.c_.size()), Complex(0.0));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * Complex(-1.0); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (c_.empty() || o.c_.empty()) return Polynomial();
  std::vector<Complex> r(c_.size() + o.c_.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(Complex s) const {
  std::vector<Complex> r(c_);
  for (auto& x : r) x *= s;
  return Polynomial(std::move(r));
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Horner evaluation together with the running bound sum |c_k| |z|^k used for
// the backward-error stopping rule.
struct HornerResult {
  Complex value, derivative;
  double bound;
};

HornerResult horner(const std::vector<Complex>& c, Complex z) {
  Complex val(0.0), der(0.0);
  double bound = 0.0, az = std::abs(z);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    der = der * z + val;
    val = val * z + *it;
    bound = bound * az + std::abs(*it);
  }
  return {val, der, bound};
}

bool aberth(const std::vector<Complex>& c, std::vector<Complex>& z, int max_iter) {
  const int n = static_cast<int>(z.size());
  std::vector<char> done(n, 0);
  for (int iter = 0; iter < max_iter; ++iter) {
    int active = 0;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      HornerResult h = horner(c, z[i]);
      if (std::abs(h.value) <= 4.0 * kEps * h.bound) {
        done[i] = 1;
        continue;
      }
      ++active;
      Complex ratio = h.value / h.derivative;
      Complex sum(0.0);
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      Complex w = ratio / (1.0 - ratio * sum);
      if (!is_finite(w)) w = ratio;
      if (!is_finite(w)) return false;
      z[i] -= w;
      if (std::abs(w) <= kEps * std::abs(z[i])) done[i] = 1;
    }
    if (active == 0) return true;
  }
  return std::all_of(done.begin(), done.end(), [](char d) { return d != 0; });
}

// Single root by Laguerre's method; used by the deflation fallback.
bool laguerre(const std::vector<Complex>& c, Complex& x, int max_iter) {
  const int n = static_cast<int>(c.size()) - 1;
  const double frac[] = {0.0, 0.5, 0.25, 0.75, 0.13, 0.38, 0.62, 0.88, 1.0};
  for (int iter = 1; iter <= max_iter; ++iter) {
    Complex b = c[n], d(0.0), f(0.0);
    double err = std::abs(b), abx = std::abs(x);
    for (int j = n - 1; j >= 0; --j) {
      f = x * f + d;
      d = x * d + b;
      b = x * b + c[j];
      err = std::abs(b) + abx * err;
    }
    err *= kEps;
    if (std::abs(b) <= err) return true;
    Complex g = d / b;
    Complex g2 = g * g;
    Complex h = g2 - 2.0 * f / b;
    Complex sq = std::sqrt(static_cast<double>(n - 1) * (static_cast<double>(n) * h - g2));
    Complex gp = g + sq, gm = g - sq;
    double abp = std::abs(gp), abm = std::abs(gm);
    if (abp < abm) gp = gm;
    Complex dx = std::max(abp, abm) > 0.0 ? static_cast<double>(n) / gp
                                          : std::polar(1.0 + abx, static_cast<double>(iter));
    Complex x1 = x - dx;
    if (x == x1) return true;
    if (iter % 10 != 0) x = x1;
    else x -= frac[(iter / 10) % 9] * dx;
  }
  return false;
}

std::vector<Complex> laguerre_deflation(std::vector<Complex> c, int max_iter) {
  std::vector<Complex> roots;
  while (c.size() > 2) {
    Complex x(0.0);
    if (!laguerre(c, x, max_iter * 4)) throw NumericalError("polynomial_roots: solver did not converge");
    roots.push_back(x);
    // synthetic division by (z - x)
    const std::size_t n = c.size() - 1;
    std::vector<Complex> q(n);
    Complex carry = c[n];
    for (std::size_t k = n; k-- > 0;) {
      q[k] = carry;
      carry = c[k] + carry * x;
    }
    c = std::move(q);
  }
  roots.push_back(-c[0] / c[1]);
  return roots;
}

void newton_polish(const std::vector<Complex>& c, Complex& z) {
  HornerResult h = horner(c, z);
  if (std::abs(h.derivative) == 0.0) return;
  Complex cand = z - h.value / h.derivative;
  if (!is_finite(cand)) return;
  if (std::abs(horner(c, cand).value) < std::abs(h.value)) z = cand;
}

}  // namespace

std::vector<Complex> polynomial_roots(const Polynomial& p, const RootOptions& opt) {
  std::vector<Complex> c = p.coeffs();
  for (Complex x : c) require_finite(x, "polynomial_roots");
  double cmax = 0.0;
  for (Complex x : c) cmax = std::max(cmax, std::abs(x));
  if (cmax == 0.0) throw DomainError("polynomial_roots: zero polynomial");
  while (c.size() > 1 && std::abs(c.back()) <= opt.drop_leading_below * cmax) c.pop_back();

  std::vector<Complex> roots;
  std::size_t lead_zero = 0;
  while (lead_zero + 1 < c.size() && c[lead_zero] == Complex(0.0)) ++lead_zero;
  roots.assign(lead_zero, Complex(0.0));
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead_zero));

  const int n = static_cast<int>(c.size()) - 1;
  if (n <= 0) return roots;
  const Complex lead = c.back();
  for (auto& x : c) x /= lead;
  if (n == 1) {
    roots.push_back(-c[0]);
    return roots;
  }

  // Initial guesses on a circle whose radius is the geometric mean of the
  // root moduli, |c_0|^(1/n), offset from the real axis to avoid symmetry.
  double radius = std::pow(std::abs(c[0]), 1.0 / n);
  if (!(radius > 0.0) || !std::isfinite(radius)) radius = 1.0;
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) z[k] = std::polar(radius, kTwoPi * k / n + 0.4);

  if (!aberth(c, z, opt.max_iterations)) z = laguerre_deflation(c, opt.max_iterations);
  for (auto& r : z) {
    newton_polish(c, r);
    if (!is_finite(r)) throw NumericalError("polynomial_roots: non-finite root");
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

}  // namespace bmodel
