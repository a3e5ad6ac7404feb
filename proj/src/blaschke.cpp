#include "bmodel/blaschke.hpp"

#include <algorithm>

#include "bmodel/kernels.hpp"

namespace bmodel {

BlaschkeProduct::BlaschkeProduct(Complex c, std::vector<Complex> zeros) : zeros_(std::move(zeros)) {
  require_finite(c, "BlaschkeProduct constant");
  if (zeros_.empty()) throw DomainError("BlaschkeProduct: degree must be at least 1");
  if (std::abs(std::abs(c) - 1.0) > tolerances().unimodular)
    throw DomainError("BlaschkeProduct: constant is not unimodular");
  c_ = unit(c);
  for (Complex a : zeros_) {
    require_finite(a, "BlaschkeProduct zero");
    if (std::abs(a) > 1.0 - tolerances().boundary)
      throw DomainError("BlaschkeProduct: zero too close to the unit circle");
  }
}

BlaschkeProduct BlaschkeProduct::power(int d, Complex c) {
  if (d < 1) throw DomainError("BlaschkeProduct::power: degree must be at least 1");
  return BlaschkeProduct(c, std::vector<Complex>(static_cast<std::size_t>(d), Complex(0.0)));
}

Complex BlaschkeProduct::eval_extended(Complex z) const {
  Complex acc = c_;
  for (Complex a : zeros_) acc *= mu_constant(a) * (z - a) / (1.0 - std::conj(a) * z);
  return acc;
}

Complex BlaschkeProduct::operator()(Complex z) const {
  require_finite(z, "BlaschkeProduct eval");
  if (std::abs(z) > 1.0 + tolerances().eval) throw DomainError("BlaschkeProduct eval: point outside the closed disk");
  return eval_extended(z);
}

Complex BlaschkeProduct::derivative(Complex z) const {
  require_finite(z, "BlaschkeProduct derivative");
  // Product rule over the factors; avoids dividing by beta at its zeros.
  const std::size_t d = zeros_.size();
  std::vector<Complex> f(d), df(d);
  for (std::size_t j = 0; j < d; ++j) {
    Complex a = zeros_[j], k = mu_constant(a);
    Complex den = 1.0 - std::conj(a) * z;
    f[j] = k * (z - a) / den;
    df[j] = k * (1.0 - std::norm(a)) / (den * den);
  }
  Complex sum(0.0);
  for (std::size_t j = 0; j < d; ++j) {
    Complex term = df[j];
    for (std::size_t i = 0; i < d; ++i)
      if (i != j) term *= f[i];
    sum += term;
  }
  return c_ * sum;
}

Complex BlaschkeProduct::log_derivative_on_circle(Complex z) const {
  require_finite(z, "log_derivative_on_circle");
  if (std::abs(std::abs(z) - 1.0) > tolerances().unimodular)
    throw DomainError("log_derivative_on_circle: point is not on the unit circle");
  Complex acc(0.0);
  for (Complex a : zeros_) acc += z * (1.0 - std::norm(a)) / ((z - a) * (1.0 - std::conj(a) * z));
  return acc;
}

Polynomial BlaschkeProduct::numerator() const {
  Complex scale = c_;
  for (Complex a : zeros_) scale *= mu_constant(a);
  return Polynomial::from_roots(zeros_) * scale;
}

Polynomial BlaschkeProduct::denominator() const {
  Polynomial q({Complex(1.0)});
  for (Complex a : zeros_) q = q * Polynomial({Complex(1.0), -std::conj(a)});
  return q;
}

namespace {

struct SoA {
  std::vector<double> re, im;
  explicit SoA(std::span<const Complex> z) : re(z.size()), im(z.size()) {
    for (std::size_t i = 0; i < z.size(); ++i) {
      re[i] = z[i].real();
      im[i] = z[i].imag();
    }
  }
  explicit SoA(std::size_t n) : re(n), im(n) {}
  std::vector<Complex> to_complex() const {
    std::vector<Complex> out(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) out[i] = Complex(re[i], im[i]);
    return out;
  }
};

// One Newton step on f(z) = beta(z) - target, kept only if it reduces the
// residual.
void polish_preimage(const BlaschkeProduct& b, Complex target, Complex& z) {
  for (int it = 0; it < 3; ++it) {
    Complex r = b.eval_extended(z) - target;
    Complex d = b.derivative(z);
    if (std::abs(d) < 1e-300) return;
    Complex cand = z - r / d;
    if (!is_finite(cand) || std::abs(b.eval_extended(cand) - target) >= std::abs(r)) return;
    z = cand;
  }
}

void polish_fixed_point(const BlaschkeProduct& b, Complex& z) {
  for (int it = 0; it < 3; ++it) {
    Complex r = b.eval_extended(z) - z;
    Complex d = b.derivative(z) - 1.0;
    if (std::abs(d) < 1e-300) return;
    Complex cand = z - r / d;
    if (!is_finite(cand) || std::abs(b.eval_extended(cand) - cand) >= std::abs(r)) return;
    z = cand;
  }
}

void sort_ccw(std::vector<Complex>& pts) {
  std::sort(pts.begin(), pts.end(), [](Complex x, Complex y) { return ccw_angle(x) < ccw_angle(y); });
}

}  // namespace

std::vector<Complex> eval_many(const BlaschkeProduct& b, std::span<const Complex> z) {
  SoA in(z), out(z.size());
  kernels::blaschke_eval(b.c(), b.zeros(), {in.re, in.im}, {out.re, out.im});
  return out.to_complex();
}

std::vector<Complex> log_derivative_many(const BlaschkeProduct& b, std::span<const Complex> z) {
  SoA in(z), out(z.size());
  kernels::log_derivative(b.zeros(), {in.re, in.im}, {out.re, out.im});
  return out.to_complex();
}

Complex eval(const BlaschkeProduct& b, Complex z) { return b(z); }

Complex log_derivative_on_circle(const BlaschkeProduct& b, Complex z) { return b.log_derivative_on_circle(z); }

std::vector<Complex> critical_points(const BlaschkeProduct& b) {
  const int d = b.degree();
  if (d < 2) throw DomainError("critical_points: degree must be at least 2");
  Polynomial p = Polynomial::from_roots(b.zeros());
  Polynomial q = b.denominator();
  Polynomial r = p.derivative() * q - p * q.derivative();
  std::vector<Complex> roots = polynomial_roots(r);
  std::sort(roots.begin(), roots.end(), [](Complex x, Complex y) { return std::abs(x) < std::abs(y); });
  if (static_cast<int>(roots.size()) < d - 1) throw NumericalError("critical_points: missing roots");
  roots.resize(static_cast<std::size_t>(d - 1));
  for (Complex z : roots)
    if (std::abs(z) >= 1.0) throw NumericalError("critical_points: root outside the open disk");
  return roots;
}

FixedPointReport fixed_points(const BlaschkeProduct& b) {
  const int d = b.degree();
  if (d < 2) throw DomainError("fixed_points: degree must be at least 2");
  const Tolerances& tol = tolerances();
  Polynomial f = b.numerator() - Polynomial({Complex(0.0), Complex(1.0)}) * b.denominator();
  std::vector<Complex> roots = polynomial_roots(f);

  FixedPointReport rep;
  std::vector<Complex> interior, boundary;
  for (Complex z : roots) {
    double r = std::abs(z);
    if (r < 1.0 - tol.circle_snap) interior.push_back(z);
    else if (r <= 1.0 + tol.circle_snap) boundary.push_back(z);
  }
  if (interior.size() > 1) throw NumericalError("fixed_points: more than one interior fixed point found");
  if (!interior.empty()) {
    Complex z = interior.front();
    polish_fixed_point(b, z);
    rep.interior = z;
  }
  for (auto& z : boundary) {
    z = unit(z);
    polish_fixed_point(b, z);
    z = unit(z);
  }
  sort_ccw(boundary);
  // Merge root clusters: a multiple boundary fixed point splits into nearby
  // simple roots under rounding.
  for (Complex z : boundary) {
    if (!rep.boundary.empty() && std::abs(z - rep.boundary.back()) < tol.circle_snap) {
      rep.warnings.push_back("merged boundary fixed point cluster near angle " + std::to_string(std::arg(z)));
      continue;
    }
    rep.boundary.push_back(z);
  }
  if (rep.boundary.size() > 1 && std::abs(rep.boundary.front() - rep.boundary.back()) < tol.circle_snap) {
    rep.warnings.push_back("merged boundary fixed point cluster near angle 0");
    rep.boundary.pop_back();
  }
  for (Complex z : rep.boundary) {
    double mult = b.log_derivative_on_circle(z).real();
    rep.boundary_multipliers.push_back(mult);
    if (std::abs(mult - 1.0) < tol.multiplicity)
      rep.warnings.push_back("tangency: boundary fixed point at angle " + std::to_string(std::arg(z)) +
                             " has multiplier within tolerance of 1");
  }
  if (rep.interior && static_cast<int>(rep.boundary.size()) != d - 1)
    throw NumericalError("fixed_points: expected d-1 boundary fixed points, found " +
                         std::to_string(rep.boundary.size()));
  return rep;
}

std::vector<Complex> preimages(const BlaschkeProduct& b, Complex target) {
  require_finite(target, "preimages");
  const Tolerances& tol = tolerances();
  if (std::abs(target) > 1.0 + tol.eval) throw DomainError("preimages: target outside the closed disk");
  Polynomial f = b.numerator() - b.denominator() * target;
  std::vector<Complex> roots = polynomial_roots(f);
  if (static_cast<int>(roots.size()) != b.degree()) throw NumericalError("preimages: wrong number of roots");
  const bool on_circle = std::abs(std::abs(target) - 1.0) <= tol.unimodular;
  for (auto& z : roots) {
    if (on_circle) z = unit(z);
    polish_preimage(b, target, z);
    if (on_circle) z = unit(z);
    else if (std::abs(z) >= 1.0) z = unit(z) * (1.0 - tol.boundary);
  }
  if (on_circle) sort_ccw(roots);
  return roots;
}

BlaschkeProduct compose(const BlaschkeProduct& outer, const BlaschkeProduct& inner) {
  std::vector<Complex> zeros;
  zeros.reserve(static_cast<std::size_t>(outer.degree() * inner.degree()));
  for (Complex a : outer.zeros()) {
    auto pre = preimages(inner, a);
    zeros.insert(zeros.end(), pre.begin(), pre.end());
  }
  Complex c = outer(inner(Complex(1.0)));
  return BlaschkeProduct(unit(c), std::move(zeros));
}

BlaschkeProduct compose_right(const BlaschkeProduct& b, const MobiusAutomorphism& m) {
  MobiusAutomorphism inv = m.inverse();
  std::vector<Complex> zeros;
  zeros.reserve(b.zeros().size());
  for (Complex a : b.zeros()) zeros.push_back(inv(a));
  return BlaschkeProduct(unit(b(m(Complex(1.0)))), std::move(zeros));
}

BlaschkeProduct compose_left(const MobiusAutomorphism& m, const BlaschkeProduct& b) {
  Complex target = m.inverse()(Complex(0.0));
  // For a rotation (up to rounding) the zero set is unchanged; solving for
  // preimages of a 1e-16 target would spread multiple zeros by its d-th root.
  std::vector<Complex> zeros = std::abs(target) <= 1e-13 ? b.zeros() : preimages(b, target);
  return BlaschkeProduct(unit(m(b(Complex(1.0)))), std::move(zeros));
}

BlaschkeProduct conjugate(const BlaschkeProduct& b, const MobiusAutomorphism& h) {
  return compose_left(h.inverse(), compose_right(b, h));
}

}  // namespace bmodel
