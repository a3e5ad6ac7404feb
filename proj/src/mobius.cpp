#include "bmodel/mobius.hpp"

#include <string>

namespace bmodel {

namespace {

void check_disk_parameter(Complex a, const char* what) {
  require_finite(a, what);
  if (std::abs(a) > 1.0 - tolerances().boundary)
    throw DomainError(std::string(what) + ": parameter too close to the unit circle");
}

void check_unimodular(Complex u, const char* what) {
  require_finite(u, what);
  if (std::abs(std::abs(u) - 1.0) > tolerances().unimodular)
    throw DomainError(std::string(what) + ": value is not unimodular");
}

}  // namespace

MobiusAutomorphism::MobiusAutomorphism(Complex p, Complex q, Complex r) : p_(p), q_(q), r_(r) {}

MobiusAutomorphism::MobiusAutomorphism(Complex a, Complex rotation) {
  check_disk_parameter(a, "MobiusAutomorphism");
  check_unimodular(rotation, "MobiusAutomorphism rotation");
  Complex u = unit(rotation);
  p_ = u;
  q_ = -u * a;
  r_ = -std::conj(a);
}

MobiusAutomorphism MobiusAutomorphism::rotation_by(Complex eta) { return {Complex(0.0), eta}; }

MobiusAutomorphism MobiusAutomorphism::from_matrix(Complex p, Complex q, Complex r, Complex s) {
  // s = 0 would put the pole at infinity's image of 0, impossible for disk
  // automorphisms; it only shows up through accumulated error.
  if (std::abs(s) < tolerances().singular)
    throw DomainError("Mobius composition: degenerate coefficient matrix");
  MobiusAutomorphism m(p / s, q / s, r / s);
  Complex a = m.a();
  if (!is_finite(a) || std::abs(a) > 1.0 - tolerances().boundary)
    throw DomainError("Mobius composition: parameter escaped the disk");
  // Project back onto the automorphism manifold: with s = 1 the matrix is
  // [[u, -u a], [-conj(a), 1]].
  Complex u = unit(m.p_);
  return MobiusAutomorphism(u, -u * a, -std::conj(a));
}

Complex MobiusAutomorphism::a() const { return -q_ / p_; }

Complex MobiusAutomorphism::rotation() const { return p_; }

Complex MobiusAutomorphism::eval_extended(Complex z) const {
  require_finite(z, "mobius_eval");
  Complex den = r_ * z + 1.0;
  if (std::abs(den) < tolerances().singular) throw DomainError("mobius_eval: denominator vanishes");
  return (p_ * z + q_) / den;
}

Complex MobiusAutomorphism::operator()(Complex z) const {
  require_finite(z, "mobius_eval");
  if (std::abs(z) > 1.0 + tolerances().eval) throw DomainError("mobius_eval: point outside the closed disk");
  return eval_extended(z);
}

MobiusAutomorphism MobiusAutomorphism::inverse() const {
  // adj([[p, q], [r, 1]]) = [[1, -q], [-r, p]]
  return from_matrix(Complex(1.0), -q_, -r_, p_);
}

MobiusAutomorphism MobiusAutomorphism::after(const MobiusAutomorphism& in) const {
  Complex p = p_ * in.p_ + q_ * in.r_;
  Complex q = p_ * in.q_ + q_;
  Complex r = r_ * in.p_ + in.r_;
  Complex s = r_ * in.q_ + 1.0;
  return from_matrix(p, q, r, s);
}

MobiusAutomorphism mobius_to_zero(Complex a) {
  check_disk_parameter(a, "mobius_to_zero");
  return MobiusAutomorphism(a, unit(mu_constant(a)));
}

MobiusAutomorphism mobius_from_specs(Complex p, Complex b) {
  check_disk_parameter(p, "mobius_from_specs");
  check_unimodular(b, "mobius_from_specs boundary point");
  Complex core = (b - p) / (1.0 - std::conj(p) * b);
  return MobiusAutomorphism(p, unit(1.0 / core));
}

Complex mobius_eval(const MobiusAutomorphism& m, Complex z) { return m(z); }

MobiusAutomorphism mobius_compose(const MobiusAutomorphism& outer, const MobiusAutomorphism& inner) {
  return outer.after(inner);
}

MobiusAutomorphism mobius_invert(const MobiusAutomorphism& m) { return m.inverse(); }

}  // namespace bmodel
