#include "bmodel/return_map.hpp"

#include "bmodel/circle.hpp"

namespace bmodel {

ReturnMap::ReturnMap(std::vector<BlaschkeProduct> chain) : chain_(std::move(chain)), degree_(1) {
  if (chain_.empty()) throw DomainError("ReturnMap: empty chain");
  for (const auto& b : chain_) degree_ *= b.degree();
  if (degree_ <= kSymbolicDegreeLimit) {
    BlaschkeProduct acc = chain_.front();
    for (std::size_t i = 1; i < chain_.size(); ++i) acc = compose(chain_[i], acc);
    composed_ = acc;
  }
}

Complex ReturnMap::operator()(Complex z) const {
  for (const auto& b : chain_) z = b.eval_extended(z);
  return z;
}

Complex ReturnMap::derivative(Complex z) const {
  Complex d(1.0);
  for (const auto& b : chain_) {
    d *= b.derivative(z);
    z = b.eval_extended(z);
  }
  return d;
}

std::optional<Complex> ReturnMap::attracting_fixed_point(int max_iterations) const {
  Complex z(0.0);
  bool settled = false;
  for (int i = 0; i < max_iterations; ++i) {
    Complex next = (*this)(z);
    if (!is_finite(next) || std::abs(next) > 1.0 - 1e-9) return std::nullopt;
    // step in units of the distance to the circle, so convergence to a
    // boundary point never counts as settling
    double step = std::abs(next - z) / (1.0 - std::norm(next));
    z = next;
    if (step < 1e-9) {
      settled = true;
      break;
    }
  }
  if (!settled) return std::nullopt;
  for (int it = 0; it < 20; ++it) {
    Complex r = (*this)(z) - z;
    if (std::abs(r) < 1e-16) break;
    Complex cand = z - r / (derivative(z) - 1.0);
    if (!is_finite(cand) || std::abs(cand) >= 1.0 || std::abs((*this)(cand) - cand) >= std::abs(r)) break;
    z = cand;
  }
  // an attracting fixed point has |R'(z)| < 1
  if (!(std::abs(derivative(z)) < 1.0)) return std::nullopt;
  return z;
}

std::vector<Complex> ReturnMap::boundary_fixed_points() const {
  if (composed_) return fixed_points(*composed_).boundary;
  auto pts = circle_fixed_points_by_scan([this](Complex z) { return (*this)(z); }, degree_);
  for (auto& z : pts) {
    for (int it = 0; it < 3; ++it) {
      Complex r = (*this)(z) - z;
      Complex cand = unit(z - r / (derivative(z) - 1.0));
      if (!is_finite(cand) || std::abs((*this)(cand) - cand) >= std::abs(r)) break;
      z = cand;
    }
  }
  return pts;
}

}  // namespace bmodel
