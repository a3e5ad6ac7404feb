#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <vector>

#include "bmodel/kernels.hpp"
#include "bmodel/mobius.hpp"

#define BMODEL_AVX2 __attribute__((target("avx2,fma")))

namespace bmodel::kernels::avx2 {

namespace {

struct ZeroCoeffs {
  double ar, ai, kr, ki, s;  // a, k = mu constant, s = 1 - |a|^2
};

std::vector<ZeroCoeffs> prepare(std::span<const Complex> zeros) {
  std::vector<ZeroCoeffs> out;
  out.reserve(zeros.size());
  for (Complex a : zeros) {
    Complex k = mu_constant(a);
    out.push_back({a.real(), a.imag(), k.real(), k.imag(), 1.0 - std::norm(a)});
  }
  return out;
}

// (xr + i xi) * (yr + i yi)
BMODEL_AVX2 inline void cmul(__m256d xr, __m256d xi, __m256d yr, __m256d yi, __m256d& zr, __m256d& zi) {
  zr = _mm256_fmsub_pd(xr, yr, _mm256_mul_pd(xi, yi));
  zi = _mm256_fmadd_pd(xr, yi, _mm256_mul_pd(xi, yr));
}

}  // namespace

// Numerators and denominators are accumulated separately and divided once
// per point; |z - a| and |1 - conj(a) z| are bounded by 2 on the closed
// disk, so the products cannot overflow at any practical degree.
BMODEL_AVX2 void blaschke_eval(Complex c, std::span<const Complex> zeros, PointsView z, OutputView out) {
  const auto coeffs = prepare(zeros);
  const std::size_t n = z.size();
  const std::size_t vec_end = n - n % 4;
  const __m256d one = _mm256_set1_pd(1.0);
  for (std::size_t i = 0; i < vec_end; i += 4) {
    const __m256d zr = _mm256_loadu_pd(&z.re[i]);
    const __m256d zi = _mm256_loadu_pd(&z.im[i]);
    __m256d nr = _mm256_set1_pd(c.real()), ni = _mm256_set1_pd(c.imag());
    __m256d dr = one, di = _mm256_setzero_pd();
    for (const auto& q : coeffs) {
      const __m256d ar = _mm256_set1_pd(q.ar), ai = _mm256_set1_pd(q.ai);
      // k (z - a)
      __m256d tr, ti;
      cmul(_mm256_set1_pd(q.kr), _mm256_set1_pd(q.ki), _mm256_sub_pd(zr, ar), _mm256_sub_pd(zi, ai), tr, ti);
      cmul(nr, ni, tr, ti, nr, ni);
      // 1 - conj(a) z = (1 - ar zr - ai zi) + i (ai zr - ar zi)
      const __m256d er = _mm256_fnmadd_pd(ai, zi, _mm256_fnmadd_pd(ar, zr, one));
      const __m256d ei = _mm256_fmsub_pd(ai, zr, _mm256_mul_pd(ar, zi));
      cmul(dr, di, er, ei, dr, di);
    }
    // n / d = n conj(d) / |d|^2
    const __m256d inv = _mm256_div_pd(one, _mm256_fmadd_pd(dr, dr, _mm256_mul_pd(di, di)));
    const __m256d rr = _mm256_mul_pd(_mm256_fmadd_pd(nr, dr, _mm256_mul_pd(ni, di)), inv);
    const __m256d ri = _mm256_mul_pd(_mm256_fmsub_pd(ni, dr, _mm256_mul_pd(nr, di)), inv);
    _mm256_storeu_pd(&out.re[i], rr);
    _mm256_storeu_pd(&out.im[i], ri);
  }
  if (vec_end < n) {
    PointsView tail{z.re.subspan(vec_end), z.im.subspan(vec_end)};
    OutputView tail_out{out.re.subspan(vec_end), out.im.subspan(vec_end)};
    scalar::blaschke_eval(c, zeros, tail, tail_out);
  }
}

BMODEL_AVX2 void log_derivative(std::span<const Complex> zeros, PointsView z, OutputView out) {
  const auto coeffs = prepare(zeros);
  const std::size_t n = z.size();
  const std::size_t vec_end = n - n % 4;
  const __m256d one = _mm256_set1_pd(1.0);
  for (std::size_t i = 0; i < vec_end; i += 4) {
    const __m256d zr = _mm256_loadu_pd(&z.re[i]);
    const __m256d zi = _mm256_loadu_pd(&z.im[i]);
    __m256d sr = _mm256_setzero_pd(), si = _mm256_setzero_pd();
    for (const auto& q : coeffs) {
      const __m256d ar = _mm256_set1_pd(q.ar), ai = _mm256_set1_pd(q.ai);
      const __m256d er = _mm256_fnmadd_pd(ai, zi, _mm256_fnmadd_pd(ar, zr, one));
      const __m256d ei = _mm256_fmsub_pd(ai, zr, _mm256_mul_pd(ar, zi));
      __m256d tr, ti;
      cmul(_mm256_sub_pd(zr, ar), _mm256_sub_pd(zi, ai), er, ei, tr, ti);
      // s z conj(t) / |t|^2
      const __m256d scale =
          _mm256_div_pd(_mm256_set1_pd(q.s), _mm256_fmadd_pd(tr, tr, _mm256_mul_pd(ti, ti)));
      __m256d ur, ui;
      cmul(zr, zi, tr, _mm256_sub_pd(_mm256_setzero_pd(), ti), ur, ui);
      sr = _mm256_fmadd_pd(ur, scale, sr);
      si = _mm256_fmadd_pd(ui, scale, si);
    }
    _mm256_storeu_pd(&out.re[i], sr);
    _mm256_storeu_pd(&out.im[i], si);
  }
  if (vec_end < n) {
    PointsView tail{z.re.subspan(vec_end), z.im.subspan(vec_end)};
    OutputView tail_out{out.re.subspan(vec_end), out.im.subspan(vec_end)};
    scalar::log_derivative(zeros, tail, tail_out);
  }
}

}  // namespace bmodel::kernels::avx2

#endif
