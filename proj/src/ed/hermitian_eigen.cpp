#include "dqpt/ed/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dqpt::ed {

namespace {

// Reduce A (Hermitian, row-major) to real symmetric tridiagonal (d, e) by
// Householder reflections, accumulating the unitary V (column-major) with
// A = V T V^dagger. Subdiagonal phases are absorbed into V at the end.
void householder_tridiagonalize(std::vector<Complex>& a, std::size_t n, std::vector<Complex>& v,
                                std::vector<double>& d, std::vector<double>& e) {
  std::vector<Complex> hv(n), p(n), w(n), col_accum(n);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(a[i * n + k]);
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm < 1e-300) continue;

    const Complex alpha = a[(k + 1) * n + k];
    const double aabs = std::abs(alpha);
    const Complex phase = aabs > 0.0 ? alpha / aabs : Complex{1.0, 0.0};
    const Complex beta = -phase * xnorm;

    // Reflector v zeroes the column below the subdiagonal.
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) hv[i] = a[i * n + k];
    hv[k + 1] = alpha - beta;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += std::norm(hv[i]);
    if (vnorm2 < 1e-300) continue;
    const double tau = 2.0 / vnorm2;

    // p = tau * A v over the trailing block.
    for (std::size_t i = k + 1; i < n; ++i) {
      Complex acc{0.0, 0.0};
      const Complex* row = &a[i * n];
      for (std::size_t j = k + 1; j < n; ++j) acc += row[j] * hv[j];
      p[i] = tau * acc;
    }
    Complex vtp{0.0, 0.0};
    for (std::size_t i = k + 1; i < n; ++i) vtp += std::conj(hv[i]) * p[i];
    const Complex kappa = 0.5 * tau * vtp;
    for (std::size_t i = k + 1; i < n; ++i) w[i] = p[i] - kappa * hv[i];

    // A <- A - v w^dagger - w v^dagger on the trailing block.
    for (std::size_t i = k + 1; i < n; ++i) {
      Complex* row = &a[i * n];
      const Complex vi = hv[i];
      const Complex wi = w[i];
      for (std::size_t j = k + 1; j < n; ++j)
        row[j] -= vi * std::conj(w[j]) + wi * std::conj(hv[j]);
    }
    a[(k + 1) * n + k] = beta;
    a[k * n + k + 1] = std::conj(beta);
    for (std::size_t i = k + 2; i < n; ++i) {
      a[i * n + k] = Complex{0.0, 0.0};
      a[k * n + i] = Complex{0.0, 0.0};
    }

    // V <- V P, column-major accumulation: s = sum_c v_c V(:,c), then
    // V(:,c) -= tau conj(v_c) s.
    std::fill(col_accum.begin(), col_accum.end(), Complex{0.0, 0.0});
    for (std::size_t c = k + 1; c < n; ++c) {
      const Complex vc = hv[c];
      if (vc == Complex{0.0, 0.0}) continue;
      const Complex* colc = &v[c * n];
      for (std::size_t r = 0; r < n; ++r) col_accum[r] += vc * colc[r];
    }
    for (std::size_t c = k + 1; c < n; ++c) {
      const Complex factor = tau * std::conj(hv[c]);
      if (factor == Complex{0.0, 0.0}) continue;
      Complex* colc = &v[c * n];
      for (std::size_t r = 0; r < n; ++r) colc[r] -= factor * col_accum[r];
    }
  }

  // Absorb subdiagonal phases: T = D T_real D^dagger with |D_i| = 1.
  d.resize(n);
  e.assign(n, 0.0);
  Complex dphase{1.0, 0.0};
  std::vector<Complex> dph(n);
  dph[0] = dphase;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Complex b = a[(i + 1) * n + i];
    const double babs = std::abs(b);
    e[i] = babs;
    dphase *= babs > 0.0 ? b / babs : Complex{1.0, 0.0};
    dph[i + 1] = dphase;
  }
  for (std::size_t i = 0; i < n; ++i) d[i] = a[i * n + i].real();
  for (std::size_t c = 0; c < n; ++c) {
    Complex* colc = &v[c * n];
    const Complex s = dph[c];
    for (std::size_t r = 0; r < n; ++r) colc[r] *= s;
  }
}

// Implicit-shift QL on the real symmetric tridiagonal (d, e), rotating the
// complex columns of z along. e[i] couples i and i+1.
void tql_implicit(std::vector<double>& d, std::vector<double>& e, std::vector<Complex>& z,
                  std::size_t n) {
  if (n < 2) return;
  const double eps = std::numeric_limits<double>::epsilon();
  e[n - 1] = 0.0;

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw std::runtime_error("eigh: QL iteration failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow_restart = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow_restart = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          Complex* zi = &z[i * n];
          Complex* zj = &z[(i + 1) * n];
          for (std::size_t row = 0; row < n; ++row) {
            const Complex t = zj[row];
            zj[row] = s * zi[row] + c * t;
            zi[row] = c * zi[row] - s * t;
          }
        }
        if (underflow_restart) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

double HermitianMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      worst = std::max(worst, std::abs(a_[i * n_ + j] - std::conj(a_[j * n_ + i])));
  return worst;
}

double HermitianMatrix::max_abs() const {
  double worst = 0.0;
  for (const auto& x : a_) worst = std::max(worst, std::abs(x));
  return worst;
}

std::vector<Complex> HermitianMatrix::apply(const std::vector<Complex>& x) const {
  if (x.size() != n_) throw std::invalid_argument("HermitianMatrix::apply: size mismatch");
  std::vector<Complex> y(n_, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < n_; ++i) {
    Complex acc{0.0, 0.0};
    const Complex* row = &a_[i * n_];
    for (std::size_t j = 0; j < n_; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
  return y;
}

EigenSystem eigh(const HermitianMatrix& matrix) {
  const std::size_t n = matrix.dim();
  if (n == 0) throw std::invalid_argument("eigh: empty matrix");
  const double scale = std::max(1.0, matrix.max_abs());
  if (matrix.hermiticity_defect() > 1e-12 * scale)
    throw std::invalid_argument("eigh: matrix violates the 1e-12 hermiticity contract");

  std::vector<Complex> a = matrix.data();
  std::vector<Complex> v(n * n, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = Complex{1.0, 0.0};

  std::vector<double> d, e;
  if (n == 1) {
    d = {a[0].real()};
  } else {
    householder_tridiagonalize(a, n, v, d, e);
    tql_implicit(d, e, v, n);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return d[i] < d[j]; });

  EigenSystem out;
  out.dim = n;
  out.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = d[order[j]];
    std::copy_n(&v[order[j] * n], n, &out.vectors[j * n]);
  }
  return out;
}

}  // namespace dqpt::ed
