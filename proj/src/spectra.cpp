#include "monospec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <queue>
#include <sstream>

#include "monospec/kernels.hpp"

namespace monospec {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxSweeps = 500;
constexpr double kResidualTarget = 1e-10;
constexpr std::size_t kMaxStochasticDim = 12;

double binomial(std::size_t n, std::size_t k) {
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

/// Coefficients of p^{(j)} / j!.
std::vector<double> scaled_derivative(std::span<const double> p, std::size_t j) {
  if (j >= p.size()) return {0.0};
  std::vector<double> out(p.size() - j);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[i + j] * binomial(i + j, j);
  return out;
}

/// sum |p_k| |x|^k, the natural scale for residuals of p at x.
double absolute_scale(std::span<const double> p, double x) noexcept {
  double s = 0.0;
  for (std::size_t k = p.size(); k-- > 0;) s = s * x + std::abs(p[k]);
  return s;
}

/// Normwise backward error |p(z)| / (max_k |p_k| * sum_k |z|^k).
double backward_error(std::span<const double> p, Complex z) noexcept {
  double norm = 0.0, powers = 0.0;
  for (double c : p) norm = std::max(norm, std::abs(c));
  for (std::size_t k = p.size(); k-- > 0;) powers = powers * std::abs(z) + 1.0;
  const double scale = norm * powers;
  return scale == 0.0 ? 0.0 : std::abs(poly::evaluate(p, z)) / scale;
}

std::vector<Complex> durand_kerner(std::span<const double> p) {
  const std::size_t m = p.size() - 1;
  double max_coeff = 0.0;
  for (std::size_t k = 0; k < m; ++k) max_coeff = std::max(max_coeff, std::abs(p[k]));
  const double radius = std::max(1.0, 1.0 + max_coeff);
  // Offset is an irrational fraction of a turn so no seed sits on a symmetry axis.
  const double offset = 0.5 * (std::numbers::sqrt3 - 1.0);
  std::vector<Complex> z(m);
  for (std::size_t k = 0; k < m; ++k) {
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(k) /
                                      static_cast<double>(m) + offset);
  }

  const double noise_floor = 4.0 * kEps * static_cast<double>(m + 1);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double max_step = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      Complex den = 1.0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        Complex diff = z[i] - z[j];
        if (diff == Complex{}) diff = kEps * (1.0 + std::abs(z[i]));
        den *= diff;
      }
      const Complex step = poly::evaluate(p, z[i]) / den;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[i])));
    }
    if (max_step < 1e-15) break;
    const bool at_floor = std::all_of(z.begin(), z.end(), [&](Complex w) {
      return backward_error(p, w) <= noise_floor;
    });
    if (at_floor) break;
  }

  for (const Complex& w : z) {
    const double err = backward_error(p, w);
    if (!(err < kResidualTarget)) {
      std::ostringstream os;
      os.precision(6);
      os << "Durand-Kerner residual " << err << " after " << kMaxSweeps << " sweeps (degree " << m
         << ")";
      throw Error(ErrorKind::Convergence, os.str());
    }
  }
  return z;
}

/// A few guarded Newton steps on `target`, which may carry extra roots (the trivial 1).
void newton_polish(std::span<const double> target, std::vector<Complex>& z) {
  const auto deriv = scaled_derivative(target, 1);
  for (Complex& w : z) {
    for (int it = 0; it < 3; ++it) {
      const Complex f = poly::evaluate(target, w);
      const Complex fp = poly::evaluate(deriv, w);
      if (fp == Complex{} || f == Complex{}) break;
      const Complex step = f / fp;
      if (std::abs(step) > 1e-6 * (1.0 + std::abs(w))) break;
      const Complex next = w - step;
      if (!(std::abs(poly::evaluate(target, next)) < std::abs(f))) break;
      w = next;
    }
  }
}

/// Replaces clusters that behave like an exact multiple root of p by one refined value.
/// Returns which roots were snapped.
/// A cluster of s roots with centroid c qualifies when c, refined as a simple root of
/// p^{(s-1)}, annihilates p, p', ..., p^{(s-2)} to rounding level.
std::vector<bool> snap_multiple_roots(std::span<const double> p, std::vector<Complex>& z) {
  const std::size_t m = z.size();
  if (m < 2) return std::vector<bool>(m, false);
  const double tau = 32.0 * kEps * static_cast<double>(p.size());
  std::vector<bool> done(m, false);

  for (double rho : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7}) {
    // single linkage over the roots not yet snapped
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
      return parent[i] == i ? i : parent[i] = find(parent[i]);
    };
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (done[i] || done[j]) continue;
        if (std::abs(z[i] - z[j]) <= rho * (1.0 + std::abs(z[i]))) parent[find(i)] = find(j);
      }
    }
    std::vector<std::vector<std::size_t>> clusters(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (!done[i]) clusters[find(i)].push_back(i);
    }

    for (const auto& cl : clusters) {
      const std::size_t s = cl.size();
      if (s < 2) continue;
      Complex mean{};
      for (std::size_t i : cl) mean += z[i];
      mean /= static_cast<double>(s);

      const auto q = scaled_derivative(p, s - 1);
      const auto qp = scaled_derivative(q, 1);
      Complex c = mean;
      for (int it = 0; it < 30; ++it) {
        const Complex fp = poly::evaluate(qp, c);
        if (fp == Complex{}) break;
        const Complex step = poly::evaluate(q, c) / fp;
        c -= step;
        if (std::abs(step) <= kEps * (1.0 + std::abs(c))) break;
      }
      if (!(std::abs(c - mean) <= rho * (1.0 + std::abs(mean)))) continue;

      bool multiple = true;
      for (std::size_t j = 0; j + 1 < s && multiple; ++j) {
        const auto dj = scaled_derivative(p, j);
        multiple = std::abs(poly::evaluate(dj, c)) <= tau * absolute_scale(dj, std::abs(c));
      }
      if (!multiple) continue;
      for (std::size_t i : cl) {
        z[i] = c;
        done[i] = true;
      }
    }
  }
  return done;
}

/// Real coefficients: non-real roots come in conjugate pairs, unpaired roots are real.
void pair_conjugates(std::vector<Complex>& z) {
  const std::size_t m = z.size();
  std::vector<bool> used(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (used[i] || z[i].imag() <= 0.0) continue;
    std::size_t best = m;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m; ++j) {
      if (used[j] || j == i || z[j].imag() >= 0.0) continue;
      const double dist = std::abs(z[i] - std::conj(z[j]));
      if (dist < best_dist) {
        best_dist = dist;
        best = j;
      }
    }
    if (best < m && best_dist <= 1e-6 * (1.0 + std::abs(z[i]))) {
      const double re = 0.5 * (z[i].real() + z[best].real());
      const double im = 0.5 * (z[i].imag() - z[best].imag());
      z[i] = {re, im};
      z[best] = {re, -im};
      used[i] = used[best] = true;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!used[i]) z[i] = {z[i].real(), 0.0};
  }
}

/// Trace of (zI - A)^{-1} through a complex LU with partial pivoting. Returns false when
/// zI - A is exactly singular, i.e. z is already an eigenvalue to working precision.
bool resolvent_trace(const Matrix& a, Complex z, Complex& trace) {
  const std::size_t n = a.rows();
  std::vector<Complex> lu(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) lu[i * n + j] = (i == j ? z : Complex{}) - a(i, j);
  }
  std::vector<std::size_t> piv(n);
  std::iota(piv.begin(), piv.end(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu[i * n + k]) > std::abs(lu[p * n + k])) p = i;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu[k * n + j], lu[p * n + j]);
      std::swap(piv[k], piv[p]);
    }
    if (lu[k * n + k] == Complex{}) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      lu[i * n + k] /= lu[k * n + k];
      for (std::size_t j = k + 1; j < n; ++j) lu[i * n + j] -= lu[i * n + k] * lu[k * n + j];
    }
  }
  trace = {};
  std::vector<Complex> y(n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t i = 0; i < n; ++i) y[i] = piv[i] == col ? 1.0 : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) y[i] -= lu[i * n + j] * y[j];
    }
    for (std::size_t i = n; i-- > col;) {
      for (std::size_t j = i + 1; j < n; ++j) y[i] -= lu[i * n + j] * y[j];
      y[i] /= lu[i * n + i];
    }
    trace += y[col];
  }
  return std::isfinite(trace.real()) && std::isfinite(trace.imag());
}

/// Aberth sweeps on det(zI - A) with the Newton ratio taken from the matrix, not from the
/// polynomial coefficients, so accuracy follows the eigenvalue conditioning of A rather than
/// the root conditioning of its characteristic polynomial. Snapped roots and `fixed` stay put.
void aberth_refine(const Matrix& a, std::vector<Complex>& z, const std::vector<bool>& frozen,
                   std::span<const Complex> fixed) {
  const std::size_t m = z.size();
  std::vector<bool> settled = frozen;
  // Real iterates of a real matrix stay real, so real starts get a small imaginary push
  // with alternating sign; a root that belongs on the real axis returns to it.
  double sign = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (settled[i] || z[i].imag() != 0.0) continue;
    z[i] += Complex(0.0, sign * 1e-6 * (1.0 + std::abs(z[i])));
    sign = -sign;
  }
  for (int sweep = 0; sweep < 100; ++sweep) {
    bool moved = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (settled[i]) continue;
      Complex tr;
      if (!resolvent_trace(a, z[i], tr)) {
        settled[i] = true;
        continue;
      }
      Complex repel{};
      for (std::size_t j = 0; j < m; ++j) {
        if (j != i && z[j] != z[i]) repel += 1.0 / (z[i] - z[j]);
      }
      for (const Complex& f : fixed) {
        if (f != z[i]) repel += 1.0 / (z[i] - f);
      }
      const Complex step = 1.0 / (tr - repel);
      const double scale = 1.0 + std::abs(z[i]);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag()) ||
          std::abs(step) > 0.5 * scale) {
        settled[i] = true;
        continue;
      }
      z[i] -= step;
      if (std::abs(step) <= 2.0 * kEps * scale) {
        settled[i] = true;
      } else {
        moved = true;
      }
    }
    if (!moved) break;
  }
}

std::vector<Complex> initial_roots(std::span<const double> p, std::span<const double> polish,
                                   std::vector<bool>& snapped) {
  const std::size_t m = p.size() - 1;
  snapped.assign(m, false);
  if (m == 0) return {};
  std::vector<Complex> z;
  if (m == 1) {
    z = {Complex(-p[0] / p[1], 0.0)};
  } else {
    std::vector<double> monic(p.begin(), p.end());
    for (double& c : monic) c /= p.back();
    z = durand_kerner(monic);
  }
  newton_polish(polish, z);
  snapped = snap_multiple_roots(p, z);
  return z;
}

std::vector<Complex> roots_with_polish(std::span<const double> p, std::span<const double> polish) {
  std::vector<bool> snapped;
  auto z = initial_roots(p, polish, snapped);
  pair_conjugates(z);
  return z;
}

/// Eigenvalues of `a` other than `fixed`, whose product with p is the characteristic polynomial.
std::vector<Complex> matrix_roots(const Matrix& a, std::span<const double> p,
                                  std::span<const double> full, std::span<const Complex> fixed) {
  std::vector<bool> snapped;
  auto z = initial_roots(p, full, snapped);
  aberth_refine(a, z, snapped, fixed);
  pair_conjugates(z);
  return z;
}

}  // namespace

Spectrum Spectrum::without_trivial() const {
  Spectrum out = *this;
  out.trivial_included = false;
  if (out.values.empty()) return out;
  auto it = std::min_element(out.values.begin(), out.values.end(), [](Complex x, Complex y) {
    return std::abs(x - 1.0) < std::abs(y - 1.0);
  });
  out.values.erase(it);
  return out;
}

double Spectrum::max_abs_imag() const noexcept {
  double m = 0.0;
  for (const Complex& v : values) m = std::max(m, std::abs(v.imag()));
  return m;
}

std::vector<std::size_t> NormalForm::block_indices(std::size_t k) const {
  const auto [begin, end] = blocks.at(k);
  return {perm.begin() + static_cast<std::ptrdiff_t>(begin),
          perm.begin() + static_cast<std::ptrdiff_t>(end)};
}

namespace poly {

std::vector<double> characteristic(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::Dimension, "characteristic polynomial of non-square");
  const std::size_t n = a.rows();
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
  Matrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) tr += a(i, j) * mk(j, i);
    }
    c[n - k] = -tr / static_cast<double>(k);
  }
  return c;
}

std::vector<double> deflate(std::span<const double> coeffs, double root) {
  const std::size_t m = coeffs.size() - 1;
  if (m == 0) return {coeffs.begin(), coeffs.end()};
  std::vector<double> out(m);
  out[m - 1] = coeffs[m];
  for (std::size_t k = m - 1; k-- > 0;) out[k] = coeffs[k + 1] + root * out[k + 1];
  return out;
}

Complex evaluate(std::span<const double> coeffs, Complex x) noexcept {
  Complex acc{};
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

std::vector<Complex> roots(std::span<const double> coeffs) {
  if (coeffs.empty() || coeffs.back() == 0.0) {
    throw Error(ErrorKind::Domain, "polynomial needs a nonzero leading coefficient");
  }
  auto z = roots_with_polish(coeffs, coeffs);
  sort_eigenvalues(z);
  return z;
}

}  // namespace poly

void sort_eigenvalues(std::vector<Complex>& values) {
  std::sort(values.begin(), values.end(), [](Complex x, Complex y) {
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
}

double spectrum_distance(std::span<const Complex> lhs, std::span<const Complex> rhs) {
  if (lhs.size() != rhs.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(rhs.size(), false);
  double worst = 0.0;
  for (const Complex& x : lhs) {
    std::size_t best = rhs.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(x - rhs[j]);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_dist);
  }
  return worst;
}

EigenPair eigenpair_3x3(const DominanceMatrix& d) {
  if (d.m() != 2) throw Error(ErrorKind::Dimension, "eigenpair_3x3 needs a 2x2 dominance matrix");
  const double a = d.a(), b = d.b(), c = d.c(), dd = d.d();
  EigenPair p{};
  kernels::detail::eigenpairs_scalar(&a, &b, &c, &dd, 1, &p.lambda2, &p.lambda3);
  return p;
}

Spectrum spectrum_of_stochastic(const StochasticMatrix& s) {
  if (s.n() > kMaxStochasticDim) {
    throw Error(ErrorKind::Dimension, "spectrum_of_stochastic supports n <= 12");
  }
  const auto full = poly::characteristic(s.entries());
  const auto reduced = poly::deflate(full, 1.0);
  Spectrum out;
  static constexpr Complex kTrivial[] = {Complex(1.0, 0.0)};
  out.values = matrix_roots(s.entries(), reduced, full, kTrivial);
  out.values.emplace_back(1.0, 0.0);
  out.trivial_included = true;
  sort_eigenvalues(out.values);
  return out;
}

Spectrum spectrum_of_matrix(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::Dimension, "spectrum of non-square matrix");
  if (a.rows() > kMaxStochasticDim) throw Error(ErrorKind::Dimension, "spectrum supports n <= 12");
  const auto p = poly::characteristic(a);
  Spectrum out;
  out.values = matrix_roots(a, p, p, {});
  sort_eigenvalues(out.values);
  return out;
}

Spectrum spectrum_of_dominance(const DominanceMatrix& d) {
  if (d.m() > kMaxStochasticDim - 1) {
    throw Error(ErrorKind::Dimension, "spectrum_of_dominance supports m <= 11");
  }
  return spectrum_of_matrix(d.entries());
}

namespace {

/// In-place LU with partial pivoting; returns the permutation sign, or 0 if singular.
/// With `regularize`, exact zero pivots are replaced by eps so the factors stay usable
/// for inverse iteration at an exact eigenvalue.
int lu_decompose(Matrix& a, std::vector<std::size_t>& piv, bool regularize = false) {
  const std::size_t n = a.rows();
  piv.resize(n);
  std::iota(piv.begin(), piv.end(), 0);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(piv[k], piv[p]);
      sign = -sign;
    }
    if (a(k, k) == 0.0) {
      if (!regularize) return 0;
      a(k, k) = kEps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      a(i, k) /= a(k, k);
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= a(i, k) * a(k, j);
    }
  }
  return sign;
}

std::vector<double> multiply(const Matrix& a, std::span<const double> x) {
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  }
  return y;
}

double perron_residual(const Matrix& a, std::span<const double> x, double r) {
  const auto y = multiply(a, x);
  double res = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) res = std::max(res, std::abs(y[i] - r * x[i]));
  return res;
}

/// Power iteration with sum-one normalization; true once successive iterates agree.
bool power_iterate(const Matrix& b, std::vector<double>& x, int max_iter, double target) {
  for (int it = 0; it < max_iter; ++it) {
    auto y = multiply(b, x);
    const double s = std::accumulate(y.begin(), y.end(), 0.0);
    if (!(s > 0.0)) return false;
    double diff = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] /= s;
      diff = std::max(diff, std::abs(y[i] - x[i]));
    }
    x = std::move(y);
    if (diff < target) return true;
  }
  return false;
}

}  // namespace

double determinant(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::Dimension, "determinant of non-square matrix");
  Matrix lu = a;
  std::vector<std::size_t> piv;
  const int sign = lu_decompose(lu, piv);
  if (sign == 0) return 0.0;
  double det = sign;
  for (std::size_t i = 0; i < lu.rows(); ++i) det *= lu(i, i);
  return det;
}

PerronData perron(const Matrix& a) {
  if (!a.is_square() || a.rows() == 0) throw Error(ErrorKind::Dimension, "perron needs square");
  const std::size_t m = a.rows();
  for (double v : a.data()) {
    if (!(v >= 0.0)) throw Error(ErrorKind::NegativeEntry, "perron needs a non-negative matrix");
  }
  PerronData out;
  if (m == 1) {
    out.r = a(0, 0);
    out.x = {1.0};
    out.zero = !(out.r > 0.0);
    return out;
  }

  std::vector<double> x(m, 1.0 / static_cast<double>(m));
  if (!power_iterate(a, x, 500, 1e-12)) {
    // Periodic or slowly mixing: the shift (A + rho I) / 2 makes the Perron root strictly
    // dominant. rho is a Collatz-Wielandt upper bound, so the shift scales with A.
    std::vector<double> start(m, 1.0 / static_cast<double>(m));
    const auto y = multiply(a, start);
    double rho = 0.0;
    for (std::size_t i = 0; i < m; ++i) rho = std::max(rho, y[i] / start[i]);
    if (!(rho > 0.0)) rho = 1.0;
    Matrix shifted = a;
    for (std::size_t i = 0; i < m; ++i) shifted(i, i) += rho;
    for (std::size_t i = 0; i < m; ++i) {
      for (double& v : shifted.row(i)) v *= 0.5;
    }
    x = std::move(start);
    power_iterate(shifted, x, 20000, 1e-12);
  }

  auto rayleigh = [&](std::span<const double> v) {
    const auto y = multiply(a, v);
    return std::accumulate(y.begin(), y.end(), 0.0) / std::accumulate(v.begin(), v.end(), 0.0);
  };
  double r = rayleigh(x);
  // Inverse iteration at the current estimate polishes the vector to rounding level.
  for (int it = 0; it < 4 && perron_residual(a, x, r) >= 1e-14; ++it) {
    Matrix shifted = a;
    for (std::size_t i = 0; i < m; ++i) shifted(i, i) -= r;
    std::vector<std::size_t> piv;
    lu_decompose(shifted, piv, true);
    std::vector<double> y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = x[piv[i]];
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < i; ++j) y[i] -= shifted(i, j) * y[j];
    }
    for (std::size_t i = m; i-- > 0;) {
      for (std::size_t j = i + 1; j < m; ++j) y[i] -= shifted(i, j) * y[j];
      y[i] /= shifted(i, i);
    }
    const double s = std::accumulate(y.begin(), y.end(), 0.0);
    if (!(std::abs(s) > 0.0) || !std::isfinite(s)) break;
    for (double& v : y) v /= s;
    const double r_next = rayleigh(y);
    if (perron_residual(a, y, r_next) >= perron_residual(a, x, r)) break;
    x = std::move(y);
    r = r_next;
  }

  out.r = r;
  out.x = std::move(x);
  out.residual = perron_residual(a, out.x, r);
  if (!(out.residual < 1e-12)) {
    std::ostringstream os;
    os.precision(6);
    os << "power iteration residual " << out.residual;
    throw Error(ErrorKind::PerronFailure, os.str());
  }
  return out;
}

NormalForm frobenius_normal_form(const Matrix& a, double tol) {
  if (!a.is_square()) throw Error(ErrorKind::Dimension, "normal form of non-square matrix");
  const std::size_t n = a.rows();

  // Tarjan's strongly connected components.
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0, n_comp = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (!(a(v, w) > tol)) continue;
      if (index[w] == kUnset) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp[w] = n_comp;
      } while (w != v);
      ++n_comp;
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] == kUnset) visit(v);
  }

  std::vector<std::vector<std::size_t>> members(n_comp);
  for (std::size_t v = 0; v < n; ++v) members[comp[v]].push_back(v);  // ascending per component

  // Topological order of the condensation; ties by smallest member index.
  std::vector<std::vector<bool>> edge(n_comp, std::vector<bool>(n_comp, false));
  std::vector<std::size_t> indegree(n_comp, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ci = comp[i], cj = comp[j];
      if (ci != cj && a(i, j) > tol && !edge[ci][cj]) {
        edge[ci][cj] = true;
        ++indegree[cj];
      }
    }
  }
  using Entry = std::pair<std::size_t, std::size_t>;  // (smallest member, component)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (std::size_t c = 0; c < n_comp; ++c) {
    if (indegree[c] == 0) ready.emplace(members[c].front(), c);
  }
  NormalForm nf;
  while (!ready.empty()) {
    const std::size_t c = ready.top().second;
    ready.pop();
    const std::size_t begin = nf.perm.size();
    nf.perm.insert(nf.perm.end(), members[c].begin(), members[c].end());
    nf.blocks.emplace_back(begin, nf.perm.size());
    for (std::size_t d = 0; d < n_comp; ++d) {
      if (edge[c][d] && --indegree[d] == 0) ready.emplace(members[d].front(), d);
    }
  }
  return nf;
}

}  // namespace monospec
