// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#include "monolie/operator_calculus.hpp"

#include <cmath>
#include <stdexcept>

#include "monolie/legendre.hpp"
#include "monolie/quadrature.hpp"
#include "monolie/rng.hpp"

namespace monolie {

void MatrixTuple::validate() const {
  if (n < 1 || static_cast<int>(A.size()) != n)
    throw std::invalid_argument("tuple must hold n matrices");
  if (d < 1 || d > 16)
    throw std::invalid_argument("matrix dimension must be in [1, 16]");
  for (const auto& m : A) {
    if (m.rows() != d || m.cols() != d)
      throw std::invalid_argument("tuple matrices must all be d x d");
    if (!m.allFinite())
      throw std::invalid_argument("tuple entries must be finite");
  }
}

CliffordMatrix CliffordMatrix::zero(int n, int d) {
  CliffordMatrix out;
  out.n = n;
  out.d = d;
  out.blades.assign(std::size_t(1) << n, Eigen::MatrixXcd::Zero(d, d));
  return out;
}

double CliffordMatrix::norm() const {
  double s = 0.0;
  for (const auto& b : blades) s += b.squaredNorm();
  return std::sqrt(s);
}

double tuple_norm(const MatrixTuple& A) {
  A.validate();
  double s = 0.0;
  for (const auto& m : A.A) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    double top = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    s += top * top;
  }
  return std::sqrt(s);
}

namespace {

// Memoized symmetrized words: Sym(alpha) = sum_j (alpha_j / |alpha|)
// A_j Sym(alpha - delta_j).
class SymCache {
 public:
  explicit SymCache(const MatrixTuple& A) : A_(A) {}

  const Eigen::MatrixXcd& get(const std::vector<int>& alpha) {
    auto it = memo_.find(alpha);
    if (it != memo_.end()) return it->second;
    int total = 0;
    for (int a : alpha) total += a;
    Eigen::MatrixXcd m;
    if (total == 0) {
      m = Eigen::MatrixXcd::Identity(A_.d, A_.d);
    } else {
      m = Eigen::MatrixXcd::Zero(A_.d, A_.d);
      std::vector<int> prev = alpha;
      for (int j = 0; j < A_.n; ++j) {
        if (alpha[j] == 0) continue;
        prev[j] -= 1;
        m += (static_cast<double>(alpha[j]) / total) * (A_.A[j] * get(prev));
        prev[j] += 1;
      }
    }
    return memo_.emplace(alpha, std::move(m)).first->second;
  }

 private:
  const MatrixTuple& A_;
  std::map<std::vector<int>, Eigen::MatrixXcd> memo_;
};

// All multi-indices over n slots with |gamma| = k, lexicographic.
void enumerate_degree(int n, int k, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(k);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = k; v >= 0; --v) {
    cur.push_back(v);
    enumerate_degree(n, k - v, cur, out);
    cur.pop_back();
  }
}

// Expansion data of the scalar radial factor R(x) = |omega - x|^{-(n+1)}:
// per multi-index gamma the coefficient of x^gamma is
//   rho[gamma](omega) = r^{-(n+1)-k} sum_entries factor * unit^{expo},
// where k = |gamma|, r = |omega| and unit = omega / r (spatial part).
struct SeriesTable {
  int n = 0;
  int K = 0;
  std::vector<std::vector<int>> gamma;   // graded lexicographic
  std::vector<int> offset;               // first index of each degree
  struct Entry {
    std::vector<int> expo;  // spatial powers of the unit direction
    double factor;
  };
  std::vector<std::vector<Entry>> entries;  // per gamma
  std::vector<std::vector<int>> prev;       // index of gamma - delta_j or -1
};

SeriesTable build_series_table(int n, int K) {
  SeriesTable t;
  t.n = n;
  t.K = K;
  std::map<std::vector<int>, int> index;
  for (int k = 0; k <= K; ++k) {
    t.offset.push_back(static_cast<int>(t.gamma.size()));
    std::vector<int> cur;
    std::vector<std::vector<int>> level;
    enumerate_degree(n, k, cur, level);
    for (auto& g : level) {
      index.emplace(g, static_cast<int>(t.gamma.size()));
      t.gamma.push_back(g);
    }
  }
  t.offset.push_back(static_cast<int>(t.gamma.size()));

  // Factorial table (double; exact up to 22!, adequately accurate beyond).
  std::vector<double> fact(std::size_t(2 * K + 4), 1.0);
  for (std::size_t i = 1; i < fact.size(); ++i)
    fact[i] = fact[i - 1] * static_cast<double>(i);

  t.entries.resize(t.gamma.size());
  t.prev.resize(t.gamma.size());
  for (std::size_t gi = 0; gi < t.gamma.size(); ++gi) {
    const std::vector<int>& g = t.gamma[gi];
    int k = 0;
    for (int v : g) k += v;
    // gamma - delta_j lookups.
    t.prev[gi].assign(n, -1);
    std::vector<int> gm = g;
    for (int j = 0; j < n; ++j) {
      if (g[j] == 0) continue;
      gm[j] -= 1;
      t.prev[gi][j] = index.at(gm);
      gm[j] += 1;
    }
    // Q_{k,n+3} coefficients against the multinomial split
    //   x^gamma coeff of <omega,x>^{k-2j} (x.x)^j.
    double Ck = (static_cast<double>(n) + 1.0) / (2 * k + n + 1) *
                static_cast<double>(dim_harmonics(k, n + 3));
    const std::vector<double>& a =
        HomogenizedLegendre::get(k, n + 3)->coefficients();
    // Enumerate m <= gamma/2 componentwise.
    std::vector<int> m(n, 0);
    for (;;) {
      int j = 0;
      for (int v : m) j += v;
      bool ok = true;
      for (int i = 0; i < n; ++i)
        if (2 * m[i] > g[i]) ok = false;
      if (ok && j <= k / 2) {
        int p = k - 2 * j;
        double f = a[j] * Ck * fact[j] * fact[p];
        for (int i = 0; i < n; ++i)
          f /= fact[m[i]] * fact[g[i] - 2 * m[i]];
        SeriesTable::Entry e;
        e.expo.resize(n);
        for (int i = 0; i < n; ++i) e.expo[i] = g[i] - 2 * m[i];
        e.factor = f;
        t.entries[gi].push_back(std::move(e));
      }
      // Next m in the box [0, floor(gamma/2)].
      int carry = 0;
      while (carry < n) {
        m[carry] += 1;
        if (2 * m[carry] <= g[carry]) break;
        m[carry] = 0;
        ++carry;
      }
      if (carry == n) break;
    }
  }
  return t;
}

// rho values (already divided by sigma_n) for all gamma at one node.
std::vector<double> rho_at(const SeriesTable& t, double r,
                           const std::vector<double>& unit_spatial,
                           double inv_sigma) {
  int K = t.K;
  int n = t.n;
  std::vector<std::vector<double>> pw(n, std::vector<double>(K + 1, 1.0));
  for (int i = 0; i < n; ++i)
    for (int e = 1; e <= K; ++e)
      pw[i][e] = pw[i][e - 1] * unit_spatial[i];
  std::vector<double> rpow(K + 1);
  for (int k = 0; k <= K; ++k) rpow[k] = std::pow(r, -(n + 1) - k);
  std::vector<double> rho(t.gamma.size(), 0.0);
  for (std::size_t gi = 0; gi < t.gamma.size(); ++gi) {
    int k = 0;
    for (int v : t.gamma[gi]) k += v;
    double s = 0.0;
    for (const auto& e : t.entries[gi]) {
      double term = e.factor;
      for (int i = 0; i < n; ++i) term *= pw[i][e.expo[i]];
      s += term;
    }
    rho[gi] = s * rpow[k] * inv_sigma;
  }
  return rho;
}

}  // namespace

Eigen::MatrixXcd symmetric_monomial(const MatrixTuple& A,
                                    const std::vector<int>& alpha) {
  A.validate();
  if (static_cast<int>(alpha.size()) != A.n)
    throw std::invalid_argument("multi-index length mismatch");
  int total = 0;
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("negative multi-index");
    total += a;
  }
  if (total > 8) throw std::domain_error("word too long (|alpha| > 8)");
  SymCache cache(A);
  return cache.get(alpha);
}

Eigen::MatrixXcd symmetric_poly(const MatrixTuple& A,
                                const PolyMultivector& p) {
  A.validate();
  if (p.generators() != A.n)
    throw std::invalid_argument("polynomial variable count mismatch");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(A.d, A.d);
  for (const auto& [e, c] : p.terms()) {
    if (e[0] != 0)
      throw std::invalid_argument("operator calculus polynomial must not use x_0");
    for (unsigned mask = 1; mask < c.size(); ++mask)
      if (std::abs(c[mask]) != 0.0)
        throw std::invalid_argument("operator calculus polynomial must be scalar");
    std::vector<int> alpha(e.begin() + 1, e.end());
    out += c[0] * symmetric_monomial(A, alpha);
  }
  return out;
}

KernelSeriesResult kernel_series_ga(const MatrixTuple& A,
                                    const Paravector& omega, int K) {
  A.validate();
  if (omega.generators() != A.n)
    throw std::invalid_argument("paravector generator count mismatch");
  if (!omega.is_real(0.0))
    throw std::invalid_argument("kernel series needs a real pole");
  if (K < 1) throw std::domain_error("kernel series needs K >= 1");
  int n = A.n;
  double r = omega.norm();
  if (r <= (1.0 + std::sqrt(2.0)) * tuple_norm(A))
    throw std::domain_error(
        "kernel series requires |omega| > (1 + sqrt 2) ||A||");
  SeriesTable table = build_series_table(n, K);
  std::vector<double> unit(n);
  for (int j = 1; j <= n; ++j) unit[j - 1] = omega[j].real() / r;
  std::vector<double> rho =
      rho_at(table, r, unit, 1.0 / sigma_n(n));
  SymCache cache(A);
  CliffordMatrix G = CliffordMatrix::zero(n, A.d);
  std::vector<double> layer_norm(K + 1, 0.0);
  double w0 = omega[0].real();
  for (int k = 0; k <= K; ++k) {
    CliffordMatrix layer = CliffordMatrix::zero(n, A.d);
    for (int gi = table.offset[k]; gi < table.offset[k + 1]; ++gi) {
      const Eigen::MatrixXcd& sym = cache.get(table.gamma[gi]);
      layer.blades[0] += (w0 * rho[gi]) * sym;
      for (int j = 1; j <= n; ++j) {
        double c = -omega[j].real() * rho[gi];
        int pj = table.prev[gi][j - 1];
        if (pj >= 0) c += rho[pj];
        layer.blades[std::size_t(1) << (j - 1)] += c * sym;
      }
    }
    layer_norm[k] = layer.norm();
    for (std::size_t b = 0; b < G.blades.size(); ++b)
      G.blades[b] += layer.blades[b];
  }
  KernelSeriesResult out;
  out.G = std::move(G);
  if (layer_norm[K - 1] > 0.0)
    out.tail_ratio = layer_norm[K] / layer_norm[K - 1];
  if (K >= 4) {
    double head = layer_norm[K - 3] + layer_norm[K - 2];
    double tail = layer_norm[K - 1] + layer_norm[K];
    if (head > 0.0 && tail >= head)
      throw std::runtime_error("kernel series tail is not decaying");
  }
  return out;
}

PhiResult phi_of_a(const MatrixTuple& A, const MonogenicEvaluator& f,
                   double r, int level, int K) {
  A.validate();
  if (K < 4) throw std::domain_error("phi_of_a needs K >= 4");
  int n = A.n;
  if (r <= (1.0 + std::sqrt(2.0)) * tuple_norm(A))
    throw std::domain_error("phi_of_a requires (1 + sqrt 2) ||A|| < r");
  SphereQuadrature quad =
      build_sphere_quadrature(n + 1, level, r, SphereMeasure::Surface);
  SeriesTable table = build_series_table(n, K);
  double inv_sigma = 1.0 / sigma_n(n);
  // M[gamma] = int rho[gamma] (conj(omega) n f) + sum_j rho[gamma-d_j] (e_j n f).
  std::vector<Multivector> M(table.gamma.size(), Multivector(n));
  std::vector<double> unit(n);
  for (std::size_t i = 0; i < quad.size(); ++i) {
    Paravector node(n);
    for (int d = 0; d <= n; ++d) node[d] = quad.nodes[i][d];
    Paravector point(n);
    for (int d = 0; d <= n; ++d) point[d] = quad.nodes[i][d] * r;
    for (int j = 1; j <= n; ++j) unit[j - 1] = quad.nodes[i][j];
    std::vector<double> rho = rho_at(table, r, unit, inv_sigma);
    Multivector X = node.to_multivector() * f(point);
    Multivector Y = point.conjugate().to_multivector() * X;
    std::vector<Multivector> Z;
    Z.reserve(n);
    for (int j = 1; j <= n; ++j)
      Z.push_back(Multivector::blade(n, 1u << (j - 1)) * X);
    double w = quad.weights[i];
    for (std::size_t gi = 0; gi < table.gamma.size(); ++gi) {
      Multivector add = Y;
      add *= cplx(w * rho[gi], 0.0);
      for (int j = 1; j <= n; ++j) {
        int pj = table.prev[gi][j - 1];
        if (pj < 0) continue;
        Multivector zj = Z[j - 1];
        zj *= cplx(w * rho[pj], 0.0);
        add += zj;
      }
      M[gi] += add;
    }
  }
  SymCache cache(A);
  PhiResult out;
  out.phi = Eigen::MatrixXcd::Zero(A.d, A.d);
  std::vector<Eigen::MatrixXcd> blade_mats(
      std::size_t(1) << n, Eigen::MatrixXcd::Zero(A.d, A.d));
  std::vector<double> layer_norm(K + 1, 0.0);
  for (int k = 0; k <= K; ++k) {
    double lnorm = 0.0;
    for (int gi = table.offset[k]; gi < table.offset[k + 1]; ++gi) {
      const Eigen::MatrixXcd& sym = cache.get(table.gamma[gi]);
      double gnorm = 0.0;
      for (unsigned mask = 0; mask < M[gi].size(); ++mask) {
        cplx c = M[gi][mask];
        if (c != cplx(0.0, 0.0)) blade_mats[mask] += c * sym;
        gnorm += std::norm(c);
      }
      lnorm += std::sqrt(gnorm) * sym.norm();
    }
    layer_norm[k] = lnorm;
  }
  out.phi = blade_mats[0];
  for (unsigned mask = 1; mask < blade_mats.size(); ++mask)
    out.off_blade_norms[mask] = blade_mats[mask].norm();
  if (layer_norm[K - 1] > 0.0)
    out.tail_ratio = layer_norm[K] / layer_norm[K - 1];
  double head = layer_norm[K - 3] + layer_norm[K - 2];
  double tail = layer_norm[K - 1] + layer_norm[K];
  if (head > 0.0 && tail >= head)
    throw std::runtime_error("kernel series tail is not decaying");
  return out;
}

double poly_norm_probe(const MatrixTuple& A, int degree, int samples,
                       unsigned seed) {
  A.validate();
  if (degree < 1 || degree > 8)
    throw std::domain_error("probe degree must be in [1, 8]");
  int n = A.n;
  Rng rng(seed);
  std::vector<std::vector<int>> monos;
  std::vector<int> cur;
  enumerate_degree(n, degree, cur, monos);
  // Sup sampling grid: sphere nodes plus random unit vectors.
  std::vector<std::vector<double>> dirs;
  if (n >= 2) {
    SphereQuadrature sq =
        build_sphere_quadrature(n, 24, 1.0, SphereMeasure::Probability);
    dirs = sq.nodes;
  } else {
    dirs.push_back({1.0});
    dirs.push_back({-1.0});
  }
  for (int i = 0; i < 200; ++i) {
    std::vector<double> v(n);
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
      v[j] = rng.normal();
      s += v[j] * v[j];
    }
    if (s == 0.0) continue;
    for (double& c : v) c /= std::sqrt(s);
    dirs.push_back(std::move(v));
  }
  double worst = 0.0;
  for (int t = 0; t < samples; ++t) {
    PolyMultivector p(n);
    std::vector<double> coef(monos.size());
    Exponent e(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < monos.size(); ++i) {
      coef[i] = rng.normal();
      for (int j = 0; j < n; ++j) e[j + 1] = monos[i][j];
      p.add_term(e, Multivector::scalar(n, coef[i]));
    }
    double sup = 0.0;
    for (const auto& dir : dirs) {
      double v = 0.0;
      for (std::size_t i = 0; i < monos.size(); ++i) {
        double m = coef[i];
        for (int j = 0; j < n; ++j)
          for (int pw = 0; pw < monos[i][j]; ++pw) m *= dir[j];
        v += m;
      }
      sup = std::max(sup, std::abs(v));
    }
    if (sup == 0.0) continue;
    Eigen::MatrixXcd pa = symmetric_poly(A, p);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(pa);
    double opn = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    worst = std::max(worst, opn / sup);
  }
  return worst;
}

}  // namespace monolie
