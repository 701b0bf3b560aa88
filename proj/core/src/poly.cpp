#include "hypcurve/poly.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

#include "hypcurve/errors.hpp"

namespace hypcurve {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex horner_deriv(const std::vector<Complex>& c, Complex z) {
  Complex acc(0.0, 0.0);
  for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k)
    acc = acc * z + static_cast<double>(k) * c[k];
  return acc;
}

}  // namespace

UniPoly::UniPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0, 0.0)) coeffs_.pop_back();
}

UniPoly UniPoly::constant(Complex c) { return UniPoly({c}); }

UniPoly UniPoly::identity() { return UniPoly({Complex(0.0), Complex(1.0)}); }

UniPoly UniPoly::from_roots(std::span<const Complex> roots, Complex leading) {
  std::vector<Complex> c{leading};
  for (Complex r : roots) {
    c.push_back(Complex(0.0));
    for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k)
      c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return UniPoly(std::move(c));
}

Complex UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Complex(0.0);
  return coeffs_[k];
}

Complex UniPoly::leading() const {
  return coeffs_.empty() ? Complex(0.0) : coeffs_.back();
}

double UniPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Complex UniPoly::eval(Complex z) const { return horner(coeffs_, z); }

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Complex> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return UniPoly(std::move(d));
}

UniPoly UniPoly::pow(int e) const {
  UniPoly acc = UniPoly::constant(1.0);
  for (int i = 0; i < e; ++i) acc = acc * (*this);
  return acc;
}

UniPoly UniPoly::trimmed(double rel_tol) const {
  double thr = rel_tol * max_abs_coeff();
  std::vector<Complex> c = coeffs_;
  while (!c.empty() && std::abs(c.back()) <= thr) c.pop_back();
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
  std::vector<Complex> c = coeffs_;
  for (Complex& x : c) x = -x;
  return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Complex(0.0));
  for (size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1, Complex(0.0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(c));
}

UniPoly operator*(Complex s, const UniPoly& p) {
  std::vector<Complex> c = p.coeffs_;
  for (Complex& x : c) x *= s;
  return UniPoly(std::move(c));
}

std::vector<RootCluster> roots(const UniPoly& p, double tol) {
  if (p.is_zero()) throw DegenerateInputError("roots: zero polynomial");
  const int d = p.degree();
  if (d == 0) return {};

  const double scale = p.max_abs_coeff();
  std::vector<Complex> c = p.coeffs();
  for (Complex& x : c) x /= scale;

  // Variable scaling so the companion eigenproblem sees O(1) roots.
  double s = 1.0;
  if (std::abs(c[0]) > 0.0 && std::abs(c[d]) > 0.0)
    s = std::pow(std::abs(c[0]) / std::abs(c[d]), 1.0 / d);
  s = std::clamp(s, 1e-6, 1e6);
  std::vector<Complex> cs = c;
  double sk = 1.0;
  for (int k = 0; k <= d; ++k) {
    cs[k] *= sk;
    sk *= s;
  }

  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) M(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) M(i, d - 1) = -cs[i] / cs[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, false);
  if (es.info() != Eigen::Success)
    throw NumericError("roots: companion eigensolver failed");

  std::vector<Complex> zs(d);
  for (int i = 0; i < d; ++i) zs[i] = s * es.eigenvalues()(i);

  auto polish = [&](Complex z) {
    for (int it = 0; it < 16; ++it) {
      Complex v = horner(c, z);
      Complex dv = horner_deriv(c, z);
      if (std::abs(dv) < 1e-300) break;
      Complex step = v / dv;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      Complex z2 = z - step;
      if (std::abs(horner(c, z2)) >= std::abs(v)) break;
      z = z2;
      if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    return z;
  };
  for (Complex& z : zs) z = polish(z);

  // Relative single-linkage clustering.
  const double radius = std::max(1e-7, 1e3 * kEps);
  std::vector<int> parent(d);
  for (int i = 0; i < d; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      double lim = radius * std::max({1.0, std::abs(zs[i]), std::abs(zs[j])});
      if (std::abs(zs[i] - zs[j]) <= lim) parent[find(i)] = find(j);
    }

  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < d; ++i) groups[find(i)].push_back(i);

  std::vector<RootCluster> out;
  for (auto& [root_id, members] : groups) {
    Complex mean(0.0);
    for (int i : members) mean += zs[i];
    mean /= static_cast<double>(members.size());
    if (members.size() == 1) mean = polish(mean);
    out.push_back({mean, static_cast<int>(members.size())});
  }
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });

  // Backward-error contract on every reported root.
  for (const RootCluster& rc : out) {
    double denom = 0.0, zp = 1.0;
    double az = std::abs(rc.value);
    for (int k = 0; k <= d; ++k) {
      denom += std::abs(c[k]) * zp;
      zp *= std::max(1.0, az);
    }
    double resid = std::abs(horner(c, rc.value)) / std::max(denom, 1e-30);
    // Multiple roots cannot beat eps^(1/m) forward error but their backward
    // error stays tiny; the guard below is on backward error only.
    if (resid > std::max(tol, 1e4 * kEps)) {
      std::vector<Complex> best(out.size());
      for (size_t i = 0; i < out.size(); ++i) best[i] = out[i].value;
      throw NumericError("roots: residual exceeds tolerance", best);
    }
  }
  return out;
}

BiPoly::BiPoly(std::vector<std::vector<Complex>> rows) {
  size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.size());
  if (rows.empty() || width == 0) return;
  zd_ = static_cast<int>(rows.size()) - 1;
  wd_ = static_cast<int>(width) - 1;
  c_.assign(rows.size() * width, Complex(0.0));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) c_[i * width + j] = rows[i][j];
  trim();
}

void BiPoly::trim() {
  if (c_.empty()) {
    zd_ = wd_ = -1;
    return;
  }
  int new_zd = zd_, new_wd = wd_;
  while (new_zd >= 0) {
    bool zero = true;
    for (int j = 0; j <= wd_; ++j)
      if (c_[static_cast<size_t>(new_zd) * (wd_ + 1) + j] != Complex(0.0)) zero = false;
    if (!zero) break;
    --new_zd;
  }
  if (new_zd < 0) {
    c_.clear();
    zd_ = wd_ = -1;
    return;
  }
  while (new_wd >= 0) {
    bool zero = true;
    for (int i = 0; i <= new_zd; ++i)
      if (c_[static_cast<size_t>(i) * (wd_ + 1) + new_wd] != Complex(0.0)) zero = false;
    if (!zero) break;
    --new_wd;
  }
  std::vector<Complex> nc(static_cast<size_t>(new_zd + 1) * (new_wd + 1));
  for (int i = 0; i <= new_zd; ++i)
    for (int j = 0; j <= new_wd; ++j)
      nc[static_cast<size_t>(i) * (new_wd + 1) + j] = c_[static_cast<size_t>(i) * (wd_ + 1) + j];
  c_ = std::move(nc);
  zd_ = new_zd;
  wd_ = new_wd;
}

BiPoly BiPoly::constant(Complex c) { return BiPoly({{c}}); }

BiPoly BiPoly::var_z() { return BiPoly({{Complex(0.0)}, {Complex(1.0)}}); }

BiPoly BiPoly::var_w() { return BiPoly({{Complex(0.0), Complex(1.0)}}); }

BiPoly BiPoly::outer(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  std::vector<std::vector<Complex>> rows(a.coeffs().size());
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    rows[i].resize(b.coeffs().size());
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      rows[i][j] = a.coeffs()[i] * b.coeffs()[j];
  }
  return BiPoly(std::move(rows));
}

BiPoly BiPoly::from_unipoly_in_z(const UniPoly& p) {
  return outer(p, UniPoly::constant(1.0));
}

BiPoly BiPoly::from_unipoly_in_w(const UniPoly& p) {
  return outer(UniPoly::constant(1.0), p);
}

int BiPoly::total_degree() const {
  int td = -1;
  for (int i = 0; i <= zd_; ++i)
    for (int j = 0; j <= wd_; ++j)
      if (coeff(i, j) != Complex(0.0)) td = std::max(td, i + j);
  return td;
}

Complex BiPoly::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i > zd_ || j > wd_) return Complex(0.0);
  return c_[static_cast<size_t>(i) * (wd_ + 1) + j];
}

double BiPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const Complex& x : c_) m = std::max(m, std::abs(x));
  return m;
}

Complex BiPoly::eval(Complex z, Complex w) const {
  if (is_zero()) return Complex(0.0);
  Complex acc(0.0);
  for (int i = zd_; i >= 0; --i) {
    Complex row(0.0);
    for (int j = wd_; j >= 0; --j) row = row * w + coeff(i, j);
    acc = acc * z + row;
  }
  return acc;
}

UniPoly BiPoly::at_z(Complex z0) const { return UniPoly(wcoeffs_at(z0)); }

UniPoly BiPoly::at_w(Complex w0) const {
  if (is_zero()) return UniPoly();
  std::vector<Complex> out(zd_ + 1, Complex(0.0));
  for (int i = 0; i <= zd_; ++i) {
    Complex acc(0.0);
    for (int j = wd_; j >= 0; --j) acc = acc * w0 + coeff(i, j);
    out[i] = acc;
  }
  return UniPoly(std::move(out));
}

std::vector<Complex> BiPoly::wcoeffs_at(Complex z0) const {
  if (is_zero()) return {};
  std::vector<Complex> out(wd_ + 1, Complex(0.0));
  for (int j = 0; j <= wd_; ++j) {
    Complex acc(0.0);
    for (int i = zd_; i >= 0; --i) acc = acc * z0 + coeff(i, j);
    out[j] = acc;
  }
  return out;
}

BiPoly BiPoly::dz() const {
  if (zd_ < 1) return BiPoly();
  std::vector<std::vector<Complex>> rows(zd_);
  for (int i = 1; i <= zd_; ++i) {
    rows[i - 1].resize(wd_ + 1);
    for (int j = 0; j <= wd_; ++j)
      rows[i - 1][j] = static_cast<double>(i) * coeff(i, j);
  }
  return BiPoly(std::move(rows));
}

BiPoly BiPoly::dw() const {
  if (wd_ < 1) return BiPoly();
  std::vector<std::vector<Complex>> rows(zd_ + 1);
  for (int i = 0; i <= zd_; ++i) {
    rows[i].resize(wd_);
    for (int j = 1; j <= wd_; ++j)
      rows[i][j - 1] = static_cast<double>(j) * coeff(i, j);
  }
  return BiPoly(std::move(rows));
}

BiPoly BiPoly::trimmed(double rel_tol) const {
  if (is_zero()) return BiPoly();
  double thr = rel_tol * max_abs_coeff();
  std::vector<std::vector<Complex>> rows(zd_ + 1, std::vector<Complex>(wd_ + 1));
  for (int i = 0; i <= zd_; ++i)
    for (int j = 0; j <= wd_; ++j) {
      Complex v = coeff(i, j);
      rows[i][j] = std::abs(v) <= thr ? Complex(0.0) : v;
    }
  return BiPoly(std::move(rows));
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (Complex& x : r.c_) x = -x;
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  int zd = std::max(a.zd_, b.zd_), wd = std::max(a.wd_, b.wd_);
  if (zd < 0) return BiPoly();
  std::vector<std::vector<Complex>> rows(zd + 1, std::vector<Complex>(wd + 1, Complex(0.0)));
  for (int i = 0; i <= zd; ++i)
    for (int j = 0; j <= wd; ++j) rows[i][j] = a.coeff(i, j) + b.coeff(i, j);
  return BiPoly(std::move(rows));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly();
  std::vector<std::vector<Complex>> rows(a.zd_ + b.zd_ + 1,
                                         std::vector<Complex>(a.wd_ + b.wd_ + 1, Complex(0.0)));
  for (int i = 0; i <= a.zd_; ++i)
    for (int j = 0; j <= a.wd_; ++j) {
      Complex ca = a.coeff(i, j);
      if (ca == Complex(0.0)) continue;
      for (int k = 0; k <= b.zd_; ++k)
        for (int l = 0; l <= b.wd_; ++l) rows[i + k][j + l] += ca * b.coeff(k, l);
    }
  return BiPoly(std::move(rows));
}

BiPoly operator*(Complex s, const BiPoly& f) {
  BiPoly r = f;
  for (Complex& x : r.c_) x *= s;
  r.trim();
  return r;
}

HomoPoly3::HomoPoly3(std::map<std::array<int, 3>, Complex> coeffs, int total_degree)
    : c_(std::move(coeffs)), deg_(total_degree) {
  for (const auto& [e, v] : c_) {
    (void)v;
    if (e[0] + e[1] + e[2] != deg_)
      throw ContractViolation("HomoPoly3: monomial exponents must sum to the total degree");
  }
}

Complex HomoPoly3::eval(Complex t, Complex z, Complex w) const {
  Complex acc(0.0);
  for (const auto& [e, v] : c_)
    acc += v * std::pow(t, e[0]) * std::pow(z, e[1]) * std::pow(w, e[2]);
  return acc;
}

namespace {
BiPoly collapse(const std::map<std::array<int, 3>, Complex>& c, int keep_a, int keep_b) {
  int da = 0, db = 0;
  for (const auto& [e, v] : c) {
    (void)v;
    da = std::max(da, e[keep_a]);
    db = std::max(db, e[keep_b]);
  }
  std::vector<std::vector<Complex>> rows(da + 1, std::vector<Complex>(db + 1, Complex(0.0)));
  for (const auto& [e, v] : c) rows[e[keep_a]][e[keep_b]] += v;
  return BiPoly(std::move(rows));
}
}  // namespace

BiPoly HomoPoly3::dehomogenize_t() const { return collapse(c_, 1, 2); }
BiPoly HomoPoly3::dehomogenize_z() const { return collapse(c_, 0, 2); }
BiPoly HomoPoly3::dehomogenize_w() const { return collapse(c_, 0, 1); }

HomoPoly3 homogenize(const BiPoly& F, int target_degree) {
  if (F.is_zero()) return HomoPoly3({}, target_degree);
  if (target_degree < F.total_degree())
    throw ContractViolation("homogenize: target degree below total degree");
  std::map<std::array<int, 3>, Complex> c;
  for (int i = 0; i <= F.zdeg(); ++i)
    for (int j = 0; j <= F.wdeg(); ++j) {
      Complex v = F.coeff(i, j);
      if (v == Complex(0.0)) continue;
      c[{target_degree - i - j, i, j}] = v;
    }
  return HomoPoly3(std::move(c), target_degree);
}

BiPoly reflect(const BiPoly& F) {
  if (F.is_zero()) throw DegenerateInputError("reflect: zero polynomial");
  int k = F.zdeg(), l = F.wdeg();
  std::vector<std::vector<Complex>> rows(k + 1, std::vector<Complex>(l + 1));
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= l; ++j) rows[i][j] = std::conj(F.coeff(k - i, l - j));
  return BiPoly(std::move(rows));
}

BiPoly shear(const BiPoly& F, Complex t) {
  if (F.is_zero()) return BiPoly();
  int zd = F.zdeg(), wd = F.wdeg();
  std::vector<std::vector<Complex>> rows(zd + 1, std::vector<Complex>(zd + wd + 1, Complex(0.0)));
  // (z + t w)^i expanded by binomials; column shift j + (i - k).
  std::vector<std::vector<double>> binom(zd + 1, std::vector<double>(zd + 1, 0.0));
  for (int n = 0; n <= zd; ++n) {
    binom[n][0] = 1.0;
    for (int k = 1; k <= n; ++k)
      binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : 0.0);
  }
  for (int i = 0; i <= zd; ++i)
    for (int j = 0; j <= wd; ++j) {
      Complex v = F.coeff(i, j);
      if (v == Complex(0.0)) continue;
      Complex tp(1.0);
      for (int k = i; k >= 0; --k) {
        // z^k w^(i-k) term with coefficient C(i,k) t^(i-k)
        rows[k][j + (i - k)] += v * binom[i][k] * tp;
        tp *= t;
      }
    }
  return BiPoly(std::move(rows));
}

Eigen::MatrixXcd sylvester_w(const BiPoly& F, const BiPoly& G, Complex z0) {
  if (F.is_zero() || G.is_zero())
    throw DegenerateInputError("sylvester_w: zero polynomial");
  int p = F.wdeg(), q = G.wdeg();
  if (p < 1 && q < 1)
    throw DegenerateInputError("sylvester_w: both inputs constant in w");
  std::vector<Complex> a = F.wcoeffs_at(z0), b = G.wcoeffs_at(z0);
  int n = p + q;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(n, n);
  for (int r = 0; r < q; ++r)
    for (int k = 0; k <= p; ++k) M(r, r + k) = a[p - k];
  for (int r = 0; r < p; ++r)
    for (int k = 0; k <= q; ++k) M(q + r, r + k) = b[q - k];
  return M;
}

double resultant_scale(const BiPoly& F, const BiPoly& G) {
  auto l1 = [](const BiPoly& P) {
    double s = 0.0;
    for (int i = 0; i <= P.zdeg(); ++i)
      for (int j = 0; j <= P.wdeg(); ++j) s += std::abs(P.coeff(i, j));
    return std::max(s, 1e-300);
  };
  return std::pow(l1(F), G.wdeg()) * std::pow(l1(G), F.wdeg());
}

UniPoly resultant_w(const BiPoly& F, const BiPoly& G) {
  if (F.is_zero() || G.is_zero())
    throw DegenerateInputError("resultant_w: zero polynomial");
  int p = F.wdeg(), q = G.wdeg();
  if (p < 1 && q < 1)
    throw DegenerateInputError("resultant_w: both inputs constant in w");
  // Res_w(F, G) = F(z)^q when F is constant in w, and symmetrically.
  if (p < 1) return F.at_w(0.0).pow(q);
  if (q < 1) return G.at_w(0.0).pow(p);

  const int D = F.zdeg() * q + G.zdeg() * p;
  const int N = D + 1;
  std::vector<Complex> values(N);
  for (int k = 0; k < N; ++k) {
    double ang = 2.0 * std::numbers::pi * k / N;
    Complex zk(std::cos(ang), std::sin(ang));
    values[k] = sylvester_w(F, G, zk).partialPivLu().determinant();
  }
  // Inverse DFT; unit-circle nodes keep the Vandermonde unitary.
  std::vector<Complex> coeffs(N);
  double vmax = 0.0;
  for (int j = 0; j < N; ++j) {
    Complex acc(0.0);
    for (int k = 0; k < N; ++k) {
      double ang = -2.0 * std::numbers::pi * j * k / N;
      acc += values[k] * Complex(std::cos(ang), std::sin(ang));
    }
    coeffs[j] = acc / static_cast<double>(N);
    vmax = std::max(vmax, std::abs(coeffs[j]));
  }
  // Drop interpolation noise at the top end.
  double thr = 1e-13 * vmax;
  while (!coeffs.empty() && std::abs(coeffs.back()) <= thr) coeffs.pop_back();
  return UniPoly(std::move(coeffs));
}

BiPoly quotient_by_z_minus_w(const BiPoly& numerator, double rel_tol) {
  if (numerator.is_zero()) return BiPoly();
  int d = numerator.zdeg();
  if (d < 1) throw NumericError("quotient_by_z_minus_w: numerator constant in z");
  int wd = numerator.wdeg();
  // Synthetic division in z by (z - w): multiplication by w shifts columns.
  std::vector<std::vector<Complex>> q(d, std::vector<Complex>(wd + d + 1, Complex(0.0)));
  for (int j = 0; j <= wd; ++j) q[d - 1][j] = numerator.coeff(d, j);
  for (int i = d - 1; i >= 1; --i) {
    for (int j = 0; j <= wd; ++j) q[i - 1][j] = numerator.coeff(i, j);
    for (int j = wd + d - 1; j >= 0; --j) q[i - 1][j + 1] += q[i][j];
  }
  std::vector<Complex> rem(wd + d + 2, Complex(0.0));
  for (int j = 0; j <= wd; ++j) rem[j] = numerator.coeff(0, j);
  for (int j = wd + d; j >= 0; --j) rem[j + 1] += q[0][j];
  double rmax = 0.0;
  for (const Complex& x : rem) rmax = std::max(rmax, std::abs(x));
  if (rmax > rel_tol * std::max(numerator.max_abs_coeff(), 1e-300))
    throw NumericError("quotient_by_z_minus_w: nonzero remainder");
  return BiPoly(std::move(q));
}

}  // namespace hypcurve
