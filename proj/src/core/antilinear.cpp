#include "core/antilinear.hpp"

#include <cmath>
#include <numbers>

namespace antiq {

namespace {

void check_square_input(const AntilinearSuperOp& m, const Mat& rho) {
  if (rho.rows() != m.dim_in || rho.cols() != m.dim_in)
    throw std::invalid_argument("superop apply: dimension mismatch");
}

// Tr over the inner (second, fast) factor of a (d*e) x (d*e) matrix.
Mat trace_inner(const Mat& m, int d, int e) {
  Mat out = Mat::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int t = 0; t < e; ++t) out(i, k) += m(i * e + t, k * e + t);
  return out;
}

// Tr over the outer (first, slow) factor of a (e*d) x (e*d) matrix.
Mat trace_outer(const Mat& m, int e, int d) {
  Mat out = Mat::Zero(d, d);
  for (int j = 0; j < d; ++j)
    for (int l = 0; l < d; ++l)
      for (int t = 0; t < e; ++t) out(j, l) += m(t * d + j, t * d + l);
  return out;
}

}  // namespace

Mat AntilinearSuperOp::apply(const Mat& rho) const {
  check_square_input(*this, rho);
  Mat out = Mat::Zero(dim_out, dim_out);
  Mat conj = rho.conjugate();
  for (const auto& p : pairs) out += p.A * conj * p.B.adjoint();
  return out;
}

Mat LinearSuperOp::apply(const Mat& rho) const {
  if (rho.rows() != dim_in || rho.cols() != dim_in)
    throw std::invalid_argument("superop apply: dimension mismatch");
  Mat out = Mat::Zero(dim_out, dim_out);
  for (const auto& p : pairs) out += p.A * rho * p.B.adjoint();
  return out;
}

Mat StinespringPair::apply(const Mat& rho) const {
  Mat big = U * rho.conjugate() * V.adjoint();
  int dim_out = static_cast<int>(U.rows()) / env;
  return trace_inner(big, dim_out, env);
}

AntilinearSuperOp conjugation(int dim) {
  AntilinearSuperOp k;
  k.dim_in = k.dim_out = dim;
  k.pairs.push_back({Mat::Identity(dim, dim), Mat::Identity(dim, dim)});
  return k;
}

AntilinearSuperOp antilinear_adjoint(const AntilinearSuperOp& m) {
  AntilinearSuperOp out;
  out.dim_in = m.dim_out;
  out.dim_out = m.dim_in;
  for (const auto& p : m.pairs)
    out.pairs.push_back({p.A.transpose(), p.B.transpose()});
  return out;
}

LinearSuperOp compose(const AntilinearSuperOp& m, const AntilinearSuperOp& n) {
  if (m.dim_in != n.dim_out)
    throw std::invalid_argument("compose: dimension mismatch");
  LinearSuperOp out;
  out.dim_in = n.dim_in;
  out.dim_out = m.dim_out;
  for (const auto& pm : m.pairs)
    for (const auto& pn : n.pairs)
      out.pairs.push_back(
          {pm.A * pn.A.conjugate(), pm.B * pn.B.conjugate()});
  return out;
}

AntilinearSuperOp compose(const LinearSuperOp& l, const AntilinearSuperOp& m) {
  if (l.dim_in != m.dim_out)
    throw std::invalid_argument("compose: dimension mismatch");
  AntilinearSuperOp out;
  out.dim_in = m.dim_in;
  out.dim_out = l.dim_out;
  for (const auto& pl : l.pairs)
    for (const auto& pm : m.pairs)
      out.pairs.push_back({pl.A * pm.A, pl.B * pm.B});
  return out;
}

AntilinearSuperOp compose(const AntilinearSuperOp& m, const LinearSuperOp& l) {
  if (m.dim_in != l.dim_out)
    throw std::invalid_argument("compose: dimension mismatch");
  AntilinearSuperOp out;
  out.dim_in = l.dim_in;
  out.dim_out = m.dim_out;
  // M(L(rho)) = sum A_m (C rho D^dag)^* B_m^dag
  for (const auto& pm : m.pairs)
    for (const auto& pl : l.pairs)
      out.pairs.push_back(
          {pm.A * pl.A.conjugate(), pm.B * pl.B.conjugate()});
  return out;
}

AntilinearSuperOp tensor(const AntilinearSuperOp& m,
                         const AntilinearSuperOp& n) {
  AntilinearSuperOp out;
  out.dim_in = m.dim_in * n.dim_in;
  out.dim_out = m.dim_out * n.dim_out;
  for (const auto& pm : m.pairs)
    for (const auto& pn : n.pairs)
      out.pairs.push_back({kron(pm.A, pn.A), kron(pm.B, pn.B)});
  return out;
}

Mat natural_rep(const AntilinearSuperOp& m) {
  Mat out = Mat::Zero(static_cast<long>(m.dim_out) * m.dim_out,
                      static_cast<long>(m.dim_in) * m.dim_in);
  for (const auto& p : m.pairs) out += kron(p.A, p.B.conjugate());
  return out;
}

ChoiMatrix choi(const AntilinearSuperOp& m) {
  ChoiMatrix c;
  c.dim_in = m.dim_in;
  c.dim_out = m.dim_out;
  long n = static_cast<long>(m.dim_in) * m.dim_out;
  c.J = Mat::Zero(n, n);
  for (const auto& p : m.pairs) {
    Vec va = vec_rowmajor(p.A);
    Vec vb = vec_rowmajor(p.B);
    c.J += va * vb.adjoint();
  }
  return c;
}

Mat apply_via_choi(const ChoiMatrix& j, const Mat& rho) {
  if (rho.rows() != j.dim_in || rho.cols() != j.dim_in)
    throw std::invalid_argument("apply_via_choi: dimension mismatch");
  Mat big = j.J * kron(Mat::Identity(j.dim_out, j.dim_out), rho.adjoint());
  return trace_inner(big, j.dim_out, j.dim_in);
}

AntilinearSuperOp kraus_from_choi(const ChoiMatrix& c, double rel_threshold) {
  AntilinearSuperOp out;
  out.dim_in = c.dim_in;
  out.dim_out = c.dim_out;
  double scale = c.J.cwiseAbs().maxCoeff();
  if (scale == 0.0) return out;  // zero map, empty pair list
  double hermiticity = (c.J - c.J.adjoint()).cwiseAbs().maxCoeff();
  if (hermiticity <= 1e-12 * (1.0 + scale)) {
    Eigen::SelfAdjointEigenSolver<Mat> es(c.J);
    double lmax = es.eigenvalues().cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      double lambda = es.eigenvalues()[i];
      if (std::abs(lambda) <= rel_threshold * lmax) continue;
      double r = std::sqrt(std::abs(lambda));
      Mat u = unvec_rowmajor(es.eigenvectors().col(i), c.dim_out, c.dim_in);
      out.pairs.push_back(
          {r * u, (lambda >= 0 ? r : -r) * u});
    }
  } else {
    Eigen::JacobiSVD<Mat> svd(c.J,
                              Eigen::ComputeThinU | Eigen::ComputeThinV);
    double smax = svd.singularValues().maxCoeff();
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
      double s = svd.singularValues()[i];
      if (s <= rel_threshold * smax) continue;
      double r = std::sqrt(s);
      out.pairs.push_back(
          {r * unvec_rowmajor(svd.matrixU().col(i), c.dim_out, c.dim_in),
           r * unvec_rowmajor(svd.matrixV().col(i), c.dim_out, c.dim_in)});
    }
  }
  return out;
}

StinespringPair stinespring(const AntilinearSuperOp& m) {
  StinespringPair s;
  s.env = static_cast<int>(m.pairs.size());
  if (s.env == 0) {
    s.env = 1;
    s.U = Mat::Zero(m.dim_out, m.dim_in);
    s.V = Mat::Zero(m.dim_out, m.dim_in);
    return s;
  }
  s.U = Mat::Zero(static_cast<long>(m.dim_out) * s.env, m.dim_in);
  s.V = Mat::Zero(static_cast<long>(m.dim_out) * s.env, m.dim_in);
  for (int j = 0; j < s.env; ++j)
    for (int r = 0; r < m.dim_out; ++r) {
      s.U.row(static_cast<long>(r) * s.env + j) = m.pairs[j].A.row(r);
      s.V.row(static_cast<long>(r) * s.env + j) = m.pairs[j].B.row(r);
    }
  return s;
}

bool is_antilinear_tp(const AntilinearSuperOp& m, double tol) {
  Mat acc = Mat::Zero(m.dim_in, m.dim_in);
  for (const auto& p : m.pairs) acc += p.A.adjoint() * p.B;
  bool kraus_route =
      (acc - Mat::Identity(m.dim_in, m.dim_in)).cwiseAbs().maxCoeff() < tol;
  Mat tr = trace_outer(choi(m).J, m.dim_out, m.dim_in);
  bool choi_route =
      (tr - Mat::Identity(m.dim_in, m.dim_in)).cwiseAbs().maxCoeff() < tol;
  if (kraus_route != choi_route)
    throw std::logic_error("is_antilinear_tp: representation routes disagree");
  return kraus_route;
}

bool is_antilinear_cp(const AntilinearSuperOp& m, double tol) {
  Mat j = choi(m).J;
  double scale = j.cwiseAbs().maxCoeff();
  if ((j - j.adjoint()).cwiseAbs().maxCoeff() > tol * (1.0 + scale))
    return false;
  return is_psd(0.5 * (j + j.adjoint()));
}

bool is_antilinear_channel(const AntilinearSuperOp& m, double tol) {
  return is_antilinear_cp(m, tol) && is_antilinear_tp(m, tol);
}

bool is_unital(const AntilinearSuperOp& m, double tol) {
  if (m.dim_in != m.dim_out)
    throw std::invalid_argument("is_unital: map must be square");
  Mat img = m.apply(Mat::Identity(m.dim_in, m.dim_in));
  return (img - Mat::Identity(m.dim_out, m.dim_out)).cwiseAbs().maxCoeff() <
         tol;
}

bool is_doubly_stochastic(const AntilinearSuperOp& m, double tol) {
  return is_unital(m, tol) && is_antilinear_tp(m, tol);
}

AntiunitaryCheck is_antiunitary(const AntilinearSuperOp& m, double tol) {
  AntiunitaryCheck r;
  if (m.dim_in != m.dim_out) return r;
  Mat j = choi(m).J;
  double scale = j.cwiseAbs().maxCoeff();
  if (scale == 0.0) return r;
  if ((j - j.adjoint()).cwiseAbs().maxCoeff() > tol * (1.0 + scale)) return r;
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (j + j.adjoint()));
  RVec ev = es.eigenvalues();
  double lmax = ev.cwiseAbs().maxCoeff();
  // rank-1 PSD: exactly one significant eigenvalue and it is positive
  int significant = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev[i]) > tol * lmax * ev.size()) ++significant;
  if (significant != 1 || ev.maxCoeff() <= 0) return r;
  Mat u = std::sqrt(ev.maxCoeff()) *
          unvec_rowmajor(es.eigenvectors().col(ev.size() - 1), m.dim_out,
                         m.dim_in);
  if ((u * u.adjoint() - Mat::Identity(m.dim_out, m.dim_out))
          .cwiseAbs()
          .maxCoeff() > tol * m.dim_out)
    return r;
  r.antiunitary = true;
  r.u = u;
  return r;
}

AntilinearSuperOp mixed_antiunitary(const std::vector<double>& ps,
                                    const std::vector<Mat>& us) {
  if (ps.size() != us.size() || ps.empty())
    throw std::invalid_argument("mixed_antiunitary: size mismatch");
  double total = 0.0;
  for (double p : ps) {
    if (p < 0) throw std::invalid_argument("mixed_antiunitary: negative weight");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("mixed_antiunitary: weights must sum to 1");
  const int d = static_cast<int>(us.front().rows());
  AntilinearSuperOp out;
  out.dim_in = out.dim_out = d;
  for (size_t j = 0; j < us.size(); ++j) {
    const Mat& u = us[j];
    if (u.rows() != d || u.cols() != d ||
        (u * u.adjoint() - Mat::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10)
      throw std::invalid_argument("mixed_antiunitary: non-unitary member");
    double r = std::sqrt(ps[j]);
    out.pairs.push_back({r * u, r * u});
  }
  return out;
}

Mat weyl_x(int n_dim) {
  Mat x = Mat::Zero(n_dim, n_dim);
  for (int k = 0; k < n_dim; ++k) x((k + 1) % n_dim, k) = 1.0;
  return x;
}

Mat weyl_z(int n_dim) {
  Mat z = Mat::Zero(n_dim, n_dim);
  for (int k = 0; k < n_dim; ++k)
    z(k, k) = std::polar(1.0, 2.0 * std::numbers::pi * k / n_dim);
  return z;
}

AntilinearSuperOp weyl_covariant(const std::vector<double>& p, int n_dim) {
  if (static_cast<int>(p.size()) != n_dim * n_dim)
    throw std::invalid_argument("weyl_covariant: distribution size mismatch");
  std::vector<double> ps;
  std::vector<Mat> us;
  Mat x = weyl_x(n_dim), z = weyl_z(n_dim);
  double total = 0.0;
  for (double w : p) {
    if (w < 0) throw std::invalid_argument("weyl_covariant: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("weyl_covariant: weights must sum to 1");
  Mat xi = Mat::Identity(n_dim, n_dim);
  for (int i = 0; i < n_dim; ++i) {
    Mat w = xi;
    for (int j = 0; j < n_dim; ++j) {
      ps.push_back(p[i * n_dim + j]);
      us.push_back(w);
      w = w * z;
    }
    xi = x * xi;
  }
  return mixed_antiunitary(ps, us);
}

}  // namespace antiq
