#include "core/geometry.hpp"

#include <cmath>

namespace antiq {

namespace {

long pow_long(int base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

RMat metric_matrix(const MetricSignature& m) {
  RMat eta = RMat::Zero(m.diag.size(), m.diag.size());
  for (size_t i = 0; i < m.diag.size(); ++i) eta(i, i) = m.diag[i];
  return eta;
}

}  // namespace

double euclidean_norm_sq(const Mat& rho) { return purity(rho); }

double euclidean_norm_sq(const BlochTensor& t) {
  return t.x.squaredNorm() / static_cast<double>(pow_long(t.d, t.n));
}

double lorentz_norm(const Mat& rho, const std::vector<ThetaSignature>& sites,
                    const HSBasis& b) {
  // Raw Theta image here: the quadratic form needs the unshrunk operator.
  return trace_prod(rho, theta_apply_multi(sites, rho, b)).real();
}

double lorentz_norm(const BlochTensor& t,
                    const std::vector<ThetaSignature>& sites) {
  ThetaSignature joint = tensor_signature(sites);
  if (static_cast<Eigen::Index>(joint.s.size()) != t.x.size())
    throw std::invalid_argument("lorentz_norm: signature/tensor mismatch");
  double acc = 0.0;
  for (Eigen::Index i = 0; i < t.x.size(); ++i)
    acc += joint.s[i] * t.x[i] * t.x[i];
  return acc / static_cast<double>(pow_long(t.d, t.n));
}

LkDecomposition l_k(const BlochTensor& t) {
  LkDecomposition out;
  out.n = t.n;
  out.d = t.d;
  out.values = RVec::Zero(t.n + 1);
  const long m = t.d * t.d;
  for (Eigen::Index idx = 0; idx < t.x.size(); ++idx) {
    long rest = idx;
    int spacelike = 0;
    for (int site = 0; site < t.n; ++site) {
      if (rest % m != 0) ++spacelike;
      rest /= m;
    }
    out.values[spacelike] += t.x[idx] * t.x[idx];
  }
  return out;
}

double verify_eq_r(const Mat& psi_rho, int n, const HSBasis& b,
                   double purity_tol) {
  if (std::abs(purity(psi_rho) - 1.0) > purity_tol)
    throw std::invalid_argument("verify_eq_r: state must be pure");
  const double dn = static_cast<double>(pow_long(b.d, n));
  std::vector<ThetaSignature> sites(n, full_parity(b));
  const double lhs =
      (n % 2 == 0 ? 1.0 : -1.0) * dn * lorentz_norm(psi_rho, sites, b);

  BlochTensor t = bloch_tensor(psi_rho, n, b);
  LkDecomposition lk = l_k(t);
  const int delta = (n % 2 == 0) ? 1 : 0;
  double sum_lk = 0.0;
  for (int k = delta; k <= n / 2; ++k) sum_lk += lk.values[2 * k - delta];
  const double rhs = dn * euclidean_norm_sq(t) - 2.0 * sum_lk;
  return std::abs(lhs - rhs);
}

bool check_transform(const GeometricTransform& t, double tol) {
  if (t.matrix.rows() != t.matrix.cols()) return false;
  if (t.kind == TransformKind::kOrthogonal) {
    RMat delta = t.matrix.transpose() * t.matrix -
                 RMat::Identity(t.matrix.rows(), t.matrix.cols());
    return delta.cwiseAbs().maxCoeff() < tol;
  }
  if (static_cast<Eigen::Index>(t.metric.diag.size()) != t.matrix.rows())
    return false;
  RMat eta = metric_matrix(t.metric);
  return (t.matrix.transpose() * eta * t.matrix - eta).cwiseAbs().maxCoeff() <
         tol;
}

TransformResult apply_transform(const GeometricTransform& t, const RVec& x,
                                const HSBasis& body_basis,
                                bool want_physical) {
  if (!check_transform(t))
    throw std::invalid_argument("apply_transform: invalid transform");
  TransformResult r;
  if (t.kind == TransformKind::kOrthogonal) {
    if (t.matrix.rows() != x.size() - 1)
      throw std::invalid_argument("apply_transform: size mismatch");
    r.x = x;
    r.x.tail(x.size() - 1) = t.matrix * x.tail(x.size() - 1);
  } else {
    if (t.matrix.rows() != x.size())
      throw std::invalid_argument("apply_transform: size mismatch");
    r.x = t.matrix * x;
    if (std::abs(r.x[0] - 1.0) > 1e-12) {
      if (r.x[0] == 0.0)
        throw std::domain_error("apply_transform: zero time component");
      r.x /= r.x[0];
      r.rescaled = true;
    }
  }
  if (want_physical) {
    if (static_cast<Eigen::Index>(body_basis.elements.size()) != r.x.size())
      throw std::invalid_argument("apply_transform: basis mismatch");
    BlochVector v;
    v.d = body_basis.d;
    v.x = r.x;
    v.basis_tag = body_basis.tag;
    BlochVector shrunk = shrink_to_body(v, body_basis);
    if ((shrunk.x - v.x).cwiseAbs().maxCoeff() > 0) {
      r.shrunk = true;
      r.x = shrunk.x;
    }
  }
  return r;
}

RMat random_orthogonal(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  RMat g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = gauss(rng);
  Eigen::HouseholderQR<RMat> qr(g);
  RMat q = qr.householderQ();
  RMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i)
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  return q;
}

RMat lorentz_boost(int dim, int axis, double rapidity) {
  if (axis < 1 || axis >= dim)
    throw std::invalid_argument("lorentz_boost: axis out of range");
  RMat m = RMat::Identity(dim, dim);
  m(0, 0) = std::cosh(rapidity);
  m(axis, axis) = std::cosh(rapidity);
  m(0, axis) = std::sinh(rapidity);
  m(axis, 0) = std::sinh(rapidity);
  return m;
}

RMat random_lorentz(int dim, std::mt19937_64& rng, int factors,
                    double max_rapidity) {
  std::uniform_int_distribution<int> pick_axis(1, dim - 1);
  std::uniform_real_distribution<double> pick_rapidity(-max_rapidity,
                                                       max_rapidity);
  RMat m = RMat::Identity(dim, dim);
  for (int f = 0; f < factors; ++f) {
    RMat rot = RMat::Identity(dim, dim);
    rot.block(1, 1, dim - 1, dim - 1) = random_orthogonal(dim - 1, rng);
    m = rot * lorentz_boost(dim, pick_axis(rng), pick_rapidity(rng)) * m;
  }
  return m;
}

}  // namespace antiq
