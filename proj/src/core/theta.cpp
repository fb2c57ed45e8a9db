#include "core/theta.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace antiq {

namespace {

void check_signature(const ThetaSignature& sig) {
  if (sig.s.empty() || sig.s[0] != 1)
    throw std::invalid_argument("theta: signature must have s_0 = +1");
  for (int v : sig.s)
    if (v != 1 && v != -1)
      throw std::invalid_argument("theta: signature entries must be +-1");
}

Mat sign_conjugate(const std::vector<int>& s, const Mat& a, const HSBasis& b) {
  if (a.rows() != b.d || a.cols() != b.d)
    throw std::invalid_argument("theta_apply: dimension mismatch");
  Mat out = Mat::Zero(b.d, b.d);
  for (size_t mu = 0; mu < b.elements.size(); ++mu) {
    cplx c = trace_prod(b.elements[mu], a) / static_cast<double>(b.d);
    out += std::conj(c) * static_cast<double>(s[mu]) * b.elements[mu];
  }
  return out;
}

RVec descending_cross_singulars(const Mat& rho, const Mat& sigma) {
  RVec s = root_cross_singular_values(rho, sigma);
  std::sort(s.data(), s.data() + s.size(), std::greater<double>());
  return s;
}

}  // namespace

ThetaSignature full_parity(const HSBasis& b) {
  ThetaSignature sig;
  sig.d = b.d;
  sig.basis_tag = b.tag;
  sig.s.assign(static_cast<size_t>(b.d) * b.d, -1);
  sig.s[0] = 1;
  return sig;
}

ThetaSignature all_plus(const HSBasis& b) {
  ThetaSignature sig;
  sig.d = b.d;
  sig.basis_tag = b.tag;
  sig.s.assign(static_cast<size_t>(b.d) * b.d, 1);
  return sig;
}

ThetaSignature partial_parity(const HSBasis& b,
                              const std::vector<int>& flipped) {
  ThetaSignature sig = all_plus(b);
  for (int j : flipped) {
    if (j < 1 || j >= b.d * b.d)
      throw std::invalid_argument("partial_parity: index out of range");
    sig.s[j] = -1;
  }
  return sig;
}

ThetaSignature tensor_signature(const std::vector<ThetaSignature>& sites) {
  if (sites.empty())
    throw std::invalid_argument("tensor_signature: no sites");
  ThetaSignature out;
  out.d = 1;
  out.s = {1};
  out.basis_tag = sites.front().basis_tag + "^" + std::to_string(sites.size());
  for (const auto& site : sites) {
    check_signature(site);
    out.d *= site.d;
    std::vector<int> next;
    next.reserve(out.s.size() * site.s.size());
    for (int a : out.s)
      for (int b : site.s) next.push_back(a * b);
    out.s = std::move(next);
  }
  return out;
}

Mat theta_apply(const ThetaSignature& sig, const Mat& a, const HSBasis& b) {
  check_signature(sig);
  if (sig.d != b.d || sig.s.size() != b.elements.size())
    throw std::invalid_argument("theta_apply: signature/basis mismatch");
  return sign_conjugate(sig.s, a, b);
}

Mat theta_apply_multi(const std::vector<ThetaSignature>& sites, const Mat& a,
                      const HSBasis& b) {
  ThetaSignature joint = tensor_signature(sites);
  HSBasis pb = product_basis(b, static_cast<int>(sites.size()));
  return sign_conjugate(joint.s, a, pb);
}

AntilinearSuperOp as_superop(const ThetaSignature& sig, const HSBasis& b) {
  check_signature(sig);
  const int d = b.d;
  ChoiMatrix c;
  c.dim_in = c.dim_out = d;
  c.J = Mat::Zero(static_cast<long>(d) * d, static_cast<long>(d) * d);
  // J[(a,i),(b,j)] = Theta_L(E_ij)[a,b] with Theta_L(E_ij) = Theta(E_ij).
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Mat e = Mat::Zero(d, d);
      e(i, j) = 1.0;
      Mat img = theta_apply(sig, e, b);
      for (int ai = 0; ai < d; ++ai)
        for (int bi = 0; bi < d; ++bi)
          c.J(static_cast<long>(ai) * d + i, static_cast<long>(bi) * d + j) =
              img(ai, bi);
    }
  return kraus_from_choi(c);
}

bool is_generalized_theta(const AntilinearSuperOp& m, double tol) {
  if (m.dim_in != m.dim_out) return false;
  if (!is_unital(m, tol)) return false;
  LinearSuperOp round_trip = compose(antilinear_adjoint(m), m);
  const int d = m.dim_in;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Mat e = Mat::Zero(d, d);
      e(i, j) = 1.0;
      if ((round_trip.apply(e) - e).cwiseAbs().maxCoeff() > tol) return false;
    }
  return true;
}

MetricSignature metric_of(const ThetaSignature& sig) {
  check_signature(sig);
  MetricSignature m;
  m.diag = sig.s;
  for (int v : sig.s) (v > 0 ? m.p : m.q)++;
  return m;
}

double theta_inner(const Mat& rho, const Mat& chi, const ThetaSignature& sig,
                   const HSBasis& b) {
  if (rho.rows() != b.d || chi.rows() != b.d)
    throw std::invalid_argument("theta_inner: dimension mismatch");
  return trace_prod(rho, theta_apply(sig, chi, b)).real();
}

double schatten_fidelity(const Mat& rho, const Mat& sigma, double p) {
  if (p < 1.0) throw std::invalid_argument("schatten_fidelity: p must be >= 1");
  RVec s = root_cross_singular_values(rho, sigma);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) acc += std::pow(s[i], p);
  return std::pow(acc, 1.0 / p);
}

double concurrence(const Mat& rho, const Mat& sigma, double p) {
  if (p < 1.0) throw std::invalid_argument("concurrence: p must be >= 1");
  RVec s = descending_cross_singulars(rho, sigma);
  double tail = 0.0;
  for (Eigen::Index i = 1; i < s.size(); ++i) tail += std::pow(s[i], p);
  return std::max(0.0, std::pow(s[0], p) - tail);
}

Mat theta_image(const Mat& rho, const ThetaSignature& sig, const HSBasis& b,
                bool shrink) {
  Mat img = theta_apply(sig, rho, b);
  if (!shrink || is_psd(img)) return img;
  BlochVector v = shrink_to_body(to_bloch(img, b), b);
  return from_bloch(v, b);
}

Mat theta_image_multi(const Mat& rho, const std::vector<ThetaSignature>& sites,
                      const HSBasis& b, bool shrink) {
  ThetaSignature joint = tensor_signature(sites);
  HSBasis pb = product_basis(b, static_cast<int>(sites.size()));
  Mat img = sign_conjugate(joint.s, rho, pb);
  if (!shrink || is_psd(img)) return img;
  BlochVector v = shrink_to_body(to_bloch(img, pb), pb);
  return from_bloch(v, pb);
}

double theta_fidelity(const Mat& rho, const Mat& sigma,
                      const ThetaSignature& sig, double p, const HSBasis& b) {
  return schatten_fidelity(rho, theta_image(sigma, sig, b), p);
}

double theta_fidelity(const Mat& rho, const ThetaSignature& sig, double p,
                      const HSBasis& b) {
  return theta_fidelity(rho, rho, sig, p, b);
}

double theta_concurrence(const Mat& rho, const ThetaSignature& sig, double p,
                         const HSBasis& b) {
  return concurrence(rho, theta_image(rho, sig, b), p);
}

double theta_concurrence_multi(const Mat& rho,
                               const std::vector<ThetaSignature>& sites,
                               double p, const HSBasis& b) {
  return concurrence(rho, theta_image_multi(rho, sites, b), p);
}

}  // namespace antiq
