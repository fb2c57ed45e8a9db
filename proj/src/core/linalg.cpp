#include "core/linalg.hpp"

namespace antiq {

bool is_hermitian(const Mat& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

RVec hermitian_eigenvalues(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double min_eigenvalue(const Mat& h) {
  return hermitian_eigenvalues(h).minCoeff();
}

bool is_psd(const Mat& h, double slack) {
  if (!is_hermitian(h, 1e-9 * (1.0 + h.cwiseAbs().maxCoeff()))) return false;
  RVec ev = hermitian_eigenvalues(h);
  double scale = ev.cwiseAbs().maxCoeff();
  return ev.minCoeff() >= -slack * static_cast<double>(h.rows()) * scale;
}

Mat sqrt_psd(const Mat& h, double slack) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  RVec ev = es.eigenvalues();
  double scale = ev.cwiseAbs().maxCoeff();
  double floor = -slack * static_cast<double>(h.rows()) * scale;
  RVec root(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] < floor)
      throw std::domain_error("sqrt_psd: matrix has negative spectrum");
    root[i] = ev[i] > 0.0 ? std::sqrt(ev[i]) : 0.0;
  }
  return es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vec vec_rowmajor(const Mat& a) {
  Vec v(a.rows() * a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) v[i * a.cols() + j] = a(i, j);
  return v;
}

Mat unvec_rowmajor(const Vec& v, int rows, int cols) {
  if (v.size() != static_cast<Eigen::Index>(rows) * cols)
    throw std::invalid_argument("unvec_rowmajor: size mismatch");
  Mat a(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a(i, j) = v[i * cols + j];
  return a;
}

cplx hs_inner(const Mat& a, const Mat& b) {
  return (a.adjoint() * b).trace();
}

cplx trace_prod(const Mat& a, const Mat& b) {
  return (a.transpose().cwiseProduct(b)).sum();
}

RVec root_cross_singular_values(const Mat& rho, const Mat& sigma) {
  Mat m = sqrt_psd(rho) * sqrt_psd(sigma);
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues();
}

}  // namespace antiq
