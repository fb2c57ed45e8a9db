#include "core/sampling.hpp"

namespace antiq {

Mat ginibre(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      double re = gauss(rng);
      double im = gauss(rng);
      g(i, j) = cplx(re, im);
    }
  return g;
}

Vec haar_state(int dim, std::mt19937_64& rng) {
  Vec v = ginibre(dim, 1, rng).col(0);
  return v / v.norm();
}

Mat haar_density(int dim, std::mt19937_64& rng) {
  Vec v = haar_state(dim, rng);
  return v * v.adjoint();
}

Mat random_density(int dim, int rank, std::mt19937_64& rng) {
  Mat g = ginibre(dim, rank, rng);
  Mat rho = g * g.adjoint();
  return rho / rho.trace();
}

Mat random_trace_one_hermitian(int dim, std::mt19937_64& rng) {
  Mat g = ginibre(dim, dim, rng);
  Mat h = 0.5 * (g + g.adjoint());
  Mat shift = (1.0 - h.trace()) / static_cast<double>(dim) *
              Mat::Identity(dim, dim);
  return h + shift;
}

Mat random_unitary(int dim, std::mt19937_64& rng) {
  Mat g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

AntilinearSuperOp random_antilinear_cp(int dim_in, int dim_out, int pairs,
                                       std::mt19937_64& rng) {
  AntilinearSuperOp m;
  m.dim_in = dim_in;
  m.dim_out = dim_out;
  for (int j = 0; j < pairs; ++j) {
    Mat a = ginibre(dim_out, dim_in, rng);
    m.pairs.push_back({a, a});
  }
  return m;
}

AntilinearSuperOp random_antilinear(int dim_in, int dim_out, int pairs,
                                    std::mt19937_64& rng) {
  AntilinearSuperOp m;
  m.dim_in = dim_in;
  m.dim_out = dim_out;
  for (int j = 0; j < pairs; ++j)
    m.pairs.push_back(
        {ginibre(dim_out, dim_in, rng), ginibre(dim_out, dim_in, rng)});
  return m;
}

AntilinearSuperOp random_antilinear_channel(int dim_in, int dim_out, int rank,
                                            std::mt19937_64& rng) {
  Mat g = ginibre(dim_in * dim_out, rank, rng);
  ChoiMatrix c;
  c.dim_in = dim_in;
  c.dim_out = dim_out;
  c.J = g * g.adjoint();
  // T = Tr_out J, acting on the input factor
  Mat t = Mat::Zero(dim_in, dim_in);
  for (int j = 0; j < dim_in; ++j)
    for (int l = 0; l < dim_in; ++l)
      for (int i = 0; i < dim_out; ++i)
        t(j, l) += c.J(static_cast<long>(i) * dim_in + j,
                       static_cast<long>(i) * dim_in + l);
  Eigen::SelfAdjointEigenSolver<Mat> es(t);
  RVec inv_root = es.eigenvalues().cwiseSqrt().cwiseInverse();
  Mat s = es.eigenvectors() * inv_root.asDiagonal() * es.eigenvectors().adjoint();
  Mat scale = kron(Mat::Identity(dim_out, dim_out), s);
  c.J = scale * c.J * scale;
  return kraus_from_choi(c);
}

}  // namespace antiq
