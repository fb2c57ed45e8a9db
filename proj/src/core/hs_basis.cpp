#include "core/hs_basis.hpp"

#include <algorithm>
#include <cmath>

namespace antiq {

namespace {

Mat sym_pair(int d, int j, int k) {
  Mat m = Mat::Zero(d, d);
  double c = std::sqrt(d / 2.0);
  m(j, k) = c;
  m(k, j) = c;
  return m;
}

Mat anti_pair(int d, int j, int k) {
  Mat m = Mat::Zero(d, d);
  double c = std::sqrt(d / 2.0);
  m(j, k) = cplx(0, -c);
  m(k, j) = cplx(0, c);
  return m;
}

Mat diag_elem(int d, int l) {
  Mat m = Mat::Zero(d, d);
  double c = std::sqrt(static_cast<double>(d) / ((l + 1.0) * (l + 2.0)));
  for (int j = 0; j <= l; ++j) m(j, j) = c;
  m(l + 1, l + 1) = -c * (l + 1.0);
  return m;
}

}  // namespace

double BasisCheck::max_violation() const {
  return std::max({max_identity_violation, max_trace_violation,
                   max_hermiticity_violation, max_orthogonality_violation});
}

HSBasis ggm_basis(int d) {
  if (d < 2) throw std::invalid_argument("ggm_basis: d must be >= 2");
  HSBasis b;
  b.d = d;
  b.elements.push_back(Mat::Identity(d, d));
  if (d == 3) {
    // Gell-Mann ordering: lambda_1..lambda_8 scaled to Tr(s_mu s_nu) = 3.
    b.elements.push_back(sym_pair(3, 0, 1));   // sigma_1
    b.elements.push_back(anti_pair(3, 0, 1));  // sigma_2
    b.elements.push_back(diag_elem(3, 0));     // sigma_3
    b.elements.push_back(sym_pair(3, 0, 2));   // sigma_4
    b.elements.push_back(anti_pair(3, 0, 2));  // sigma_5
    b.elements.push_back(sym_pair(3, 1, 2));   // sigma_6
    b.elements.push_back(anti_pair(3, 1, 2));  // sigma_7
    b.elements.push_back(diag_elem(3, 1));     // sigma_8
    b.tag = "ggm-d3-gellmann";
    return b;
  }
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) b.elements.push_back(sym_pair(d, j, k));
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) b.elements.push_back(anti_pair(d, j, k));
  for (int l = 0; l <= d - 2; ++l) b.elements.push_back(diag_elem(d, l));
  b.tag = "ggm-d" + std::to_string(d);
  return b;
}

HSBasis product_basis(const HSBasis& b, int n) {
  if (n < 1) throw std::invalid_argument("product_basis: n must be >= 1");
  HSBasis out;
  out.d = 1;
  for (int i = 0; i < n; ++i) out.d *= b.d;
  out.tag = b.tag + "^" + std::to_string(n);
  out.elements = b.elements;
  for (int site = 1; site < n; ++site) {
    std::vector<Mat> next;
    next.reserve(out.elements.size() * b.elements.size());
    for (const Mat& left : out.elements)
      for (const Mat& right : b.elements) next.push_back(kron(left, right));
    out.elements = std::move(next);
  }
  return out;
}

BasisCheck verify_hs_basis(const HSBasis& b, double tol) {
  BasisCheck r;
  const int d = b.d;
  const auto n = static_cast<int>(b.elements.size());
  if (n != d * d || d < 1) return r;

  r.max_identity_violation =
      (b.elements[0] - Mat::Identity(d, d)).cwiseAbs().maxCoeff();
  r.identity_ok = r.max_identity_violation == 0.0;

  for (int j = 1; j < n; ++j)
    r.max_trace_violation =
        std::max(r.max_trace_violation, std::abs(b.elements[j].trace()));
  r.traceless_ok = r.max_trace_violation <= tol;

  for (const Mat& m : b.elements)
    r.max_hermiticity_violation = std::max(
        r.max_hermiticity_violation, (m - m.adjoint()).cwiseAbs().maxCoeff());
  r.hermitian_ok = r.max_hermiticity_violation <= tol;

  for (int mu = 0; mu < n; ++mu)
    for (int nu = mu; nu < n; ++nu) {
      cplx t = trace_prod(b.elements[mu], b.elements[nu]);
      double expected = (mu == nu) ? static_cast<double>(d) : 0.0;
      r.max_orthogonality_violation =
          std::max(r.max_orthogonality_violation, std::abs(t - expected));
    }
  r.orthogonality_ok = r.max_orthogonality_violation <= tol;
  return r;
}

double StructureConstants::f_at(int j, int k, int l) const {
  for (const auto& e : f)
    if (e.j == j && e.k == k && e.l == l) return e.value;
  return 0.0;
}

double StructureConstants::g_at(int j, int k, int l) const {
  for (const auto& e : g)
    if (e.j == j && e.k == k && e.l == l) return e.value;
  return 0.0;
}

StructureConstants structure_constants(const HSBasis& b, double drop_below) {
  BasisCheck check = verify_hs_basis(b, 1e-10);
  if (!check.orthogonality_ok)
    throw std::invalid_argument(
        "structure_constants: basis is not orthogonal, projection "
        "ill-defined");
  const int d = b.d;
  const int m = d * d;
  StructureConstants sc;
  sc.d = d;
  sc.f_prefactor = 2.0 * std::sqrt(d / 2.0);
  sc.g_prefactor = std::sqrt(2.0 * d);
  for (int j = 1; j < m; ++j)
    for (int k = 1; k < m; ++k) {
      Mat comm = b.elements[j] * b.elements[k] - b.elements[k] * b.elements[j];
      Mat anti = b.elements[j] * b.elements[k] + b.elements[k] * b.elements[j];
      for (int l = 1; l < m; ++l) {
        // f_{jkl} = Tr(sigma_l [sigma_j,sigma_k]) / (i * pf * d)
        cplx fv = trace_prod(b.elements[l], comm) /
                  (cplx(0, 1) * sc.f_prefactor * static_cast<double>(d));
        cplx gv = trace_prod(b.elements[l], anti) /
                  (sc.g_prefactor * static_cast<double>(d));
        if (std::abs(fv) > drop_below)
          sc.f.push_back({j, k, l, fv.real()});
        if (std::abs(gv) > drop_below)
          sc.g.push_back({j, k, l, gv.real()});
      }
    }
  return sc;
}

Mat reconstruct_product(const HSBasis& b, const StructureConstants& sc, int j,
                        int k) {
  const int d = b.d;
  Mat out = (j == k) ? Mat(Mat::Identity(d, d)) : Mat(Mat::Zero(d, d));
  for (const auto& e : sc.f)
    if (e.j == j && e.k == k)
      out += cplx(0, 1) * std::sqrt(d / 2.0) * e.value * b.elements[e.l];
  for (const auto& e : sc.g)
    if (e.j == j && e.k == k)
      out += 0.5 * sc.g_prefactor * e.value * b.elements[e.l];
  return out;
}

}  // namespace antiq
