#pragma once

#include <string>
#include <vector>

#include "core/linalg.hpp"

namespace antiq {

// Ordered Hilbert-Schmidt basis {sigma_mu}: sigma_0 = identity, the rest
// traceless Hermitian, Tr(sigma_mu sigma_nu) = d delta_{mu nu}.
//
// Ordering of the generalized Gell-Mann construction: index 0 is the
// identity, then symmetric pair matrices for (j<k) in lexicographic order,
// then antisymmetric pairs, then diagonal matrices. For d=3 the interleaved
// Gell-Mann-compatible ordering (sigma_1..sigma_8) is used instead so that
// the matrices agree entrywise with the standard su(3) generators scaled to
// this normalization. A basis object always carries its own element list,
// so downstream code never assumes a particular ordering.
struct HSBasis {
  int d = 0;
  std::vector<Mat> elements;  // size d*d
  std::string tag;
};

struct BasisCheck {
  bool identity_ok = false;
  bool traceless_ok = false;
  bool hermitian_ok = false;
  bool orthogonality_ok = false;
  double max_identity_violation = 0.0;
  double max_trace_violation = 0.0;
  double max_hermiticity_violation = 0.0;
  double max_orthogonality_violation = 0.0;
  bool pass() const {
    return identity_ok && traceless_ok && hermitian_ok && orthogonality_ok;
  }
  double max_violation() const;
};

// Sparse 3-index structure constants of the (anti)commutation relations
//   [sigma_j, sigma_k] = i * 2*sqrt(d/2) * sum_l f_{jkl} sigma_l
//   {sigma_j, sigma_k} = 2 delta_{jk} I + sqrt(2d) * sum_l g_{jkl} sigma_l
// over spatial indices j,k,l in {1,...,d^2-1}.
struct StructureConstants {
  struct Entry {
    int j, k, l;
    double value;
  };
  int d = 0;
  std::vector<Entry> f;  // antisymmetric in (j,k)
  std::vector<Entry> g;  // symmetric in (j,k)
  double f_prefactor = 0.0;  // 2*sqrt(d/2)
  double g_prefactor = 0.0;  // sqrt(2d)

  double f_at(int j, int k, int l) const;
  double g_at(int j, int k, int l) const;
};

// Generalized Gell-Mann basis for dimension d >= 2.
HSBasis ggm_basis(int d);

// Tensor-product basis on (C^d)^{otimes n}; element index is row-major over
// (mu_1,...,mu_n). Satisfies the HSBasis contract with dimension d^n.
HSBasis product_basis(const HSBasis& b, int n);

BasisCheck verify_hs_basis(const HSBasis& b, double tol = kTolExact);

// Extract f and g by trace projection. Requires an orthogonal basis.
StructureConstants structure_constants(const HSBasis& b,
                                       double drop_below = kTolExact);

// sigma_j sigma_k rebuilt from (f,g):
//   delta_{jk} I + i*sqrt(d/2)*sum f sigma_l + sqrt(2d)/2 * sum g sigma_l
Mat reconstruct_product(const HSBasis& b, const StructureConstants& sc, int j,
                        int k);

}  // namespace antiq
