#pragma once

#include <string>
#include <vector>

#include "core/hs_basis.hpp"
#include "core/linalg.hpp"

namespace antiq {

// Bloch space-time vector x_mu = Tr(sigma_mu rho); x_0 is the time-like
// component (1 for a trace-one operator).
struct BlochVector {
  int d = 0;
  RVec x;  // length d^2
  std::string basis_tag;

  double time_component() const { return x[0]; }
  double spatial_norm_sq() const { return x.tail(x.size() - 1).squaredNorm(); }
};

// Joint Bloch coordinates x_{mu_1...mu_n} = Tr(rho sigma_{mu_1} x ... x
// sigma_{mu_n}), flattened row-major over (mu_1,...,mu_n).
struct BlochTensor {
  int n = 0;
  int d = 0;
  RVec x;  // length d^{2n}
  std::string basis_tag;
};

// Signed coefficients of det(lambda I - rho) = sum_j (-1)^j a_j lambda^{d-j}.
struct CharPolyCoeffs {
  RVec a;  // a_0..a_d, a_0 = 1
};

struct BodyMembership {
  bool inside = false;
  int worst_index = 0;      // index of the most violated coefficient
  double worst_value = 0.0; // min_j a_j
};

enum class ShrinkMode {
  kOnlyIfOutside,  // leave interior vectors unchanged (default)
  kAlways          // rescale every vector to the boundary along its ray
};

BlochVector to_bloch(const Mat& rho, const HSBasis& b);
Mat from_bloch(const BlochVector& x, const HSBasis& b);

BlochTensor bloch_tensor(const Mat& rho, int n, const HSBasis& b);
Mat from_bloch_tensor(const BlochTensor& t, const HSBasis& b);

// Newton-identity recursion k a_k = sum_{j=1..k} (-1)^{j-1} N_j a_{k-j}
// with power sums N_j = Tr(rho^j).
CharPolyCoeffs char_poly_coeffs(const Mat& rho);

// Membership in the Bloch body: all a_j >= -tol. Requires x_0 = 1.
BodyMembership is_bloch_body(const BlochVector& x, const HSBasis& b,
                             double tol = kTolDerived);

struct AngleBound {
  double cos_theta = 0.0;
  bool pass = false;
};

// cos(theta) between two pure-state Bloch vectors; valid range is
// [-1/(d-1), 1].
AngleBound pure_angle_bound(const BlochVector& x, const BlochVector& y,
                            double tol = 1e-8);

// Scale the spatial part along its ray until the vector lies in the Bloch
// body. Bisection on [0, sqrt(d-1)], interval width 1e-10, <= 200 iterations.
BlochVector shrink_to_body(const BlochVector& x, const HSBasis& b,
                           ShrinkMode mode = ShrinkMode::kOnlyIfOutside,
                           double tol = kTolDerived);

// Partial trace over the complement of `keep` for an n-party state with
// local dimension d. Parties are numbered 0..n-1; keep may be empty.
Mat partial_trace(const Mat& rho, const std::vector<int>& keep, int n, int d);

double purity(const Mat& rho);

}  // namespace antiq
