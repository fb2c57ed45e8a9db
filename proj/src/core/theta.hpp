#pragma once

#include <string>
#include <vector>

#include "core/antilinear.hpp"
#include "core/bloch.hpp"
#include "core/hs_basis.hpp"

namespace antiq {

// Generalized Theta-conjugation as a sign action on a Hilbert-Schmidt basis:
// Theta(sum c_mu sigma_mu) = sum c_mu^* s_mu sigma_mu with s_0 = +1.
struct ThetaSignature {
  int d = 0;
  std::vector<int> s;  // entries +1/-1, s[0] = +1
  std::string basis_tag;
};

// Diagonal metric induced on Bloch space-time vectors.
struct MetricSignature {
  int p = 0;  // number of +1 entries
  int q = 0;  // number of -1 entries
  std::vector<int> diag;
};

// s = (+1, -1, ..., -1): the parity transformation x_0 -> x_0, x -> -x.
ThetaSignature full_parity(const HSBasis& b);

// All-plus signature; the induced map is A -> A^dag.
ThetaSignature all_plus(const HSBasis& b);

// Flip exactly the listed spatial indices (1-based into the basis).
ThetaSignature partial_parity(const HSBasis& b,
                              const std::vector<int>& flipped);

// Signature of the n-fold tensor product Theta^(x)n on the product basis;
// the product sign at (mu_1..mu_n) is the product of per-site signs.
ThetaSignature tensor_signature(const std::vector<ThetaSignature>& sites);

Mat theta_apply(const ThetaSignature& sig, const Mat& a, const HSBasis& b);

// Theta^(x)n acting on a d^n-dimensional operator, one signature per site.
Mat theta_apply_multi(const std::vector<ThetaSignature>& sites, const Mat& a,
                      const HSBasis& b);

// Kraus-pair form whose action matches theta_apply, obtained from the Choi
// matrix of the linearization Theta o K.
AntilinearSuperOp as_superop(const ThetaSignature& sig, const HSBasis& b);

// Unital and M^ddag o M = identity.
bool is_generalized_theta(const AntilinearSuperOp& m, double tol = kTolDerived);

MetricSignature metric_of(const ThetaSignature& sig);

// <rho, chi>_Theta = Tr(rho Theta(chi)) = (1/d) sum_mu s_mu x_mu(rho) x_mu(chi).
double theta_inner(const Mat& rho, const Mat& chi, const ThetaSignature& sig,
                   const HSBasis& b);

// F_p(rho, sigma) = ||sqrt(rho) sqrt(sigma)||_p via singular values.
double schatten_fidelity(const Mat& rho, const Mat& sigma, double p);

// C_p(rho, sigma) = max{0, l_1^p - sum_{j>=2} l_j^p} over the singular
// values of sqrt(rho) sqrt(sigma).
double concurrence(const Mat& rho, const Mat& sigma, double p);

// Theta-image of rho; when the image is indefinite its Bloch vector is
// shrunk back into the body (raw image available via shrink = false).
Mat theta_image(const Mat& rho, const ThetaSignature& sig, const HSBasis& b,
                bool shrink = true);
Mat theta_image_multi(const Mat& rho, const std::vector<ThetaSignature>& sites,
                      const HSBasis& b, bool shrink = true);

double theta_fidelity(const Mat& rho, const Mat& sigma,
                      const ThetaSignature& sig, double p, const HSBasis& b);
double theta_fidelity(const Mat& rho, const ThetaSignature& sig, double p,
                      const HSBasis& b);

double theta_concurrence(const Mat& rho, const ThetaSignature& sig, double p,
                         const HSBasis& b);
double theta_concurrence_multi(const Mat& rho,
                               const std::vector<ThetaSignature>& sites,
                               double p, const HSBasis& b);

}  // namespace antiq
