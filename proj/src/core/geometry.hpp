#pragma once

#include <random>
#include <vector>

#include "core/bloch.hpp"
#include "core/theta.hpp"

namespace antiq {

enum class TransformKind { kOrthogonal, kLorentz };

// Orthogonal transform of the spatial Bloch block (x_0 fixed) or Lorentz
// transform of the full space-time vector.
struct GeometricTransform {
  TransformKind kind = TransformKind::kOrthogonal;
  RMat matrix;            // spatial block (orthogonal) or full (lorentz)
  MetricSignature metric; // used by the lorentz kind
};

struct LkDecomposition {
  int n = 0;
  int d = 0;
  RVec values;  // L_0..L_n
};

struct TransformResult {
  RVec x;
  bool rescaled = false;  // x_0 was renormalized to 1 (lorentz kind)
  bool shrunk = false;    // shrink_to_body was applied
};

// Tr(rho^2), via the matrix or via (1/d^n) sum x^2.
double euclidean_norm_sq(const Mat& rho);
double euclidean_norm_sq(const BlochTensor& t);

// Tr(rho Theta^(x)n(rho)) with one signature per site; equals
// (1/d^n) sum (prod signs) x^2.
double lorentz_norm(const Mat& rho, const std::vector<ThetaSignature>& sites,
                    const HSBasis& b);
double lorentz_norm(const BlochTensor& t,
                    const std::vector<ThetaSignature>& sites);

// L_k = sum of x^2 over index tuples with exactly k space-like indices.
LkDecomposition l_k(const BlochTensor& t);

// Residual of (-1)^n d^n Tr(R_psi) = d^n Tr(rho^2) - 2 sum L_{2k-delta_n}
// for a pure state, evaluated through independent matrix and Bloch paths.
double verify_eq_r(const Mat& psi_rho, int n, const HSBasis& b,
                   double purity_tol = 1e-8);

bool check_transform(const GeometricTransform& t, double tol = kTolDerived);

// Apply the transform to a flattened Bloch vector/tensor. For the lorentz
// kind a result with x_0 != 1 is rescaled by 1/x_0; when want_physical is
// set the result is shrunk into the Bloch body of the given basis.
TransformResult apply_transform(const GeometricTransform& t, const RVec& x,
                                const HSBasis& body_basis,
                                bool want_physical = false);

// Random orthogonal matrix (QR of a Gaussian), deterministic in the engine.
RMat random_orthogonal(int dim, std::mt19937_64& rng);

// Boost of rapidity xi in the (0, axis) plane of a (1, dim-1) metric.
RMat lorentz_boost(int dim, int axis, double rapidity);

// Product of random spatial rotations and single-axis boosts in O(1, dim-1).
RMat random_lorentz(int dim, std::mt19937_64& rng, int factors = 4,
                    double max_rapidity = 1.0);

}  // namespace antiq
