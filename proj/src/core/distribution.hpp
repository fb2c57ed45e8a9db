#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "core/geometry.hpp"

namespace antiq {

// Exact rational bookkeeping for the distribution coefficients.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1);
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  bool operator==(const Rational& o) const {
    return num == o.num && den == o.den;
  }
  double value() const { return static_cast<double>(num) / den; }
};

// Coefficients a_{A|A^c} of Tr(R_psi) = sum a_A S_L(A) over subsets of the
// n parties, keyed by bitmask (bit i = party i). Mask 0 carries the
// constant term (S_L of the empty partition is 1 by convention); zero
// coefficients are omitted.
struct DistributionCoefficients {
  int n = 0;
  int d = 0;
  std::map<std::uint32_t, Rational> coeffs;
};

// S_L(rho) = Tr(rho) - Tr(rho^2).
double linear_entropy(const Mat& rho);

// Exact-support subset weights P_S: sum of x^2 over index tuples whose
// space-like index set is exactly S. Two independent routes.
std::map<std::uint32_t, double> subset_weights_bloch(const Mat& rho, int n,
                                                     const HSBasis& b);
// Moebius inversion P_S = sum_{T subseteq S} (-1)^{|S|-|T|} d^{|T|} Tr(rho_T^2).
std::map<std::uint32_t, double> subset_weights_mobius(const Mat& rho, int n,
                                                      const HSBasis& b);

// Exact coefficients of the distribution equality for full parity per site.
DistributionCoefficients distribution_coefficients(int n, int d);

// |Tr(R_psi) - sum a_A S_L(A)| with Tr(R_psi) from the direct matrix product.
double verify_distribution(const Mat& psi_rho,
                           const DistributionCoefficients& coeffs,
                           const HSBasis& b);

struct NQubitFormulaCheck {
  double trace_r = 0.0;
  double formula = 0.0;         // as printed: sum of signed marginal entropies
  double residual = 0.0;        // |trace_r - formula|
  double residual_scaled_up = 0.0;    // |trace_r - 2^n * formula|
  double residual_scaled_down = 0.0;  // |trace_r - 2^-n * formula|
};

// Tr(R_psi) against (-1)^{n+1} S_L(rho) + sum (-1)^{|A^c|+n+1} S_L(A) for an
// n-qubit pure state, with alternative 2^{+-n} normalizations reported.
NQubitFormulaCheck n_qubit_formula_check(const Mat& psi_rho, int n,
                                         const HSBasis& b);

struct QutritL2Check {
  double direct = 0.0;            // L_2^{AB} from the Bloch tensor
  double purity_combination = 0.0;  // 9 Tr rho_AB^2 - 3 Tr rho_A^2 - 3 Tr rho_B^2
  double mobius_expression = 0.0; // purity combination + 1
  double purity_combination_residual = 0.0;
  double mobius_residual = 0.0;
};

// The two-party L_2 term of a pure 3-qutrit state from marginal purities.
QutritL2Check qutrit_l2_check(const Mat& psi_rho, const HSBasis& b);

}  // namespace antiq
