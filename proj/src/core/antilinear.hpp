#pragma once

#include <vector>

#include "core/linalg.hpp"

namespace antiq {

// Antilinear superoperator rho -> sum_j A_j rho^* B_j^dag.
//
// Complex conjugation is always taken entrywise in the computational basis
// {E_ij}; every representation formula below depends on the row-major
// vectorization convention v(|i><j|) = |i>|j>.
struct KrausPair {
  Mat A;
  Mat B;
};

struct AntilinearSuperOp {
  int dim_in = 0;
  int dim_out = 0;
  std::vector<KrausPair> pairs;

  Mat apply(const Mat& rho) const;
};

// Linear superoperator rho -> sum_j C_j rho D_j^dag. Arises as the
// composition of two antilinear superoperators.
struct LinearSuperOp {
  int dim_in = 0;
  int dim_out = 0;
  std::vector<KrausPair> pairs;

  Mat apply(const Mat& rho) const;
};

struct ChoiMatrix {
  Mat J;  // (dim_out*dim_in) x (dim_out*dim_in), output factor first
  int dim_in = 0;
  int dim_out = 0;
};

struct StinespringPair {
  Mat U;  // (dim_out*env) x dim_in, environment is the inner (fast) index
  Mat V;
  int env = 0;

  Mat apply(const Mat& rho) const;  // Tr_env(U rho^* V^dag)
};

// Entrywise complex conjugation K: rho -> rho^*.
AntilinearSuperOp conjugation(int dim);

// Antilinear Hermitian adjoint: pairs (A^T, B^T).
AntilinearSuperOp antilinear_adjoint(const AntilinearSuperOp& m);

// Compositions. Antilinear o antilinear is linear; mixing with a linear
// superoperator stays antilinear.
LinearSuperOp compose(const AntilinearSuperOp& m, const AntilinearSuperOp& n);
AntilinearSuperOp compose(const LinearSuperOp& l, const AntilinearSuperOp& m);
AntilinearSuperOp compose(const AntilinearSuperOp& m, const LinearSuperOp& l);

AntilinearSuperOp tensor(const AntilinearSuperOp& m,
                         const AntilinearSuperOp& n);

// Linearization of the natural representation: A(M)_L = sum_j A_j (x) B_j^*,
// satisfying A(M)_L v(rho^*) = v(M(rho)).
Mat natural_rep(const AntilinearSuperOp& m);

// Choi-Jamiolkowski matrix J = sum_j v(A_j) v(B_j)^dag.
ChoiMatrix choi(const AntilinearSuperOp& m);

// Retrieval identity M(rho) = Tr_in(J (I_out (x) rho^dag)).
Mat apply_via_choi(const ChoiMatrix& j, const Mat& rho);

// Kraus pairs from a Choi matrix. Hermitian J: eigendecomposition with pairs
// (sqrt|l| u, sign(l) sqrt|l| u). Otherwise SVD J = sum s u w^dag with pairs
// (sqrt(s) u, sqrt(s) w). Values below 1e-10 x (largest) are dropped.
AntilinearSuperOp kraus_from_choi(const ChoiMatrix& j,
                                  double rel_threshold = 1e-10);

StinespringPair stinespring(const AntilinearSuperOp& m);

// Antilinearly trace-preserving: sum_j A_j^dag B_j = I, equivalently
// Tr_out J = I. Both routes are checked and must agree.
bool is_antilinear_tp(const AntilinearSuperOp& m, double tol = kTolDerived);

// Antilinearly completely positive: J Hermitian and PSD.
bool is_antilinear_cp(const AntilinearSuperOp& m, double tol = kTolDerived);

bool is_antilinear_channel(const AntilinearSuperOp& m,
                           double tol = kTolDerived);

// M(I) = I.
bool is_unital(const AntilinearSuperOp& m, double tol = kTolDerived);

// Unital and TP.
bool is_doubly_stochastic(const AntilinearSuperOp& m,
                          double tol = kTolDerived);

struct AntiunitaryCheck {
  bool antiunitary = false;
  Mat u;  // valid when antiunitary
};

// rho -> U rho^* U^dag for unitary U: Choi is rank-1 PSD with unitary
// unvectorized Kraus operator.
AntiunitaryCheck is_antiunitary(const AntilinearSuperOp& m,
                                double tol = kTolDerived);

// Mixture of antiunitaries sum_j p_j U_j rho^* U_j^dag.
AntilinearSuperOp mixed_antiunitary(const std::vector<double>& ps,
                                    const std::vector<Mat>& us);

// Antilinearly Weyl-covariant channel over Z_N x Z_N with W_ij = X^i Z^j.
// p is row-major over (i,j).
AntilinearSuperOp weyl_covariant(const std::vector<double>& p, int n_dim);

// Generalized Pauli shift/clock operators.
Mat weyl_x(int n_dim);
Mat weyl_z(int n_dim);

}  // namespace antiq
