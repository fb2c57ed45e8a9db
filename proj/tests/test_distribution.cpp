#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "core/distribution.hpp"
#include "core/sampling.hpp"

using namespace antiq;

namespace {

Mat bell_state() {
  Vec psi = Vec::Zero(4);
  psi[0] = psi[3] = 1.0 / std::sqrt(2.0);
  return psi * psi.adjoint();
}

Mat ghz_state(int n) {
  long dim = 1L << n;
  Vec psi = Vec::Zero(dim);
  psi[0] = psi[dim - 1] = 1.0 / std::sqrt(2.0);
  return psi * psi.adjoint();
}

Mat basis_state(int dim, int k) {
  Mat m = Mat::Zero(dim, dim);
  m(k, k) = 1.0;
  return m;
}

int popcount(std::uint32_t v) { return __builtin_popcount(v); }

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("linear entropy reference values") {
  std::mt19937_64 rng(3);
  CHECK(linear_entropy(haar_density(4, rng)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  for (int d : {2, 3, 5})
    CHECK(linear_entropy(Mat::Identity(d, d) / d) ==
          doctest::Approx(1.0 - 1.0 / d).epsilon(1e-13));
  CHECK(linear_entropy(partial_trace(bell_state(), {0}, 2, 2)) ==
        doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("subset weights") {
  HSBasis b = ggm_basis(2);
  SUBCASE("empty subset always carries weight 1") {
    std::mt19937_64 rng(5);
    Mat rho = random_density(8, 8, rng);
    auto w = subset_weights_bloch(rho, 3, b);
    CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("Bell state weights") {
    auto w = subset_weights_bloch(bell_state(), 2, b);
    CHECK(w[0b01] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(w[0b10] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(w[0b11] == doctest::Approx(3.0).epsilon(1e-12));
  }
  SUBCASE("products of pure qudits give (d-1)^|S|") {
    std::mt19937_64 rng(7);
    for (int d : {2, 3}) {
      HSBasis bd = ggm_basis(d);
      Mat rho = kron(haar_density(d, rng),
                     kron(haar_density(d, rng), haar_density(d, rng)));
      auto w = subset_weights_bloch(rho, 3, bd);
      for (auto& [mask, value] : w)
        CHECK(value ==
              doctest::Approx(std::pow(d - 1.0, popcount(mask))).epsilon(1e-9));
    }
  }
  SUBCASE("Bloch and Moebius routes agree") {
    std::mt19937_64 rng(11);
    for (auto [n, d] : {std::pair{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}}) {
      HSBasis bd = ggm_basis(d);
      long dim = 1;
      for (int i = 0; i < n; ++i) dim *= d;
      Mat rho = random_density(static_cast<int>(dim),
                               static_cast<int>(dim), rng);
      auto wb = subset_weights_bloch(rho, n, bd);
      auto wm = subset_weights_mobius(rho, n, bd);
      for (auto& [mask, value] : wb)
        CHECK(value == doctest::Approx(wm[mask]).epsilon(1e-10));
    }
  }
  SUBCASE("L_k equals the sum of weights over subsets of size k") {
    std::mt19937_64 rng(13);
    HSBasis b3 = ggm_basis(3);
    Mat rho = random_density(9, 9, rng);
    auto w = subset_weights_bloch(rho, 2, b3);
    LkDecomposition lk = l_k(bloch_tensor(rho, 2, b3));
    for (int k = 0; k <= 2; ++k) {
      double acc = 0.0;
      for (auto& [mask, value] : w)
        if (popcount(mask) == k) acc += value;
      CHECK(lk.values[k] == doctest::Approx(acc).epsilon(1e-12));
    }
  }
}

TEST_CASE("exact distribution coefficients") {
  SUBCASE("two qubits: Tr R = S_L(A) + S_L(B)") {
    DistributionCoefficients dc = distribution_coefficients(2, 2);
    CHECK(dc.coeffs.count(0) == 0);  // no constant term
    CHECK(dc.coeffs.at(0b01) == Rational(1));
    CHECK(dc.coeffs.at(0b10) == Rational(1));
    CHECK(dc.coeffs.count(0b11) == 0);
  }
  SUBCASE("three qubits reduce to complement symmetry") {
    DistributionCoefficients dc = distribution_coefficients(3, 2);
    CHECK(dc.coeffs.count(0) == 0);
    for (std::uint32_t mask = 1; mask < 7; ++mask) {
      Rational expect(popcount(mask) == 1 ? 1 : -1);
      CHECK(dc.coeffs.at(mask) == expect);
    }
    CHECK(dc.coeffs.count(0b111) == 0);
  }
  SUBCASE("four qubits match the expected pattern") {
    DistributionCoefficients dc = distribution_coefficients(4, 2);
    CHECK(dc.coeffs.count(0) == 0);
    for (std::uint32_t mask = 1; mask < 15; ++mask) {
      int size = popcount(mask);
      Rational expect(size == 2 ? -1 : 1);
      CHECK(dc.coeffs.at(mask) == expect);
    }
    CHECK(dc.coeffs.count(0b1111) == 0);
  }
}

TEST_CASE("distribution equality holds on random pure states") {
  std::mt19937_64 rng(17);
  for (auto [n, d] : {std::pair{3, 2}, {4, 2}, {3, 3}}) {
    DistributionCoefficients dc = distribution_coefficients(n, d);
    HSBasis b = ggm_basis(d);
    long dim = 1;
    for (int i = 0; i < n; ++i) dim *= d;
    for (int trial = 0; trial < 25; ++trial)
      CHECK(verify_distribution(haar_density(static_cast<int>(dim), rng), dc,
                                b) < 1e-10);
  }
  CHECK(verify_distribution(ghz_state(4), distribution_coefficients(4, 2),
                            ggm_basis(2)) < 1e-12);
  CHECK_THROWS_AS(verify_distribution(Mat::Identity(8, 8) / 8.0,
                                      distribution_coefficients(3, 2),
                                      ggm_basis(2)),
                  std::invalid_argument);
}

TEST_CASE("marginal entropies of pure states are complement-symmetric") {
  std::mt19937_64 rng(19);
  Mat rho = haar_density(16, rng);
  for (std::uint32_t mask = 1; mask < 15; ++mask) {
    std::vector<int> a, c;
    for (int i = 0; i < 4; ++i) (mask & (1u << i) ? a : c).push_back(i);
    CHECK(std::abs(linear_entropy(partial_trace(rho, a, 4, 2)) -
                   linear_entropy(partial_trace(rho, c, 4, 2))) < 1e-10);
  }
}

TEST_CASE("n-qubit closed-form coefficients") {
  std::mt19937_64 rng(23);
  HSBasis b = ggm_basis(2);
  SUBCASE("two-qubit Bell state") {
    NQubitFormulaCheck r = n_qubit_formula_check(bell_state(), 2, b);
    CHECK(r.trace_r == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.residual < 1e-12);
  }
  SUBCASE("random pure states for n = 3 and 4") {
    for (int n : {3, 4}) {
      Mat rho = haar_density(1 << n, rng);
      NQubitFormulaCheck r = n_qubit_formula_check(rho, n, b);
      CHECK(r.residual < 1e-10);
    }
  }
  SUBCASE("non-qubit input is rejected") {
    CHECK_THROWS_AS(n_qubit_formula_check(Mat::Identity(9, 9) / 9.0, 2,
                                          ggm_basis(3)),
                    std::invalid_argument);
  }
}

TEST_CASE("three-qutrit two-party term") {
  HSBasis b = ggm_basis(3);
  SUBCASE("|000> is hand-computable") {
    QutritL2Check r = qutrit_l2_check(basis_state(27, 0), b);
    CHECK(r.direct == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(r.purity_combination == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.mobius_expression == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(r.mobius_residual < 1e-12);
    CHECK(r.purity_combination_residual == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("random pure states follow the Moebius expression") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
      QutritL2Check r = qutrit_l2_check(haar_density(27, rng), b);
      CHECK(r.mobius_residual < 1e-10);
      CHECK(r.purity_combination_residual == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
  SUBCASE("maximally entangled pair times a pure qutrit") {
    Vec pair = Vec::Zero(9);
    pair[0] = pair[4] = pair[8] = 1.0 / std::sqrt(3.0);
    Vec psi = Vec::Zero(3);
    psi[1] = 1.0;
    Mat rho = kron(pair * pair.adjoint(), psi * psi.adjoint());
    QutritL2Check r = qutrit_l2_check(rho, b);
    CHECK(r.mobius_residual < 1e-12);
  }
}

TEST_CASE("two-qubit chain Tr R = 2 S_L = C^2") {
  std::mt19937_64 rng(31);
  HSBasis b = ggm_basis(2);
  DistributionCoefficients dc = distribution_coefficients(2, 2);
  std::vector<ThetaSignature> hw2(2, full_parity(b));
  for (int trial = 0; trial < 100; ++trial) {
    Mat rho = haar_density(4, rng);
    double trace_r = lorentz_norm(rho, hw2, b);
    double sl = linear_entropy(partial_trace(rho, {0}, 2, 2));
    double c = theta_concurrence_multi(rho, hw2, 1.0, b);
    CHECK(std::abs(trace_r - 2.0 * sl) < 1e-10);
    CHECK(std::abs(trace_r - c * c) < 1e-10);
    CHECK(verify_distribution(rho, dc, b) < 1e-10);
  }
}
