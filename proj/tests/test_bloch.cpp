#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "core/bloch.hpp"
#include "core/sampling.hpp"

using namespace antiq;

namespace {

Mat ket_proj(int d, int k) {
  Mat m = Mat::Zero(d, d);
  m(k, k) = 1.0;
  return m;
}

Mat bell_state() {
  Vec psi = Vec::Zero(4);
  psi[0] = psi[3] = 1.0 / std::sqrt(2.0);
  return psi * psi.adjoint();
}

}  // namespace

TEST_CASE("bloch coordinates of reference states") {
  SUBCASE("maximally mixed") {
    for (int d : {2, 3, 4}) {
      HSBasis b = ggm_basis(d);
      BlochVector x = to_bloch(Mat::Identity(d, d) / d, b);
      CHECK(x.time_component() == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(x.spatial_norm_sq() < 1e-28);
    }
  }
  SUBCASE("qutrit |0><0|") {
    HSBasis b = ggm_basis(3);
    BlochVector x = to_bloch(ket_proj(3, 0), b);
    CHECK(x.x[3] == doctest::Approx(std::sqrt(1.5)).epsilon(1e-14));
    CHECK(x.x[8] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    for (int j : {1, 2, 4, 5, 6, 7}) CHECK(std::abs(x.x[j]) < 1e-14);
    CHECK(x.spatial_norm_sq() == doctest::Approx(2.0).epsilon(1e-13));
  }
  SUBCASE("qubit |0><0|") {
    HSBasis b = ggm_basis(2);
    BlochVector x = to_bloch(ket_proj(2, 0), b);
    CHECK(x.x[0] == doctest::Approx(1.0));
    CHECK(std::abs(x.x[1]) < 1e-14);
    CHECK(std::abs(x.x[2]) < 1e-14);
    CHECK(x.x[3] == doctest::Approx(1.0));
  }
}

TEST_CASE("from_bloch reference values and round-trips") {
  HSBasis b2 = ggm_basis(2);
  BlochVector e0{2, RVec::Zero(4), b2.tag};
  e0.x[0] = 1.0;
  CHECK((from_bloch(e0, b2) - Mat::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() <
        1e-15);

  BlochVector plus{2, RVec::Zero(4), b2.tag};
  plus.x[0] = plus.x[1] = 1.0;
  Mat proj_plus = from_bloch(plus, b2);
  Mat expect(2, 2);
  expect << 0.5, 0.5, 0.5, 0.5;
  CHECK((proj_plus - expect).cwiseAbs().maxCoeff() < 1e-15);

  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss;
  for (int d : {2, 3, 4}) {
    HSBasis b = ggm_basis(d);
    for (int trial = 0; trial < 500 / d; ++trial) {
      BlochVector v{d, RVec::Zero(d * d), b.tag};
      for (int i = 0; i < d * d; ++i) v.x[i] = gauss(rng);
      BlochVector back = to_bloch(from_bloch(v, b), b);
      CHECK((back.x - v.x).cwiseAbs().maxCoeff() < 1e-12);
      Mat rho = random_density(d, d, rng);
      CHECK((from_bloch(to_bloch(rho, b), b) - rho).cwiseAbs().maxCoeff() <
            1e-12);
    }
  }
}

TEST_CASE("characteristic-polynomial coefficients") {
  std::mt19937_64 rng(13);
  SUBCASE("a_1 equals the trace") {
    Mat rho = random_density(4, 4, rng);
    CharPolyCoeffs c = char_poly_coeffs(rho);
    CHECK(c.a[0] == doctest::Approx(1.0));
    CHECK(c.a[1] == doctest::Approx(1.0).epsilon(1e-13));
  }
  SUBCASE("qubit maximally mixed has a_2 = 1/4") {
    CharPolyCoeffs c = char_poly_coeffs(Mat::Identity(2, 2) / 2.0);
    CHECK(c.a[2] == doctest::Approx(0.25).epsilon(1e-14));
  }
  SUBCASE("rank-1 projectors kill a_j for j >= 2") {
    Mat rho = haar_density(5, rng);
    CharPolyCoeffs c = char_poly_coeffs(rho);
    for (int j = 2; j <= 5; ++j) CHECK(std::abs(c.a[j]) < 1e-12);
  }
}

TEST_CASE("body membership reference points") {
  HSBasis b = ggm_basis(3);
  BlochVector v{3, RVec::Zero(9), b.tag};
  v.x[0] = 1.0;
  CHECK(is_bloch_body(v, b).inside);

  v.x[8] = -std::sqrt(2.0);
  CHECK(is_bloch_body(v, b).inside);  // rho = diag(0,0,1)

  v.x[8] = std::sqrt(2.0);
  BodyMembership m = is_bloch_body(v, b);
  CHECK_FALSE(m.inside);
  CHECK(m.worst_value < -1e-3);

  v.x[0] = 0.5;
  CHECK_THROWS_AS(is_bloch_body(v, b), std::invalid_argument);
}

TEST_CASE("membership agrees with the eigenvalue oracle") {
  std::mt19937_64 rng(17);
  for (int d : {2, 3, 4, 5}) {
    HSBasis b = ggm_basis(d);
    int disagreements = 0;
    for (int trial = 0; trial < 300; ++trial) {
      Mat h = random_trace_one_hermitian(d, rng);
      bool newton = is_bloch_body(to_bloch(h, b), b).inside;
      if (newton != is_psd(h)) ++disagreements;
    }
    CHECK(disagreements == 0);
  }
}

TEST_CASE("pure-state angle bound") {
  HSBasis b2 = ggm_basis(2);
  BlochVector k0 = to_bloch(ket_proj(2, 0), b2);
  BlochVector k1 = to_bloch(ket_proj(2, 1), b2);
  CHECK(pure_angle_bound(k0, k0).cos_theta == doctest::Approx(1.0));
  AngleBound anti = pure_angle_bound(k0, k1);
  CHECK(anti.cos_theta == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(anti.pass);

  HSBasis b3 = ggm_basis(3);
  AngleBound qutrit =
      pure_angle_bound(to_bloch(ket_proj(3, 0), b3), to_bloch(ket_proj(3, 1), b3));
  CHECK(qutrit.cos_theta == doctest::Approx(-0.5).epsilon(1e-13));
  CHECK(qutrit.pass);

  BlochVector mixed = to_bloch(Mat::Identity(2, 2) / 2.0, b2);
  CHECK_THROWS_AS(pure_angle_bound(mixed, k0), std::invalid_argument);
}

TEST_CASE("shrinking to the body") {
  HSBasis b3 = ggm_basis(3);
  SUBCASE("interior vectors are untouched") {
    std::mt19937_64 rng(19);
    BlochVector v = to_bloch(random_density(3, 3, rng), b3);
    BlochVector s = shrink_to_body(v, b3);
    CHECK((s.x - v.x).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("boundary along +sigma_8 sits at 1/sqrt(2)") {
    BlochVector v{3, RVec::Zero(9), b3.tag};
    v.x[0] = 1.0;
    v.x[8] = std::sqrt(2.0);
    BlochVector s = shrink_to_body(v, b3);
    CHECK(is_bloch_body(s, b3).inside);
    CHECK(s.x[8] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-8));
    BlochVector again = shrink_to_body(s, b3);
    CHECK((again.x - s.x).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("qubit shrinking normalizes the spatial part") {
    HSBasis b2 = ggm_basis(2);
    BlochVector v{2, RVec::Zero(4), b2.tag};
    v.x[0] = 1.0;
    v.x[1] = 1.2;
    v.x[3] = -0.9;
    BlochVector s = shrink_to_body(v, b2);
    double norm = std::hypot(1.2, 0.9);
    CHECK(s.x[1] == doctest::Approx(1.2 / norm).epsilon(1e-8));
    CHECK(s.x[3] == doctest::Approx(-0.9 / norm).epsilon(1e-8));
  }
  SUBCASE("always-shrink mode pushes interior vectors to the boundary scale") {
    HSBasis b2 = ggm_basis(2);
    BlochVector v{2, RVec::Zero(4), b2.tag};
    v.x[0] = 1.0;
    v.x[3] = 0.5;
    BlochVector s = shrink_to_body(v, b2, ShrinkMode::kAlways);
    CHECK(s.x[3] == doctest::Approx(0.5).epsilon(1e-8));  // lambda* = 1 = sqrt(d-1)
  }
}

TEST_CASE("bloch tensors of reference states") {
  HSBasis b = ggm_basis(2);
  SUBCASE("product of maximally mixed") {
    Mat rho = Mat::Identity(4, 4) / 4.0;
    BlochTensor t = bloch_tensor(rho, 2, b);
    CHECK(t.x[0] == doctest::Approx(1.0));
    CHECK(t.x.tail(15).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("Bell state correlations") {
    BlochTensor t = bloch_tensor(bell_state(), 2, b);
    auto at = [&](int mu, int nu) { return t.x[mu * 4 + nu]; };
    CHECK(at(0, 0) == doctest::Approx(1.0));
    CHECK(at(1, 1) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(at(2, 2) == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(at(3, 3) == doctest::Approx(1.0).epsilon(1e-13));
    for (int j = 1; j < 4; ++j) {
      CHECK(std::abs(at(0, j)) < 1e-13);
      CHECK(std::abs(at(j, 0)) < 1e-13);
    }
  }
  SUBCASE("product states factorize") {
    std::mt19937_64 rng(23);
    Mat a = random_density(2, 2, rng);
    Mat c = random_density(2, 2, rng);
    BlochTensor t = bloch_tensor(kron(a, c), 2, b);
    BlochVector xa = to_bloch(a, b);
    BlochVector xc = to_bloch(c, b);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        CHECK(t.x[mu * 4 + nu] ==
              doctest::Approx(xa.x[mu] * xc.x[nu]).epsilon(1e-12));
  }
  SUBCASE("euclidean identity and tensor round-trip") {
    std::mt19937_64 rng(29);
    for (int n : {2, 3}) {
      Mat rho = random_density(1 << n, 1 << n, rng);
      BlochTensor t = bloch_tensor(rho, n, b);
      double dn = std::pow(2.0, n);
      CHECK(t.x.squaredNorm() ==
            doctest::Approx(dn * purity(rho)).epsilon(1e-10));
      CHECK((from_bloch_tensor(t, b) - rho).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("partial trace") {
  HSBasis b = ggm_basis(2);
  SUBCASE("Bell marginal is maximally mixed") {
    Mat m = partial_trace(bell_state(), {0}, 2, 2);
    CHECK((m - Mat::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-14);
  }
  SUBCASE("product marginals are the factors") {
    std::mt19937_64 rng(31);
    Mat a = random_density(2, 2, rng);
    Mat c = random_density(2, 2, rng);
    CHECK((partial_trace(kron(a, c), {0}, 2, 2) - a).cwiseAbs().maxCoeff() <
          1e-13);
    CHECK((partial_trace(kron(a, c), {1}, 2, 2) - c).cwiseAbs().maxCoeff() <
          1e-13);
  }
  SUBCASE("keep-all and keep-none") {
    std::mt19937_64 rng(37);
    Mat rho = random_density(8, 8, rng);
    CHECK((partial_trace(rho, {0, 1, 2}, 3, 2) - rho).cwiseAbs().maxCoeff() ==
          0.0);
    Mat scalar = partial_trace(rho, {}, 3, 2);
    REQUIRE(scalar.rows() == 1);
    CHECK(scalar(0, 0).real() == doctest::Approx(1.0).epsilon(1e-13));
  }
  SUBCASE("marginal Bloch tensor equals the slice with complement indices 0") {
    std::mt19937_64 rng(41);
    Mat rho = random_density(8, 8, rng);
    BlochTensor full = bloch_tensor(rho, 3, b);
    Mat reduced = partial_trace(rho, {0, 2}, 3, 2);
    HSBasis pb = product_basis(b, 2);
    BlochVector xr = to_bloch(reduced, pb);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        CHECK(xr.x[mu * 4 + nu] ==
              doctest::Approx(full.x[(mu * 4 + 0) * 4 + nu]).epsilon(1e-12));
  }
}

TEST_CASE("purity identity d Tr(rho^2) = 1 + |x|^2") {
  std::mt19937_64 rng(43);
  for (int d : {2, 3, 5}) {
    HSBasis b = ggm_basis(d);
    for (int trial = 0; trial < 50; ++trial) {
      Mat rho = random_density(d, d, rng);
      BlochVector x = to_bloch(rho, b);
      CHECK(d * purity(rho) ==
            doctest::Approx(1.0 + x.spatial_norm_sq()).epsilon(1e-12));
    }
  }
}
