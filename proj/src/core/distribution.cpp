#include "core/distribution.hpp"

#include <cmath>
#include <numeric>

namespace antiq {

namespace {

long pow_long(int base, int exp) {
  long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

int popcount(std::uint32_t v) { return __builtin_popcount(v); }

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<int> mask_to_parties(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(std::abs(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}

double linear_entropy(const Mat& rho) {
  return rho.trace().real() - purity(rho);
}

std::map<std::uint32_t, double> subset_weights_bloch(const Mat& rho, int n,
                                                     const HSBasis& b) {
  BlochTensor t = bloch_tensor(rho, n, b);
  std::map<std::uint32_t, double> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) out[mask] = 0.0;
  const long m = b.d * b.d;
  for (Eigen::Index idx = 0; idx < t.x.size(); ++idx) {
    long rest = idx;
    std::uint32_t mask = 0;
    // flat index is row-major: site 0 is the slowest digit
    for (int site = n - 1; site >= 0; --site) {
      if (rest % m != 0) mask |= (1u << site);
      rest /= m;
    }
    out[mask] += t.x[idx] * t.x[idx];
  }
  return out;
}

std::map<std::uint32_t, double> subset_weights_mobius(const Mat& rho, int n,
                                                      const HSBasis& b) {
  std::vector<double> marginal_purity(1u << n, 1.0);  // Tr(rho_empty^2) := 1
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
    marginal_purity[mask] =
        purity(partial_trace(rho, mask_to_parties(mask, n), n, b.d));
  std::map<std::uint32_t, double> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    double acc = 0.0;
    // iterate over submasks t of s
    std::uint32_t t = s;
    while (true) {
      double sign = ((popcount(s) - popcount(t)) % 2 == 0) ? 1.0 : -1.0;
      acc += sign * static_cast<double>(pow_long(b.d, popcount(t))) *
             marginal_purity[t];
      if (t == 0) break;
      t = (t - 1) & s;
    }
    out[s] = acc;
  }
  return out;
}

DistributionCoefficients distribution_coefficients(int n, int d) {
  if (n < 2 || d < 2)
    throw std::invalid_argument("distribution_coefficients: n,d must be >= 2");
  DistributionCoefficients dc;
  dc.n = n;
  dc.d = d;
  const long long dn = pow_long(d, n);
  const int delta = (n % 2 == 0) ? 1 : 0;
  const long long parity = (n % 2 == 0) ? 1 : -1;

  // c_t = sum over sizes k in {2m-delta} with k >= t of
  //       (-1)^{k-t} C(n-t, k-t); depends only on |T| = t.
  std::vector<long long> c(n + 1, 0);
  for (int t = 0; t <= n; ++t)
    for (int k = delta; 2 * k - delta <= n; ++k) {
      int size = 2 * k - delta;
      if (size < t) continue;
      long long sign = ((size - t) % 2 == 0) ? 1 : -1;
      c[t] += sign * binomial(n - t, size - t);
    }

  // Tr R = (-1)^n [1 - (2/d^n) sum_T c_{|T|} d^{|T|} (1 - S_L(T))]
  Rational constant(parity, 1);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int t = popcount(mask);
    Rational w(parity * 2 * c[t] * pow_long(d, t), dn);
    constant = constant - w;
    if (mask != 0 && w.num != 0) dc.coeffs[mask] = w;
  }
  if (constant.num != 0) dc.coeffs[0] = constant;
  return dc;
}

double verify_distribution(const Mat& psi_rho,
                           const DistributionCoefficients& coeffs,
                           const HSBasis& b) {
  if (std::abs(purity(psi_rho) - 1.0) > 1e-8)
    throw std::invalid_argument("verify_distribution: state must be pure");
  std::vector<ThetaSignature> sites(coeffs.n, full_parity(b));
  double trace_r = lorentz_norm(psi_rho, sites, b);
  double rhs = 0.0;
  for (const auto& [mask, a] : coeffs.coeffs) {
    double sl = (mask == 0)
                    ? 1.0
                    : linear_entropy(partial_trace(
                          psi_rho, mask_to_parties(mask, coeffs.n), coeffs.n,
                          b.d));
    rhs += a.value() * sl;
  }
  return std::abs(trace_r - rhs);
}

NQubitFormulaCheck n_qubit_formula_check(const Mat& psi_rho, int n,
                                         const HSBasis& b) {
  if (b.d != 2)
    throw std::invalid_argument("n_qubit_formula_check: qubit input required");
  NQubitFormulaCheck r;
  std::vector<ThetaSignature> sites(n, full_parity(b));
  r.trace_r = lorentz_norm(psi_rho, sites, b);
  double global_sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
  double acc = global_sign * linear_entropy(psi_rho);
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    int comp_size = n - popcount(mask);
    double sign = ((comp_size + n + 1) % 2 == 0) ? 1.0 : -1.0;
    acc += sign *
           linear_entropy(partial_trace(psi_rho, mask_to_parties(mask, n), n,
                                        2));
  }
  r.formula = acc;
  r.residual = std::abs(r.trace_r - acc);
  double scale = static_cast<double>(pow_long(2, n));
  r.residual_scaled_up = std::abs(r.trace_r - scale * acc);
  r.residual_scaled_down = std::abs(r.trace_r - acc / scale);
  return r;
}

QutritL2Check qutrit_l2_check(const Mat& psi_rho, const HSBasis& b) {
  if (b.d != 3 || psi_rho.rows() != 27)
    throw std::invalid_argument("qutrit_l2_check: 3-qutrit input required");
  QutritL2Check r;
  auto weights = subset_weights_bloch(psi_rho, 3, b);
  r.direct = weights[0b011];  // parties {A,B}, exactly two space-like slots
  double q_ab = purity(partial_trace(psi_rho, {0, 1}, 3, 3));
  double q_a = purity(partial_trace(psi_rho, {0}, 3, 3));
  double q_b = purity(partial_trace(psi_rho, {1}, 3, 3));
  r.purity_combination = 9.0 * q_ab - 3.0 * q_a - 3.0 * q_b;
  r.mobius_expression = r.purity_combination + 1.0;
  r.purity_combination_residual = std::abs(r.direct - r.purity_combination);
  r.mobius_residual = std::abs(r.direct - r.mobius_expression);
  return r;
}

}  // namespace antiq
