#include "core/bloch.hpp"

#include <algorithm>
#include <cmath>

namespace antiq {

namespace {

void check_basis_dims(const Mat& rho, const HSBasis& b) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("bloch: matrix must be square");
  if (rho.rows() != b.d ||
      b.elements.size() != static_cast<size_t>(b.d) * b.d)
    throw std::invalid_argument("bloch: dimension mismatch with basis");
}

// x_{mu, rest} for site-by-site contraction of Tr(rho sigma x ... x sigma).
void tensor_coeffs_rec(const Mat& rho, int n, const HSBasis& b, double* out) {
  if (n == 0) {
    *out = rho(0, 0).real();
    return;
  }
  const int d = b.d;
  const int m = static_cast<int>(rho.rows()) / d;
  const long stride = [&] {
    long s = 1;
    for (int i = 0; i < 2 * (n - 1); ++i) s *= d;
    return s;
  }();
  for (int mu = 0; mu < d * d; ++mu) {
    const Mat& s = b.elements[mu];
    Mat sub = Mat::Zero(m, m);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (s(j, i) != cplx(0, 0))
          sub += s(j, i) * rho.block(i * m, j * m, m, m);
    tensor_coeffs_rec(sub, n - 1, b, out + mu * stride);
  }
}

Mat from_tensor_rec(const double* x, int n, const HSBasis& b) {
  const int d = b.d;
  if (n == 0) return Mat::Constant(1, 1, cplx(*x, 0));
  long stride = 1;
  for (int i = 0; i < 2 * (n - 1); ++i) stride *= d;
  int m = 1;
  for (int i = 0; i < n - 1; ++i) m *= d;
  Mat out = Mat::Zero(static_cast<long>(d) * m, static_cast<long>(d) * m);
  for (int mu = 0; mu < d * d; ++mu)
    out += kron(b.elements[mu], from_tensor_rec(x + mu * stride, n - 1, b));
  return out;
}

}  // namespace

BlochVector to_bloch(const Mat& rho, const HSBasis& b) {
  check_basis_dims(rho, b);
  BlochVector v;
  v.d = b.d;
  v.basis_tag = b.tag;
  v.x.resize(b.d * b.d);
  for (int mu = 0; mu < b.d * b.d; ++mu)
    v.x[mu] = trace_prod(b.elements[mu], rho).real();
  return v;
}

Mat from_bloch(const BlochVector& v, const HSBasis& b) {
  if (v.d != b.d || v.x.size() != static_cast<Eigen::Index>(b.d) * b.d)
    throw std::invalid_argument("from_bloch: dimension mismatch");
  Mat rho = Mat::Zero(b.d, b.d);
  for (int mu = 0; mu < b.d * b.d; ++mu) rho += v.x[mu] * b.elements[mu];
  return rho / static_cast<double>(b.d);
}

BlochTensor bloch_tensor(const Mat& rho, int n, const HSBasis& b) {
  long dn = 1;
  for (int i = 0; i < n; ++i) dn *= b.d;
  if (rho.rows() != dn || rho.cols() != dn)
    throw std::invalid_argument(
        "bloch_tensor: matrix dimension is not d^n");
  BlochTensor t;
  t.n = n;
  t.d = b.d;
  t.basis_tag = b.tag;
  t.x.resize(dn * dn);
  tensor_coeffs_rec(rho, n, b, t.x.data());
  return t;
}

Mat from_bloch_tensor(const BlochTensor& t, const HSBasis& b) {
  if (t.d != b.d) throw std::invalid_argument("from_bloch_tensor: basis mismatch");
  long dn = 1;
  for (int i = 0; i < t.n; ++i) dn *= b.d;
  Mat rho = from_tensor_rec(t.x.data(), t.n, b);
  return rho / static_cast<double>(dn);
}

CharPolyCoeffs char_poly_coeffs(const Mat& rho) {
  const int d = static_cast<int>(rho.rows());
  RVec power_sums(d + 1);  // N_j = Tr(rho^j), N_0 unused
  Mat p = Mat::Identity(d, d);
  for (int j = 1; j <= d; ++j) {
    p = p * rho;
    power_sums[j] = p.trace().real();
  }
  CharPolyCoeffs c;
  c.a.resize(d + 1);
  c.a[0] = 1.0;
  for (int k = 1; k <= d; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j)
      acc += (j % 2 == 1 ? 1.0 : -1.0) * power_sums[j] * c.a[k - j];
    c.a[k] = acc / k;
  }
  return c;
}

BodyMembership is_bloch_body(const BlochVector& v, const HSBasis& b,
                             double tol) {
  if (std::abs(v.x[0] - 1.0) > 1e-9)
    throw std::invalid_argument("is_bloch_body: x_0 must be 1 (not a state)");
  CharPolyCoeffs c = char_poly_coeffs(from_bloch(v, b));
  BodyMembership m;
  m.worst_value = c.a[0];
  for (int j = 0; j < c.a.size(); ++j)
    if (c.a[j] < m.worst_value) {
      m.worst_value = c.a[j];
      m.worst_index = j;
    }
  m.inside = m.worst_value >= -tol;
  return m;
}

AngleBound pure_angle_bound(const BlochVector& x, const BlochVector& y,
                            double tol) {
  if (x.d != y.d) throw std::invalid_argument("pure_angle_bound: dim mismatch");
  const double r2 = x.d - 1.0;
  if (std::abs(x.spatial_norm_sq() - r2) > 1e-6 ||
      std::abs(y.spatial_norm_sq() - r2) > 1e-6)
    throw std::invalid_argument("pure_angle_bound: inputs must be pure");
  AngleBound a;
  a.cos_theta =
      x.x.tail(x.x.size() - 1).dot(y.x.tail(y.x.size() - 1)) / r2;
  a.pass = a.cos_theta >= -1.0 / r2 - tol && a.cos_theta <= 1.0 + tol;
  return a;
}

BlochVector shrink_to_body(const BlochVector& v, const HSBasis& b,
                           ShrinkMode mode, double tol) {
  if (std::abs(v.x[0] - 1.0) > 1e-9)
    throw std::invalid_argument("shrink_to_body: x_0 must be 1");
  const double norm = std::sqrt(v.spatial_norm_sq());
  const bool inside = is_bloch_body(v, b, tol).inside;
  if (mode == ShrinkMode::kOnlyIfOutside && inside) return v;
  if (norm == 0.0) return v;  // the maximally mixed point is always inside

  BlochVector probe = v;
  auto at_length = [&](double len) {
    probe.x.tail(probe.x.size() - 1) =
        v.x.tail(v.x.size() - 1) * (len / norm);
    return probe;
  };
  double lo = 0.0, hi = std::sqrt(v.d - 1.0);
  if (is_bloch_body(at_length(hi), b, tol).inside) {
    lo = hi;
  } else {
    for (int iter = 0; iter < 200 && hi - lo > 1e-10; ++iter) {
      double mid = 0.5 * (lo + hi);
      if (is_bloch_body(at_length(mid), b, tol).inside)
        lo = mid;
      else
        hi = mid;
    }
  }
  // lo is the maximal in-body length along the ray.
  if (mode == ShrinkMode::kAlways) {
    // Literal variant: x'' = a * x' / sqrt(d-1).
    BlochVector out = v;
    out.x.tail(out.x.size() - 1) *= lo / std::sqrt(v.d - 1.0);
    return out;
  }
  return at_length(std::min(lo, norm));
}

Mat partial_trace(const Mat& rho, const std::vector<int>& keep, int n, int d) {
  long dn = 1;
  for (int i = 0; i < n; ++i) dn *= d;
  if (rho.rows() != dn || rho.cols() != dn)
    throw std::invalid_argument("partial_trace: dimension is not d^n");
  for (int k : keep)
    if (k < 0 || k >= n)
      throw std::invalid_argument("partial_trace: party index out of range");

  std::vector<int> traced;
  std::vector<bool> kept(n, false);
  for (int k : keep) kept[k] = true;
  for (int i = 0; i < n; ++i)
    if (!kept[i]) traced.push_back(i);

  long dk = 1;
  for (size_t i = 0; i < keep.size(); ++i) dk *= d;
  long dt = dn / dk;

  // place-value strides, site 0 most significant
  std::vector<long> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * d;

  std::vector<int> keep_sorted = keep;
  std::sort(keep_sorted.begin(), keep_sorted.end());

  auto compose = [&](long a, long t) {
    long idx = 0;
    long aa = a;
    for (int i = static_cast<int>(keep_sorted.size()) - 1; i >= 0; --i) {
      idx += (aa % d) * stride[keep_sorted[i]];
      aa /= d;
    }
    long tt = t;
    for (int i = static_cast<int>(traced.size()) - 1; i >= 0; --i) {
      idx += (tt % d) * stride[traced[i]];
      tt /= d;
    }
    return idx;
  };

  Mat out = Mat::Zero(dk, dk);
  for (long a = 0; a < dk; ++a)
    for (long c = 0; c < dk; ++c) {
      cplx acc(0, 0);
      for (long t = 0; t < dt; ++t) acc += rho(compose(a, t), compose(c, t));
      out(a, c) = acc;
    }
  return out;
}

double purity(const Mat& rho) { return trace_prod(rho, rho).real(); }

}  // namespace antiq
