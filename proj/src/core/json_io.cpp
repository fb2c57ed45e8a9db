#include "core/json_io.hpp"

namespace antiq {

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("matrix: expected non-empty array");
  const auto rows = j.size();
  const auto cols = j.at(0).size();
  Mat m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    const json& row = j.at(r);
    if (row.size() != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (size_t c = 0; c < cols; ++c) {
      const json& e = row.at(c);
      if (e.is_number()) {
        m(r, c) = cplx(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2) {
        m(r, c) = cplx(e.at(0).get<double>(), e.at(1).get<double>());
      } else {
        throw std::invalid_argument("matrix: entry must be number or [re,im]");
      }
    }
  }
  return m;
}

json real_matrix_to_json(const RMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

RMat real_matrix_from_json(const json& j) {
  Mat c = matrix_from_json(j);
  if (c.imag().cwiseAbs().maxCoeff() != 0.0)
    throw std::invalid_argument("matrix: expected real entries");
  return c.real();
}

json basis_to_json(const HSBasis& b) {
  json out;
  out["d"] = b.d;
  out["tag"] = b.tag;
  json elems = json::array();
  for (const Mat& m : b.elements) elems.push_back(matrix_to_json(m));
  out["elements"] = std::move(elems);
  return out;
}

HSBasis basis_from_json(const json& j) {
  HSBasis b;
  b.d = j.at("d").get<int>();
  b.tag = j.value("tag", std::string{});
  for (const json& e : j.at("elements")) b.elements.push_back(matrix_from_json(e));
  return b;
}

namespace {

json bloch_common(int n, int d, const std::string& tag, const RVec& x) {
  json out;
  out["n"] = n;
  out["d"] = d;
  out["basis"] = tag;
  out["x"] = std::vector<double>(x.data(), x.data() + x.size());
  out["index_order"] = "row-major over (mu_1..mu_n)";
  return out;
}

RVec vector_from_json(const json& j) {
  std::vector<double> v = j.get<std::vector<double>>();
  return Eigen::Map<const RVec>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace

json bloch_to_json(const BlochVector& v) {
  return bloch_common(1, v.d, v.basis_tag, v.x);
}

BlochVector bloch_from_json(const json& j) {
  BlochVector v;
  v.d = j.at("d").get<int>();
  v.basis_tag = j.value("basis", std::string{});
  v.x = vector_from_json(j.at("x"));
  if (v.x.size() != static_cast<Eigen::Index>(v.d) * v.d)
    throw std::invalid_argument("bloch vector: length must be d^2");
  return v;
}

json bloch_tensor_to_json(const BlochTensor& t) {
  return bloch_common(t.n, t.d, t.basis_tag, t.x);
}

BlochTensor bloch_tensor_from_json(const json& j) {
  BlochTensor t;
  t.n = j.at("n").get<int>();
  t.d = j.at("d").get<int>();
  t.basis_tag = j.value("basis", std::string{});
  t.x = vector_from_json(j.at("x"));
  long expect = 1;
  for (int i = 0; i < t.n; ++i) expect *= static_cast<long>(t.d) * t.d;
  if (t.x.size() != expect)
    throw std::invalid_argument("bloch tensor: length must be d^(2n)");
  return t;
}

json superop_to_json(const AntilinearSuperOp& m) {
  json out;
  out["dim_in"] = m.dim_in;
  out["dim_out"] = m.dim_out;
  json pairs = json::array();
  for (const auto& p : m.pairs)
    pairs.push_back({{"A", matrix_to_json(p.A)}, {"B", matrix_to_json(p.B)}});
  out["pairs"] = std::move(pairs);
  return out;
}

AntilinearSuperOp superop_from_json(const json& j) {
  AntilinearSuperOp m;
  m.dim_in = j.at("dim_in").get<int>();
  m.dim_out = j.at("dim_out").get<int>();
  for (const json& p : j.at("pairs")) {
    Mat a = matrix_from_json(p.at("A"));
    Mat b = matrix_from_json(p.at("B"));
    if (a.rows() != m.dim_out || a.cols() != m.dim_in ||
        b.rows() != m.dim_out || b.cols() != m.dim_in)
      throw std::invalid_argument("superop: Kraus pair dimension mismatch");
    m.pairs.push_back({std::move(a), std::move(b)});
  }
  return m;
}

json choi_to_json(const ChoiMatrix& c) {
  json out;
  out["dim_in"] = c.dim_in;
  out["dim_out"] = c.dim_out;
  out["J"] = matrix_to_json(c.J);
  return out;
}

json signature_to_json(const ThetaSignature& sig) {
  json out;
  out["d"] = sig.d;
  out["s"] = sig.s;
  out["basis"] = sig.basis_tag;
  return out;
}

ThetaSignature signature_from_json(const json& j) {
  ThetaSignature sig;
  sig.d = j.at("d").get<int>();
  sig.s = j.at("s").get<std::vector<int>>();
  sig.basis_tag = j.value("basis", std::string{});
  if (sig.s.size() != static_cast<size_t>(sig.d) * sig.d || sig.s.empty() ||
      sig.s[0] != 1)
    throw std::invalid_argument("signature: need d^2 entries with s_0 = +1");
  return sig;
}

json transform_to_json(const GeometricTransform& t) {
  json out;
  out["kind"] = t.kind == TransformKind::kOrthogonal ? "orthogonal" : "lorentz";
  if (t.kind == TransformKind::kLorentz)
    out["metric"] = {{"p", t.metric.p}, {"q", t.metric.q},
                     {"diag", t.metric.diag}};
  out["matrix"] = real_matrix_to_json(t.matrix);
  return out;
}

GeometricTransform transform_from_json(const json& j) {
  GeometricTransform t;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "orthogonal") {
    t.kind = TransformKind::kOrthogonal;
  } else if (kind == "lorentz") {
    t.kind = TransformKind::kLorentz;
  } else {
    throw std::invalid_argument("transform: unknown kind");
  }
  t.matrix = real_matrix_from_json(j.at("matrix"));
  if (t.kind == TransformKind::kLorentz) {
    const json& m = j.at("metric");
    if (m.contains("diag")) {
      t.metric.diag = m.at("diag").get<std::vector<int>>();
      for (int v : t.metric.diag) (v > 0 ? t.metric.p : t.metric.q)++;
    } else {
      t.metric.p = m.at("p").get<int>();
      t.metric.q = m.at("q").get<int>();
      t.metric.diag.assign(t.metric.p, 1);
      t.metric.diag.insert(t.metric.diag.end(), t.metric.q, -1);
    }
  }
  return t;
}

}  // namespace antiq
