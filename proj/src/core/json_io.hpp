#pragma once

#include <nlohmann/json.hpp>

#include "core/antilinear.hpp"
#include "core/bloch.hpp"
#include "core/geometry.hpp"
#include "core/hs_basis.hpp"
#include "core/theta.hpp"

namespace antiq {

using json = nlohmann::ordered_json;

// Complex matrices serialize as row-major nested arrays of [re, im] pairs.
json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j);

json real_matrix_to_json(const RMat& m);
RMat real_matrix_from_json(const json& j);

// {"d":, "elements": [...]}
json basis_to_json(const HSBasis& b);
HSBasis basis_from_json(const json& j);

// {"n":, "d":, "basis":, "x": [...], "index_order": "row-major over (mu_1..mu_n)"}
json bloch_to_json(const BlochVector& v);
BlochVector bloch_from_json(const json& j);
json bloch_tensor_to_json(const BlochTensor& t);
BlochTensor bloch_tensor_from_json(const json& j);

// {"dim_in":, "dim_out":, "pairs": [{"A":, "B":}, ...]}
json superop_to_json(const AntilinearSuperOp& m);
AntilinearSuperOp superop_from_json(const json& j);

json choi_to_json(const ChoiMatrix& c);

// {"d":, "s": [...], "basis":}
json signature_to_json(const ThetaSignature& sig);
ThetaSignature signature_from_json(const json& j);

// {"kind":, "metric": {"p":, "q":, "diag": [...]}, "matrix": [[...]]}
json transform_to_json(const GeometricTransform& t);
GeometricTransform transform_from_json(const json& j);

}  // namespace antiq
