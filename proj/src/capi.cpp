#include "antiq/antiq.h"

#include <cstring>
#include <random>
#include <string>

#include "core/distribution.hpp"
#include "core/geometry.hpp"
#include "core/json_io.hpp"
#include "core/sampling.hpp"
#include "core/theta.hpp"

namespace {

using namespace antiq;

thread_local std::string g_last_error = "ok";

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const json& j, char** out_json) { *out_json = copy_string(j.dump()); }

double resolve_tol(double tol) { return tol > 0.0 ? tol : kTolDerived; }

// Run body under the exception-to-status translation shared by every entry
// point.
template <typename F>
antiq_status guarded(F&& body) {
  try {
    return body();
  } catch (const nlohmann::json::parse_error& e) {
    g_last_error = e.what();
    return ANTIQ_ERR_PARSE;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return ANTIQ_ERR_PARSE;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return ANTIQ_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return ANTIQ_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ANTIQ_ERR_INTERNAL;
  }
}

json check_result(const BasisCheck& c) {
  return {{"identity_ok", c.identity_ok},
          {"traceless_ok", c.traceless_ok},
          {"hermitian_ok", c.hermitian_ok},
          {"orthogonality_ok", c.orthogonality_ok},
          {"max_violation", c.max_violation()},
          {"pass", c.pass()}};
}

std::vector<int> mask_to_parties(std::uint32_t mask, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

}  // namespace

struct antiq_basis {
  antiq::HSBasis b;
};

struct antiq_superop {
  antiq::AntilinearSuperOp m;
};

extern "C" {

const char* antiq_last_error(void) { return g_last_error.c_str(); }

void antiq_string_free(char* s) { std::free(s); }

antiq_status antiq_basis_create(int d, antiq_basis** out) {
  return guarded([&] {
    if (!out) {
      g_last_error = "null output pointer";
      return ANTIQ_ERR_INVALID_ARGUMENT;
    }
    if (d < 2) {
      g_last_error = "basis dimension must be >= 2";
      return ANTIQ_ERR_DIMENSION;
    }
    *out = new antiq_basis{ggm_basis(d)};
    return ANTIQ_OK;
  });
}

void antiq_basis_destroy(antiq_basis* b) { delete b; }

antiq_status antiq_basis_json(const antiq_basis* b, char** out_json) {
  return guarded([&] {
    if (!b || !out_json) {
      g_last_error = "null argument";
      return ANTIQ_ERR_INVALID_ARGUMENT;
    }
    emit(basis_to_json(b->b), out_json);
    return ANTIQ_OK;
  });
}

antiq_status antiq_basis_report(const antiq_basis* b, char** out_json) {
  return guarded([&] {
    if (!b || !out_json) {
      g_last_error = "null argument";
      return ANTIQ_ERR_INVALID_ARGUMENT;
    }
    BasisCheck c = verify_hs_basis(b->b);
    json out = basis_to_json(b->b);
    out["check"] = check_result(c);
    out["pass"] = c.pass();
    emit(out, out_json);
    return ANTIQ_OK;
  });
}

antiq_status antiq_superop_from_json(const char* json_in, antiq_superop** out) {
  return guarded([&] {
    if (!json_in || !out) {
      g_last_error = "null argument";
      return ANTIQ_ERR_INVALID_ARGUMENT;
    }
    *out = new antiq_superop{superop_from_json(json::parse(json_in))};
    return ANTIQ_OK;
  });
}

void antiq_superop_destroy(antiq_superop* m) { delete m; }

antiq_status antiq_superop_report(const antiq_superop* m, double tol,
                                  char** out_json) {
  return guarded([&] {
    if (!m || !out_json) {
      g_last_error = "null argument";
      return ANTIQ_ERR_INVALID_ARGUMENT;
    }
    const double t = resolve_tol(tol);
    const AntilinearSuperOp& op = m->m;
    ChoiMatrix c = choi(op);
    double herm_violation = (c.J - c.J.adjoint()).cwiseAbs().maxCoeff();
    Mat herm = 0.5 * (c.J + c.J.adjoint());
    Mat sum_adb = Mat::Zero(op.dim_in, op.dim_in);
    for (const auto& p : op.pairs) sum_adb += p.A.adjoint() * p.B;
    double tp_residual =
        (sum_adb - Mat::Identity(op.dim_in, op.dim_in)).cwiseAbs().maxCoeff();
    double unital_residual =
        op.dim_in == op.dim_out
            ? (op.apply(Mat::Identity(op.dim_in, op.dim_in)) -
               Mat::Identity(op.dim_out, op.dim_out))
                  .cwiseAbs()
                  .maxCoeff()
            : -1.0;
    bool cp = is_antilinear_cp(op, t);
    bool tp = is_antilinear_tp(op, t);
    bool unital = op.dim_in == op.dim_out && is_unital(op, t);
    AntiunitaryCheck au = is_antiunitary(op, t);
    json out = {{"dim_in", op.dim_in},
                {"dim_out", op.dim_out},
                {"pairs", op.pairs.size()},
                {"cp", cp},
                {"tp", tp},
                {"unital", unital},
                {"doubly_stochastic", unital && tp},
                {"antiunitary", au.antiunitary},
                {"generalized_theta",
                 op.dim_in == op.dim_out && is_generalized_theta(op, t)},
                {"witnesses",
                 {{"choi_min_eigenvalue", min_eigenvalue(herm)},
                  {"choi_hermiticity_violation", herm_violation},
                  {"tp_residual", tp_residual},
                  {"unital_residual", unital_residual}}},
                {"pass", cp && tp}};
    emit(out, out_json);
    return ANTIQ_OK;
  });
}

antiq_status antiq_superop_apply(const antiq_superop* m, const char* rho_json,
                                 char** out_json) {
  return guarded([&] {
    if (!m || !rho_json || !out_json) {
      g_last_error = "null argument";
      return ANTIQ_ERR_INVALID_ARGUMENT;
    }
    Mat rho = matrix_from_json(json::parse(rho_json));
    if (rho.rows() != m->m.dim_in || rho.cols() != m->m.dim_in) {
      g_last_error = "input matrix does not match dim_in";
      return ANTIQ_ERR_DIMENSION;
    }
    emit(matrix_to_json(m->m.apply(rho)), out_json);
    return ANTIQ_OK;
  });
}

antiq_status antiq_check_state(const char* json_in, double tol,
                               char** out_json) {
  return guarded([&] {
    if (!json_in || !out_json) {
      g_last_error = "null argument";
      return ANTIQ_ERR_INVALID_ARGUMENT;
    }
    const double t = resolve_tol(tol);
    json in = json::parse(json_in);

    Mat rho;
    int d = 0;
    if (in.is_object() && in.contains("x")) {
      BlochVector v = bloch_from_json(in);
      d = v.d;
      rho = from_bloch(v, ggm_basis(d));
    } else {
      const json& mj = in.is_object() && in.contains("matrix") ? in.at("matrix")
                                                               : in;
      rho = matrix_from_json(mj);
      if (rho.rows() != rho.cols()) {
        g_last_error = "state matrix must be square";
        return ANTIQ_ERR_DIMENSION;
      }
      d = static_cast<int>(rho.rows());
    }
    if (d < 2) {
      g_last_error = "state dimension must be >= 2";
      return ANTIQ_ERR_DIMENSION;
    }

    HSBasis b = ggm_basis(d);
    double herm_violation = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    bool hermitian = herm_violation <= t;
    cplx tr = rho.trace();
    bool trace_ok = std::abs(tr - cplx(1.0, 0.0)) <= 1e-9;

    json out = {{"d", d},
                {"hermitian", hermitian},
                {"hermiticity_violation", herm_violation},
                {"trace", {tr.real(), tr.imag()}},
                {"trace_ok", trace_ok}};

    bool inside = false;
    if (hermitian && trace_ok) {
      BlochVector v = to_bloch(rho, b);
      BodyMembership mem = is_bloch_body(v, b, t);
      inside = mem.inside;
      CharPolyCoeffs cp = char_poly_coeffs(rho);
      out["purity"] = purity(rho);
      out["char_poly"] =
          std::vector<double>(cp.a.data(), cp.a.data() + cp.a.size());
      out["membership"] = {{"inside", mem.inside},
                           {"worst_index", mem.worst_index},
                           {"worst_value", mem.worst_value}};
      out["spatial_norm_sq"] = v.spatial_norm_sq();
      out["spatial_norm_sq_bound"] = static_cast<double>(d - 1);
    }
    out["pass"] = hermitian && trace_ok && inside;
    emit(out, out_json);
    return ANTIQ_OK;
  });
}

antiq_status antiq_theta_report(const char* json_in, double tol,
                                char** out_json) {
  return guarded([&] {
    if (!json_in || !out_json) {
      g_last_error = "null argument";
      return ANTIQ_ERR_INVALID_ARGUMENT;
    }
    const double t = resolve_tol(tol);
    json in = json::parse(json_in);
    ThetaSignature sig = signature_from_json(in.at("signature"));
    Mat rho = matrix_from_json(in.at("state"));
    if (rho.rows() != sig.d || rho.cols() != sig.d) {
      g_last_error = "state does not match signature dimension";
      return ANTIQ_ERR_DIMENSION;
    }
    double p = in.value("p", 2.0);
    bool shrink = in.value("shrink", true);
    HSBasis b = ggm_basis(sig.d);

    MetricSignature metric = metric_of(sig);
    AntilinearSuperOp op = as_superop(sig, b);
    Mat image = theta_image(rho, sig, b, shrink);

    json out = {{"d", sig.d},
                {"metric", {{"p", metric.p}, {"q", metric.q}}},
                {"generalized_theta", is_generalized_theta(op, t)},
                {"theta_image", matrix_to_json(image)},
                {"theta_inner", theta_inner(rho, rho, sig, b)},
                {"theta_fidelity", theta_fidelity(rho, sig, p, b)},
                {"theta_concurrence", theta_concurrence(rho, sig, p, b)}};
    if (in.contains("state2")) {
      Mat chi = matrix_from_json(in.at("state2"));
      out["theta_inner_pair"] = theta_inner(rho, chi, sig, b);
      out["theta_fidelity_pair"] = theta_fidelity(rho, chi, sig, p, b);
      out["theta_concurrence_pair"] = concurrence(rho, theta_image(chi, sig, b, shrink), p);
    }
    out["pass"] = out["generalized_theta"].get<bool>();
    emit(out, out_json);
    return ANTIQ_OK;
  });
}

antiq_status antiq_verify_eqr(int n, int d, int samples,
                              unsigned long long seed, double tol,
                              char** out_json) {
  return guarded([&] {
    if (!out_json) {
      g_last_error = "null output pointer";
      return ANTIQ_ERR_INVALID_ARGUMENT;
    }
    if (n < 1 || d < 2 || samples < 1) {
      g_last_error = "need n >= 1, d >= 2, samples >= 1";
      return ANTIQ_ERR_INVALID_ARGUMENT;
    }
    const double t = resolve_tol(tol);
    HSBasis b = ggm_basis(d);
    std::mt19937_64 rng(seed);
    long dim = 1;
    for (int i = 0; i < n; ++i) dim *= d;
    double max_residual = 0.0;
    for (int s = 0; s < samples; ++s) {
      Mat rho = haar_density(static_cast<int>(dim), rng);
      max_residual = std::max(max_residual, verify_eq_r(rho, n, b));
    }
    json out = {{"n", n},           {"d", d},
                {"samples", samples}, {"seed", seed},
                {"tol", t},         {"max_residual", max_residual},
                {"pass", max_residual < t}};
    emit(out, out_json);
    return ANTIQ_OK;
  });
}

antiq_status antiq_verify_distribution(int n, int d, int samples,
                                       unsigned long long seed, double tol,
                                       char** out_json) {
  return guarded([&] {
    if (!out_json) {
      g_last_error = "null output pointer";
      return ANTIQ_ERR_INVALID_ARGUMENT;
    }
    if (n < 2 || d < 2 || samples < 1) {
      g_last_error = "need n >= 2, d >= 2, samples >= 1";
      return ANTIQ_ERR_INVALID_ARGUMENT;
    }
    const double t = resolve_tol(tol);
    DistributionCoefficients dc = distribution_coefficients(n, d);
    HSBasis b = ggm_basis(d);

    json table = json::array();
    for (const auto& [mask, a] : dc.coeffs)
      table.push_back({{"mask", mask},
                       {"parties", mask_to_parties(mask, n)},
                       {"num", a.num},
                       {"den", a.den}});

    // The equality is trivial when the constant vanishes and each subset
    // coefficient cancels against its complement via S_L(A) = S_L(A^c).
    auto coeff_of = [&](std::uint32_t mask) {
      auto it = dc.coeffs.find(mask);
      return it == dc.coeffs.end() ? Rational(0) : it->second;
    };
    const std::uint32_t full = (1u << n) - 1;
    bool trivial = coeff_of(0) == Rational(0);
    for (std::uint32_t mask = 1; trivial && mask <= full; ++mask)
      if (!(coeff_of(mask) + coeff_of(full ^ mask) == Rational(0)))
        trivial = false;

    std::mt19937_64 rng(seed);
    long dim = 1;
    for (int i = 0; i < n; ++i) dim *= d;
    double max_residual = 0.0;
    for (int s = 0; s < samples; ++s) {
      Mat rho = haar_density(static_cast<int>(dim), rng);
      max_residual = std::max(max_residual, verify_distribution(rho, dc, b));
    }
    json out = {{"n", n},
                {"d", d},
                {"samples", samples},
                {"seed", seed},
                {"tol", t},
                {"coefficients", table},
                {"trivial_by_complement_symmetry", trivial},
                {"max_residual", max_residual},
                {"pass", max_residual < t}};
    emit(out, out_json);
    return ANTIQ_OK;
  });
}

antiq_status antiq_sample_state(int dim, unsigned long long seed,
                                char** out_json) {
  return guarded([&] {
    if (!out_json) {
      g_last_error = "null output pointer";
      return ANTIQ_ERR_INVALID_ARGUMENT;
    }
    if (dim < 2) {
      g_last_error = "state dimension must be >= 2";
      return ANTIQ_ERR_DIMENSION;
    }
    std::mt19937_64 rng(seed);
    Vec psi = haar_state(dim, rng);
    json amps = json::array();
    for (Eigen::Index i = 0; i < psi.size(); ++i)
      amps.push_back({psi[i].real(), psi[i].imag()});
    Mat rho = psi * psi.adjoint();
    json out = {{"kind", "state"},
                {"dim", dim},
                {"seed", seed},
                {"psi", amps},
                {"rho", matrix_to_json(rho)}};
    emit(out, out_json);
    return ANTIQ_OK;
  });
}

antiq_status antiq_sample_channel(int dim_in, int dim_out, int rank,
                                  unsigned long long seed, char** out_json) {
  return guarded([&] {
    if (!out_json) {
      g_last_error = "null output pointer";
      return ANTIQ_ERR_INVALID_ARGUMENT;
    }
    if (dim_in < 2 || dim_out < 2 || rank < 1) {
      g_last_error = "need dim_in, dim_out >= 2 and rank >= 1";
      return ANTIQ_ERR_INVALID_ARGUMENT;
    }
    std::mt19937_64 rng(seed);
    AntilinearSuperOp m = random_antilinear_channel(dim_in, dim_out, rank, rng);
    json out = superop_to_json(m);
    out["kind"] = "channel";
    out["seed"] = seed;
    emit(out, out_json);
    return ANTIQ_OK;
  });
}

antiq_status antiq_transform(const char* json_in, double tol, char** out_json) {
  return guarded([&] {
    if (!json_in || !out_json) {
      g_last_error = "null argument";
      return ANTIQ_ERR_INVALID_ARGUMENT;
    }
    const double t = resolve_tol(tol);
    json in = json::parse(json_in);
    GeometricTransform tf = transform_from_json(in.at("transform"));
    BlochVector v = bloch_from_json(in.at("bloch"));
    bool want_physical = in.value("want_physical", false);
    HSBasis b = ggm_basis(v.d);

    bool ok = check_transform(tf, t);
    json out = {{"kind", tf.kind == TransformKind::kOrthogonal ? "orthogonal"
                                                               : "lorentz"},
                {"transform_valid", ok}};
    if (ok) {
      TransformResult r = apply_transform(tf, v.x, b, want_physical);
      out["x"] = std::vector<double>(r.x.data(), r.x.data() + r.x.size());
      out["rescaled"] = r.rescaled;
      out["shrunk"] = r.shrunk;
    }
    out["pass"] = ok;
    emit(out, out_json);
    return ANTIQ_OK;
  });
}

}  // extern "C"
