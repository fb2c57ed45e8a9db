#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "antiq/antiq.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  antiq_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("basis handle lifecycle and report") {
  antiq_basis* b = nullptr;
  REQUIRE(antiq_basis_create(3, &b) == ANTIQ_OK);

  char* out = nullptr;
  REQUIRE(antiq_basis_json(b, &out) == ANTIQ_OK);
  json dump = json::parse(take(out));
  CHECK(dump.at("d") == 3);
  CHECK(dump.at("elements").size() == 9);
  // sigma_1 = sqrt(3/2) (|0><1| + |1><0|)
  CHECK(dump["elements"][1][0][1][0].get<double>() ==
        doctest::Approx(std::sqrt(1.5)));

  out = nullptr;
  REQUIRE(antiq_basis_report(b, &out) == ANTIQ_OK);
  json report = json::parse(take(out));
  CHECK(report.at("pass") == true);
  CHECK(report["check"]["max_violation"].get<double>() < 1e-12);
  antiq_basis_destroy(b);

  antiq_basis* bad = nullptr;
  CHECK(antiq_basis_create(1, &bad) == ANTIQ_ERR_DIMENSION);
  CHECK(bad == nullptr);
  CHECK(std::string(antiq_last_error()).size() > 0);
}

TEST_CASE("superoperator parse, report, apply") {
  // plain conjugation: single pair A = B = identity
  const char* kraus = R"({
    "dim_in": 2, "dim_out": 2,
    "pairs": [{"A": [[1, 0], [0, 1]], "B": [[1, 0], [0, 1]]}]
  })";
  antiq_superop* m = nullptr;
  REQUIRE(antiq_superop_from_json(kraus, &m) == ANTIQ_OK);

  char* out = nullptr;
  REQUIRE(antiq_superop_report(m, 0.0, &out) == ANTIQ_OK);
  json report = json::parse(take(out));
  CHECK(report.at("cp") == true);
  CHECK(report.at("tp") == true);
  CHECK(report.at("unital") == true);
  CHECK(report.at("antiunitary") == true);
  CHECK(report.at("generalized_theta") == true);
  CHECK(report.at("pass") == true);

  out = nullptr;
  REQUIRE(antiq_superop_apply(m, R"([[0.5, [0, 0.25]], [[0, -0.25], 0.5]])",
                              &out) == ANTIQ_OK);
  json image = json::parse(take(out));
  CHECK(image[0][1][1].get<double>() == doctest::Approx(-0.25));
  antiq_superop_destroy(m);

  antiq_superop* bad = nullptr;
  CHECK(antiq_superop_from_json("{not json", &bad) == ANTIQ_ERR_PARSE);

  const char* not_tp = R"({
    "dim_in": 2, "dim_out": 2,
    "pairs": [{"A": [[1, 0], [0, 1]], "B": [[2, 0], [0, 2]]}]
  })";
  REQUIRE(antiq_superop_from_json(not_tp, &m) == ANTIQ_OK);
  out = nullptr;
  REQUIRE(antiq_superop_report(m, 0.0, &out) == ANTIQ_OK);
  report = json::parse(take(out));
  CHECK(report.at("tp") == false);
  CHECK(report.at("pass") == false);
  antiq_superop_destroy(m);
}

TEST_CASE("state checks") {
  char* out = nullptr;
  SUBCASE("maximally mixed matrix input") {
    REQUIRE(antiq_check_state(R"([[0.5, 0], [0, 0.5]])", 0.0, &out) ==
            ANTIQ_OK);
    json r = json::parse(take(out));
    CHECK(r.at("pass") == true);
    CHECK(r["membership"]["inside"] == true);
    CHECK(r["purity"].get<double>() == doctest::Approx(0.5));
  }
  SUBCASE("bloch vector outside the body") {
    json in = {{"d", 3},
               {"x", {1, 0, 0, 0, 0, 0, 0, 0, std::sqrt(2.0)}}};
    REQUIRE(antiq_check_state(in.dump().c_str(), 0.0, &out) == ANTIQ_OK);
    json r = json::parse(take(out));
    CHECK(r.at("pass") == false);
    CHECK(r["membership"]["inside"] == false);
    CHECK(r["membership"]["worst_value"].get<double>() < 0.0);
  }
  SUBCASE("non-Hermitian input flagged") {
    REQUIRE(antiq_check_state(R"([[0.5, 1], [0, 0.5]])", 0.0, &out) ==
            ANTIQ_OK);
    json r = json::parse(take(out));
    CHECK(r.at("hermitian") == false);
    CHECK(r.at("pass") == false);
  }
  SUBCASE("parse errors surface as status codes") {
    CHECK(antiq_check_state("[[", 0.0, &out) == ANTIQ_ERR_PARSE);
  }
}

TEST_CASE("theta report") {
  json in = {{"signature", {{"d", 2}, {"s", {1, -1, -1, -1}}}},
             {"state", {{1, 0}, {0, 0}}},
             {"p", 1.0}};
  char* out = nullptr;
  REQUIRE(antiq_theta_report(in.dump().c_str(), 0.0, &out) == ANTIQ_OK);
  json r = json::parse(take(out));
  CHECK(r["metric"]["p"] == 1);
  CHECK(r["metric"]["q"] == 3);
  CHECK(r.at("generalized_theta") == true);
  // full parity sends |0><0| to |1><1|
  CHECK(r["theta_image"][1][1][0].get<double>() == doctest::Approx(1.0));
  CHECK(r["theta_fidelity"].get<double>() == doctest::Approx(0.0));
  CHECK(r["theta_concurrence"].get<double>() == doctest::Approx(0.0));
  CHECK(r["theta_inner"].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("batch verification entry points") {
  char* out = nullptr;
  REQUIRE(antiq_verify_eqr(2, 2, 20, 7, 0.0, &out) == ANTIQ_OK);
  json eqr = json::parse(take(out));
  CHECK(eqr.at("pass") == true);
  CHECK(eqr["max_residual"].get<double>() < 1e-10);

  out = nullptr;
  REQUIRE(antiq_verify_distribution(3, 2, 20, 7, 0.0, &out) == ANTIQ_OK);
  json dis = json::parse(take(out));
  CHECK(dis.at("pass") == true);
  CHECK(dis.at("trivial_by_complement_symmetry") == true);
  CHECK(dis["coefficients"].size() == 6);

  out = nullptr;
  REQUIRE(antiq_verify_distribution(4, 2, 10, 7, 0.0, &out) == ANTIQ_OK);
  dis = json::parse(take(out));
  CHECK(dis.at("trivial_by_complement_symmetry") == false);

  CHECK(antiq_verify_eqr(0, 2, 1, 0, 0.0, &out) == ANTIQ_ERR_INVALID_ARGUMENT);
}

TEST_CASE("samplers are deterministic in the seed") {
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(antiq_sample_state(4, 99, &a) == ANTIQ_OK);
  REQUIRE(antiq_sample_state(4, 99, &b) == ANTIQ_OK);
  std::string sa = take(a), sb = take(b);
  CHECK(sa == sb);

  char* c = nullptr;
  REQUIRE(antiq_sample_state(4, 100, &c) == ANTIQ_OK);
  CHECK(take(c) != sa);

  char* ch = nullptr;
  REQUIRE(antiq_sample_channel(2, 3, 2, 5, &ch) == ANTIQ_OK);
  json channel = json::parse(take(ch));
  CHECK(channel.at("dim_in") == 2);
  CHECK(channel.at("dim_out") == 3);

  // a sampled channel must pass the channel report
  antiq_superop* m = nullptr;
  REQUIRE(antiq_sample_channel(2, 3, 2, 5, &ch) == ANTIQ_OK);
  std::string payload = take(ch);
  REQUIRE(antiq_superop_from_json(payload.c_str(), &m) == ANTIQ_OK);
  char* report = nullptr;
  REQUIRE(antiq_superop_report(m, 0.0, &report) == ANTIQ_OK);
  json r = json::parse(take(report));
  CHECK(r.at("cp") == true);
  CHECK(r.at("tp") == true);
  CHECK(r.at("pass") == true);
  antiq_superop_destroy(m);

  // a sampled state has trace 1 and is PSD by construction
  char* st = nullptr;
  REQUIRE(antiq_sample_state(3, 1, &st) == ANTIQ_OK);
  json s = json::parse(take(st));
  double trace = 0.0;
  for (int i = 0; i < 3; ++i) trace += s["rho"][i][i][0].get<double>();
  CHECK(trace == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("transform entry point") {
  json in = {{"transform",
              {{"kind", "orthogonal"},
               {"matrix", {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}}}},
             {"bloch", {{"d", 2}, {"x", {1, 0.5, 0.1, 0.2}}}}};
  char* out = nullptr;
  REQUIRE(antiq_transform(in.dump().c_str(), 0.0, &out) == ANTIQ_OK);
  json r = json::parse(take(out));
  CHECK(r.at("pass") == true);
  CHECK(r["x"][1].get<double>() == doctest::Approx(0.1));
  CHECK(r["x"][2].get<double>() == doctest::Approx(0.5));

  in["transform"]["matrix"] = {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  REQUIRE(antiq_transform(in.dump().c_str(), 0.0, &out) == ANTIQ_OK);
  r = json::parse(take(out));
  CHECK(r.at("pass") == false);

  json boost = {{"transform",
                 {{"kind", "lorentz"},
                  {"metric", {{"p", 1}, {"q", 3}}},
                  {"matrix",
                   {{std::cosh(0.5), 0, 0, std::sinh(0.5)},
                    {0, 1, 0, 0},
                    {0, 0, 1, 0},
                    {std::sinh(0.5), 0, 0, std::cosh(0.5)}}}}},
                {"bloch", {{"d", 2}, {"x", {1, 0, 0, 0.3}}}},
                {"want_physical", true}};
  REQUIRE(antiq_transform(boost.dump().c_str(), 0.0, &out) == ANTIQ_OK);
  r = json::parse(take(out));
  CHECK(r.at("pass") == true);
  CHECK(r.at("rescaled") == true);
  CHECK(r["x"][0].get<double>() == doctest::Approx(1.0));
}
