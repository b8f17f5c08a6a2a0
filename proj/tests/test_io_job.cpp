#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "nct/job.hpp"
#include "test_support.hpp"

using namespace nct;
using nct::testing::random_element;

namespace {

std::filesystem::path temp_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() / ("nct_test_" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Json conformal_config(double theta, double amp) {
  return Json{
      {"n", 2},
      {"theta", theta},
      {"cutoff", 8},
      {"metric",
       {{"type", "conformal"},
        {"h", Json::array({Json{{"m", {1, 0}}, {"re", amp}},
                           Json{{"m", {-1, 0}}, {"re", amp}}})}}}};
}

}  // namespace

TEST_CASE("element serialization round trip") {
  const ContextPtr ctx = TorusContext::make2d(0.3, 8);
  std::mt19937 rng(83);
  for (int i = 0; i < 20; ++i) {
    const Element a = random_element(ctx, rng, 5, 8);
    const Element b = element_from_json(ctx, element_to_json(a));
    CHECK(norm_l1(a - b) == 0.0);
  }
  // Deterministic ordering: serialize twice, byte-identical.
  const Element a = random_element(ctx, rng, 5, 8);
  CHECK(element_to_json(a).dump() == element_to_json(a).dump());
}

TEST_CASE("config loading applies defaults") {
  const Json j{{"n", 2},
               {"theta", 0.3},
               {"cutoff", 8},
               {"metric", {{"type", "flat"}}}};
  const JobConfig cfg = config_from_json(j);
  CHECK(cfg.tol == 1e-9);
  CHECK(cfg.grid_size == 64);
  const ContextPtr ctx = cfg.make_context();
  CHECK(ctx->working_cutoff() == 16);
}

TEST_CASE("config rejection paths") {
  Json base{{"n", 2}, {"theta", 0.3}, {"cutoff", 8},
            {"metric", {{"type", "flat"}}}};

  Json bad_theta = base;
  bad_theta["theta"] = Json::array({Json::array({0.1, 0.3}),
                                    Json::array({-0.3, 0.0})});
  CHECK_THROWS_WITH_AS(config_from_json(bad_theta),
                       "theta not skew-symmetric", ConfigError);

  Json bad_h = base;
  bad_h["metric"] = {{"type", "conformal"},
                     {"h", Json::array({Json{{"m", {1, 0}}, {"re", 1.0}}})}};
  CHECK_THROWS_WITH_AS(config_from_json(bad_h), "h not self-adjoint",
                       ConfigError);

  Json no_cutoff = base;
  no_cutoff.erase("cutoff");
  CHECK_THROWS_AS(config_from_json(no_cutoff), ConfigError);

  Json bad_type = base;
  bad_type["metric"] = {{"type", "spherical"}};
  CHECK_THROWS_AS(config_from_json(bad_type), ConfigError);
}

TEST_CASE("flat curvature run writes zero components") {
  const Json j{{"n", 2},
               {"theta", 0.3},
               {"cutoff", 8},
               {"metric", {{"type", "flat"}}}};
  const auto dir = temp_dir("flat");
  CHECK(run_curvature(config_from_json(j), dir.string()) == kOk);
  const Json out = Json::parse(slurp(dir / "curvature.json"));
  for (const auto& [key, v] : out.at("component_norms").items())
    CHECK(v.get<double>() == 0.0);
  CHECK(std::filesystem::exists(dir / "summary.csv"));
}

TEST_CASE("curvature run is deterministic byte-for-byte") {
  const Json j = conformal_config(0.3, 0.3);
  const auto dir1 = temp_dir("det1");
  const auto dir2 = temp_dir("det2");
  REQUIRE(run_curvature(config_from_json(j), dir1.string()) == kOk);
  REQUIRE(run_curvature(config_from_json(j), dir2.string()) == kOk);
  CHECK(slurp(dir1 / "curvature.json") == slurp(dir2 / "curvature.json"));
  CHECK(slurp(dir1 / "summary.csv") == slurp(dir2 / "summary.csv"));
}

TEST_CASE("check run passes clean metrics and flags corruption") {
  const Json j = conformal_config(0.3, 0.3);
  const auto dir = temp_dir("checks");
  CHECK(run_checks(config_from_json(j), dir.string()) == kOk);
  const Json out = Json::parse(slurp(dir / "residuals.json"));
  CHECK(out.at("pass").get<bool>());

  const auto dir2 = temp_dir("corrupt");
  CHECK(run_checks(config_from_json(j), dir2.string(), true) ==
        kCheckFailure);
  const Json bad = Json::parse(slurp(dir2 / "residuals.json"));
  CHECK_FALSE(bad.at("pass").get<bool>());
  CHECK(bad.at("worst").get<std::string>() == "compatibility");
}

TEST_CASE("gauss-bonnet run") {
  const Json j = conformal_config(0.3, 0.3);
  const auto dir = temp_dir("gb");
  CHECK(run_gauss_bonnet(config_from_json(j), dir.string()) == kOk);
  const Json out = Json::parse(slurp(dir / "gauss_bonnet.json"));
  CHECK(out.at("abs").get<double>() <= 1e-8);

  const Json flat{{"n", 2},
                  {"theta", 0.3},
                  {"cutoff", 8},
                  {"metric", {{"type", "flat"}}}};
  CHECK_THROWS_AS(
      run_gauss_bonnet(config_from_json(flat), dir.string()), ConfigError);
}

TEST_CASE("oracle runs") {
  Json j = conformal_config(0.0, 0.2);
  j["grid"] = {{"M", 16}};
  const auto dir = temp_dir("oracle");
  CHECK(run_oracle(config_from_json(j), "classical", dir.string()) == kOk);
  const std::string csv = slurp(dir / "grid.csv");
  CHECK(csv.rfind("x1,x2,re,im\n", 0) == 0);

  Json jr = conformal_config(13.0 / 64.0, 0.2);
  jr["rational"] = {{"p", 13}, {"q", 64}};
  CHECK(run_oracle(config_from_json(jr), "matrix-rep", dir.string()) == kOk);
  const Json rep = Json::parse(slurp(dir / "matrix_rep.json"));
  CHECK(rep.at("relation_residual").get<double>() <= 1e-12);

  const Json jc = conformal_config(0.3, 0.3);
  CHECK(run_oracle(config_from_json(jc), "conformal-closed-form",
                   dir.string()) == kOk);
  const Json cf = Json::parse(slurp(dir / "closed_form.json"));
  const ContextPtr ctx = config_from_json(jc).make_context();
  const Element r =
      element_from_json(ctx, cf.at("R[1][2][1][2]"));
  CHECK(norm_l1(r) > 0.1);
}
