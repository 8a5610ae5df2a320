#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "tsg/paperlib.hpp"

using json = nlohmann::json;

namespace {

int verify_with(const json& doc, const std::string& name) {
  std::string path = std::string(TSG_TEST_TMPDIR) + "/" + name + ".json";
  std::ofstream(path) << doc.dump(2);
  std::ostringstream out, err;
  return tsg::cli::run({"verify-paper", "--registry", path}, out, err);
}

json registry() { return json::parse(tsg::PaperRegistry::embedded_json()); }

json& automorphism(json& doc, int n, int k, const std::string& name) {
  for (auto& a : doc.at("automorphisms"))
    if (a.at("name") == name && a.at("graph") == json::array({n, k})) return a;
  FAIL("missing automorphism " << name);
  throw;
}

}  // namespace

TEST_CASE("unmodified registry passes") { CHECK(verify_with(registry(), "mutation_none") == 0); }

TEST_CASE("replacing a generator by another automorphism fails verification") {
  auto doc = registry();
  automorphism(doc, 8, 3, "rho2")["cycles"] = automorphism(doc, 8, 3, "mu").at("cycles");
  CHECK(verify_with(doc, "mutation_rho2") == 1);
}

TEST_CASE("perturbing the not-positive list fails verification") {
  auto doc = registry();
  doc.at("p103_positive_lists").at("not_positive").push_back("D_10");
  CHECK(verify_with(doc, "mutation_not_positive") == 1);
}

TEST_CASE("a non-automorphism is rejected") {
  auto doc = registry();
  auto& beta = automorphism(doc, 10, 3, "beta");
  std::string cycles = beta.at("cycles");
  auto pos = cycles.find("u_2 u_4");
  REQUIRE(pos != std::string::npos);
  cycles.replace(pos, 7, "u_2 u_3");
  beta["cycles"] = cycles;
  CHECK(verify_with(doc, "mutation_beta") == 1);
}

TEST_CASE("dropping a subgroup from the printed list fails verification") {
  auto doc = registry();
  auto& list = doc.at("subgroup_list_p103");
  REQUIRE(list.contains("corrected"));
  list.at("corrected").erase(list.at("corrected").begin());
  CHECK(verify_with(doc, "mutation_list") == 1);
}
