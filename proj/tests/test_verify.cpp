#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "hecke/verify.hpp"

using namespace hecke::verify;

TEST_CASE("verify: every invariant is registered exactly once") {
  const auto& checks = registry();
  CHECK(checks.size() == kExpectedChecks);
  std::set<std::string> names;
  std::map<std::string, int> per_module;
  for (const auto& ch : checks) {
    CHECK(names.insert(ch.name).second);
    CHECK(ch.name.rfind(ch.module + ".", 0) == 0);
    CHECK(!ch.description.empty());
    ++per_module[ch.module];
  }
  CHECK(per_module == std::map<std::string, int>{{"root_datum", 3},
                                                 {"finite_weyl", 4},
                                                 {"ext_affine_weyl", 5},
                                                 {"laurent_ring", 2},
                                                 {"hecke_algebra", 8},
                                                 {"kl_basis", 4},
                                                 {"double_coset_module", 7}});
}

TEST_CASE("verify: A1 window 4 passes and the report is deterministic") {
  SuiteConfig cfg;
  cfg.types = {"A1"};
  cfg.window = 4;
  cfg.threads = 1;
  const SuiteReport one = run_suite(cfg);
  CHECK(one.ok());
  std::size_t type_checks = 0, cell_checks = 0;
  for (const auto& ch : registry()) ++(ch.scope == Scope::Type ? type_checks : cell_checks);
  CHECK(type_checks == 21);
  CHECK(one.records.size() == type_checks + 4 * cell_checks);
  cfg.threads = 4;
  const SuiteReport four = run_suite(cfg);
  CHECK(report_to_json(one, false).dump() == report_to_json(four, false).dump());
  CHECK(report_to_json(one, true).dump() != report_to_json(one, false).dump());
}

TEST_CASE("verify: graded pieces and filters") {
  SuiteConfig cfg;
  cfg.types = {"A2"};
  cfg.window = 3;
  cfg.subsets = {{"1", "2"}};
  cfg.filter = "double_coset_module.";
  const SuiteReport r = run_suite(cfg);
  CHECK(r.ok());
  CHECK(r.records.size() == 7);
  REQUIRE(r.cells.size() == 1);
  CHECK(r.cells[0].graded_pieces == std::vector<std::string>{"1", "s2 s1"});
  CHECK(r.cells[0].r_IJ == "v^2 + 2 + v^-2");
}

TEST_CASE("verify: construction failures are reported") {
  const auto path = std::filesystem::temp_directory_path() / "hecke_bad_cartan.json";
  {
    std::ofstream out(path);
    out << R"({"name": "bad", "rank": 2, "cartan": [[2,-1],[-1,3]], "lattice": "weight"})";
  }
  SuiteConfig cfg;
  cfg.types = {path.string()};
  const SuiteReport r = run_suite(cfg);
  CHECK(!r.ok());
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].name == "construction");
  CHECK(!r.records[0].counterexample.empty());
  std::filesystem::remove(path);

  SuiteConfig bad_subset;
  bad_subset.types = {"A1"};
  bad_subset.subsets = {{"3", ""}};
  bad_subset.filter = "double_coset_module.";
  const SuiteReport s = run_suite(bad_subset);
  CHECK(!s.ok());
  CHECK(s.records[0].module == "double_coset_module");
}
