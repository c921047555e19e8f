#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "subprocess.hpp"

using testsup::cli_path;
using testsup::fixture;
using testsup::run_capture;

TEST_CASE("solve prints the closed-form solution and exits 0") {
  const auto r = run_capture(cli_path() + " solve " + fixture("two_points.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\n"
        "  \"optimum\": 2,\n"
        "  \"status\": \"optimal\",\n"
        "  \"endpoint_low\": [2, 0],\n"
        "  \"endpoint_high\": [2, 2]\n"
        "}\n");
}

TEST_CASE("solve is deterministic byte for byte") {
  const std::string cmd = cli_path() + " solve " + fixture("weighted.json");
  const auto first = run_capture(cmd);
  const auto second = run_capture(cmd);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(first.out.find("\"optimum\": 3.5") != std::string::npos);
  CHECK(first.out.find("\"endpoint_low\": [2.5, -2.5]") != std::string::npos);
  CHECK(first.out.find("\"endpoint_high\": [2.5, 2.5]") != std::string::npos);
}

TEST_CASE("solve appends segment samples on request") {
  const auto r = run_capture(cli_path() + " solve --samples 2 " +
                             fixture("two_points.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"samples\": [\n"
                   "    {\"alpha\": 0, \"point\": [2, 2], \"objective\": 2},\n"
                   "    {\"alpha\": 0.5, \"point\": [2, 1], \"objective\": 2},\n"
                   "    {\"alpha\": 1, \"point\": [2, 0], \"objective\": 2}\n"
                   "  ]") != std::string::npos);
}

TEST_CASE("solve classifies caps and uses exit code 2 when approximate") {
  const auto loose = run_capture(cli_path() + " solve " +
                                 fixture("capped_loose.json"));
  CHECK(loose.exit_code == 0);
  CHECK(loose.out.find("\"status\": \"feasible-optimal\"") != std::string::npos);
  CHECK(loose.out.find("\"lambda_combined\": 0") != std::string::npos);

  const auto exact = run_capture(cli_path() + " solve " +
                                 fixture("capped_exact.json"));
  CHECK(exact.exit_code == 0);
  CHECK(exact.out.find("\"status\": \"feasible-optimal\"") != std::string::npos);

  const auto tight = run_capture(cli_path() + " solve " +
                                 fixture("capped_tight.json"));
  CHECK(tight.exit_code == 2);
  CHECK(tight.out.find("\"status\": \"approximate\"") != std::string::npos);
  CHECK(tight.out.find("\"lambda_combined\": 1") != std::string::npos);
}

TEST_CASE("solve rejects malformed input naming the key") {
  const auto r = run_capture(cli_path() + " solve " +
                             fixture("malformed_missing_points.json") +
                             " 2>&1");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("points") != std::string::npos);
}

TEST_CASE("eigen prints lambda and the basis") {
  const auto r = run_capture(cli_path() + " eigen " +
                             fixture("matrix_2cycle.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\n"
        "  \"lambda\": 1.5,\n"
        "  \"basis\": [[0, 0.5]]\n"
        "}\n");

  const auto with_cross = run_capture(cli_path() + " eigen --cross " +
                                      fixture("matrix_2cycle.json"));
  CHECK(with_cross.exit_code == 0);
  CHECK(with_cross.out.find("\"cross\": [[0, -0.5], [0.5, 0]]") !=
        std::string::npos);

  const auto unit = run_capture(cli_path() + " eigen " +
                                fixture("matrix_unit_loop.json"));
  CHECK(unit.exit_code == 0);
  CHECK(unit.out.find("\"lambda\": 0") != std::string::npos);
}

TEST_CASE("eigen rejects reducible input with exit 1") {
  const auto r = run_capture(cli_path() + " eigen " +
                             fixture("matrix_reducible.json") + " 2>&1");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("matrix is reducible") != std::string::npos);
}

TEST_CASE("sample emits a constant objective column") {
  const auto r = run_capture(cli_path() + " sample --count 2 " +
                             fixture("two_points.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "alpha,x1,x2,objective\n"
        "0,2,2,2\n"
        "0.5,2,1,2\n"
        "1,2,0,2\n");

  const auto bare = run_capture(cli_path() + " sample --count 0 --csv " +
                                fixture("identical.json"));
  CHECK(bare.exit_code == 0);
  CHECK(bare.out == "0,1,1,0\n");
}

TEST_CASE("sample reports recomputed objectives when approximate") {
  const auto r = run_capture(cli_path() + " sample --count 2 " +
                             fixture("capped_tight.json"));
  CHECK(r.exit_code == 2);
  // The folded value is 1; the actual objective along the segment is 2.
  CHECK(r.out ==
        "alpha,x1,x2,objective\n"
        "0,2,2,2\n"
        "0.5,2,1,2\n"
        "1,2,0,2\n");
}

TEST_CASE("check agrees with the oracles on a small instance") {
  const auto r = run_capture(cli_path() + " check " +
                             fixture("two_points.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict: ok") != std::string::npos);

  const auto identical = run_capture(cli_path() + " check " +
                                     fixture("identical.json"));
  CHECK(identical.exit_code == 0);
  CHECK(identical.out.find("grid_gap: 0\n") != std::string::npos);

  const auto capped = run_capture(cli_path() + " check " +
                                  fixture("capped_tight.json"));
  CHECK(capped.exit_code == 0);
  CHECK(capped.out.find("classification_consistent: yes") != std::string::npos);
}

TEST_CASE("check refuses grids beyond the oracle budget") {
  const auto r = run_capture(cli_path() + " check " +
                             fixture("five_dim.json") + " 2>&1");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("cell budget") != std::string::npos);
}

TEST_CASE("usage errors exit with code 1") {
  const auto nocmd = run_capture(cli_path() + " 2>&1");
  CHECK(nocmd.exit_code == 1);
  const auto nofile = run_capture(cli_path() + " solve /nonexistent.json 2>&1");
  CHECK(nofile.exit_code == 1);
  CHECK(nofile.out.find("cannot open") != std::string::npos);
}
