#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "arbopack/json_io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string binary_path(const char* env_name) {
  const char* path = std::getenv(env_name);
  REQUIRE_MESSAGE(path != nullptr, env_name << " must point at the built binary");
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class TempDir {
 public:
  TempDir() {
    dir_ = fs::temp_directory_path() /
           ("arbopack_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  fs::path file(const std::string& name) const { return dir_ / name; }

 private:
  fs::path dir_;
};

TempDir& workdir() {
  static TempDir dir;
  return dir;
}

RunResult run(const std::string& command) {
  fs::path capture = workdir().file("capture.out");
  int status = std::system((command + " > " + capture.string() + " 2>/dev/null").c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(capture);
  return result;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

const std::string kFeasibleInstance = R"({
  "vertices": ["u", "v"],
  "dyperedges": [],
  "hyperedges": [
    {"id": "e1", "vertices": ["u", "v"], "weight": 5},
    {"id": "e2", "vertices": ["u", "v"], "weight": 3}
  ],
  "k": 1
})";

const std::string kInfeasibleInstance = R"({
  "vertices": ["u", "v"],
  "dyperedges": [],
  "hyperedges": [],
  "k": 1
})";

}  // namespace

TEST_CASE("check reports feasibility through exit codes") {
  const std::string bin = binary_path("ARBOPACK_BIN");
  fs::path feasible = workdir().file("feasible.json");
  write_file(feasible, kFeasibleInstance);
  CHECK(run(bin + " check " + feasible.string()).exit_code == 0);

  fs::path infeasible = workdir().file("infeasible.json");
  write_file(infeasible, kInfeasibleInstance);
  RunResult bad = run(bin + " check " + infeasible.string());
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("subpartition_min_roots") != std::string::npos);

  fs::path broken = workdir().file("broken.json");
  write_file(broken, "{ not json");
  CHECK(run(bin + " check " + broken.string()).exit_code == 1);
}

TEST_CASE("solve writes a deterministic minimum-weight packing") {
  const std::string bin = binary_path("ARBOPACK_BIN");
  fs::path instance = workdir().file("solve.json");
  write_file(instance, kFeasibleInstance);

  RunResult first = run(bin + " solve " + instance.string());
  CHECK(first.exit_code == 0);
  CHECK(first.out.find("\"e2\"") != std::string::npos);
  arbopack::Packing packing = arbopack::parse_packing_text(first.out);
  CHECK(packing.total_weight == doctest::Approx(3.0));

  RunResult second = run(bin + " solve " + instance.string());
  CHECK(second.out == first.out);

  fs::path infeasible = workdir().file("solve_bad.json");
  write_file(infeasible, kInfeasibleInstance);
  CHECK(run(bin + " solve " + infeasible.string()).exit_code == 2);

  CHECK(run(bin + " solve " + instance.string() + " -o /nonexistent/dir/out.json").exit_code ==
        1);
}

TEST_CASE("solve output verifies against its instance") {
  const std::string bin = binary_path("ARBOPACK_BIN");
  fs::path instance = workdir().file("chain.json");
  write_file(instance, kFeasibleInstance);
  fs::path packing = workdir().file("chain_packing.json");
  CHECK(run(bin + " solve " + instance.string() + " -o " + packing.string()).exit_code == 0);
  CHECK(run(bin + " verify " + instance.string() + " " + packing.string()).exit_code == 0);

  // Tampered packing: unknown edge id.
  std::string text = slurp(packing);
  auto pos = text.find("e2");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 2, "zz");
  fs::path tampered = workdir().file("chain_tampered.json");
  write_file(tampered, text);
  RunResult bad = run(bin + " verify " + instance.string() + " " + tampered.string());
  CHECK(bad.exit_code == 3);
  CHECK(bad.out.find("UnknownEdge") != std::string::npos);
}

TEST_CASE("verify flags broken root bounds") {
  const std::string bin = binary_path("ARBOPACK_BIN");
  fs::path instance = workdir().file("rootbound.json");
  write_file(instance, R"({
    "vertices": ["u", "v"],
    "hyperedges": [{"id": "e1", "vertices": ["u", "v"], "weight": 1}],
    "k": 1,
    "f": {"v": 1}
  })");
  fs::path packing = workdir().file("rootbound_packing.json");
  write_file(packing, R"({
    "arborescences": [{"root": "u", "edges": [{"id": "e1", "from": "u", "to": "v"}]}],
    "total_weight": 1.0
  })");
  RunResult result = run(bin + " verify " + instance.string() + " " + packing.string());
  CHECK(result.exit_code == 3);
  CHECK(result.out.find("RootBoundViolation") != std::string::npos);
}

TEST_CASE("generation is deterministic and valid") {
  const std::string bin = binary_path("ARBOPACK_BIN");
  const std::string args = " gen --vertices 4 --dyperedges 3 --hyperedges 2 --k 2 --seed 7";
  RunResult first = run(bin + args);
  RunResult second = run(bin + args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);

  arbopack::InstanceData data = arbopack::parse_instance_text(first.out);
  CHECK(data.graph.num_vertices() == 4);

  RunResult other = run(bin + " gen --vertices 4 --dyperedges 3 --hyperedges 2 --k 2 --seed 8");
  CHECK(other.out != first.out);

  CHECK(run(bin + " gen --vertices 0 --dyperedges 1 --hyperedges 1 --k 1 --seed 1").exit_code ==
        1);
}

TEST_CASE("instance documents round-trip") {
  const std::string bin = binary_path("ARBOPACK_BIN");
  RunResult gen =
      run(bin + " gen --vertices 5 --dyperedges 4 --hyperedges 3 --k 2 --seed 21");
  REQUIRE(gen.exit_code == 0);
  arbopack::InstanceData data = arbopack::parse_instance_text(gen.out);
  CHECK(arbopack::write_instance_text(data) == gen.out);
}

TEST_CASE("rank subcommand prints matching oracle and reference values") {
  const std::string bin = binary_path("ARBOPACK_BIN");
  fs::path instance = workdir().file("rank.json");
  write_file(instance, R"({
    "vertices": ["a", "b"],
    "dyperedges": [{"id": "a0", "tail": ["a"], "head": "b", "weight": 1}],
    "hyperedges": [{"id": "e0", "vertices": ["a", "b"], "weight": 1}],
    "k": 1
  })");

  RunResult all = run(bin + " rank " + instance.string() +
                      " --matroid forest --set 'a0,e0->a,e0->b' --k 1");
  CHECK(all.exit_code == 0);
  CHECK(all.out.find("fast_rank 1") != std::string::npos);
  CHECK(all.out.find("reference_rank 1") != std::string::npos);

  RunResult empty = run(bin + " rank " + instance.string() + " --matroid rootbound");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out.find("fast_rank 0") != std::string::npos);

  CHECK(run(bin + " rank " + instance.string() + " --matroid forest --set nope").exit_code ==
        1);
}

TEST_CASE("instance documents reject unknown fields") {
  CHECK_THROWS_AS(arbopack::parse_instance_text(R"({"vertices": ["a"], "k": 1, "bogus": 3})"),
                  arbopack::Error);
  CHECK_THROWS_AS(arbopack::parse_instance_text(R"({
    "vertices": ["a", "b"],
    "dyperedges": [{"id": "a0", "tail": ["a"], "head": "b", "weight": 1, "color": "red"}],
    "k": 1
  })"),
                  arbopack::Error);
  CHECK_THROWS_AS(arbopack::parse_packing_text(R"({
    "arborescences": [], "total_weight": 0, "note": "hi"
  })"),
                  arbopack::Error);
}

TEST_CASE("enumeration limit overrides reroute certificates") {
  const std::string bin = binary_path("ARBOPACK_BIN");
  fs::path infeasible = workdir().file("limited.json");
  write_file(infeasible, kInfeasibleInstance);

  RunResult plain = run(bin + " check " + infeasible.string());
  CHECK(plain.exit_code == 2);
  CHECK(plain.out.find("subpartition_min_roots") != std::string::npos);

  // Forcing the vertex count over the subpartition limit switches check to
  // the solver-backed certificates.
  RunResult rerouted =
      run("ARBOPACK_LIMITS=subpartitions=1 " + bin + " check " + infeasible.string());
  CHECK(rerouted.exit_code == 2);
  CHECK(rerouted.out.find("subpartition_min_roots") == std::string::npos);
  CHECK(rerouted.out.find("in_degree_bounds_total") != std::string::npos);
}

TEST_CASE("single-vertex generation emits no edges") {
  const std::string bin = binary_path("ARBOPACK_BIN");
  RunResult result = run(bin + " gen --vertices 1 --dyperedges 3 --hyperedges 2 --k 2 --seed 5");
  CHECK(result.exit_code == 0);
  arbopack::InstanceData data = arbopack::parse_instance_text(result.out);
  CHECK(data.graph.num_vertices() == 1);
  CHECK(data.graph.num_edges() == 0);
}

TEST_CASE("injected rank mismatches trip the self-check") {
  const std::string bin = binary_path("ARBOPACK_BIN_INJECT");
  fs::path instance = workdir().file("inject.json");
  write_file(instance, R"({
    "vertices": ["a", "b"],
    "dyperedges": [{"id": "a0", "tail": ["a"], "head": "b", "weight": 1}],
    "hyperedges": [],
    "k": 1
  })");
  RunResult result =
      run(bin + " rank " + instance.string() + " --matroid forest --set a0 --inject-rank-mismatch");
  CHECK(result.exit_code == 4);
}
