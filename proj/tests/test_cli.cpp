// End-to-end checks of the command-line surface: exit codes, file formats,
// determinism. Runs the installed binary via popen.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_env(const std::string& env, const std::string& args) {
  const std::string cmd =
      env + (env.empty() ? "" : " ") + LEOLAB_CLI_PATH + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
    r.output.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run(const std::string& args) { return run_env("", args); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("leolab_cli_test_" + name);
}

int count_lines(const std::string& s) {
  return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("basis dump row counts and formats") {
  RunResult csv3 = run("basis dump --dfs 3 --format csv");
  CHECK(csv3.exit_code == 0);
  CHECK(count_lines(csv3.output) == 65);  // header + 64 rows

  RunResult csv4 = run("basis --dfs 4 --format csv");
  CHECK(csv4.exit_code == 0);
  CHECK(count_lines(csv4.output) == 257);

  RunResult j3 = run("basis --dfs 3");
  CHECK(j3.exit_code == 0);
  json parsed = json::parse(j3.output);
  CHECK(parsed["element_count"] == 64);
  CHECK(parsed["elements"].size() == 64);
  CHECK(parsed["elements"][0]["name"] == "I");

  CHECK(run("basis --dfs 5").exit_code == 2);
}

TEST_CASE("states dump emits all sixteen 4-qubit states") {
  RunResult r = run("states dump --dfs 4");
  CHECK(r.exit_code == 0);
  json parsed = json::parse(r.output);
  REQUIRE(parsed["states"].size() == 16);
  CHECK(parsed["states"][0]["name"] == "S0");
  // S0 = (|0101> + |1010> - |0110> - |1001>)/2
  CHECK(parsed["states"][0]["re"][5] == doctest::Approx(0.5));
  CHECK(parsed["states"][0]["re"][9] == doctest::Approx(-0.5));

  RunResult r3 = run("states dump --dfs 3");
  CHECK(r3.exit_code == 0);
  CHECK(json::parse(r3.output)["states"].size() == 8);
}

TEST_CASE("leo construction and method gating") {
  RunResult s2 = run("leo --dfs 4 --method s2");
  CHECK(s2.exit_code == 0);
  json parsed = json::parse(s2.output);
  CHECK(parsed["phase"]["re"] == doctest::Approx(-1.0));
  CHECK(parsed["grading_certificate"]["max_anticommutator_with_leakage"]
            .get<double>() < 1e-10);

  CHECK(run("leo --dfs 3 --method canonical").exit_code == 0);
  // the raw 4-qubit gates are not canonical; asking for them is a usage error
  CHECK(run("leo --dfs 4 --method canonical").exit_code == 2);
  CHECK(run("leo --dfs 4 --method bogus").exit_code == 2);
}

TEST_CASE("verify suites pass and report per-check lines") {
  RunResult r = run("verify --suite leo");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[PASS]") != std::string::npos);
  CHECK(r.output.find("[FAIL]") == std::string::npos);

  CHECK(run("verify --suite bogus").exit_code == 2);
}

TEST_CASE("simulate is deterministic and validates its config") {
  const fs::path cfg_path = temp_file("config.json");
  {
    std::ofstream cfg(cfg_path);
    cfg << R"({"dfs": 3,
               "bath": {"dim": 2, "seed": 9, "coupling": "leakage"},
               "schedule": {"t": 0.2, "n_list": [1, 2, 4, 8]},
               "leo_method": "canonical"})";
  }
  const fs::path out1 = temp_file("report1.json"), out2 = temp_file("report2.json");
  const fs::path csv = temp_file("report.csv");

  RunResult r1 = run("simulate --config " + cfg_path.string() + " --out " +
                     out1.string() + " --csv " + csv.string());
  CHECK(r1.exit_code == 0);
  RunResult r2 = run("simulate --config " + cfg_path.string() + " --out " + out2.string());
  CHECK(r2.exit_code == 0);
  CHECK(slurp(out1) == slurp(out2));  // same config + seed -> byte-identical

  json rep = json::parse(slurp(out1));
  REQUIRE(rep["points"].size() == 4);
  double prev = 1e9;
  for (const auto& pt : rep["points"]) {
    const double leak = pt["leakage_norm"].get<double>();
    CHECK(leak <= prev + 1e-12);  // monotone in n for leakage coupling
    prev = leak;
    CHECK(pt["norm_error"].get<double>() < 1e-10);
  }

  const std::string csv_text = slurp(csv);
  CHECK(count_lines(csv_text) == 5);  // header + 4 rows
  CHECK(csv_text.rfind("n,leakage_norm,fidelity", 0) == 0);

  // unknown key reported with its JSON pointer path, usage exit code
  const fs::path bad_path = temp_file("bad_config.json");
  {
    std::ofstream cfg(bad_path);
    cfg << R"({"dfs": 3, "bath": {"dimx": 2}})";
  }
  RunResult bad = run("simulate --config " + bad_path.string());
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("/bath/dimx") != std::string::npos);

  const fs::path bad_n = temp_file("bad_n.json");
  {
    std::ofstream cfg(bad_n);
    cfg << R"({"dfs": 3, "schedule": {"n_list": [1, 0]}})";
  }
  RunResult badn = run("simulate --config " + bad_n.string());
  CHECK(badn.exit_code == 2);
  CHECK(badn.output.find("/schedule/n_list/1") != std::string::npos);
}

TEST_CASE("decompose reports and the reference-identity check") {
  RunResult pc = run("decompose --paper-check");
  CHECK(pc.exit_code == 0);
  CHECK(pc.output.find("[FAIL]") == std::string::npos);

  RunResult dm = run("decompose --dfs 3 --pair 1,2 --error dm --beta 0.3,-0.7,1.1 "
                     "--drop leakage,cperp");
  CHECK(dm.exit_code == 0);
  json rep = json::parse(dm.output);
  REQUIRE(rep["surviving"].size() == 3);
  for (const auto& t : rep["surviving"]) {
    CHECK(t["class"] == "logical-collective-product");
    CHECK(t["logical_factor"] == "Y");
  }
  CHECK(rep["logical_y_dominance"] == true);
  CHECK(rep["residual"].get<double>() < 1e-10);

  RunResult prod = run(
      "decompose --dfs 4 --pair 2,3 --error product --gamma1 0.9,0.4,-0.2 "
      "--gamma2 0.3,-1.1,0.7 --drop leakage,cperp");
  CHECK(prod.exit_code == 0);
  json rep4 = json::parse(prod.output);
  int logical = 0;
  for (const auto& t : rep4["surviving"])
    if (t["class"] == "logical") ++logical;
  CHECK(logical == 2);

  CHECK(run("decompose --dfs 3 --error bogus").exit_code == 2);
  CHECK(run("decompose --dfs 3 --drop bogus").exit_code == 2);
}

TEST_CASE("shipped JSON schemas parse") {
  const fs::path schemas = fs::path(LEOLAB_SOURCE_DIR) / "docs" / "schemas";
  int found = 0;
  for (const auto& entry : fs::directory_iterator(schemas)) {
    if (entry.path().extension() != ".json") continue;
    json parsed = json::parse(slurp(entry.path()));
    CHECK(parsed.contains("$schema"));
    ++found;
  }
  CHECK(found >= 5);
}

namespace {

// Enough of JSON Schema to check our own formats: type, enum, required,
// properties, additionalProperties, items, and $ref to sibling files or
// #/definitions entries.
class SchemaChecker {
 public:
  explicit SchemaChecker(fs::path dir) : dir_(std::move(dir)) {}

  std::vector<std::string> errors;

  void validate(const json& value, const std::string& schema_file) {
    const json& schema = load(schema_file);
    check(value, schema, schema, schema_file + "#");
  }

 private:
  const json& load(const std::string& name) {
    auto it = cache_.find(name);
    if (it == cache_.end())
      it = cache_.emplace(name, json::parse(slurp(dir_ / name))).first;
    return it->second;
  }

  void fail(const std::string& where, const std::string& what) {
    errors.push_back(where + ": " + what);
  }

  void check(const json& value, const json& schema, const json& root,
             const std::string& where) {
    if (schema.contains("$ref")) {
      const std::string ref = schema["$ref"].get<std::string>();
      if (ref.rfind("#/", 0) == 0) {
        const json* target = &root;
        std::istringstream path(ref.substr(2));
        std::string part;
        while (std::getline(path, part, '/')) target = &target->at(part);
        check(value, *target, root, where);
      } else {
        const json& other = load(ref);
        check(value, other, other, where + "->" + ref);
      }
      return;
    }
    if (schema.contains("enum")) {
      bool hit = false;
      for (const json& candidate : schema["enum"]) hit = hit || candidate == value;
      if (!hit) fail(where, "value not in enum: " + value.dump());
    }
    if (schema.contains("type")) {
      const std::string t = schema["type"].get<std::string>();
      const bool ok = (t == "object" && value.is_object()) ||
                      (t == "array" && value.is_array()) ||
                      (t == "string" && value.is_string()) ||
                      (t == "boolean" && value.is_boolean()) ||
                      (t == "integer" && value.is_number_integer()) ||
                      (t == "number" && value.is_number());
      if (!ok) fail(where, "expected type " + t + ", got " + value.dump().substr(0, 40));
    }
    if (value.is_object()) {
      if (schema.contains("required"))
        for (const json& key : schema["required"])
          if (!value.contains(key.get<std::string>()))
            fail(where, "missing required key " + key.get<std::string>());
      const json props =
          schema.contains("properties") ? schema["properties"] : json::object();
      const bool closed = schema.contains("additionalProperties") &&
                          schema["additionalProperties"].is_boolean() &&
                          !schema["additionalProperties"].get<bool>();
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (props.contains(it.key()))
          check(it.value(), props[it.key()], root, where + "/" + it.key());
        else if (closed)
          fail(where, "unexpected key " + it.key());
      }
    }
    if (value.is_array() && schema.contains("items")) {
      int i = 0;
      for (const json& item : value)
        check(item, schema["items"], root, where + "/" + std::to_string(i++));
    }
  }

  fs::path dir_;
  std::map<std::string, json> cache_;
};

}  // namespace

TEST_CASE("CLI outputs validate against the shipped schemas") {
  SchemaChecker checker(fs::path(LEOLAB_SOURCE_DIR) / "docs" / "schemas");

  RunResult basis = run("basis dump --dfs 3");
  REQUIRE(basis.exit_code == 0);
  checker.validate(json::parse(basis.output), "basis-dump.schema.json");

  RunResult states = run("states dump --dfs 4");
  REQUIRE(states.exit_code == 0);
  checker.validate(json::parse(states.output), "states-dump.schema.json");

  RunResult leo = run("leo --dfs 4 --method s2");
  REQUIRE(leo.exit_code == 0);
  checker.validate(json::parse(leo.output), "leo.schema.json");

  const fs::path cfg_path = temp_file("schema_cfg.json");
  {
    std::ofstream cfg(cfg_path);
    cfg << slurp(fs::path(LEOLAB_SOURCE_DIR) / "docs" / "examples" /
                 "simulate-leakage.json");
  }
  const fs::path rep_path = temp_file("schema_report.json");
  RunResult sim = run("simulate --config " + cfg_path.string() + " --out " +
                      rep_path.string());
  REQUIRE(sim.exit_code == 0);
  checker.validate(json::parse(slurp(rep_path)), "simulation-report.schema.json");

  RunResult dec = run("decompose --dfs 3 --error product --gamma1 1,0,0 "
                      "--gamma2 0,1,0 --drop leakage");
  REQUIRE(dec.exit_code == 0);
  checker.validate(json::parse(dec.output), "decomposition-report.schema.json");

  for (const std::string& e : checker.errors) {
    INFO(e);
    CHECK(false);
  }
  CHECK(checker.errors.empty());
}

TEST_CASE("the kernel variant honors the environment override") {
  RunResult forced = run_env("LEOLAB_SIMD=scalar", "verify --suite errors");
  CHECK(forced.exit_code == 0);
  CHECK(forced.output.find("kernels: scalar") != std::string::npos);
}
