// Exercises the hardy-lab binary end to end: exit-status contract,
// determinism of outputs, error messages. The binary path comes in argv[1].

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "[FAIL] " << what << "\n";
  } else {
    std::cout << "[ok] " << what << "\n";
  }
}

int run(const std::string& cmd) {
  const int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WEXITSTATUS(rc);
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool same_tree(const fs::path& a, const fs::path& b) {
  for (const auto& e : fs::directory_iterator(a)) {
    const fs::path other = b / e.path().filename();
    if (!fs::exists(other)) return false;
    if (slurp(e.path()) != slurp(other)) return false;
  }
  return true;
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <hardy-lab binary>\n";
    return 1;
  }
  const std::string bin = argv[1];
  const fs::path dir = fs::temp_directory_path() / "hardy_cli_contract";
  fs::remove_all(dir);
  fs::create_directories(dir);

  write(dir / "ok.cfg",
        "data = gaussian\ngamma = 0.7\nalpha = 2\nbeta = 2\nT = 0.18\n"
        "t_start = 0\nt_end = 0.18\ndt = 0.018\n");
  write(dir / "badkey.cfg", "gamma = 0.5\nnot_a_key = 1\n");
  write(dir / "badvalue.cfg", "gamma = oops\n");
  write(dir / "pseudo0.cfg", "data = gaussian\ngamma = 0.25\ntimes = 0,0.5\nmethod = pseudoconformal\n");
  write(dir / "scan.cfg", "alpha = 2\nbeta = 2\n");

  expect(run(bin + " lemma1 --config " + (dir / "ok.cfg").string() + " --out " +
             (dir / "r1").string()) == 0,
         "lemma1 on an admissible configuration exits 0");
  expect(run(bin + " lemma1 --config " + (dir / "badkey.cfg").string() + " --out " +
             (dir / "r2").string()) == 2,
         "unknown config key exits 2");
  expect(run(bin + " lemma1 --config " + (dir / "badvalue.cfg").string() + " --out " +
             (dir / "r3").string()) == 2,
         "unparseable config value exits 2");
  expect(run(bin + " lemma1 --config " + (dir / "missing.cfg").string()) == 2,
         "missing config file exits 2");
  expect(run(bin + " evolve --config " + (dir / "pseudo0.cfg").string() + " --out " +
             (dir / "r4").string()) == 2,
         "pseudoconformal run containing t = 0 exits 2");
  expect(run(bin) == 2, "missing subcommand exits 2");
  expect(run(bin + " hardy_scan --config " + (dir / "scan.cfg").string() + " --out " +
             (dir / "r5").string()) == 0,
         "hardy_scan exits 0");

  // the t = 0 rejection names t_min
  {
    const std::string cmd = bin + " evolve --config " + (dir / "pseudo0.cfg").string() +
                            " --out " + (dir / "r6").string() + " 2> " +
                            (dir / "stderr.txt").string();
    const int rc = std::system(cmd.c_str());
    expect(WEXITSTATUS(rc) == 2, "t = 0 pseudoconformal run exits 2");
    expect(slurp(dir / "stderr.txt").find("t_min") != std::string::npos,
           "t = 0 rejection message names t_min");
  }

  // determinism: identical config + seed give byte-identical trees
  const std::string seed = " --seed 2024";
  expect(run(bin + " commutators --config " + (dir / "scan.cfg").string() + " --out " +
             (dir / "d1").string() + seed) == 0,
         "commutators run exits 0");
  expect(run(bin + " commutators --config " + (dir / "scan.cfg").string() + " --out " +
             (dir / "d2").string() + seed) == 0,
         "repeated commutators run exits 0");
  expect(same_tree(dir / "d1", dir / "d2"), "repeated runs are byte-identical");

  expect(run(bin + " lemma1 --config " + (dir / "ok.cfg").string() + " --out " +
             (dir / "d3").string()) == 0,
         "third lemma1 run exits 0");
  expect(same_tree(dir / "r1", dir / "d3"), "lemma1 outputs are byte-identical across runs");

  // evolve writes one field CSV per requested time plus the JSON report
  write(dir / "evolve.cfg", "data = gaussian\ngamma = 0.25\ntimes = 0,0.5,1\nmethod = all\n");
  expect(run(bin + " evolve --config " + (dir / "evolve.cfg").string() + " --out " +
             (dir / "e1").string()) == 0,
         "evolve with cross-checks exits 0");
  expect(fs::exists(dir / "e1" / "field_000.csv") && fs::exists(dir / "e1" / "field_001.csv") &&
             fs::exists(dir / "e1" / "field_002.csv") && fs::exists(dir / "e1" / "evolve.json"),
         "evolve wrote three field CSVs and the report");

  if (failures) {
    std::cerr << failures << " CLI contract check(s) failed\n";
    return 1;
  }
  std::cout << "CLI contract: all checks passed\n";
  return 0;
}
