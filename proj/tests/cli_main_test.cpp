// Integration checks of the mgp binary: exit codes, dry-run, idempotence,
// thread-count independence of artifacts. Invoked by ctest with the binary
// path and the preset directory as arguments.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::printf("[PASS] %s\n", what.c_str());
  } else {
    std::printf("[FAIL] %s\n", what.c_str());
    ++g_failures;
  }
}

int run(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  return rc < 0 ? rc : WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <mgp-binary> <preset-dir>\n", argv[0]);
    return 2;
  }
  const std::string bin = argv[1];
  const fs::path presets = argv[2];
  const fs::path work = fs::temp_directory_path() / "mgp_cli_test";
  fs::remove_all(work);
  fs::create_directories(work);

  const std::string fwn_sine = (presets / "fwn-sine.json").string();

  // dry-run validates and writes nothing
  {
    const fs::path out = work / "dry";
    const int rc = run(bin + " kernels " + fwn_sine + " --dry-run --out-dir " + out.string() +
                       " > /dev/null");
    expect(rc == 0, "dry-run exits 0");
    expect(!fs::exists(out), "dry-run writes no artifacts");
  }

  // malformed config: a = 0.4 violates the (1/2, 1) band -> exit 2 with the path
  {
    const int rc = run(bin + " kernels " + fwn_sine +
                       " --set profile.a=0.4 --out-dir " + (work / "bad").string() +
                       " 2> " + (work / "err.txt").string() + " > /dev/null");
    expect(rc == 2, "invalid config exits 2");
    const std::string err = slurp(work / "err.txt");
    expect(err.find("error[config]") != std::string::npos, "stderr carries the config tag");
    expect(err.find("1/2 < a <= b < 1") != std::string::npos,
           "message cites the (1/2,1) constraint");
  }

  // unknown subcommand -> exit 2
  {
    const int rc = run(bin + " frobnicate " + fwn_sine + " 2> /dev/null > /dev/null");
    expect(rc == 2, "unknown subcommand exits 2");
  }

  // kernels on farima (0.7, 0.7) prints the asymptotic constant
  {
    const fs::path out = work / "kernels";
    const int rc = run(bin + " kernels " + (presets / "farima-sine.json").string() +
                       " --set kernels.pairs=[[0.7,0.7]] --out-dir " + out.string() + " > " +
                       (work / "kernels.txt").string());
    expect(rc == 0, "kernels subcommand exits 0");
    const std::string text = slurp(work / "kernels.txt");
    expect(text.find("0.27862") != std::string::npos,
           "kernels output prints R(0.7,0.7) ~ 0.27862");
  }

  // idempotence and thread-count independence of artifacts
  {
    const fs::path o1 = work / "run1", o2 = work / "run2", o3 = work / "run3";
    const std::string base = bin + " tangent-check " + fwn_sine +
                             " --set eps_ladder=[0.25,0.125,0.0625]" +
                             " --set tolerances.tangent_distinct=0.5";
    expect(run(base + " --threads 1 --out-dir " + o1.string() + " > /dev/null") == 0,
           "tangent-check run 1 exits 0");
    expect(run(base + " --threads 1 --out-dir " + o2.string() + " > /dev/null") == 0,
           "tangent-check run 2 exits 0");
    expect(run(base + " --threads 4 --out-dir " + o3.string() + " > /dev/null") == 0,
           "tangent-check run 3 (4 threads) exits 0");
    bool same12 = true, same13 = true;
    for (const auto& e : fs::directory_iterator(o1)) {
      const auto name = e.path().filename();
      same12 = same12 && slurp(o1 / name) == slurp(o2 / name);
      same13 = same13 && slurp(o1 / name) == slurp(o3 / name);
    }
    expect(same12, "rerun artifacts byte-identical");
    expect(same13, "artifacts independent of thread count");
  }

  // sample subcommand writes one CSV row per replicate
  {
    const fs::path out = work / "sample";
    const int rc = run(bin + " sample " + fwn_sine +
                       " --set sample.replicates=16 --set sample.times=[0.5,1.0]" +
                       " --out-dir " + out.string() + " > /dev/null");
    expect(rc == 0, "sample subcommand exits 0");
    const std::string csv = slurp(out / "fwn-sine-sample-paths.csv");
    std::size_t rows = 0;
    for (char c : csv) rows += c == '\n';
    expect(rows == 17, "sample CSV has header plus 16 replicate rows");
  }

  std::printf("%s\n", g_failures == 0 ? "ALL CLI CHECKS PASSED" : "CLI CHECKS FAILED");
  return g_failures == 0 ? 0 : 1;
}
