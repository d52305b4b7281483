// End-to-end checks of the command-line surface: exit codes, report
// contents, and byte-level determinism. Takes the CLI binary path as
// argv[1] (wired up by ctest).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

int failures = 0;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

struct RunResult {
  int exit_code;
};

RunResult run(const std::string& binary, const std::string& args) {
  const std::string cmd = binary + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return {WEXITSTATUS(status)};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_tests <costreg-binary>\n";
    return 1;
  }
  const std::string bin = argv[1];
  const fs::path work = fs::temp_directory_path() / "costreg_cli_tests";
  fs::remove_all(work);
  fs::create_directories(work);

  const fs::path fig3 = work / "fig3.json";
  write(fig3, R"({"scenario": {"n_total": 100, "n0": 70, "n1": 30, "alpha": 0.05,
                   "beta": 0.5, "theta": 0.4, "unit_fp_cost": 5, "price": 20}})");

  const fs::path csv = work / "d.csv";
  write(csv, "x1,x2,y\n1,0,1\n0,1,0\n1,1,1\n2,0,2\n-1,2,-1\n0.5,-1,0.5\n");

  // profit: flag overrides on top of the config file
  {
    const fs::path out = work / "profit";
    const RunResult r = run(bin, "profit --config " + fig3.string() + " --price 50 --beta 0.2 " +
                                     "--output-dir " + out.string());
    check(r.exit_code == 0, "profit exits 0");
    const std::string report = slurp(out / "profit_report.txt");
    check(contains(report, "profit_with_ml = 1032.5"), "profit_with_ml value");
    check(contains(report, "profit_without_ml = 1500"), "profit_without_ml value");
    check(contains(report, "useful = false"), "useful verdict");
    check(contains(report, "forms_agree = true"), "agreement flag");
    check(contains(report, "beta = 0.2"), "input echo");
  }

  // determinism: two runs, byte-identical artifacts
  {
    const fs::path a = work / "det_a";
    const fs::path b = work / "det_b";
    const std::string common = "--config " + fig3.string() + " --seed 7 ";
    run(bin, "profit " + common + "--output-dir " + a.string());
    run(bin, "profit " + common + "--output-dir " + b.string());
    check(slurp(a / "profit_report.txt") == slurp(b / "profit_report.txt"),
          "profit reports byte-identical");
    run(bin, "contour " + common + "--resolution 40 --output-dir " + a.string());
    run(bin, "contour " + common + "--resolution 40 --output-dir " + b.string());
    check(!slurp(a / "contour.csv").empty(), "contour csv written");
    check(slurp(a / "contour.csv") == slurp(b / "contour.csv"), "contour csv byte-identical");
    check(slurp(a / "contour.svg") == slurp(b / "contour.svg"), "contour svg byte-identical");
  }

  // contour: header and row-major layout
  {
    const fs::path out = work / "contour";
    const RunResult r = run(bin, "contour --config " + fig3.string() + " --resolution 100 " +
                                     "--output-dir " + out.string());
    check(r.exit_code == 0, "contour exits 0");
    const std::string head = slurp(out / "contour.csv").substr(0, 200);
    check(contains(head, "beta,price,profit\n"), "contour csv header");
    check(contains(head, "0.010000,1.000000,"), "first cell at the range corner");
    check(contains(head, "0.010000,2.000000,"), "price advances within a beta row");
  }

  // train with gamma: lambda = 1/gamma recorded
  {
    const fs::path out = work / "train";
    const RunResult r = run(bin, "train --data " + csv.string() +
                                     " --label y --loss squared --penalty l2 --gamma 2 " +
                                     "--output-dir " + out.string());
    check(r.exit_code == 0, "train exits 0");
    const std::string report = slurp(out / "train_report.txt");
    check(contains(report, "lambda = 0.5"), "lambda = 1/gamma recorded");
    check(contains(report, "gamma = 2"), "gamma echoed");
    check(contains(report, "aggregation = prior-weighted expected unit cost"),
          "aggregation rule echoed");
    check(contains(report, "converged = true"), "train converged");
  }

  // tune on a small grid
  {
    const fs::path out = work / "tune";
    const RunResult r = run(bin, "tune --data " + csv.string() +
                                     " --label y --loss squared --penalty l2 --method grid " +
                                     "--lambdas 0.01,0.1,1 --folds 3 --output-dir " + out.string());
    check(r.exit_code == 0, "tune exits 0");
    const std::string report = slurp(out / "tune_report.txt");
    check(contains(report, "best_lambda = "), "tune reports best_lambda");
    check(contains(report, "candidate_2"), "tune lists every candidate");
  }

  // regime requires explicit thresholds
  {
    check(run(bin, "regime --gamma 2").exit_code == 1, "regime without thresholds exits 1");
    const fs::path out = work / "regime";
    const RunResult r = run(bin, "regime --gamma 2 --gamma-low 0.001 --gamma-high 1e6 " +
                                     std::string("--output-dir ") + out.string());
    check(r.exit_code == 0, "regime exits 0");
    check(contains(slurp(out / "regime_report.txt"), "regime = useful_candidate"),
          "regime verdict");
  }

  // lagrange-check on the tiny dataset
  {
    const fs::path out = work / "lagrange";
    const RunResult r = run(bin, "lagrange-check --data " + csv.string() +
                                     " --label y --loss squared --penalty l2 --c 0.05 " +
                                     "--delta-c 0.0001 --output-dir " + out.string());
    check(r.exit_code == 0, "lagrange-check exits 0");
    const std::string report = slurp(out / "lagrange_report.txt");
    check(contains(report, "multiplier = "), "lagrange report has multiplier");
    check(contains(report, "residual = "), "lagrange report has residual");
  }

  // exit codes: usage, data, numeric
  {
    check(run(bin, "profit --config " + (work / "missing.json").string()).exit_code == 1,
          "missing config exits 1");
    const fs::path badjson = work / "bad.json";
    write(badjson, "{broken");
    check(run(bin, "profit --config " + badjson.string()).exit_code == 1, "bad json exits 1");
    check(run(bin, "train --data " + csv.string() + " --label z --lambda 0.1").exit_code == 2,
          "missing label column exits 2");
    const fs::path bad_csv = work / "bad.csv";
    write(bad_csv, "x1,y\n1,2\nabc,3\n");
    check(run(bin, "train --data " + bad_csv.string() + " --label y --lambda 0.1").exit_code == 2,
          "non-numeric cell exits 2");
    const fs::path wide_csv = work / "wide.csv";
    write(wide_csv, "x1,x2,x3,y\n1,2,3,4\n5,6,7,8\n");
    check(run(bin, "train --data " + wide_csv.string() + " --label y --lambda 0").exit_code == 3,
          "ill-posed unpenalized fit exits 3");
    check(run(bin, "train --data " + csv.string() + " --label y").exit_code == 1,
          "neither lambda nor cost model exits 1");
    check(run(bin, "train --data " + csv.string() + " --label y --lambda 0.1 --gamma 2")
                  .exit_code == 1,
          "both lambda and gamma exits 1");
    check(run(bin, "train --data " + csv.string() + " --label y --penalty cauchy --lambda 1")
                  .exit_code == 1,
          "unknown penalty exits 1");
    check(run(bin, "nonsense").exit_code == 1, "unknown subcommand exits 1");
  }

  if (failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cerr << "cli_tests: " << failures << " check(s) failed\n";
  return 1;
}
