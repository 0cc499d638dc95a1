// End-to-end acceptance suite: each numbered criterion prints a single
// pass/fail line; the exit code is the number of failed criteria.

#include "polytype/report.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace polytype;

namespace {

int failures = 0;

void line(int number, bool ok, const std::string& what, double seconds) {
    std::ostringstream out;
    out << (ok ? "PASS" : "FAIL") << " " << number << ": " << what << " ("
        << static_cast<long long>(seconds * 1000) << " ms)";
    std::cout << out.str() << std::endl;
    if (!ok) ++failures;
}

template <typename Fn>
void criterion(int number, const std::string& what, double budget_seconds, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = fn(note);
    } catch (const std::exception& e) {
        ok = false;
        note = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        note += (note.empty() ? "" : "; ") + std::string("over time budget");
    }
    line(number, ok, what + (note.empty() ? "" : " [" + note + "]"), elapsed);
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(POLYTYPE_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof(buf), pipe))
        result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool headline_report(const FamilyParams& p, long long type, int a,
                     const std::vector<long long>& numerator, std::string& note) {
    const auto cli = run_cli("--format json report --n " + std::to_string(p.n) +
                             " --i " + std::to_string(p.i) + " --j " +
                             std::to_string(p.j));
    if (cli.exit_code != 0) {
        note = "cli exit code " + std::to_string(cli.exit_code);
        return false;
    }
    const auto report = Json::parse(cli.output);
    if (report.at("type") != type) {
        note = "type " + report.at("type").dump();
        return false;
    }
    if (report.at("a_invariant") != a) {
        note = "a-invariant " + report.at("a_invariant").dump();
        return false;
    }
    if (report.at("numerator") != Json(numerator)) {
        note = "numerator " + report.at("numerator").dump();
        return false;
    }
    const auto closed = conjecture_check(p);
    if (closed.status != ConjectureStatus::Holds || closed.predicted != type) {
        note = "numerator identity does not reproduce the type";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    criterion(1, "reference report (7,3,2): type 113, a=-1, numerator identity", 1.0,
              [&](std::string& note) {
                  return headline_report(FamilyParams{7, 3, 2}, 113, -1,
                                         {1, 1561, 24795, 57023, 25571, 1673, 1}, note);
              });

    criterion(2, "reference report (7,4,5): type 540, a=-3, numerator degree 4", 1.0,
              [&](std::string& note) {
                  return headline_report(FamilyParams{7, 4, 5}, 540, -3,
                                         {1, 351, 2835, 3297, 540}, note);
              });

    criterion(3, "facet and ray certificates for every (n,i,j), 3<=n<=7", 30.0,
              [&](std::string& note) {
                  for (int n = 3; n <= 7; ++n)
                      for (int i = 1; i <= n - 2; ++i)
                          for (int j = 1; j <= n - 1; ++j) {
                              const FamilyParams p{n, i, j};
                              const auto base =
                                  enumerate_base(build_family_presentation(p));
                              const auto cone = build_cone(p);
                              const auto rep =
                                  verify_irreducible_representation(base, cone);
                              bool rays_ok =
                                  cone.rays.size() ==
                                  static_cast<std::size_t>(i + 1) * (n - i);
                              for (const auto& ray : cone.rays)
                                  rays_ok = rays_ok && base.count(ray) != 0;
                              det_certificate(p);
                              if (!rep.ok || !rays_ok) {
                                  note = "n=" + std::to_string(n) +
                                         ",i=" + std::to_string(i) +
                                         ",j=" + std::to_string(j);
                                  return false;
                              }
                          }
                  return true;
              });

    criterion(4, "canonical module: brute force equals closed form, n<=6 plus n=7 goldens",
              300.0, [&](std::string& note) {
                  auto matches = [&](const FamilyParams& p) {
                      const auto brute = canonical_generators_bruteforce(p);
                      const auto closed = enumerate_M(p);
                      return brute.generators == closed.generators &&
                             Int(static_cast<long long>(brute.generators.size())) ==
                                 type_formula(p);
                  };
                  for (int n = 3; n <= 6; ++n)
                      for (int i = 1; i <= n - 2; ++i)
                          for (int j = 1; j <= n - 1; ++j)
                              if (!matches(FamilyParams{n, i, j})) {
                                  note = "n=" + std::to_string(n) +
                                         ",i=" + std::to_string(i) +
                                         ",j=" + std::to_string(j);
                                  return false;
                              }
                  if (!matches(FamilyParams{7, 3, 2}) ||
                      type_formula(FamilyParams{7, 3, 2}) != 113) {
                      note = "(7,3,2)";
                      return false;
                  }
                  if (!matches(FamilyParams{7, 4, 5}) ||
                      type_formula(FamilyParams{7, 4, 5}) != 540) {
                      note = "(7,4,5)";
                      return false;
                  }
                  return true;
              });

    criterion(5, "Hilbert function equals Ehrhart count, 3<=n<=7, t<=3", 300.0,
              [&](std::string& note) {
                  for (int n = 3; n <= 7; ++n)
                      for (int i = 1; i <= n - 2; ++i)
                          for (int j = 1; j <= n - 1; ++j) {
                              const FamilyParams p{n, i, j};
                              for (int t = 0; t <= 3; ++t)
                                  if (hilbert_function(p, t) != ehrhart_count(p, t)) {
                                      note = "n=" + std::to_string(n) +
                                             ",i=" + std::to_string(i) +
                                             ",j=" + std::to_string(j) +
                                             ",t=" + std::to_string(t);
                                      return false;
                                  }
                              const auto base =
                                  enumerate_base(build_family_presentation(p));
                              if (hilbert_function(p, 1) !=
                                  Int(static_cast<long long>(base.size()))) {
                                  note = "h(1) != |base|";
                                  return false;
                              }
                          }
                  return true;
              });

    criterion(6, "Gorenstein exactly when j = n-i-1, n<=8", 10.0,
              [&](std::string& note) {
                  for (int n = 3; n <= 8; ++n)
                      for (int i = 1; i <= n - 2; ++i)
                          for (int j = 1; j <= n - 1; ++j) {
                              const FamilyParams p{n, i, j};
                              if ((type_formula(p) == 1) != is_gorenstein(p) ||
                                  is_gorenstein(p) != (j == n - i - 1)) {
                                  note = "n=" + std::to_string(n) +
                                         ",i=" + std::to_string(i) +
                                         ",j=" + std::to_string(j);
                                  return false;
                              }
                          }
                  return true;
              });

    criterion(7, "a-invariant matches generator degrees and numerator degree", 300.0,
              [&](std::string& note) {
                  for (int n = 3; n <= 6; ++n)
                      for (int i = 1; i <= n - 2; ++i)
                          for (int j = 1; j <= n - 1; ++j) {
                              const FamilyParams p{n, i, j};
                              const auto brute = canonical_generators_bruteforce(p);
                              if (-a_invariant(p) != brute.min_degree()) {
                                  note = "min degree at n=" + std::to_string(n) +
                                         ",i=" + std::to_string(i) +
                                         ",j=" + std::to_string(j);
                                  return false;
                              }
                          }
                  for (int n = 3; n <= 8; ++n)
                      for (int i = 1; i <= n - 2; ++i)
                          for (int j = 1; j <= n - 1; ++j) {
                              const FamilyParams p{n, i, j};
                              const auto numerator = h_vector(p);
                              if (static_cast<int>(numerator.size()) != n - p.r() + 1 ||
                                  numerator.back() <= 0 || numerator.front() != 1) {
                                  note = "numerator degree at n=" + std::to_string(n) +
                                         ",i=" + std::to_string(i) +
                                         ",j=" + std::to_string(j);
                                  return false;
                              }
                          }
                  return true;
              });

    criterion(8, "conjecture sweep: family grid n<=7 plus 200 seeded random cases", 570.0,
              [&](std::string& note) {
                  // Violations are findings, not failures; they must be
                  // surfaced with a reproducible presentation, never
                  // silently dropped or reported as inconclusive.
                  long long family_holds = 0, family_violated = 0;
                  SweepOptions family_grid;
                  family_grid.max_n = 7;
                  for (const auto& row : sweep_rows(family_grid)) {
                      const auto status = row.at("status").get<std::string>();
                      if (status == "holds") {
                          ++family_holds;
                      } else if (status == "VIOLATED" &&
                                 row.contains("counterexample")) {
                          ++family_violated;
                          std::cout << "counterexample at "
                                    << row.at("instance").get<std::string>()
                                    << ": type=" << row.at("type").dump()
                                    << " predicted=" << row.at("predicted").dump()
                                    << "\n";
                      } else {
                          note = row.at("instance").get<std::string>() +
                                 " inconclusive (" + status + ")";
                          return false;
                      }
                  }

                  SweepOptions random_opt;
                  random_opt.max_n = 5;
                  random_opt.random_count = 100;
                  random_opt.seed = 2026;
                  const auto rows = sweep_rows(random_opt);
                  long long random_rows = 0, holds = 0, skipped = 0;
                  for (const auto& row : rows) {
                      const auto instance = row.at("instance").get<std::string>();
                      if (instance.rfind("random", 0) != 0) continue;
                      ++random_rows;
                      const auto status = row.at("status").get<std::string>();
                      if (status == "holds") ++holds;
                      else if (status == "skipped") ++skipped;
                      else {
                          // A violation is a finding, not a failure, but it must
                          // be surfaced with a reproducible presentation.
                          if (!row.contains("counterexample")) {
                              note = "violation without counterexample";
                              return false;
                          }
                          std::cout << "counterexample at " << instance << ":\n"
                                    << row.at("counterexample").get<std::string>();
                      }
                  }
                  if (random_rows != 200) {
                      note = "expected 200 random rows, got " +
                             std::to_string(random_rows);
                      return false;
                  }
                  if (holds + skipped == 0) {
                      note = "no conclusive random rows";
                      return false;
                  }

                  const std::string sweep_args =
                      "--format json sweep --max-n 4 --random 20 --seed 5";
                  const auto first = run_cli(sweep_args);
                  const auto second = run_cli(sweep_args);
                  if (first.exit_code != 0 || first.output != second.output ||
                      first.output.empty()) {
                      note = "sweep output not reproducible";
                      return false;
                  }
                  note = "family: " + std::to_string(family_holds) + " hold, " +
                         std::to_string(family_violated) +
                         " violated (surfaced); random: " + std::to_string(holds) +
                         " hold, " + std::to_string(skipped) + " skipped";
                  return true;
              });

    criterion(9, "exchange axiom holds on family bases, fails on a non-polymatroid",
              60.0, [&](std::string& note) {
                  for (int n = 3; n <= 6; ++n)
                      for (int i = 1; i <= n - 2; ++i)
                          for (int j = 1; j <= n - 1; ++j) {
                              const FamilyParams p{n, i, j};
                              const auto base =
                                  enumerate_base(build_family_presentation(p));
                              if (!check_exchange_property(base)) {
                                  note = "n=" + std::to_string(n) +
                                         ",i=" + std::to_string(i) +
                                         ",j=" + std::to_string(j);
                                  return false;
                              }
                          }
                  if (check_exchange_property({{2, 0, 1}, {0, 2, 1}})) {
                      note = "negative control passed the axiom";
                      return false;
                  }
                  return true;
              });

    criterion(10, "iterated differences reproduce the series numerator, n<=6", 60.0,
              [&](std::string& note) {
                  for (int n = 3; n <= 6; ++n)
                      for (int i = 1; i <= n - 2; ++i)
                          for (int j = 1; j <= n - 1; ++j) {
                              const FamilyParams p{n, i, j};
                              std::vector<Int> values;
                              for (int t = 0; t <= n - p.r(); ++t)
                                  values.push_back(hilbert_function(p, t));
                              std::vector<Int> diff = values;
                              for (int k = 0; k < n; ++k)
                                  for (std::size_t idx = diff.size(); idx-- > 1;)
                                      diff[idx] -= diff[idx - 1];
                              if (diff != numerator_from_values(values, n) ||
                                  diff != h_vector(p)) {
                                  note = "n=" + std::to_string(n) +
                                         ",i=" + std::to_string(i) +
                                         ",j=" + std::to_string(j);
                                  return false;
                              }
                          }
                  return true;
              });

    std::cout << (failures == 0 ? "acceptance: all criteria passed"
                                : "acceptance: " + std::to_string(failures) +
                                      " criteria failed")
              << std::endl;
    return failures;
}
