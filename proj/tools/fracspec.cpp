// fracspec: reproduction tables, problem-file solves and FDM cross-checks.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "fracspec/benchmarks.hpp"
#include "fracspec/errors.hpp"
#include "fracspec/metrics.hpp"
#include "fracspec/problem_file.hpp"

namespace fs = fracspec;

namespace {

struct RunArgs {
  int id = 0;
  std::map<std::string, std::string> raw;
  std::string out = "out";
  int threads = 0;
};

void print_output(const fs::ExampleOutput& output, const std::filesystem::path& dir) {
  for (const auto& [name, table] : output.tables) {
    std::cout << "# " << (dir / name).string() << "\n" << fs::to_csv(table);
  }
  for (const auto& [name, _] : output.scripts) std::cout << "# " << (dir / name).string() << "\n";
}

void run_one(int id, const fs::Overrides& overrides, const std::filesystem::path& dir) {
  const auto start = std::chrono::steady_clock::now();
  const fs::ExampleOutput output = fs::run_example(id, overrides);
  fs::write_example(output, dir);
  print_output(output, dir);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::fprintf(stderr, "example %d: %.2f s\n", id, secs);
}

void run_oracle(int id, int nx, int nt) {
  auto [spectral, grid] = fs::oracle_defaults(id);
  if (nx > 0) grid.space_steps = nx;
  if (nt > 0) grid.time_steps = nt;
  const fs::OracleReport r = fs::oracle_compare(id, spectral, grid);
  std::printf("example %d: FDM grid N_x=%d N_t=%d (fine grid doubled)\n", id, grid.space_steps, grid.time_steps);
  std::printf("  |spectral - FDM|      %s\n", fs::format_sci(r.discrepancy).c_str());
  std::printf("  Richardson estimate   %s\n", fs::format_sci(r.estimate).c_str());
  std::printf("  FDM error vs exact    %s\n", fs::format_sci(r.fdm_error).c_str());
  std::printf("  %s\n", r.agrees() ? "agree (within 3x estimate)" : "DISAGREE");
  if (!r.agrees()) throw fs::NumericalError("oracle disagreement for example " + std::to_string(id));
}

void solve_file(const std::string& path, const std::string& out_dir, double spacing) {
  const fs::LoadedProblem loaded = fs::load_problem(path);
  const fs::PdeSolution sol = fs::solve_pde(loaded.problem, loaded.options);
  const auto& d = sol.diagnostics();
  const double T = loaded.problem.domain_end;
  std::printf("modes/dim %d  K %d  delta %g  quadrature %d  max residual %s  ill-conditioned modes %d  lift %s\n",
              d.modes_per_dim, d.basis_size, d.delta, d.quadrature_order, fs::format_sci(d.max_residual).c_str(),
              d.ill_conditioned_modes, fs::to_string(d.lift.kind));

  const auto points = fs::closed_points(loaded.problem.domain, spacing);
  const auto values = sol.values(points, T);
  fs::CsvTable table;
  const bool two_d = loaded.problem.domain.dim() == 2;
  table.header = two_d ? std::vector<std::string>{"x1", "x2", "re_u", "im_u"} : std::vector<std::string>{"x", "re_u", "im_u"};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const fs::Point g = loaded.shift.to_global(points[i]);
    std::vector<std::string> row{fs::format_sci(g[0])};
    if (two_d) row.push_back(fs::format_sci(g[1]));
    row.push_back(fs::format_sci(values[i].real()));
    row.push_back(fs::format_sci(values[i].imag()));
    table.add_row(std::move(row));
  }
  const auto file = std::filesystem::path(out_dir) / "solution.csv";
  fs::write_csv(file, table);
  std::printf("wrote %s\n", file.string().c_str());

  if (loaded.exact) {
    const fs::MaxError m = fs::merr(*loaded.exact, sol, points, T);
    const double r = fs::rerr(*loaded.exact, sol, fs::TestGrid{points, fs::uniform_times(T)});
    std::printf("Merr(T) %s  (re %s, im %s)  Rerr %s\n", fs::format_sci(m.abs).c_str(), fs::format_sci(m.real).c_str(),
                fs::format_sci(m.imag).c_str(), fs::format_sci(r).c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-analytical solver for multi-term variable-order time-fractional PDEs"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Reproduce one example's tables");
  run_cmd->add_option("id", run.id, "Example id (1-8)")->required()->check(CLI::Range(1, 8));
  for (const char* key : {"N", "K", "delta", "T", "quad", "spacing"}) {
    run_cmd->add_option_function<std::string>(std::string("--") + key, [&run, key](const std::string& v) { run.raw[key] = v; },
                                              std::string("Override ") + key);
  }
  run_cmd->add_option_function<std::string>("--test-times", [&run](const std::string& v) { run.raw["test_times"] = v; },
                                            "Override the number of time samples for Rerr");
  run_cmd->add_option("--out", run.out, "Output directory");
  run_cmd->add_option("--threads", run.threads, "Worker threads (0: FRACSPEC_THREADS or hardware)");

  std::string problem_path, solve_out = "out";
  double solve_spacing = 0.05;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a JSON problem file");
  solve_cmd->add_option("problem", problem_path, "Problem file")->required();
  solve_cmd->add_option("--out", solve_out, "Output directory");
  solve_cmd->add_option("--spacing", solve_spacing, "Test-point spacing");

  int oracle_id = 0, nx = 0, nt = 0;
  auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check against the L1 finite-difference oracle");
  oracle_cmd->add_option("id", oracle_id, "Example id (2 or 3)")->required()->check(CLI::IsMember({2, 3}));
  oracle_cmd->add_option("--nx", nx, "Spatial steps of the coarse grid");
  oracle_cmd->add_option("--nt", nt, "Time steps of the coarse grid");

  std::string all_out = "out";
  auto* all_cmd = app.add_subcommand("all", "Full reproduction sweep");
  all_cmd->add_option("--out", all_out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*run_cmd) {
      fs::Overrides o = fs::parse_overrides(run.raw);
      o.threads = run.threads;
      run_one(run.id, o, run.out);
    } else if (*solve_cmd) {
      solve_file(problem_path, solve_out, solve_spacing);
    } else if (*oracle_cmd) {
      run_oracle(oracle_id, nx, nt);
    } else if (*all_cmd) {
      for (int id = 1; id <= 8; ++id) run_one(id, {}, all_out);
      run_oracle(2, 0, 0);
      run_oracle(3, 0, 0);
    }
  } catch (const fs::ValidationError& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 2;
  } catch (const fs::UnsupportedExponent& e) {
    std::fprintf(stderr, "validation error: %s\n", e.what());
    return 2;
  } catch (const fs::IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return 4;
  } catch (const fs::Error& e) {
    std::fprintf(stderr, "numerical error: %s\n", e.what());
    return 3;
  }
  return 0;
}
