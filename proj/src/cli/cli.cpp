#include "accred/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "accred/error.hpp"
#include "cli/commands.hpp"

namespace accred {
namespace {

using Action = std::function<bool(std::ostream&)>;

struct State {
  Action action;
  std::string file;
  int t = 2;
  std::string family;
  int index = 0;
  std::string emit;
  std::string set;
  std::size_t limit = 6;
  cli::PlanOptions plan;
  cli::SimulateOptions simulate;
  cli::TableOptions table;
  bool hull = false;
  int m = 1;
  double nu_min = 1.0;
  double nu_max = 10.0;
  int steps = 90;
};

void add_family_options(CLI::App* app, cli::FamilyOptions& o) {
  app->add_option("--family", o.family, "Code family")
      ->check(CLI::IsMember({"HamAmal", "HamExp", "HalfSpace", "NonlinAmal", "PiecewiseAmal"}));
  app->add_option("--i", o.index, "Family index");
  app->add_option("--code", o.code_file, "Code file (overrides --family)");
}

void setup_codes(CLI::App& app, State& st) {
  auto* codes = app.add_subcommand("codes", "Covering codes");
  codes->require_subcommand(1);

  auto* radius = codes->add_subcommand("radius", "Covering radius of a code file");
  radius->add_option("file", st.file, "Code file")->required();
  radius->callback([&] { st.action = [&](std::ostream& o) { cli::run_codes_radius(o, st.file); return true; }; });

  auto* gcr = codes->add_subcommand("gcr", "Generalized covering radius R_t");
  gcr->add_option("file", st.file, "Code file")->required();
  gcr->add_option("--t", st.t, "Tuple size")->required();
  gcr->callback([&] { st.action = [&](std::ostream& o) { cli::run_codes_gcr(o, st.file, st.t); return true; }; });

  auto* normal = codes->add_subcommand("normal", "Per-coordinate norms");
  normal->add_option("file", st.file, "Code file")->required();
  normal->callback([&] { st.action = [&](std::ostream& o) { cli::run_codes_normal(o, st.file); return true; }; });

  auto* fam = codes->add_subcommand("family", "Describe a family member");
  fam->add_option("name", st.family, "Family name")->required();
  fam->add_option("--i", st.index, "Index")->required();
  fam->add_option("--emit", st.emit, "Write the code to this file");
  fam->callback([&] {
    st.action = [&](std::ostream& o) { cli::run_codes_family(o, st.family, st.index, st.emit); return true; };
  });
}

void setup_complexity(CLI::App& app, State& st) {
  auto* cx = app.add_subcommand("complexity", "Coefficient set complexity");
  cx->require_subcommand(1);

  auto* compute = cx->add_subcommand("compute", "Complexity C(A)");
  compute->add_option("--set", st.set, "Comma separated rationals")->required();
  compute->add_option("--limit", st.limit, "Largest set size searched exhaustively");
  compute->callback([&] {
    st.action = [&](std::ostream& o) { cli::run_complexity_compute(o, st.set, st.limit); return true; };
  });

  auto* dec = cx->add_subcommand("decompose", "Offset, steps and selectors");
  dec->add_option("--set", st.set, "Comma separated rationals")->required();
  dec->add_option("--limit", st.limit, "Largest set size searched exhaustively");
  dec->callback([&] {
    st.action = [&](std::ostream& o) { cli::run_complexity_decompose(o, st.set, st.limit); return true; };
  });

  auto* sidon = cx->add_subcommand("sidon", "Almost-Sidon test");
  sidon->add_option("--set", st.set, "Comma separated rationals")->required();
  sidon->callback([&] { st.action = [&](std::ostream& o) { cli::run_complexity_sidon(o, st.set); return true; }; });
}

void setup_protocol(CLI::App& app, State& st) {
  auto* protocol = app.add_subcommand("protocol", "Access plans");
  protocol->require_subcommand(1);

  auto& opts = st.plan;
  auto* plan = protocol->add_subcommand("plan", "Plan one query");
  add_family_options(plan, opts.code);
  plan->add_option("--t", opts.blocks, "Number of blocks");
  plan->add_option("--set", opts.set, "Coefficient set");
  plan->add_option("--w", opts.weights, "Weight file or random:<seed>");
  plan->add_option("--mode", opts.mode, "Retrieval mode")
      ->check(CLI::IsMember({"separate", "joint", "gcr"}));
  plan->callback([&] { st.action = [&](std::ostream& o) { cli::run_protocol_plan(o, opts); return true; }; });
}

void setup_simulate(CLI::App& app, State& st) {
  auto& opts = st.simulate;
  auto* sim = app.add_subcommand("simulate", "Randomized end-to-end retrieval");
  add_family_options(sim, opts.code);
  sim->add_option("--t", opts.blocks, "Number of blocks");
  sim->add_option("--set", opts.set, "Coefficient set");
  sim->add_option("--trials", opts.trials, "Number of trials");
  sim->add_option("--seed", opts.seed, "Random seed");
  sim->add_option("--mode", opts.mode, "Storage mode")->check(CLI::IsMember({"linear", "monomial"}));
  sim->add_option("--backend", opts.backend, "Arithmetic")->check(CLI::IsMember({"exact", "float"}));
  sim->add_option("--emit-csv", opts.emit_csv, "Per-trial CSV output");
  sim->add_flag("--quiet", opts.quiet, "Summary line only");
  sim->callback([&] { st.action = [&](std::ostream& o) { return cli::run_simulate(o, opts); }; });
}

void setup_analysis(CLI::App& app, State& st) {
  auto* analysis = app.add_subcommand("analysis", "Tables, fronts and bounds");
  analysis->require_subcommand(1);

  auto& table_opts = st.table;

  const auto add_table_options = [&](CLI::App* sub) {
    sub->add_option("--cap", table_opts.cap, "Largest redundancy kept");
    sub->add_option("--first", table_opts.first, "Smallest family index");
    sub->add_option("--last", table_opts.last, "Largest family index");
  };

  auto* table = analysis->add_subcommand("table", "Two-decimal Pareto table");
  add_table_options(table);
  table->add_flag("--truncate", table_opts.truncate, "Truncate instead of rounding");
  table->callback([&] { st.action = [&](std::ostream& o) { cli::run_analysis_table(o, table_opts); return true; }; });

  auto* pareto = analysis->add_subcommand("pareto", "Exact Pareto front");
  add_table_options(pareto);
  pareto->add_flag("--hull", st.hull, "Lower convex hull only");
  pareto->callback([&] {
    st.action = [&](std::ostream& o) { cli::run_analysis_pareto(o, table_opts, st.hull); return true; };
  });

  auto* bound = analysis->add_subcommand("bound", "Lower bound curve");
  bound->add_option("--m", st.m, "Alphabet size exponent");
  bound->add_option("--nu-min", st.nu_min, "Smallest redundancy");
  bound->add_option("--nu-max", st.nu_max, "Largest redundancy");
  bound->add_option("--steps", st.steps, "Grid steps");
  bound->callback([&] {
    st.action = [&](std::ostream& o) { cli::run_analysis_bound(o, st.m, st.nu_min, st.nu_max, st.steps); return true; };
  });
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Access-redundancy tradeoffs for coded linear retrieval", "accred"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  std::string output;
  app.add_option("-o,--output", output, "Write results to this file instead of stdout");

  State st;
  setup_codes(app, st);
  setup_complexity(app, st);
  setup_protocol(app, st);
  setup_simulate(app, st);
  setup_analysis(app, st);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 2;
  }
  if (!st.action) {
    err << app.help();
    return 2;
  }

  try {
    if (!output.empty()) {
      std::ofstream file(output);
      if (!file) throw DomainError("cannot write '" + output + "'");
      return st.action(file) ? 0 : 1;
    }
    return st.action(out) ? 0 : 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace accred
