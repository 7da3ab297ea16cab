#include <CLI11.hpp>
#include <fmt/core.h>
#include <projemb/pipeline.h>

using namespace projemb;

namespace {

struct Flags {
  std::string geometry;
  int charge{0};
  std::string active;
  std::string localizer{"spade"};
  double threshold{0.95};
  std::string projector{"huzinaga"};
  double mu{1e6};
  std::string solver{"exact"};
  bool no_correction{false};
  std::string out;
  std::string hamiltonian;
  int verbosity{0};
  std::string config;
};

// Values from a key = value file fill every option not given on the command line.
void apply_config_file(CLI::App *cmd, const std::string &path) {
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_file(path);
  } catch (const CLI::Error &e) {
    throw InputError(fmt::format("cannot read config '{}': {}", path, e.what()));
  }
  for (const auto &item : items) {
    if (item.name == "++" || item.name == "--")
      continue;
    CLI::Option *opt = cmd->get_option_no_throw("--" + item.name);
    if (opt == nullptr || item.name == "config")
      throw InputError(fmt::format("unknown key '{}' in config '{}'", item.name, path));
    if (opt->count() > 0)
      continue;
    try {
      opt->add_result(item.inputs);
      opt->run_callback();
    } catch (const CLI::Error &e) {
      throw InputError(fmt::format("config key '{}': {}", item.name, e.what()));
    }
  }
}

void add_common(CLI::App *cmd, Flags &f) {
  cmd->add_option("--config", f.config, "key = value file; command-line flags take precedence");
  cmd->add_option("--geometry", f.geometry, "XYZ file (Angstrom)");
  cmd->add_option("--charge", f.charge, "total molecular charge");
  cmd->add_option("--active", f.active, "comma-separated 0-based active atom indices");
  cmd->add_option("--localizer", f.localizer, "spade or population");
  cmd->add_option("--threshold", f.threshold, "population threshold (population localizer)");
  cmd->add_option("--projector", f.projector, "huzinaga or mu");
  cmd->add_option("--mu", f.mu, "level-shift parameter for the mu projector");
  cmd->add_option("--out", f.out, "output path (stdout when omitted)");
  cmd->add_flag("--no-correction", f.no_correction,
                "drop the first-order correction from the same-level energy (diagnostic)");
  cmd->add_flag("-v,--verbose", f.verbosity, "print SCF iterations");
}

RunConfig to_config(CLI::App *cmd, const Flags &f) {
  if (!f.config.empty())
    apply_config_file(cmd, f.config);
  if (f.geometry.empty())
    throw InputError("no geometry given (--geometry)");
  if (f.active.empty())
    throw InputError("no active atoms given (--active)");
  RunConfig c;
  c.geometry = f.geometry;
  c.charge = f.charge;
  c.active_atoms = parse_index_list(f.active);
  c.localizer = parse_localizer_kind(f.localizer);
  c.threshold = f.threshold;
  c.projector = parse_projector_kind(f.projector);
  c.mu = f.mu;
  c.solver = parse_solver_kind(f.solver);
  c.first_order_correction = !f.no_correction;
  c.out = f.out;
  c.hamiltonian_out = f.hamiltonian;
  c.verbosity = f.verbosity;
  return c;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Projection-based embedding of a closed-shell molecule"};
  app.require_subcommand(1);

  Flags embed_flags;
  auto *embed = app.add_subcommand("embed", "single-point embedded calculation");
  add_common(embed, embed_flags);
  embed->add_option("--solver", embed_flags.solver, "none (export only) or exact");
  embed->add_option("--hamiltonian", embed_flags.hamiltonian,
                    "Hamiltonian JSON path (default: <out>.hamiltonian.json)");

  Flags scan_flags;
  std::string scan_atoms, scan_distances;
  int jobs = 1;
  auto *scan = app.add_subcommand("scan", "bond-stretch scan against full FCI");
  add_common(scan, scan_flags);
  scan->add_option("--atoms", scan_atoms, "fixed,moved atom indices");
  scan->add_option("--distances", scan_distances, "start:stop:step or a,b,c (Angstrom)");
  scan->add_option("--jobs", jobs, "scan points run concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*embed) {
      RunConfig config;
      try {
        config = to_config(embed, embed_flags);
      } catch (const Error &e) {
        throw StageError("config", e.what(), e.exit_code());
      }
      EmbedOutcome o = cmd_embed(config);
      fmt::print(stderr, "E_RHF            {:.10f}\n", o.rhf.E_total);
      fmt::print(stderr, "E_same_level     {:.10f}\n", o.same_level.total);
      if (o.wavefunction)
        fmt::print(stderr, "E_WF_in_HF       {:.10f}\n", o.wavefunction->E_total);
      fmt::print(stderr, "qubits           {} -> {}\n", o.full.n_qubits, o.hamiltonian.n_qubits());
      fmt::print(stderr, "terms            {} -> {}\n", o.full.term_count,
                 term_count(o.hamiltonian));
    } else {
      ScanConfig config;
      try {
        config.base = to_config(scan, scan_flags);
        auto atoms = parse_index_list(scan_atoms);
        if (atoms.size() != 2)
          throw InputError("--atoms takes exactly two indices");
        config.fixed_atom = atoms[0];
        config.moved_atom = atoms[1];
        config.distances = parse_distances(scan_distances);
        config.jobs = jobs;
      } catch (const Error &e) {
        throw StageError("config", e.what(), e.exit_code());
      }
      auto rows = cmd_scan(config);
      size_t failed = std::count_if(rows.begin(), rows.end(),
                                    [](const ScanRow &r) { return r.status != "ok"; });
      if (failed > 0)
        fmt::print(stderr, "{} of {} scan points failed\n", failed, rows.size());
    }
  } catch (const Error &e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return e.exit_code();
  } catch (const std::exception &e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
  return 0;
}
