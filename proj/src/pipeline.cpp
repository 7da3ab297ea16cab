#include <projemb/pipeline.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fmt/core.h>
#include <fmt/os.h>
#include <json.hpp>
#include <sstream>
#include <thread>

namespace projemb {

namespace {

using json = nlohmann::ordered_json;

template <typename F> auto in_stage(const std::string &stage, F &&fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError &) {
    throw;
  } catch (const Error &e) {
    throw StageError(stage, e.what(), e.exit_code());
  } catch (const std::exception &e) {
    throw StageError(stage, e.what(), 1);
  }
}

json to_json(const std::vector<size_t> &v) {
  json a = json::array();
  for (size_t x : v)
    a.push_back(x);
  return a;
}

json to_json(const Vec &v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    a.push_back(v[i]);
  return a;
}

json scf_trace(const SCFResult &scf) {
  json a = json::array();
  for (const auto &it : scf.trace)
    a.push_back({{"iteration", it.iteration}, {"energy", it.energy}, {"error", it.error}});
  return a;
}

void write_text(const std::string &path, const std::string &text) {
  try {
    auto out = fmt::output_file(path);
    out.print("{}", text);
  } catch (const std::exception &e) {
    throw InputError(fmt::format("cannot write '{}': {}", path, e.what()));
  }
}

std::string energy_cell(const std::optional<double> &e) {
  return e ? fmt::format("{:.10f}", *e) : "NA";
}

} // namespace

StageError::StageError(std::string stage, const std::string &message, int code)
    : Error(fmt::format("[{}] {}", stage, message)), m_stage(std::move(stage)), m_code(code) {}

LocalizerKind parse_localizer_kind(const std::string &name) {
  if (name == "spade")
    return LocalizerKind::spade;
  if (name == "population")
    return LocalizerKind::population;
  throw InputError(fmt::format("unknown localizer '{}' (expected spade or population)", name));
}

SolverKind parse_solver_kind(const std::string &name) {
  if (name == "none")
    return SolverKind::none;
  if (name == "exact")
    return SolverKind::exact;
  throw InputError(fmt::format("unknown solver '{}' (expected none or exact)", name));
}

std::string to_string(LocalizerKind kind) {
  return kind == LocalizerKind::spade ? "spade" : "population";
}

std::string to_string(SolverKind kind) { return kind == SolverKind::none ? "none" : "exact"; }

void validate_config(const RunConfig &config) {
  if (!(config.threshold > 0.0 && config.threshold <= 1.0))
    throw InputError(fmt::format("threshold {} outside (0, 1]", config.threshold));
  if (!(config.mu > 0.0))
    throw InputError(fmt::format("mu must be positive (got {})", config.mu));
}

QubitHamiltonian full_hamiltonian(const SCFResult &rhf, const IntegralSet &ints) {
  MOIntegrals mo = mo_transform(ints.h_core, ints.eri, rhf.C);
  return jordan_wigner(second_quantize(mo), rhf.E_nuc);
}

EmbedOutcome run_embed(const Molecule &mol, const RunConfig &config) {
  in_stage("config", [&] { validate_config(config); });
  EmbedOutcome out(mol, config);

  BasisSet basis = in_stage("basis", [&] { return build_basis(mol, sto3g_library()); });
  out.n_ao = basis.size();
  IntegralSet ints = in_stage("integrals", [&] { return compute_integrals(basis, mol); });

  ScfOptions scf_opts;
  scf_opts.verbosity = config.verbosity;
  out.rhf = in_stage("scf", [&] { return run_rhf(mol, ints, scf_opts); });

  out.partition = in_stage("partition", [&] {
    validate_active_atoms(config.active_atoms, mol.size());
    if (config.localizer == LocalizerKind::spade)
      return spade_partition(out.rhf, ints.S, basis, mol.size(), config.active_atoms);
    Mat C_lmo = population_localize(out.rhf, ints.S, basis, mol.size());
    return assign_by_population(C_lmo, ints.S, basis, mol.size(), config.active_atoms,
                                config.threshold);
  });

  out.embedded = in_stage("embedding", [&] {
    EmbeddingOptions opts{config.projector, config.mu};
    EmbeddedProblem problem = build_embedded_problem(ints, out.partition, out.rhf.E_nuc, opts);
    return run_embedded_scf(problem, mol, ints, config.verbosity);
  });
  const EmbeddedProblem &problem = out.embedded.problem;
  out.same_level = same_level_energy(problem, out.embedded.scf.gamma, ints,
                                     config.first_order_correction);
  out.E_cls = wf_in_lowlevel_constant(problem);
  out.reduced = in_stage("embedding", [&] {
    return drop_environment_orbitals(out.embedded.scf, problem.gamma_env, ints.S);
  });

  in_stage("qubit_map", [&] {
    QubitHamiltonian full = full_hamiltonian(out.rhf, ints);
    out.full = {full.n_qubits(), term_count(full)};
    MOIntegrals mo = mo_transform(problem.h_emb, ints.eri, out.reduced.C);
    out.hamiltonian = jordan_wigner(second_quantize(mo), out.E_cls);
  });

  if (config.solver == SolverKind::exact) {
    out.wavefunction = in_stage("solver", [&] {
      WavefunctionResult wf;
      wf.sector = {problem.n_act_electrons, 0.0};
      GroundState gs = ground_state(out.hamiltonian, wf.sector);
      wf.dimension = gs.dimension;
      wf.E_total = gs.energy;
      wf.E_active = gs.energy - out.E_cls;
      return wf;
    });
  }
  return out;
}

std::string report_json(const EmbedOutcome &o) {
  const RunConfig &c = o.config;
  const EmbeddedProblem &p = o.embedded.problem;
  json j;

  json atoms = json::array();
  for (const auto &a : o.molecule.atoms()) {
    Vec3 r = a.position / bohr_per_angstrom;
    atoms.push_back({{"symbol", a.symbol}, {"x", r.x()}, {"y", r.y()}, {"z", r.z()}});
  }
  j["molecule"] = {{"charge", o.molecule.charge()},
                   {"n_electrons", o.molecule.n_electrons()},
                   {"atoms_angstrom", std::move(atoms)}};
  j["config"] = {{"active_atoms", to_json(c.active_atoms)},
                 {"localizer", to_string(c.localizer)},
                 {"threshold", c.threshold},
                 {"projector", to_string(c.projector)},
                 {"mu", c.mu},
                 {"solver", to_string(c.solver)},
                 {"first_order_correction", c.first_order_correction}};
  j["basis"] = {{"name", "STO-3G"}, {"n_ao", o.n_ao}};
  j["rhf"] = {{"E_total", o.rhf.E_total},
              {"E_electronic", o.rhf.E_electronic},
              {"E_nuc", o.rhf.E_nuc},
              {"iterations", o.rhf.trace.size()},
              {"orbital_energies", to_json(o.rhf.eps)}};

  json orbitals = json::array();
  for (Eigen::Index i = 0; i < o.partition.C_lmo.cols(); ++i) {
    bool active = std::find(o.partition.active_idx.begin(), o.partition.active_idx.end(),
                            static_cast<size_t>(i)) != o.partition.active_idx.end();
    orbitals.push_back({{"index", i},
                        {"active_population", o.partition.active_population[i]},
                        {"active", active}});
  }
  j["partition"] = {{"n_active", o.partition.active_idx.size()},
                    {"n_environment", o.partition.env_idx.size()},
                    {"active_orbitals", to_json(o.partition.active_idx)},
                    {"environment_orbitals", to_json(o.partition.env_idx)},
                    {"orbitals", std::move(orbitals)}};
  if (o.partition.singular_values.size() > 0)
    j["partition"]["singular_values"] = to_json(o.partition.singular_values);

  j["embedding"] = {{"projector", to_string(p.projector_kind)},
                    {"mu", p.projector_kind == ProjectorKind::mu ? json(p.mu_value) : json()},
                    {"n_active", o.partition.active_idx.size()},
                    {"n_environment", o.partition.env_idx.size()},
                    {"n_active_electrons", p.n_act_electrons},
                    {"E_env", p.E_env},
                    {"g_cross", p.g_cross},
                    {"tr_gamma_act_v_emb_plus_p", p.E_correction},
                    {"max_occupied_env_population", o.embedded.max_env_population},
                    {"orbital_energies", to_json(o.embedded.scf.eps)},
                    {"scf_trace", scf_trace(o.embedded.scf)}};

  const auto &s = o.same_level;
  j["same_level"] = {{"E_active", s.E_active}, {"E_env", s.E_env},
                     {"g_cross", s.g_cross},   {"correction", s.correction},
                     {"E_nuc", s.E_nuc},       {"E_total", s.total},
                     {"error_vs_rhf", s.total - o.rhf.E_total}};

  j["classical_constant"] = {{"E_env", p.E_env},
                             {"g_cross", p.g_cross},
                             {"minus_tr_gamma_act_v_emb_plus_p", -p.E_correction},
                             {"E_nuc", p.E_nuc},
                             {"E_cls", o.E_cls}};

  json dropped_pop = json::array();
  for (size_t i : o.reduced.dropped)
    dropped_pop.push_back(o.reduced.env_population[static_cast<Eigen::Index>(i)]);
  j["reduced_orbitals"] = {{"n_orbitals", o.reduced.kept.size()},
                           {"kept", to_json(o.reduced.kept)},
                           {"dropped", to_json(o.reduced.dropped)},
                           {"dropped_env_population", std::move(dropped_pop)}};

  j["hamiltonian"] = {
      {"full", {{"n_qubits", o.full.n_qubits}, {"term_count", o.full.term_count}}},
      {"embedded",
       {{"n_qubits", o.hamiltonian.n_qubits()}, {"term_count", term_count(o.hamiltonian)}}}};

  if (o.wavefunction) {
    const auto &w = *o.wavefunction;
    j["wavefunction"] = {{"solver", "exact"},
                         {"sector", {{"n_electrons", w.sector.n_electrons}, {"s_z", w.sector.s_z}}},
                         {"dimension", w.dimension},
                         {"E_active", w.E_active},
                         {"E_cls", o.E_cls},
                         {"E_total", w.E_total}};
  }
  return j.dump(2) + "\n";
}

std::string hamiltonian_path(const RunConfig &config) {
  if (!config.hamiltonian_out.empty())
    return config.hamiltonian_out;
  std::filesystem::path p = config.out.empty() ? "report.json" : config.out;
  p.replace_extension(".hamiltonian.json");
  return p.string();
}

EmbedOutcome cmd_embed(const RunConfig &config) {
  Molecule mol = in_stage("geometry", [&] { return read_xyz(config.geometry, config.charge); });
  EmbedOutcome out = run_embed(mol, config);
  in_stage("output", [&] {
    std::string report = report_json(out);
    if (config.out.empty())
      fmt::print("{}", report);
    else
      write_text(config.out, report);
    write_text(hamiltonian_path(config), out.hamiltonian.to_json(2) + "\n");
  });
  return out;
}

std::vector<size_t> parse_index_list(const std::string &spec) {
  std::vector<size_t> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw InputError(fmt::format("invalid index '{}' in list '{}'", item, spec));
    out.push_back(std::stoul(item));
  }
  if (out.empty())
    throw InputError("empty index list");
  return out;
}

std::vector<double> parse_distances(const std::string &spec) {
  auto number = [&](const std::string &s) {
    try {
      size_t used = 0;
      double v = std::stod(s, &used);
      if (used != s.size() || !std::isfinite(v) || v <= 0.0)
        throw std::invalid_argument(s);
      return v;
    } catch (const std::exception &) {
      throw InputError(fmt::format("invalid distance '{}' in '{}'", s, spec));
    }
  };

  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':'))
      parts.push_back(item);
    if (parts.size() != 3)
      throw InputError(fmt::format("distance range '{}' must be start:stop:step", spec));
    double a = number(parts[0]), b = number(parts[1]), step = number(parts[2]);
    if (b < a)
      throw InputError(fmt::format("distance range '{}' runs backwards", spec));
    const auto n = static_cast<long>(std::floor((b - a) / step + 1e-9));
    for (long i = 0; i <= n; ++i)
      out.push_back(a + static_cast<double>(i) * step);
  } else {
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ','))
      out.push_back(number(item));
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](double x, double y) { return std::abs(x - y) < 1e-9; }),
            out.end());
  if (out.size() < 2)
    throw InputError("a scan needs at least two distinct distances");
  return out;
}

Molecule displaced_geometry(const Molecule &mol, size_t fixed, size_t moved, double r_angstrom) {
  if (fixed >= mol.size() || moved >= mol.size() || fixed == moved)
    throw InputError(fmt::format("scan atoms {},{} invalid for a {}-atom molecule", fixed, moved,
                                 mol.size()));
  const Vec3 origin = mol.atoms()[fixed].position;
  const Vec3 axis = (mol.atoms()[moved].position - origin).normalized();
  return mol.with_position(moved, origin + r_angstrom * bohr_per_angstrom * axis);
}

std::vector<ScanRow> run_scan(const Molecule &mol, const ScanConfig &config) {
  in_stage("config", [&] {
    validate_config(config.base);
    displaced_geometry(mol, config.fixed_atom, config.moved_atom, 1.0);
    if (config.jobs < 1)
      throw InputError("jobs must be at least 1");
  });
  std::vector<double> distances = config.distances;
  std::sort(distances.begin(), distances.end());
  distances.erase(std::unique(distances.begin(), distances.end(),
                              [](double x, double y) { return std::abs(x - y) < 1e-9; }),
                  distances.end());

  std::vector<ScanRow> rows(distances.size());
  auto compute = [&](size_t i) {
    ScanRow &row = rows[i];
    row.r_angstrom = distances[i];
    try {
      Molecule geom = in_stage("geometry", [&] {
        return displaced_geometry(mol, config.fixed_atom, config.moved_atom, distances[i]);
      });
      BasisSet basis = in_stage("basis", [&] { return build_basis(geom, sto3g_library()); });
      IntegralSet ints = in_stage("integrals", [&] { return compute_integrals(basis, geom); });
      row.E_rhf = in_stage("scf", [&] { return run_rhf(geom, ints).E_total; });
      if (basis.size() <= 8)
        row.E_fci = in_stage("fci", [&] { return fci_oracle(geom, basis, ints); });
      RunConfig rc = config.base;
      rc.solver = SolverKind::exact;
      rc.verbosity = 0;
      EmbedOutcome o = run_embed(geom, rc);
      row.n_qubits_full = o.full.n_qubits;
      row.n_qubits_embedded = o.hamiltonian.n_qubits();
      row.E_embed = o.wavefunction->E_total;
    } catch (const std::exception &e) {
      row.status = e.what();
      std::replace_if(row.status.begin(), row.status.end(),
                      [](char ch) { return ch == '\t' || ch == '\n'; }, ' ');
    }
  };

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < rows.size(); i = next++)
      compute(i);
  };
  const auto n_threads = std::min<size_t>(static_cast<size_t>(config.jobs), rows.size());
  std::vector<std::thread> pool;
  for (size_t t = 1; t < n_threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();
  return rows;
}

std::string scan_table(const std::vector<ScanRow> &rows) {
  std::string out = "r_angstrom\tr_bohr\tE_rhf\tE_fci\tE_embed\terr_rhf\terr_embed\t"
                    "log10_abs_err_rhf\tlog10_abs_err_embed\tn_qubits_full\tn_qubits_embedded\t"
                    "status\n";
  auto diff = [](const std::optional<double> &a,
                 const std::optional<double> &b) -> std::optional<double> {
    if (a && b)
      return *a - *b;
    return std::nullopt;
  };
  auto log_cell = [](const std::optional<double> &e) -> std::string {
    if (!e)
      return "NA";
    if (*e == 0.0)
      return "-inf";
    return fmt::format("{:.4f}", std::log10(std::abs(*e)));
  };
  for (const auto &r : rows) {
    auto err_rhf = diff(r.E_rhf, r.E_fci);
    auto err_embed = diff(r.E_embed, r.E_fci);
    out += fmt::format("{:.6f}\t{:.6f}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n", r.r_angstrom,
                       r.r_angstrom * bohr_per_angstrom, energy_cell(r.E_rhf),
                       energy_cell(r.E_fci), energy_cell(r.E_embed), energy_cell(err_rhf),
                       energy_cell(err_embed), log_cell(err_rhf), log_cell(err_embed),
                       r.n_qubits_full, r.n_qubits_embedded, r.status);
  }
  return out;
}

std::vector<ScanRow> cmd_scan(const ScanConfig &config) {
  Molecule mol =
      in_stage("geometry", [&] { return read_xyz(config.base.geometry, config.base.charge); });
  auto rows = run_scan(mol, config);
  in_stage("output", [&] {
    std::string table = scan_table(rows);
    if (config.base.out.empty())
      fmt::print("{}", table);
    else
      write_text(config.base.out, table);
  });
  return rows;
}

} // namespace projemb
