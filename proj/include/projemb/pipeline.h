#pragma once
#include <optional>
#include <projemb/embedding.h>
#include <projemb/qubit.h>
#include <projemb/solver.h>
#include <string>
#include <vector>

namespace projemb {

enum class LocalizerKind { spade, population };
enum class SolverKind { none, exact };

LocalizerKind parse_localizer_kind(const std::string &name);
SolverKind parse_solver_kind(const std::string &name);
std::string to_string(LocalizerKind kind);
std::string to_string(SolverKind kind);

struct RunConfig {
  std::string geometry;
  int charge{0};
  std::vector<size_t> active_atoms;
  LocalizerKind localizer{LocalizerKind::spade};
  double threshold{0.95};
  ProjectorKind projector{ProjectorKind::huzinaga};
  double mu{1e6};
  SolverKind solver{SolverKind::exact};
  bool first_order_correction{true}; // diagnostic: drop the same-level correction term
  std::string out;
  std::string hamiltonian_out; // empty: derived from `out`
  int verbosity{0};
};

/// Throws InputError for out-of-range numeric settings.
void validate_config(const RunConfig &config);

/// Error tagged with the pipeline stage it came from; keeps the exit code of
/// the underlying error.
class StageError : public Error {
public:
  StageError(std::string stage, const std::string &message, int code);
  const std::string &stage() const { return m_stage; }
  int exit_code() const override { return m_code; }

private:
  std::string m_stage;
  int m_code;
};

struct HamiltonianSize {
  int n_qubits{0};
  size_t term_count{0};
};

struct WavefunctionResult {
  Sector sector;
  size_t dimension{0};
  double E_total{0.0};  // ground-state eigenvalue of the embedded qubit Hamiltonian
  double E_active{0.0}; // E_total minus the classical constant
};

/// Everything produced by one embedded calculation.
struct EmbedOutcome {
  EmbedOutcome(Molecule mol, RunConfig cfg) : molecule(std::move(mol)), config(std::move(cfg)) {}

  Molecule molecule;
  RunConfig config;
  size_t n_ao{0};
  SCFResult rhf;
  Partition partition;
  EmbeddedSolution embedded;
  SameLevelEnergy same_level;
  double E_cls{0.0};
  ReducedOrbitals reduced;
  HamiltonianSize full;
  QubitHamiltonian hamiltonian; // embedded
  std::optional<WavefunctionResult> wavefunction;
};

/// Full pipeline on an in-memory molecule: RHF, partition, embedded SCF,
/// same-level energy, orbital removal, qubit Hamiltonian and (optionally)
/// the exact active-space ground state. Failures are rethrown as StageError.
EmbedOutcome run_embed(const Molecule &mol, const RunConfig &config);

/// Qubit Hamiltonian of the whole molecule in the canonical RHF orbitals.
QubitHamiltonian full_hamiltonian(const SCFResult &rhf, const IntegralSet &ints);

/// Deterministic JSON report (energies in Hartree, distances in Angstrom and Bohr).
std::string report_json(const EmbedOutcome &outcome);

/// Load the geometry, run, and write the report and Hamiltonian files.
/// Returns the outcome for callers that want to inspect it.
EmbedOutcome cmd_embed(const RunConfig &config);

/// Hamiltonian path used when `hamiltonian_out` is empty: report path with
/// its extension replaced by ".hamiltonian.json".
std::string hamiltonian_path(const RunConfig &config);

struct ScanConfig {
  RunConfig base;
  size_t fixed_atom{0};
  size_t moved_atom{1};
  std::vector<double> distances; // Angstrom
  int jobs{1};
};

/// "a:b:step" (inclusive) or a comma-separated list, in Angstrom.
std::vector<double> parse_distances(const std::string &spec);

/// Comma-separated non-negative integers.
std::vector<size_t> parse_index_list(const std::string &spec);

struct ScanRow {
  double r_angstrom{0.0};
  std::optional<double> E_rhf;
  std::optional<double> E_fci;
  std::optional<double> E_embed; // WF-in-HF total
  int n_qubits_full{0};
  int n_qubits_embedded{0};
  std::string status{"ok"};
};

/// Geometry with `moved` placed at distance r (Angstrom) from `fixed` along
/// their current bond vector; every other atom stays put.
Molecule displaced_geometry(const Molecule &mol, size_t fixed, size_t moved, double r_angstrom);

/// Scan points are deduplicated and sorted; each runs independently, up to
/// `jobs` at a time. Per-point failures land in ScanRow::status.
std::vector<ScanRow> run_scan(const Molecule &mol, const ScanConfig &config);

/// Tab-separated table with a header line.
std::string scan_table(const std::vector<ScanRow> &rows);

/// Load the geometry, run, and write the table to base.out (stdout when empty).
std::vector<ScanRow> cmd_scan(const ScanConfig &config);

} // namespace projemb
