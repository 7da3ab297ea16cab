#pragma once
#include <projemb/localization.h>
#include <projemb/scf.h>
#include <string>

namespace projemb {

enum class ProjectorKind { huzinaga, mu };

std::string to_string(ProjectorKind kind);
ProjectorKind parse_projector_kind(const std::string &name);

struct EmbeddingOptions {
  ProjectorKind projector{ProjectorKind::huzinaga};
  double mu{1e6};
};

/// Active subsystem in the field of a frozen environment.
struct EmbeddedProblem {
  ProjectorKind projector_kind{ProjectorKind::huzinaga};
  double mu_value{1e6};
  Mat gamma_act;
  Mat gamma_env;
  Mat v_emb;     // G(gamma_act + gamma_env) - G(gamma_act)
  Mat projector; // mu S gamma_env S, or the Huzinaga operator of the latest Fock matrix
  Mat h_emb;     // h_core + v_emb + projector
  int n_act_electrons{0};
  int n_env_orbitals{0};
  double E_env{0.0};        // tr(gamma_env h) + g(gamma_env)
  double g_cross{0.0};      // g(act + env) - g(act) - g(env)
  double E_correction{0.0}; // tr(gamma_act (v_emb + projector))
  double E_nuc{0.0};
};

/// V_emb = G(gamma_act + gamma_env) - G(gamma_act).
Mat embedding_potential(const Mat &gamma_act, const Mat &gamma_env, const EriTensor &eri);

/// mu S gamma_env S. With the doubly occupied density an environment orbital is shifted by 2 mu.
Mat mu_projector(const Mat &gamma_env, const Mat &S, double mu = 1e6);

/// -1/2 (F gamma_env S + S gamma_env F).
Mat huzinaga_projector(const Mat &F, const Mat &gamma_env, const Mat &S);

/// Closed-shell subsystem energy tr(gamma h) + 1/2 tr(gamma G(gamma)).
double subsystem_energy(const Mat &gamma, const Mat &h, const EriTensor &eri);

/// Assemble the embedded problem from a partition of a converged full-system
/// calculation. The Huzinaga projector starts from the full-system Fock matrix.
EmbeddedProblem build_embedded_problem(const IntegralSet &ints, const Partition &partition,
                                       double E_nuc, const EmbeddingOptions &options = {});

struct EmbeddedSolution {
  SCFResult scf;
  EmbeddedProblem problem; // projector, h_emb and E_correction at convergence
  double max_env_population{0.0};
};

/// Embedded RHF for the active electrons, started from gamma_act. The mu
/// projector is held fixed; the Huzinaga projector is rebuilt from the live
/// Fock matrix every iteration.
EmbeddedSolution run_embedded_scf(const EmbeddedProblem &problem, const Molecule &mol,
                                  const IntegralSet &ints, int verbosity = 0);

/// Environment population of orbital C_i: 1/2 C_i^T S gamma_env S C_i.
Vec environment_populations(const Mat &C, const Mat &gamma_env, const Mat &S);

struct SameLevelEnergy {
  double E_active{0.0}; // tr(gamma_emb h_core) + g(gamma_emb)
  double E_env{0.0};
  double g_cross{0.0};
  double correction{0.0}; // tr((gamma_emb - gamma_act)(v_emb + P))
  double E_nuc{0.0};
  double total{0.0};
};

SameLevelEnergy same_level_energy(const EmbeddedProblem &problem, const Mat &gamma_emb,
                                  const IntegralSet &ints, bool include_correction = true);

/// Classical constant added to the active wave-function energy:
/// E_env + g_cross - tr(gamma_act (v_emb + P)) + E_nuc.
double wf_in_lowlevel_constant(const EmbeddedProblem &problem);

struct ReducedOrbitals {
  Mat C;                       // K x M_act, occupied first
  std::vector<size_t> kept;    // column indices into the embedded MO matrix
  std::vector<size_t> dropped;
  Vec env_population;          // per embedded MO
  int n_occ{0};
};

/// Remove the |L| embedded MOs carrying the most environment population.
ReducedOrbitals drop_environment_orbitals(const SCFResult &scf_emb, const Mat &gamma_env,
                                          const Mat &S);

} // namespace projemb
