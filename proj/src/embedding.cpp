#include <projemb/embedding.h>

#include <algorithm>
#include <cmath>
#include <fmt/core.h>
#include <numeric>

namespace projemb {

namespace {
constexpr double electron_count_tolerance = 1e-6;
constexpr double fatal_env_population = 0.1;
constexpr double min_dropped_population = 0.5;
} // namespace

std::string to_string(ProjectorKind kind) {
  return kind == ProjectorKind::huzinaga ? "huzinaga" : "mu";
}

ProjectorKind parse_projector_kind(const std::string &name) {
  if (name == "huzinaga")
    return ProjectorKind::huzinaga;
  if (name == "mu")
    return ProjectorKind::mu;
  throw InputError(fmt::format("unknown projector '{}' (expected huzinaga or mu)", name));
}

Mat embedding_potential(const Mat &gamma_act, const Mat &gamma_env, const EriTensor &eri) {
  return two_electron_matrix(gamma_act + gamma_env, eri) - two_electron_matrix(gamma_act, eri);
}

Mat mu_projector(const Mat &gamma_env, const Mat &S, double mu) {
  if (!(mu > 0.0))
    throw InputError("mu must be positive");
  return mu * S * gamma_env * S;
}

Mat huzinaga_projector(const Mat &F, const Mat &gamma_env, const Mat &S) {
  Mat FDS = F * gamma_env * S;
  return -0.5 * (FDS + FDS.transpose());
}

double subsystem_energy(const Mat &gamma, const Mat &h, const EriTensor &eri) {
  return gamma.cwiseProduct(h).sum() +
         0.5 * gamma.cwiseProduct(two_electron_matrix(gamma, eri)).sum();
}

EmbeddedProblem build_embedded_problem(const IntegralSet &ints, const Partition &partition,
                                       double E_nuc, const EmbeddingOptions &options) {
  EmbeddedProblem prob;
  prob.projector_kind = options.projector;
  prob.mu_value = options.mu;
  prob.gamma_act = partition.gamma_act;
  prob.gamma_env = partition.gamma_env;
  prob.E_nuc = E_nuc;
  prob.n_env_orbitals = static_cast<int>(partition.env_idx.size());

  double n_act = ints.S.cwiseProduct(prob.gamma_act).sum();
  int rounded = 2 * static_cast<int>(std::lround(n_act / 2.0));
  if (std::abs(n_act - rounded) > electron_count_tolerance)
    throw ProjectionError(
        fmt::format("active density holds {:.8f} electrons, not an even integer", n_act));
  prob.n_act_electrons = rounded;

  const Mat G_act = two_electron_matrix(prob.gamma_act, ints.eri);
  const Mat G_env = two_electron_matrix(prob.gamma_env, ints.eri);
  const Mat G_total = two_electron_matrix(prob.gamma_act + prob.gamma_env, ints.eri);
  prob.v_emb = G_total - G_act;

  prob.E_env = prob.gamma_env.cwiseProduct(ints.h_core).sum() +
               0.5 * prob.gamma_env.cwiseProduct(G_env).sum();
  prob.g_cross = 0.5 * (prob.gamma_act + prob.gamma_env).cwiseProduct(G_total).sum() -
                 0.5 * prob.gamma_act.cwiseProduct(G_act).sum() -
                 0.5 * prob.gamma_env.cwiseProduct(G_env).sum();

  if (options.projector == ProjectorKind::mu) {
    prob.projector = mu_projector(prob.gamma_env, ints.S, options.mu);
  } else {
    prob.projector = huzinaga_projector(ints.h_core + G_total, prob.gamma_env, ints.S);
  }
  prob.h_emb = ints.h_core + prob.v_emb + prob.projector;
  prob.E_correction = prob.gamma_act.cwiseProduct(prob.v_emb + prob.projector).sum();
  return prob;
}

Vec environment_populations(const Mat &C, const Mat &gamma_env, const Mat &S) {
  Mat SC = S * C;
  return 0.5 * (SC.transpose() * gamma_env * SC).diagonal();
}

EmbeddedSolution run_embedded_scf(const EmbeddedProblem &problem, const Molecule &mol,
                                  const IntegralSet &ints, int verbosity) {
  ScfOptions opts;
  opts.n_electrons = problem.n_act_electrons;
  opts.guess_density = problem.gamma_act;
  opts.verbosity = verbosity;
  if (problem.projector_kind == ProjectorKind::mu) {
    opts.h_override = ints.h_core + problem.v_emb + problem.projector;
  } else {
    opts.h_override = ints.h_core + problem.v_emb;
    const Mat gamma_env = problem.gamma_env;
    const Mat S = ints.S;
    opts.f_extra = [gamma_env, S](const Mat &F, const Mat &) {
      return huzinaga_projector(F, gamma_env, S);
    };
  }

  EmbeddedSolution sol;
  sol.scf = run_rhf(mol, ints, opts);
  sol.problem = problem;
  if (problem.projector_kind == ProjectorKind::huzinaga) {
    sol.problem.projector = sol.scf.extra;
    sol.problem.h_emb = ints.h_core + problem.v_emb + sol.problem.projector;
    sol.problem.E_correction =
        problem.gamma_act.cwiseProduct(problem.v_emb + sol.problem.projector).sum();
  }

  if (sol.scf.n_occ > 0) {
    Vec pops = environment_populations(sol.scf.C_occ(), problem.gamma_env, ints.S);
    sol.max_env_population = pops.maxCoeff();
    if (sol.max_env_population > fatal_env_population)
      throw ProjectionError(fmt::format(
          "occupied embedded orbital carries environment population {:.3f}; projection failed",
          sol.max_env_population));
  }
  return sol;
}

SameLevelEnergy same_level_energy(const EmbeddedProblem &problem, const Mat &gamma_emb,
                                  const IntegralSet &ints, bool include_correction) {
  SameLevelEnergy e;
  e.E_active = subsystem_energy(gamma_emb, ints.h_core, ints.eri);
  e.E_env = problem.E_env;
  e.g_cross = problem.g_cross;
  if (include_correction)
    e.correction =
        (gamma_emb - problem.gamma_act).cwiseProduct(problem.v_emb + problem.projector).sum();
  e.E_nuc = problem.E_nuc;
  e.total = e.E_active + e.E_env + e.g_cross + e.correction + e.E_nuc;
  return e;
}

double wf_in_lowlevel_constant(const EmbeddedProblem &problem) {
  return problem.E_env + problem.g_cross - problem.E_correction + problem.E_nuc;
}

ReducedOrbitals drop_environment_orbitals(const SCFResult &scf_emb, const Mat &gamma_env,
                                          const Mat &S) {
  ReducedOrbitals out;
  out.env_population = environment_populations(scf_emb.C, gamma_env, S);
  const double n_env_electrons = S.cwiseProduct(gamma_env).sum();
  const auto n_drop = static_cast<size_t>(std::lround(n_env_electrons / 2.0));
  const auto n_mo = static_cast<size_t>(scf_emb.C.cols());

  std::vector<size_t> order(n_mo);
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return out.env_population[static_cast<Eigen::Index>(a)] >
           out.env_population[static_cast<Eigen::Index>(b)];
  });
  out.dropped.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_drop));
  for (size_t i : out.dropped) {
    double p = out.env_population[static_cast<Eigen::Index>(i)];
    if (p < min_dropped_population)
      throw ProjectionError(fmt::format(
          "embedded MO {} selected for removal has environment population {:.3f} < 0.5", i, p));
    if (static_cast<int>(i) < scf_emb.n_occ)
      throw ProjectionError(fmt::format("occupied embedded MO {} looks like an environment orbital", i));
  }
  std::sort(out.dropped.begin(), out.dropped.end());

  for (size_t i = 0; i < n_mo; ++i)
    if (!std::binary_search(out.dropped.begin(), out.dropped.end(), i))
      out.kept.push_back(i);
  out.C.resize(scf_emb.C.rows(), static_cast<Eigen::Index>(out.kept.size()));
  for (size_t k = 0; k < out.kept.size(); ++k)
    out.C.col(static_cast<Eigen::Index>(k)) = scf_emb.C.col(static_cast<Eigen::Index>(out.kept[k]));
  out.n_occ = scf_emb.n_occ;
  return out;
}

} // namespace projemb
