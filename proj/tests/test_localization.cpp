#include "common.h"
#include <catch_amalgamated.hpp>
#include <random>

using Catch::Matchers::WithinAbs;
using namespace projemb;

namespace {

Mat random_orthogonal(Eigen::Index n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> g;
  Mat A(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      A(i, j) = g(rng);
  Eigen::HouseholderQR<Mat> qr(A);
  return qr.householderQ() * Mat::Identity(n, n);
}

void check_partition(const Partition &p, const testing::System &sys) {
  const Mat &S = sys.ints.S;
  const auto n_occ = static_cast<size_t>(sys.rhf.n_occ);
  REQUIRE(p.active_idx.size() + p.env_idx.size() == n_occ);
  std::vector<size_t> all(p.active_idx);
  all.insert(all.end(), p.env_idx.begin(), p.env_idx.end());
  std::sort(all.begin(), all.end());
  for (size_t i = 0; i < n_occ; ++i)
    REQUIRE(all[i] == i);

  // closure and electron counts
  REQUIRE((p.gamma_act + p.gamma_env - sys.rhf.gamma).cwiseAbs().maxCoeff() < 1e-10);
  double n_act = S.cwiseProduct(p.gamma_act).sum();
  double n_env = S.cwiseProduct(p.gamma_env).sum();
  REQUIRE_THAT(n_act + n_env, WithinAbs(sys.mol.n_electrons(), 1e-8));
  REQUIRE_THAT(n_act, WithinAbs(2.0 * p.active_idx.size(), 1e-8));

  // density unchanged by localization
  REQUIRE((2.0 * p.C_lmo * p.C_lmo.transpose() - sys.rhf.gamma).cwiseAbs().maxCoeff() < 1e-10);
  // rotation (SPADE) is orthogonal and reproduces the localized orbitals
  const auto m = static_cast<Eigen::Index>(n_occ);
  if (p.rotation.size() > 0) {
    REQUIRE((p.rotation.transpose() * p.rotation - Mat::Identity(m, m)).norm() < 1e-10);
    REQUIRE((sys.rhf.C_occ() * p.rotation - p.C_lmo).cwiseAbs().maxCoeff() < 1e-10);
  }
  // localized orbitals stay S-orthonormal
  REQUIRE((p.C_lmo.transpose() * S * p.C_lmo - Mat::Identity(m, m)).norm() < 1e-8);

  // disjoint subsystems, each idempotent within its own rank
  REQUIRE(std::abs((S * p.gamma_act * S * p.gamma_env).trace()) < 1e-8);
  for (const Mat *g : {&p.gamma_act, &p.gamma_env}) {
    Mat P = 0.5 * (*g) * S;
    REQUIRE((P * P - P).norm() < 1e-8);
  }
}

} // namespace

TEST_CASE("Loewdin populations sum to one per orbital") {
  auto sys = testing::solve("h2o.xyz");
  Mat pops = lowdin_populations(sys.rhf.C, sys.ints.S, sys.basis, sys.mol.size());
  REQUIRE(pops.rows() == 3);
  for (Eigen::Index i = 0; i < pops.cols(); ++i)
    REQUIRE_THAT(pops.col(i).sum(), WithinAbs(1.0, 1e-10));
  REQUIRE(pops.minCoeff() >= 0.0);
}

TEST_CASE("SPADE on water with one OH bond active") {
  auto sys = testing::solve("h2o.xyz");
  Partition p = spade_partition(sys.rhf, sys.ints.S, sys.basis, 3, {0, 1});
  REQUIRE(p.active_idx.size() == 4);
  REQUIRE(p.env_idx.size() == 1);
  REQUIRE(p.active_idx == std::vector<size_t>{0, 1, 2, 3});
  check_partition(p, sys);
  // singular values descending and bounded by one
  for (Eigen::Index i = 1; i < p.singular_values.size(); ++i)
    REQUIRE(p.singular_values[i] <= p.singular_values[i - 1]);
  REQUIRE(p.singular_values[0] <= 1.0 + 1e-12);
}

TEST_CASE("SPADE gives four active orbitals along the OH stretch") {
  Molecule h2o = testing::load("h2o.xyz");
  for (double r : {0.9578, 1.5, 2.0, 2.5, 3.0}) {
    CAPTURE(r);
    auto sys = testing::solve(displaced_geometry(h2o, 0, 1, r));
    Partition p = spade_partition(sys.rhf, sys.ints.S, sys.basis, 3, {0, 1});
    REQUIRE(p.active_idx.size() == 4);
    check_partition(p, sys);
  }
}

TEST_CASE("SPADE partitions on the suite molecules satisfy the invariants") {
  struct Case {
    const char *file;
    std::vector<size_t> active;
  };
  for (const Case &c : {Case{"h2.xyz", {0}}, Case{"lih.xyz", {0}}, Case{"lih.xyz", {1}},
                        Case{"h2o.xyz", {0}}, Case{"h2o.xyz", {1}}, Case{"h2o.xyz", {0, 2}},
                        Case{"ch4.xyz", {0}}, Case{"ch4.xyz", {0, 1}}, Case{"ch4.xyz", {1, 2}},
                        Case{"ch4.xyz", {0, 1, 2}}}) {
    CAPTURE(c.file, c.active);
    auto sys = testing::solve(c.file);
    try {
      Partition p = spade_partition(sys.rhf, sys.ints.S, sys.basis, sys.mol.size(), c.active);
      check_partition(p, sys);
    } catch (const ProjectionError &) {
      // symmetric cases with tied gaps are reported, not resolved
      SUCCEED();
    }
  }
}

TEST_CASE("SPADE is invariant to remixing the occupied orbitals") {
  auto sys = testing::solve("h2o.xyz");
  Partition a = spade_partition(sys.rhf, sys.ints.S, sys.basis, 3, {0, 1});
  SCFResult mixed = sys.rhf;
  mixed.C.leftCols(mixed.n_occ) = sys.rhf.C_occ() * random_orthogonal(mixed.n_occ, 11);
  Partition b = spade_partition(mixed, sys.ints.S, sys.basis, 3, {0, 1});
  REQUIRE(b.active_idx.size() == a.active_idx.size());
  REQUIRE((a.gamma_act - b.gamma_act).cwiseAbs().maxCoeff() < 1e-8);
  REQUIRE((a.gamma_env - b.gamma_env).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("SPADE reports a tied gap as ambiguous") {
  // Orthonormal AO model: three functions on atom 0, two on atom 1. The
  // active block has singular values (1, 0.5, 0), so both gaps are 0.5.
  std::vector<Shell> shells;
  for (size_t atom : {0, 0, 0, 1, 1})
    shells.push_back({atom, Vec3::Zero(), 0, {1.0}, {1.0}});
  BasisSet basis(shells);
  const double c = std::sqrt(0.75);
  SCFResult scf;
  scf.C = Mat::Zero(5, 5);
  scf.C(0, 0) = 1.0;
  scf.C(1, 1) = 0.5, scf.C(3, 1) = c;
  scf.C(4, 2) = 1.0;
  scf.C(1, 3) = c, scf.C(3, 3) = -0.5;
  scf.C(2, 4) = 1.0;
  scf.n_occ = 3;
  scf.gamma = density_matrix(scf.C_occ());
  REQUIRE_THROWS_AS(spade_partition(scf, Mat::Identity(5, 5), basis, 2, {0}), ProjectionError);

  // break the tie: singular values (1, 0.8, 0) put two orbitals in the active set
  scf.C(1, 1) = 0.8, scf.C(3, 1) = 0.6;
  scf.C(1, 3) = 0.6, scf.C(3, 3) = -0.8;
  scf.gamma = density_matrix(scf.C_occ());
  Partition p = spade_partition(scf, Mat::Identity(5, 5), basis, 2, {0});
  REQUIRE(p.active_idx.size() == 2);
}

TEST_CASE("active atom validation") {
  auto sys = testing::solve("h2o.xyz");
  const Mat &S = sys.ints.S;
  REQUIRE_THROWS_AS(spade_partition(sys.rhf, S, sys.basis, 3, {0, 1, 2}), InputError);
  REQUIRE_THROWS_AS(spade_partition(sys.rhf, S, sys.basis, 3, {0, 5}), InputError);
  REQUIRE_THROWS_AS(spade_partition(sys.rhf, S, sys.basis, 3, {1, 1}), InputError);
  REQUIRE_THROWS_AS(spade_partition(sys.rhf, S, sys.basis, 3, {}), InputError);
}

TEST_CASE("population localization of H2 leaves the orbital alone") {
  auto sys = testing::solve("h2.xyz");
  Mat C = population_localize(sys.rhf, sys.ints.S, sys.basis, 2);
  Mat C0 = sys.rhf.C_occ();
  REQUIRE(((C - C0).cwiseAbs().maxCoeff() < 1e-10 || (C + C0).cwiseAbs().maxCoeff() < 1e-10));
}

TEST_CASE("population localization of water") {
  auto sys = testing::solve("h2o.xyz");
  Mat C = population_localize(sys.rhf, sys.ints.S, sys.basis, 3);
  const auto n = C.cols();
  REQUIRE((C.transpose() * sys.ints.S * C - Mat::Identity(n, n)).norm() < 1e-8);
  REQUIRE((2.0 * C * C.transpose() - sys.rhf.gamma).cwiseAbs().maxCoeff() < 1e-10);

  // each LMO lives mostly on at most two atoms
  Mat pops = lowdin_populations(C, sys.ints.S, sys.basis, 3);
  for (Eigen::Index i = 0; i < n; ++i) {
    Vec col = pops.col(i);
    std::sort(col.data(), col.data() + col.size(), std::greater<>());
    REQUIRE(col[0] + col[1] >= 0.8);
  }

  // the objective beats the canonical orbitals
  Mat pops0 = lowdin_populations(sys.rhf.C_occ(), sys.ints.S, sys.basis, 3);
  REQUIRE(pops.cwiseAbs2().sum() > pops0.cwiseAbs2().sum());

  // sign convention: largest-magnitude coefficient positive
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index k;
    C.col(i).cwiseAbs().maxCoeff(&k);
    REQUIRE(C(k, i) > 0.0);
  }
}

TEST_CASE("population threshold assignment") {
  auto sys = testing::solve("h2o.xyz");
  Mat C = population_localize(sys.rhf, sys.ints.S, sys.basis, 3);

  Partition p = assign_by_population(C, sys.ints.S, sys.basis, 3, {0, 1}, 0.95);
  REQUIRE(p.active_idx.size() <= 4);
  REQUIRE(!p.active_idx.empty());
  check_partition(p, sys);
  for (size_t i : p.active_idx)
    REQUIRE(p.active_population[static_cast<Eigen::Index>(i)] > 0.95);

  Partition all = assign_by_population(C, sys.ints.S, sys.basis, 3, {0, 1}, 0.0);
  REQUIRE(all.active_idx.size() == 5);
  REQUIRE(all.env_idx.empty());

  REQUIRE_THROWS_AS(assign_by_population(C, sys.ints.S, sys.basis, 3, {0, 1}, 1.0 + 1e-9),
                    ProjectionError);
}
