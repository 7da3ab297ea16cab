#pragma once
#include <projemb/pipeline.h>
#include <string>

namespace testing {

inline std::string data_path(const std::string &name) {
  return std::string(PROJEMB_DATA_DIR) + "/molecules/" + name;
}

inline projemb::Molecule load(const std::string &name, int charge = 0) {
  return projemb::read_xyz(data_path(name), charge);
}

// Converged RHF plus everything needed downstream.
struct System {
  projemb::Molecule mol;
  projemb::BasisSet basis;
  projemb::IntegralSet ints;
  projemb::SCFResult rhf;
};

inline System solve(const projemb::Molecule &mol) {
  auto basis = projemb::build_basis(mol, projemb::sto3g_library());
  auto ints = projemb::compute_integrals(basis, mol);
  auto rhf = projemb::run_rhf(mol, ints);
  return {mol, std::move(basis), std::move(ints), std::move(rhf)};
}

inline System solve(const std::string &name, int charge = 0) { return solve(load(name, charge)); }

} // namespace testing
