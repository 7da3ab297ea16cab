#pragma once
#include <array>
#include <map>
#include <projemb/molecule.h>
#include <string_view>
#include <vector>

namespace projemb {

/// Contracted Cartesian Gaussian shell. `coefficients` include the
/// primitive normalization and the contraction renormalization, so a
/// basis function is simply sum_k c_k x^lx y^ly z^lz exp(-a_k r^2).
struct Shell {
  size_t atom{0};
  Vec3 center{Vec3::Zero()};
  int l{0};
  std::vector<double> exponents;
  std::vector<double> coefficients;

  size_t size() const { return l == 0 ? 1 : 3; }
};

/// One basis function: a Cartesian component of a shell.
struct BasisFunction {
  size_t shell{0};
  size_t atom{0};
  std::array<int, 3> powers{0, 0, 0};
};

class BasisSet {
public:
  BasisSet() = default;
  explicit BasisSet(std::vector<Shell> shells);

  const std::vector<Shell> &shells() const { return m_shells; }
  const std::vector<BasisFunction> &functions() const { return m_functions; }
  size_t size() const { return m_functions.size(); }

  /// AO indices centered on any of the given atoms, ascending.
  std::vector<size_t> functions_on_atoms(const std::vector<size_t> &atoms) const;

private:
  std::vector<Shell> m_shells;
  std::vector<BasisFunction> m_functions;
};

/// Raw (unnormalized) contraction rows for one element, as tabulated.
struct ElementShell {
  int l{0};
  std::vector<double> exponents;
  std::vector<double> coefficients;
};
using BasisLibrary = std::map<int, std::vector<ElementShell>>;

/// Parse the plain-text basis format: an element symbol line, then shell
/// blocks `S n` / `P n` followed by n `exponent coefficient` rows, with
/// `****` terminating each element.
BasisLibrary parse_basis_library(std::string_view text);

/// The embedded STO-3G table (H-Ar).
const BasisLibrary &sto3g_library();
std::string_view sto3g_text();

BasisSet build_basis(const Molecule &mol, const BasisLibrary &library = sto3g_library());

} // namespace projemb
