#pragma once
#include <projemb/core.h>
#include <string>
#include <string_view>
#include <vector>

namespace projemb {

struct Atom {
  std::string symbol;
  int atomic_number{0};
  Vec3 position{Vec3::Zero()}; // Bohr
};

/// Closed-shell molecule. Construction validates electron parity and
/// nuclear separations, so every Molecule in flight is usable as-is.
class Molecule {
public:
  Molecule(std::vector<Atom> atoms, int charge = 0);

  const std::vector<Atom> &atoms() const { return m_atoms; }
  size_t size() const { return m_atoms.size(); }
  int charge() const { return m_charge; }
  int n_electrons() const { return m_n_electrons; }

  /// Copy with every nucleus shifted by `shift` (Bohr).
  Molecule translated(const Vec3 &shift) const;
  /// Copy with every nucleus rotated about the origin.
  Molecule rotated(const Eigen::Matrix3d &rotation) const;
  /// Copy with atom `index` moved to `position` (Bohr).
  Molecule with_position(size_t index, const Vec3 &position) const;

private:
  std::vector<Atom> m_atoms;
  int m_charge{0};
  int m_n_electrons{0};
};

/// Atomic number for an element symbol (case-insensitive, H through Ar).
int atomic_number(std::string_view symbol);
std::string element_symbol(int atomic_number);

/// Standard XYZ text: atom count, comment line, then `Sym x y z` in Angstrom.
Molecule parse_xyz(std::string_view text, int charge = 0);
Molecule read_xyz(const std::string &path, int charge = 0);

/// Sum over nuclear pairs of Z_A Z_B / R_AB in Hartree.
double nuclear_repulsion(const Molecule &mol);

} // namespace projemb
