#include <projemb/molecule.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fmt/core.h>
#include <fstream>
#include <sstream>

namespace projemb {

namespace {

constexpr std::array<std::string_view, 18> element_symbols{
    "H", "He", "Li", "Be", "B", "C",  "N",  "O",  "F",
    "Ne", "Na", "Mg", "Al", "Si", "P", "S", "Cl", "Ar"};

constexpr double min_separation = 1e-6;

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok)
    tokens.push_back(tok);
  return tokens;
}

double parse_double(const std::string &tok, size_t line_no) {
  double value{0.0};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw InputError(fmt::format("xyz line {}: '{}' is not a number", line_no, tok));
  return value;
}

} // namespace

int atomic_number(std::string_view symbol) {
  std::string norm(symbol);
  std::transform(norm.begin(), norm.end(), norm.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (!norm.empty())
    norm[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(norm[0])));
  for (size_t i = 0; i < element_symbols.size(); ++i) {
    if (element_symbols[i] == norm)
      return static_cast<int>(i) + 1;
  }
  throw InputError(fmt::format("unknown element symbol '{}'", symbol));
}

std::string element_symbol(int z) {
  if (z < 1 || z > static_cast<int>(element_symbols.size()))
    throw InputError(fmt::format("atomic number {} outside supported range H-Ar", z));
  return std::string(element_symbols[z - 1]);
}

Molecule::Molecule(std::vector<Atom> atoms, int charge)
    : m_atoms(std::move(atoms)), m_charge(charge) {
  if (m_atoms.empty())
    throw InputError("molecule has no atoms");
  int total_z = 0;
  for (const auto &a : m_atoms)
    total_z += a.atomic_number;
  m_n_electrons = total_z - charge;
  if (m_n_electrons <= 0)
    throw InputError(fmt::format("charge {} leaves no electrons", charge));
  if (m_n_electrons % 2 != 0)
    throw InputError(fmt::format("{} electrons: only closed-shell molecules are supported",
                                 m_n_electrons));
  for (size_t i = 0; i < m_atoms.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if ((m_atoms[i].position - m_atoms[j].position).norm() <= min_separation)
        throw InputError(fmt::format("atoms {} and {} coincide", j, i));
    }
  }
}

Molecule Molecule::translated(const Vec3 &shift) const {
  auto atoms = m_atoms;
  for (auto &a : atoms)
    a.position += shift;
  return Molecule(std::move(atoms), m_charge);
}

Molecule Molecule::rotated(const Eigen::Matrix3d &rotation) const {
  auto atoms = m_atoms;
  for (auto &a : atoms)
    a.position = rotation * a.position;
  return Molecule(std::move(atoms), m_charge);
}

Molecule Molecule::with_position(size_t index, const Vec3 &position) const {
  if (index >= m_atoms.size())
    throw InputError(fmt::format("atom index {} out of range", index));
  auto atoms = m_atoms;
  atoms[index].position = position;
  return Molecule(std::move(atoms), m_charge);
}

Molecule parse_xyz(std::string_view text, int charge) {
  std::vector<std::string> lines;
  {
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
      if (!line.empty() && line.back() == '\r')
        line.pop_back();
      lines.push_back(line);
    }
  }
  if (lines.empty())
    throw InputError("xyz: empty input");

  auto header = split_ws(lines[0]);
  if (header.size() != 1)
    throw InputError("xyz line 1: expected a single atom count");
  int count{0};
  {
    auto &h = header[0];
    auto [ptr, ec] = std::from_chars(h.data(), h.data() + h.size(), count);
    if (ec != std::errc{} || ptr != h.data() + h.size() || count <= 0)
      throw InputError(fmt::format("xyz line 1: invalid atom count '{}'", h));
  }

  std::vector<Atom> atoms;
  for (size_t i = 2; i < lines.size(); ++i) {
    auto tokens = split_ws(lines[i]);
    if (tokens.empty())
      continue;
    if (tokens.size() != 4)
      throw InputError(fmt::format("xyz line {}: expected 'symbol x y z'", i + 1));
    Atom atom;
    atom.atomic_number = atomic_number(tokens[0]);
    atom.symbol = element_symbol(atom.atomic_number);
    for (int k = 0; k < 3; ++k)
      atom.position[k] = parse_double(tokens[k + 1], i + 1) * bohr_per_angstrom;
    atoms.push_back(std::move(atom));
  }
  if (static_cast<int>(atoms.size()) != count)
    throw InputError(
        fmt::format("xyz: header declares {} atoms but {} were read", count, atoms.size()));
  return Molecule(std::move(atoms), charge);
}

Molecule read_xyz(const std::string &path, int charge) {
  std::ifstream in(path);
  if (!in)
    throw InputError(fmt::format("cannot open geometry file '{}'", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_xyz(buffer.str(), charge);
}

double nuclear_repulsion(const Molecule &mol) {
  const auto &atoms = mol.atoms();
  double energy = 0.0;
  for (size_t i = 0; i < atoms.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      double r = (atoms[i].position - atoms[j].position).norm();
      if (r <= min_separation)
        throw InputError(fmt::format("atoms {} and {} coincide", j, i));
      energy += atoms[i].atomic_number * atoms[j].atomic_number / r;
    }
  }
  return energy;
}

} // namespace projemb
