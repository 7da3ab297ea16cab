#include <projemb/basis.h>

#include <cmath>
#include <fmt/core.h>
#include <numbers>
#include <sstream>

namespace projemb {

namespace {

// Normalization of x^l exp(-a r^2) for the l <= 1 Cartesian components used here.
double primitive_norm(double alpha, int l) {
  double n = std::pow(2.0 * alpha / std::numbers::pi, 0.75);
  if (l == 1)
    n *= 2.0 * std::sqrt(alpha);
  return n;
}

Shell make_shell(size_t atom, const Vec3 &center, const ElementShell &raw) {
  Shell shell;
  shell.atom = atom;
  shell.center = center;
  shell.l = raw.l;
  shell.exponents = raw.exponents;
  shell.coefficients.resize(raw.coefficients.size());
  for (size_t k = 0; k < raw.coefficients.size(); ++k)
    shell.coefficients[k] = raw.coefficients[k] * primitive_norm(raw.exponents[k], raw.l);

  // Renormalize the contraction: self-overlap of one Cartesian component.
  double self = 0.0;
  for (size_t i = 0; i < shell.exponents.size(); ++i) {
    for (size_t j = 0; j < shell.exponents.size(); ++j) {
      double p = shell.exponents[i] + shell.exponents[j];
      double s = std::pow(std::numbers::pi / p, 1.5);
      if (shell.l == 1)
        s /= 2.0 * p;
      self += shell.coefficients[i] * shell.coefficients[j] * s;
    }
  }
  double scale = 1.0 / std::sqrt(self);
  for (auto &c : shell.coefficients)
    c *= scale;
  return shell;
}

} // namespace

BasisSet::BasisSet(std::vector<Shell> shells) : m_shells(std::move(shells)) {
  for (size_t s = 0; s < m_shells.size(); ++s) {
    const auto &sh = m_shells[s];
    if (sh.l == 0) {
      m_functions.push_back({s, sh.atom, {0, 0, 0}});
    } else if (sh.l == 1) {
      m_functions.push_back({s, sh.atom, {1, 0, 0}});
      m_functions.push_back({s, sh.atom, {0, 1, 0}});
      m_functions.push_back({s, sh.atom, {0, 0, 1}});
    } else {
      throw InputError(fmt::format("shell {} has l = {}; only s and p shells are supported", s,
                                   sh.l));
    }
  }
}

std::vector<size_t> BasisSet::functions_on_atoms(const std::vector<size_t> &atoms) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < m_functions.size(); ++i) {
    for (size_t a : atoms) {
      if (m_functions[i].atom == a) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

BasisLibrary parse_basis_library(std::string_view text) {
  BasisLibrary library;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t line_no = 0;
  int current = 0;

  auto next_tokens = [&](std::vector<std::string> &tokens) {
    while (std::getline(in, line)) {
      ++line_no;
      std::istringstream ls(line);
      tokens.clear();
      std::string tok;
      while (ls >> tok)
        tokens.push_back(tok);
      if (!tokens.empty() && tokens[0][0] != '#')
        return true;
    }
    return false;
  };

  std::vector<std::string> tokens;
  while (next_tokens(tokens)) {
    if (tokens[0] == "****") {
      current = 0;
      continue;
    }
    if (current == 0) {
      current = atomic_number(tokens[0]);
      if (library.count(current))
        throw InputError(fmt::format("basis line {}: duplicate element {}", line_no, tokens[0]));
      library[current];
      continue;
    }
    if (tokens.size() != 2 || (tokens[0] != "S" && tokens[0] != "P"))
      throw InputError(fmt::format("basis line {}: expected 'S n' or 'P n'", line_no));
    ElementShell shell;
    shell.l = tokens[0] == "S" ? 0 : 1;
    int n = std::stoi(tokens[1]);
    for (int k = 0; k < n; ++k) {
      if (!next_tokens(tokens) || tokens.size() != 2)
        throw InputError(fmt::format("basis line {}: expected 'exponent coefficient'", line_no));
      double exponent = std::stod(tokens[0]);
      if (!(exponent > 0.0))
        throw InputError(fmt::format("basis line {}: exponent must be positive", line_no));
      shell.exponents.push_back(exponent);
      shell.coefficients.push_back(std::stod(tokens[1]));
    }
    library[current].push_back(std::move(shell));
  }
  return library;
}

const BasisLibrary &sto3g_library() {
  static const BasisLibrary library = parse_basis_library(sto3g_text());
  return library;
}

BasisSet build_basis(const Molecule &mol, const BasisLibrary &library) {
  std::vector<Shell> shells;
  const auto &atoms = mol.atoms();
  for (size_t a = 0; a < atoms.size(); ++a) {
    auto it = library.find(atoms[a].atomic_number);
    if (it == library.end())
      throw InputError(fmt::format("no basis functions for element {}", atoms[a].symbol));
    for (const auto &raw : it->second)
      shells.push_back(make_shell(a, atoms[a].position, raw));
  }
  return BasisSet(std::move(shells));
}

} // namespace projemb
