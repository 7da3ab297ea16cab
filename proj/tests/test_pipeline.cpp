#include "common.h"
#include <catch_amalgamated.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sys/wait.h>

using Catch::Matchers::WithinAbs;
using namespace projemb;
namespace fs = std::filesystem;

namespace {

RunConfig water_config() {
  RunConfig c;
  c.geometry = testing::data_path("h2o.xyz");
  c.active_atoms = {0, 1};
  return c;
}

fs::path scratch(const std::string &name) {
  fs::path dir = fs::temp_directory_path() / ("projemb_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

int run_cli(const std::string &args) {
  std::string cmd = std::string(PROJEMB_CLI) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

nlohmann::json read_json(const fs::path &p) {
  std::ifstream in(p);
  return nlohmann::json::parse(in);
}

} // namespace

TEST_CASE("embed report is deterministic and self-consistent") {
  Molecule h2o = testing::load("h2o.xyz");
  EmbedOutcome a = run_embed(h2o, water_config());
  EmbedOutcome b = run_embed(h2o, water_config());
  std::string ra = report_json(a);
  REQUIRE(ra == report_json(b));

  auto j = nlohmann::json::parse(ra);
  const double E_rhf = j["rhf"]["E_total"];
  REQUIRE_THAT(E_rhf, WithinAbs(-74.96302313846284, 1e-8));
  REQUIRE_THAT(double(j["same_level"]["E_total"]), WithinAbs(E_rhf, 1e-8));

  const auto &cc = j["classical_constant"];
  double sum = double(cc["E_env"]) + double(cc["g_cross"]) +
               double(cc["minus_tr_gamma_act_v_emb_plus_p"]) + double(cc["E_nuc"]);
  REQUIRE_THAT(double(cc["E_cls"]), WithinAbs(sum, 1e-10));

  const auto &wf = j["wavefunction"];
  REQUIRE_THAT(double(wf["E_total"]),
               WithinAbs(double(wf["E_active"]) + double(wf["E_cls"]), 1e-10));
  REQUIRE(wf["sector"]["n_electrons"] == 8);
  REQUIRE(wf["dimension"] == 225);

  // correlation lowers the energy, and the embedded result sits between RHF and FCI
  const double E_wf = wf["E_total"];
  REQUIRE(E_wf < E_rhf);
  REQUIRE(E_wf > -75.01257824109088);

  REQUIRE(j["hamiltonian"]["full"]["n_qubits"] == 14);
  REQUIRE(j["hamiltonian"]["embedded"]["n_qubits"] == 12);
  REQUIRE(j["hamiltonian"]["embedded"]["term_count"] == term_count(a.hamiltonian));
  REQUIRE(j["reduced_orbitals"]["n_orbitals"] == 6);
  REQUIRE(j["partition"]["n_active"] == 4);
  REQUIRE(j["embedding"]["mu"].is_null());
}

TEST_CASE("mu projector run and the correction switch") {
  Molecule h2o = testing::load("h2o.xyz");
  RunConfig c = water_config();
  c.projector = ProjectorKind::mu;
  c.solver = SolverKind::none;
  EmbedOutcome mu = run_embed(h2o, c);
  REQUIRE(!mu.wavefunction);
  REQUIRE_THAT(mu.same_level.total, WithinAbs(mu.rhf.E_total, 1e-5));
  auto j = nlohmann::json::parse(report_json(mu));
  REQUIRE(!j.contains("wavefunction"));
  REQUIRE(j["embedding"]["mu"] == 1e6);

  // dropping the correction removes exactly that term from the same-level total
  c.first_order_correction = false;
  EmbedOutcome off = run_embed(h2o, c);
  REQUIRE(off.same_level.correction == 0.0);
  REQUIRE_THAT(off.same_level.total,
               WithinAbs(mu.same_level.total - mu.same_level.correction, 1e-10));
  REQUIRE(off.E_cls == mu.E_cls);
}

TEST_CASE("stage errors carry the stage and the exit code") {
  Molecule h2o = testing::load("h2o.xyz");
  RunConfig c = water_config();
  c.active_atoms = {0, 9};
  try {
    run_embed(h2o, c);
    FAIL("expected a StageError");
  } catch (const StageError &e) {
    REQUIRE(e.stage() == "partition");
    REQUIRE(e.exit_code() == 2);
  }

  c = water_config();
  c.localizer = LocalizerKind::population;
  c.active_atoms = {1};
  try {
    run_embed(h2o, c);
    FAIL("expected a StageError");
  } catch (const StageError &e) {
    REQUIRE(e.stage() == "partition");
    REQUIRE(e.exit_code() == 4);
  }

  c = water_config();
  c.mu = -1.0;
  c.projector = ProjectorKind::mu;
  REQUIRE_THROWS_AS(validate_config(c), InputError);
}

TEST_CASE("hamiltonian output path") {
  RunConfig c;
  c.out = "/tmp/run/report.json";
  REQUIRE(hamiltonian_path(c) == "/tmp/run/report.hamiltonian.json");
  c.out = "/tmp/run/report";
  REQUIRE(hamiltonian_path(c) == "/tmp/run/report.hamiltonian.json");
  c.hamiltonian_out = "/x/h.json";
  REQUIRE(hamiltonian_path(c) == "/x/h.json");
}

TEST_CASE("distance and index parsing") {
  auto d = parse_distances("0.5:1.0:0.25");
  REQUIRE(d.size() == 3);
  REQUIRE_THAT(d[2], WithinAbs(1.0, 1e-12));
  REQUIRE(parse_distances("1.5,0.5,1.0,0.5") == std::vector<double>{0.5, 1.0, 1.5});
  REQUIRE_THROWS_AS(parse_distances("1.0"), InputError);
  REQUIRE_THROWS_AS(parse_distances("1.0:0.5:0.1"), InputError);
  REQUIRE_THROWS_AS(parse_distances("0.5:1.0:0"), InputError);
  REQUIRE_THROWS_AS(parse_distances("a,b"), InputError);
  REQUIRE(parse_index_list("0,2") == std::vector<size_t>{0, 2});
  REQUIRE_THROWS_AS(parse_index_list("0,-1"), InputError);
}

TEST_CASE("displaced geometry keeps the other atoms") {
  Molecule h2o = testing::load("h2o.xyz");
  Molecule moved = displaced_geometry(h2o, 0, 1, 2.0);
  const auto &a = moved.atoms();
  REQUIRE_THAT((a[1].position - a[0].position).norm() * 0.52917721092, WithinAbs(2.0, 1e-10));
  REQUIRE((a[2].position - h2o.atoms()[2].position).norm() == 0.0);
  Vec3 before = (h2o.atoms()[1].position - h2o.atoms()[0].position).normalized();
  Vec3 after = (a[1].position - a[0].position).normalized();
  REQUIRE((before - after).norm() < 1e-12);
}

TEST_CASE("H2 dissociation scan") {
  RunConfig base;
  base.geometry = testing::data_path("h2.xyz");
  base.active_atoms = {0};
  ScanConfig sc{base, 0, 1, parse_distances("0.5:2.5:0.25"), 2};
  auto rows = run_scan(testing::load("h2.xyz"), sc);
  REQUIRE(rows.size() == 9);
  size_t minima = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto &r = rows[i];
    CAPTURE(r.r_angstrom);
    REQUIRE(r.status == "ok");
    REQUIRE(*r.E_fci > -1.2);
    REQUIRE(*r.E_fci <= *r.E_rhf);
    // whole molecule active: the embedded result is the full FCI
    REQUIRE_THAT(*r.E_embed, WithinAbs(*r.E_fci, 1e-10));
    if (i > 0 && i + 1 < rows.size() && *r.E_fci < *rows[i - 1].E_fci &&
        *r.E_fci < *rows[i + 1].E_fci)
      ++minima;
  }
  REQUIRE(minima == 1);
  // RHF error grows on stretching
  REQUIRE(*rows.back().E_rhf - *rows.back().E_fci > *rows[1].E_rhf - *rows[1].E_fci);

  std::string table = scan_table(rows);
  REQUIRE(table.rfind("r_angstrom\t", 0) == 0);
  REQUIRE(std::count(table.begin(), table.end(), '\n') == 10);

  // thread count does not change the numbers
  sc.jobs = 1;
  REQUIRE(scan_table(run_scan(testing::load("h2.xyz"), sc)) == table);
}

TEST_CASE("command-line interface") {
  const std::string geo = testing::data_path("h2o.xyz");
  const fs::path out = scratch("h2o.json");

  REQUIRE(run_cli("embed --geometry " + geo + " --active 0,1 --out " + out.string()) == 0);
  REQUIRE(fs::exists(out));
  REQUIRE(fs::exists(scratch("h2o.hamiltonian.json")));
  auto j = read_json(out);
  REQUIRE_THAT(double(j["wavefunction"]["E_total"]), WithinAbs(-74.9872452232, 1e-8));
  QubitHamiltonian H = QubitHamiltonian::from_json([&] {
    std::ifstream in(scratch("h2o.hamiltonian.json"));
    return std::string(std::istreambuf_iterator<char>(in), {});
  }());
  REQUIRE(H.n_qubits() == 12);
  REQUIRE_THAT(H.classical_constant(), WithinAbs(double(j["classical_constant"]["E_cls"]), 1e-12));

  // export only
  const fs::path none = scratch("none.json");
  REQUIRE(run_cli("embed --geometry " + geo + " --active 0,1 --solver none --out " +
                  none.string()) == 0);
  REQUIRE(!read_json(none).contains("wavefunction"));
  REQUIRE(fs::exists(scratch("none.hamiltonian.json")));

  // bad input
  REQUIRE(run_cli("embed --geometry " + geo + " --active 0,7") == 2);
  REQUIRE(run_cli("embed --geometry " + geo) == 2);
  REQUIRE(run_cli("embed --geometry /nonexistent.xyz --active 0") == 2);
  REQUIRE(run_cli("embed --geometry " + geo + " --active 0,1 --threshold 1.5") == 2);
  REQUIRE(run_cli("embed --geometry " + geo + " --active 0,1 --projector other") == 2);
  REQUIRE(run_cli("frobnicate") == 2);
  // projection failure
  REQUIRE(run_cli("embed --geometry " + geo + " --active 1 --localizer population") == 4);

  // config file, command-line flags win
  const fs::path cfg = scratch("run.cfg");
  {
    std::ofstream f(cfg);
    f << "geometry = " << geo << "\nactive = 0,2\nprojector = mu\nsolver = none\n";
  }
  const fs::path from_cfg = scratch("cfg.json");
  REQUIRE(run_cli("embed --config " + cfg.string() + " --active 0,1 --out " +
                  from_cfg.string()) == 0);
  auto c = read_json(from_cfg);
  REQUIRE(c["config"]["active_atoms"] == nlohmann::json::array({0, 1}));
  REQUIRE(c["config"]["projector"] == "mu");
  REQUIRE(c["config"]["solver"] == "none");
  {
    std::ofstream f(cfg, std::ios::app);
    f << "colour = blue\n";
  }
  REQUIRE(run_cli("embed --config " + cfg.string()) == 2);

  // scan writes a table
  const fs::path tsv = scratch("scan.tsv");
  REQUIRE(run_cli("scan --geometry " + testing::data_path("h2.xyz") +
                  " --active 0 --atoms 0,1 --distances 0.6,0.8 --out " + tsv.string()) == 0);
  std::ifstream in(tsv);
  std::string header, line;
  std::getline(in, header);
  size_t n = 0;
  while (std::getline(in, line))
    n += !line.empty();
  REQUIRE(n == 2);
  REQUIRE(run_cli("scan --geometry " + geo + " --active 0 --atoms 0 --distances 1,2") == 2);

  fs::remove_all(out.parent_path());
}
