// torsion compute <file> [--pin-sign] [--out <path>]
// torsion verify <file> [--seed N] [--pin-sign]
// torsion catalog --genus G --euler N
// torsion alexander <file>

#include "torsion/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

struct RunConfig {
  std::string input_path;
  std::string output_path;
  bool pin_sign = false;
  bool compact = false;
  std::uint64_t seed = 1;
  int genus = 0;
  long long euler = 0;
};

void emit(const torsion::Json& j, const RunConfig& cfg) {
  const std::string text = j.dump(cfg.compact ? -1 : 2) + "\n";
  if (cfg.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) throw torsion::Error(torsion::ErrorKind::Io, "cannot write " + cfg.output_path);
  out << text;
}

torsion::SignPolicy policy(const RunConfig& cfg) {
  torsion::SignPolicy p;
  if (cfg.pin_sign) p.user_sign = 1;
  return p;
}

int cmd_compute(const RunConfig& cfg) {
  const torsion::SurgeryInput input = torsion::read_input_file(cfg.input_path);
  emit(torsion::compute_report(torsion::compute_torsion(input, policy(cfg))), cfg);
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  const torsion::SurgeryInput input = torsion::read_input_file(cfg.input_path);
  torsion::TorsionResult r = torsion::compute_torsion(input, policy(cfg));
  const torsion::Verification v = torsion::verify(r, cfg.seed);
  emit(torsion::verify_report(v), cfg);
  return v.ok() ? 0 : 5;
}

int cmd_catalog(const RunConfig& cfg) {
  const torsion::CatalogEntry e = torsion::circle_bundle_catalog(cfg.genus, cfg.euler);
  const torsion::CatalogCheck c = torsion::verify_catalog(e);
  emit(torsion::catalog_report(e, c), cfg);
  return c.ok() ? 0 : 5;
}

int cmd_alexander(const RunConfig& cfg) {
  emit(torsion::alexander_report(torsion::read_input_file(cfg.input_path)), cfg);
  return 0;
}

int fail(torsion::ErrorKind kind, const std::string& message) {
  std::cout << torsion::error_json(kind, message).dump(2) << "\n";
  return torsion::exit_code(kind);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Turaev torsion of surgered 3-manifolds"};
  app.require_subcommand(1);
  app.add_flag("--compact", cfg.compact, "single-line JSON");
  app.fallthrough();

  auto* compute = app.add_subcommand("compute", "torsion function and tau");
  compute->add_option("file", cfg.input_path, "input JSON")->required();
  compute->add_flag("--pin-sign", cfg.pin_sign, "assert the engine's sign convention");
  compute->add_option("--out", cfg.output_path, "write the report here");

  auto* verify = app.add_subcommand("verify", "identity checks");
  verify->add_option("file", cfg.input_path, "input JSON")->required();
  verify->add_option("--seed", cfg.seed, "seed for random cohomology vectors");
  verify->add_flag("--pin-sign", cfg.pin_sign, "assert the engine's sign convention");
  verify->add_option("--out", cfg.output_path, "write the report here");

  auto* catalog = app.add_subcommand("catalog", "circle bundles over surfaces");
  catalog->add_option("--genus", cfg.genus, "genus g >= 1")->required();
  catalog->add_option("--euler", cfg.euler, "Euler number n")->required();
  catalog->add_option("--out", cfg.output_path, "write the report here");

  auto* alexander = app.add_subcommand("alexander", "Alexander and Conway polynomials");
  alexander->add_option("file", cfg.input_path, "input JSON")->required();
  alexander->add_option("--out", cfg.output_path, "write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(torsion::ErrorKind::InvalidArgument, e.what());
  }

  try {
    if (*compute) return cmd_compute(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*catalog) return cmd_catalog(cfg);
    return cmd_alexander(cfg);
  } catch (const torsion::Error& e) {
    return fail(e.kind(), e.what());
  } catch (const std::exception& e) {
    return fail(torsion::ErrorKind::Consistency, std::string("internal error: ") + e.what());
  }
}
