#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "dcrep/commands.hpp"

namespace {

void write_outputs(const std::string& dir, const std::string& command, const dcrep::CommandResult& r) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::ofstream(fs::path(dir) / (command + ".json")) << r.document(command);
  for (const auto& [name, content] : r.files) std::ofstream(fs::path(dir) / name) << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Labels, orders and decomposition maps for disconnected reductive groups"};
  app.require_subcommand(1);
  dcrep::CommandOptions opt;
  std::string out;
  std::optional<std::uint64_t> seed;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--model", opt.model, "model or fixture: shipped name or JSON path");
    sub->add_option("--field", opt.field, "field, e.g. GF(7), GF(5^2), Q");
    sub->add_option("--prime", opt.prime, "characteristic p");
    sub->add_option("--aux-prime", opt.aux_prime, "auxiliary prime standing in for characteristic 0");
    sub->add_option("--seed", seed, "random seed (default 0)");
    sub->add_option("--ideal-height", opt.ideal_height, "bound on <lambda, 2 rho-check>");
    sub->add_option("--ideal-coord", opt.ideal_coord, "bound on |coordinates| (needed for tori)");
    sub->add_option("--lift-order", opt.lift_order, "root-of-unity order used to lift traces");
    sub->add_option("--out", out, "directory for JSON/CSV/DOT/XML outputs");
  };
  auto* classify = app.add_subcommand("classify", "list labels [lambda, E] of simple modules");
  auto* poset = app.add_subcommand("poset", "label order, Hasse diagram and axiom report");
  auto* decompose = app.add_subcommand("decompose", "decomposition map with lifted-trace matching");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  for (auto* s : {classify, poset, decompose, verify}) add_common(s);
  verify->add_option("--suite", opt.suite, "clifford, hw, groth or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    dcrep::CommandResult r;
    r.exit_code = 2;
    r.payload = {{"error", {{"kind", "invalid_input"}, {"message", e.what()}}}};
    std::cout << r.document("") << std::flush;
    return 2;
  }
  if (seed) opt.seed = *seed;

  std::string command;
  for (auto* s : {classify, poset, decompose, verify})
    if (s->parsed()) command = s->get_name();
  const auto result = dcrep::run_command(command, opt);
  std::cout << result.document(command);
  if (!out.empty() && result.exit_code != 2) {
    try {
      write_outputs(out, command, result);
    } catch (const std::exception& e) {
      std::cerr << "cannot write outputs to " << out << ": " << e.what() << "\n";
      return 2;
    }
  }
  return result.exit_code;
}
