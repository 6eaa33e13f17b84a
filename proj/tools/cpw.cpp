#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "cpw/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitUsage = 64;

nlohmann::json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) cpw::fail(cpw::Errc::ConfigError, "cannot open config file: " + path);
  nlohmann::json config;
  try {
    in >> config;
  } catch (const nlohmann::json::exception& e) {
    cpw::fail(cpw::Errc::ConfigError, std::string("config is not valid JSON: ") + e.what());
  }
  return config;
}

int run(int argc, char** argv) {
  CLI::App app{"exact workbench for crossed products of coefficient algebras by the integers"};
  app.require_subcommand(1);

  std::string config_path;
  std::string json_out;
  int per_bound = 4;
  cpw::CheckOptions options;
  std::string suite;
  std::string witness_mode;
  std::vector<std::string> eval_args;

  CLI::App* analyze = app.add_subcommand("analyze", "dynamics and commutant property table");
  analyze->add_option("-c,--config", config_path, "system config JSON")->required();
  analyze->add_option("--per-bound", per_bound, "periodic-point table bound");

  CLI::App* check = app.add_subcommand("check", "run a certificate-producing check suite");
  check->add_option("suite", suite, "one of: triquiv commint simplicity primeness baire algebra")
      ->required();
  check->add_option("-c,--config", config_path, "system config JSON")->required();
  check->add_option("--degree", options.degree, "window degree bound");
  check->add_option("--radius", options.radius, "coefficient support radius");
  check->add_option("--samples", options.samples, "random samples per item");
  check->add_option("--seed", options.seed, "sampling seed");
  check->add_option("--json", json_out, "write the JSON report to this file");

  CLI::App* eval = app.add_subcommand("eval", "evaluate <expr> <op> <expr> (op: mul or add)");
  eval->add_option("-c,--config", config_path, "system config JSON")->required();
  eval->add_option("args", eval_args, "expression, operation, expression")->expected(3);

  CLI::App* witness = app.add_subcommand("witness", "produce a replayable ideal witness");
  witness->add_option("mode", witness_mode, "in-a or in-commutant")->required();
  witness->add_option("-c,--config", config_path, "system config JSON")->required();
  witness->add_option("expr", eval_args, "element expression")->expected(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  cpw::SystemModel model = cpw::parse_config(load_config(config_path));

  if (analyze->parsed()) {
    std::cout << cpw::analyze(model, per_bound).dump(2) << "\n";
    return kExitPass;
  }
  if (check->parsed()) {
    cpw::CheckSuiteResult result =
        cpw::run_check_suite(suite, model, cpw::config_echo(model), options);
    std::cout << result.human_text();
    if (!json_out.empty()) {
      std::ofstream out(json_out);
      if (!out) cpw::fail(cpw::Errc::ConfigError, "cannot write report: " + json_out);
      out << result.to_json().dump(2) << "\n";
    }
    return result.exit_code();
  }
  if (eval->parsed()) {
    const std::string& op = eval_args[1];
    cpw::CrossedElement lhs = cpw::parse_element(model, eval_args[0]);
    cpw::CrossedElement rhs = cpw::parse_element(model, eval_args[2]);
    if (op == "mul")
      std::cout << cpw::format_element(cpw::x_mul(lhs, rhs)) << "\n";
    else if (op == "add")
      std::cout << cpw::format_element(cpw::x_add(lhs, rhs)) << "\n";
    else
      cpw::fail(cpw::Errc::ConfigError, "op: expected 'mul' or 'add'");
    return kExitPass;
  }
  if (witness->parsed()) {
    try {
      std::cout << cpw::witness_report(model, witness_mode, eval_args[0]).dump(2) << "\n";
      return kExitPass;
    } catch (const cpw::Error& e) {
      switch (e.code()) {
        case cpw::Errc::Unsupported:
        case cpw::Errc::NotUnital:
        case cpw::Errc::NotRegularModel:
        case cpw::Errc::PreconditionFailed: {
          nlohmann::json j = {{"schema_version", 1},
                              {"mode", witness_mode},
                              {"status", "unsupported"},
                              {"reason", e.what()}};
          std::cout << j.dump(2) << "\n";
          return kExitUnsupported;
        }
        default: throw;
      }
    }
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const cpw::Error& e) {
    std::cerr << "error [" << cpw::errc_name(e.code()) << "]: " << e.what();
    if (e.position() != cpw::Error::no_position) std::cerr << " at position " << e.position();
    std::cerr << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
