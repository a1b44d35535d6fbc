#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "grossone/cli.hpp"

namespace gc = grossone::cli;

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic with the grossone numeral system"};
  app.require_subcommand(0, 1);

  std::string eval_expr;
  std::string script_path;
  bool json = false;
  auto* eval_opt = app.add_option("--eval", eval_expr, "Evaluate one expression");
  auto* script_opt = app.add_option("--script", script_path, "Evaluate a file line by line");
  eval_opt->excludes(script_opt);
  app.add_flag("--json", json, "Emit newline-delimited JSON");

  auto* paradox = app.add_subcommand("paradox", "Print a paradox report");
  paradox->set_help_flag("--help", "Print this help message and exit");
  std::string name;
  std::string m, switches, initial, h;
  paradox->add_option("name", name, "galileo, multiplication, hilbert, thomson or torricelli")->required();
  auto* m_opt = paradox->add_option("--m", m, "Hilbert: number of newcomers (default 1)");
  auto* sw_opt = paradox->add_option("--switches", switches, "Thomson: number of switches (default G)");
  auto* in_opt = paradox->add_option("--initial", initial, "Thomson: initial state, on or off (default on)");
  auto* h_opt = paradox->add_option("--h", h, "Torricelli: segment width (default G^-1)");
  paradox->add_flag("--json", json, "Emit JSON");

  CLI11_PARSE(app, argc, argv);

  const auto mode = json ? gc::OutputMode::Json : gc::OutputMode::Text;
  if (paradox->parsed()) {
    gc::ParadoxParams p;
    if (*m_opt) p.m = m;
    if (*sw_opt) p.switches = switches;
    if (*in_opt) p.initial = initial;
    if (*h_opt) p.h = h;
    return gc::run_paradox(name, p, mode, std::cout, std::cerr);
  }
  if (*eval_opt) return gc::run_eval(eval_expr, mode, std::cout, std::cerr);
  if (*script_opt) return gc::run_script(script_path, mode, std::cout, std::cerr);
  return gc::run_repl(std::cin, mode, std::cout, std::cerr);
}
