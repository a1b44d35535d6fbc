#pragma once

#include <nlohmann/json.hpp>

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "grossone/error.hpp"
#include "grossone/evaluator.hpp"

namespace grossone::cli {

enum class OutputMode { Text, Json };

enum ExitCode : int {
  kOk = 0,
  kUnresolved = 1,
  kSyntaxError = 2,
  kEvalError = 3,
  kIoError = 4,
  kUnknownParadox = 5,
};

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::LexError:
    case ErrorKind::ParseError: return kSyntaxError;
    case ErrorKind::IoError: return kIoError;
    case ErrorKind::UnknownParadox: return kUnknownParadox;
    default: return kEvalError;
  }
}

/// Parameters for `paradox`; unset fields take the scenario defaults.
struct ParadoxParams {
  std::optional<std::string> m;
  std::optional<std::string> switches;
  std::optional<std::string> initial;
  std::optional<std::string> h;
};

namespace detail {

inline void report_error(const Error& e, OutputMode mode, std::ostream& err, std::optional<std::size_t> line = {}) {
  if (mode == OutputMode::Json) {
    nlohmann::json j{{"error", to_string(e.kind())}, {"message", e.detail()}};
    if (e.offset()) j["offset"] = *e.offset();
    if (line) j["line"] = *line;
    err << j.dump() << '\n';
    return;
  }
  err << "error";
  if (line) err << " on line " << *line;
  err << ": " << e.what() << '\n';
}

inline void emit(const Value& v, OutputMode mode, std::ostream& out) {
  if (mode == OutputMode::Json)
    out << value_to_json(v).dump() << '\n';
  else
    out << print_value(v) << '\n';
}

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

inline GrossNumber number_param(const std::string& src, std::string_view what) {
  const Value v = evaluate(src);
  if (const auto* n = std::get_if<GrossNumber>(&v)) return *n;
  throw Error(ErrorKind::TypeError, std::string(what) + " must be a number");
}

}  // namespace detail

inline int run_eval(std::string_view expr, OutputMode mode, std::ostream& out, std::ostream& err) {
  try {
    detail::emit(evaluate(expr), mode, out);
    return kOk;
  } catch (const Error& e) {
    detail::report_error(e, mode, err);
    return exit_code_for(e.kind());
  }
}

/// Runs lines from `in`; stops at the first failing line.
inline int run_lines(std::istream& in, OutputMode mode, std::ostream& out, std::ostream& err) {
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view src = detail::trim(raw);
    if (src.empty() || src.front() == '#') continue;
    try {
      const Value v = evaluate(src);
      if (mode == OutputMode::Json) {
        nlohmann::json j = value_to_json(v);
        j["line"] = line;
        j["input"] = std::string(src);
        out << j.dump() << '\n';
      } else {
        out << src << " => " << print_value(v) << '\n';
      }
    } catch (const Error& e) {
      detail::report_error(e, mode, err, line);
      return exit_code_for(e.kind());
    }
  }
  return kOk;
}

inline int run_script(const std::string& path, OutputMode mode, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    detail::report_error(Error(ErrorKind::IoError, "cannot open '" + path + "'"), mode, err);
    return kIoError;
  }
  return run_lines(in, mode, out, err);
}

inline ParadoxReport make_report(std::string_view name, const ParadoxParams& p) {
  if (name == "galileo") return galileo_report();
  if (name == "multiplication") return multiplication_report();
  if (name == "hilbert") return hilbert_accommodate(p.m ? detail::number_param(*p.m, "--m") : GrossNumber(1));
  if (name == "thomson") {
    LampState initial = LampState::On;
    if (p.initial) {
      if (*p.initial == "off") initial = LampState::Off;
      else if (*p.initial != "on") throw Error(ErrorKind::InvalidArgument, "--initial must be on or off");
    }
    return thomson_lamp(initial, p.switches ? detail::number_param(*p.switches, "--switches") : GrossNumber::grossone());
  }
  if (name == "torricelli")
    return torricelli(p.h ? detail::number_param(*p.h, "--h") : GrossNumber::term(1, -1));
  throw Error(ErrorKind::UnknownParadox, "unknown paradox '" + std::string(name) +
                                             "' (expected galileo, multiplication, hilbert, thomson, torricelli)");
}

inline int run_paradox(std::string_view name, const ParadoxParams& params, OutputMode mode, std::ostream& out,
                       std::ostream& err) {
  try {
    const ParadoxReport r = make_report(name, params);
    if (mode == OutputMode::Json)
      out << to_json(r).dump() << '\n';
    else
      out << render_text(r) << '\n';
    return r.resolved() ? kOk : kUnresolved;
  } catch (const Error& e) {
    detail::report_error(e, mode, err);
    return exit_code_for(e.kind());
  }
}

inline int run_repl(std::istream& in, OutputMode mode, std::ostream& out, std::ostream& err) {
  std::string raw;
  for (;;) {
    out << "g> " << std::flush;
    if (!std::getline(in, raw)) break;
    const std::string_view src = detail::trim(raw);
    if (src.empty()) continue;
    if (src == ":quit") break;
    if (src == ":json") {
      mode = mode == OutputMode::Json ? OutputMode::Text : OutputMode::Json;
      continue;
    }
    run_eval(src, mode, out, err);
  }
  out << '\n';
  return kOk;
}

}  // namespace grossone::cli
