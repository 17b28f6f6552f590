#pragma once

#include "codec.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace commcurve::cli {

inline constexpr const char* kSchema = "commcurve.report/1";

struct Options {
  std::string command;
  std::optional<std::string> input;    // path to a JSON document
  std::optional<std::string> json;     // inline JSON document
  std::optional<std::string> fixture;  // name of a built-in document
  std::uint64_t seed = 1;
  std::optional<long> d;
  std::optional<std::string> m;  // multiset as a JSON object
  bool timing = false;
};

struct Outcome {
  Json report;
  int exit_code = 0;  // 0 pass, 1 failed verification, 2 malformed input
};

const std::vector<std::string>& command_names();
std::vector<std::string> fixture_names();
/// Built-in input document; throws InputError for unknown names.
Json fixture_document(const std::string& name);

/// Never throws for user errors; they become exit codes 1 or 2.
Outcome run(const Options& opts);

}  // namespace commcurve::cli
