#pragma once

#include <functional>

#include <CLI11.hpp>

#include "report.hpp"

namespace hbu::cli {

using Runner = std::function<Report()>;

/// Adds every subcommand to `app`; the parsed one stores its runner in
/// `selected` and its output path in `out`.
void register_commands(CLI::App& app, Runner& selected, std::string& out);

}  // namespace hbu::cli
