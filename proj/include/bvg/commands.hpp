#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bvg/core.hpp"

namespace bvg {

// The analysis commands behind the CLI, exposed as functions so tests can
// drive them without spawning a process. Output is deterministic: rerunning
// with identical inputs and seeds yields byte-identical reports.

struct command_result {
    int exit_code = 0;
    std::string output;
};

command_result run_aggregate(const std::string& game_path, const std::string& profile_text,
                             bool machine, std::uint64_t cap = default_enumeration_cap);

command_result run_nash(const std::string& game_path,
                        const std::vector<std::string>& coalition_texts, bool machine,
                        std::uint64_t cap = default_enumeration_cap);

command_result run_survive(const std::string& game_path, bool machine,
                           std::uint64_t cap = default_enumeration_cap,
                           const std::vector<std::string>& grid_amounts = {});

command_result run_paradox(const std::string& game_path, bool machine,
                           std::uint64_t cap = default_enumeration_cap);

command_result run_verify(const std::optional<std::string>& game_path, std::uint64_t seed,
                          int counts, bool machine,
                          std::uint64_t cap = default_enumeration_cap);

}  // namespace bvg
