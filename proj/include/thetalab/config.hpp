#pragma once

#include <cstdint>
#include <string>

namespace thetalab::config {

// Tolerances, seeds and output knobs shared by the CLI; a fixed seed
// makes reports bit-identical.
struct RunConfig {
    double tol_roots = 1e-9;
    double tol_matrix = 1e-10;
    int degree_window = 12;
    std::uint64_t seed = 1729;
    std::uint64_t group_cap = 20736;
    std::string format = "json";  // json | csv
    bool timings = false;

    void validate() const;
};

// flat key=value lines; '#' starts a comment
RunConfig load_config(const std::string& path, RunConfig base = RunConfig{});
RunConfig parse_config_text(const std::string& text, RunConfig base = RunConfig{});

}  // namespace thetalab::config
