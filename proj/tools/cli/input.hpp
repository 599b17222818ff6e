#pragma once

#include <map>
#include <string>
#include <vector>

#include "cli/report.hpp"
#include "krull/presets.hpp"

namespace krull::cli {

// Where the alphabet comes from.  Exactly one of preset, group/set or file is used.
struct InputOptions {
    std::string preset;
    std::vector<std::string> params;  // key=value
    std::string r, alpha, n, q, type, spl, include_zero;
    std::string group;  // JSON, e.g. {"free_rank":1}
    std::string set;    // JSON, e.g. [[1],[-1]]
    std::string file;   // JSON file with group/set, or a defining matrix
};

Preset resolve_input(const InputOptions& in);

// "prop712", "builtin:prop712", or a JSON file
// {"name": ..., "source": {"group", "set"}, "target": {"group", "set"}, "images": [...]}
// where images[i] is the image of source set element i.
TransferMap load_transfer_map(const std::string& spec);

// Echo of the input for reports (never includes thread counts or paths).
Json input_echo(const Preset& p);

}  // namespace krull::cli
