#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "assoc/lattice.hpp"

namespace assoc {

// Each command prints to `out` and returns the process exit status.

struct BuildOptions {
    std::string builder;
    std::optional<long> size;
    std::string out_path;
};

int cmd_build(const BuildOptions& options, std::ostream& out);

struct ResistOptions {
    std::string scheme_path;
    std::string conductances = "1";
    std::vector<std::string> methods{"oracle", "spectral"};
    std::string out_path;  // empty: report goes to `out` only
    std::string format = "text";  // text | json | csv
    double tolerance = 1e-8;
};

int cmd_resist(const ResistOptions& options, std::ostream& out);

struct InfiniteOptions {
    std::string kind;  // line | square | hexagonal
    std::vector<long> separation;
    bool cross_check = true;
};

int cmd_infinite(const InfiniteOptions& options, std::ostream& out);

int cmd_verify(const std::string& scheme_path, std::ostream& out);

}  // namespace assoc
