#pragma once

// Report-producing commands behind the z2cob executable.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace z2cob::cli {

inline constexpr int kSchemaVersion = 1;

enum class Format { Text, Json, Csv };

// Exit statuses.
inline constexpr int kPass = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kInputError = 2;

struct Report {
    std::string command;
    std::vector<std::string> lines;             // text form
    nlohmann::ordered_json data = nlohmann::ordered_json::object();
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv;  // rows under csv_header
    int status = kPass;

    void line(std::string s) { lines.push_back(std::move(s)); }
    void row(std::vector<std::string> r) { csv.push_back(std::move(r)); }
    void fail() { status = kMismatch; }
};

std::string render(const Report& r, Format f);

Report cmd_verify_tables();

struct GroupOptions {
    bool matrix = false;   // include the 28 x 28 relation matrix
    bool classes = false;  // include one line per class
};
Report cmd_group_structure(const GroupOptions& opt = {});

// `source` is a builtin name or a polytope file path.
Report cmd_enumerate(const std::string& source);

struct RepresentOptions {
    std::string prefix = "representative";  // writes <prefix>.cover and <prefix>.plan
    bool write_files = true;
    int sample = 0;  // when > 0, represent this many random classes instead of `class_text`
    std::uint64_t seed = 1;
};
// `class_text` is "zero", a generator label, a hex class id or a set literal.
Report cmd_represent(const std::string& class_text, const RepresentOptions& opt = {});

struct MomentGraphOptions {
    std::optional<int> lambda;  // prism coloring lambda_k, or lambda0 on the simplex
    std::optional<std::string> dot_path;
};
// `source` is a builtin name (with a coloring choice) or a cover file path.
Report cmd_moment_graph(const std::string& source, const MomentGraphOptions& opt = {});

// Full command-line entry point; returns the exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace z2cob::cli
