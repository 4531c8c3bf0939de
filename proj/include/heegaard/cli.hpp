#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "heegaard/floer.hpp"

namespace heegaard::cli {

/// Process exit codes of the `hd` tool.
enum ExitStatus : int {
  ok = 0,
  parse_failure = 2,   // malformed file, bad arguments, unsupported format
  answer_no = 3,       // `whitney` found no disk
  unknown_name = 4,    // unknown generator id or fixture name
  precondition = 5,    // parity across classes
};

enum class Format { table, json, dot };

std::string render_h1(const QuotientGroup& q, int genus, Format format);
std::string render_generators(const ClassReport& report, Format format);
std::string render_classes(const ClassReport& report, Format format);

/// Runs `hd` with `args` (excluding the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heegaard::cli
