#ifndef SESHADRI_CLI_HPP
#define SESHADRI_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seshadri/oracle.hpp"
#include "seshadri/point.hpp"
#include "seshadri/surface.hpp"

namespace seshadri::cli {

enum class Format { Text, Json };

// Parsed command-line state shared by the subcommands.
struct Query {
  int surface_type = 1;
  DivisorClass bundle{1, 1};
  std::optional<PointSpec> point;       // single-point mode
  std::optional<std::int64_t> r;        // multi-point mode (very general points)
  std::int64_t mu = 8;
  SearchWindow window;
  Format format = Format::Text;
};

// Executes one subcommand. Exit codes: 0 success, 1 oracle violation or
// failed verification, 2 usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace seshadri::cli

#endif  // SESHADRI_CLI_HPP
