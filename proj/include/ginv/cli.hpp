#ifndef GINV_CLI_HPP
#define GINV_CLI_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ginv/boundary.hpp"
#include "ginv/parse.hpp"

namespace ginv::cli {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Named matrices and subspaces of a matrix problem file.
struct MatrixPayload {
  std::map<std::string, MatrixQ> matrices;
  std::map<std::string, SubspaceQ> spaces;

  const MatrixQ& matrix(const std::string& name) const;
  const SubspaceQ& space(const std::string& name) const;
};

struct BvpEntry {
  DiffOp op;
  std::vector<BoundaryFunctional> conditions;
  std::vector<ExpPoly> exceptional;
};

struct BvpPayload {
  std::vector<BvpEntry> problems;
  std::vector<ExpPoly> forcing;
};

struct ProblemFile {
  std::string kind;  // "matrix" or "bvp"
  MatrixPayload matrix;
  BvpPayload bvp;
};

/// Throws ParseError (with line/column) for malformed JSON or expressions,
/// DimensionError for inconsistent shapes.
ProblemFile parse_problem(std::string_view text);
json serialize(const ProblemFile& file);

json to_json(const MatrixQ& m);
MatrixQ matrix_from_json(const json& j, const std::string& where);
json to_json(const SubspaceQ& s);
SubspaceQ subspace_from_json(const json& j, const std::string& where);
json to_json(const DualSubspaceQ& s);
json to_json(const BvpEntry& e);
json to_json(const FunctionSpan& s);
json to_json(const FunctionalSpan& s);
BvpEntry bvp_entry_from_json(const json& j, const std::string& where);

struct Result {
  int exit_code = 0;
  std::string output;
};

/// Runs one subcommand; `args` excludes the program name. Exit codes: 0 for
/// success or a true verdict, 1 for a false verdict, 2 for any error.
Result run(const std::vector<std::string>& args);

}  // namespace ginv::cli

#endif  // GINV_CLI_HPP
