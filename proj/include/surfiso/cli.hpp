#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "surfiso/applications.hpp"

namespace surfiso {

enum class Command { BasePoints, Classify, Reduce, Isoms, Symmetries, Verify };
enum class IsoKind { Projective, Affine, Euclidean, Moebius };

Command parse_command(const std::string& s);
IsoKind parse_kind(const std::string& s);

/// A parsed input document: domain, optional field and components.
struct InputMap {
  Parametrization map;
  GroundField field;
};

/// Reads {"domain": "P2" | "P1xP1", "field": {"generator": "a", "minpoly": "a^2+1"}, "components": [...]}.
/// Throws InputError on malformed documents.
InputMap parse_input(const nlohmann::ordered_json& doc);

/// Row-major matrix text: rows separated by ';', entries by ','.
ScalarMatrix parse_matrix(const std::string& text, const GroundField& field = {});

struct JobSpec {
  Command command = Command::Classify;
  std::vector<nlohmann::ordered_json> inputs;
  int degree_budget = 4;
  int enum_bound = -1;
  IsoKind kind = IsoKind::Projective;
  std::optional<std::string> matrix;  // U for verify
};

enum ExitCode { kOk = 0, kFailure = 1, kParse = 2, kExtension = 3, kUnimplemented = 4, kConsistency = 5 };

struct JobResult {
  int status = kOk;
  nlohmann::ordered_json report;
  nlohmann::ordered_json log;  // reduction log, when the command reduces
};

/// Runs one job. Errors are caught and mapped to exit codes; the report then has an "error" entry.
JobResult run(const JobSpec& job);

}  // namespace surfiso
