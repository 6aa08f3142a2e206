#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "surfiso/cli.hpp"

using namespace surfiso;

namespace {

nlohmann::ordered_json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projective, Euclidean and Moebius isomorphisms of rational surfaces"};
  std::string command, kind = "projective", log_path, matrix;
  std::vector<std::string> files;
  JobSpec job;
  app.add_option("command", command, "basepoints | classify | reduce | isoms | symmetries | verify")->required();
  app.add_option("inputs", files, "parametrization files")->required();
  app.add_option("--degree-budget", job.degree_budget, "largest implicit form degree used by verification");
  app.add_option("--enum-bound", job.enum_bound, "degree bound of the line class search");
  app.add_option("--kind", kind, "projective | affine | euclidean | moebius");
  app.add_option("--log", log_path, "write the reduction log to this file");
  app.add_option("--matrix", matrix, "matrix for verify, rows separated by ';' and entries by ','");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kParse;
  }

  try {
    job.command = parse_command(command);
    job.kind = parse_kind(kind);
    for (const auto& f : files) job.inputs.push_back(read_document(f));
  } catch (const InputError& e) {
    nlohmann::ordered_json rep{{"command", command}, {"error", e.what()}};
    std::cout << rep.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  if (!matrix.empty()) job.matrix = matrix;

  JobResult res = run(job);
  std::cout << res.report.dump(2) << "\n";
  if (!log_path.empty()) {
    std::ofstream out(log_path);
    out << (res.log.is_null() ? nlohmann::ordered_json::array() : res.log).dump(2) << "\n";
  }
  if (res.status != kOk) std::cerr << "error: " << res.report["error"].get<std::string>() << "\n";
  return res.status;
}
