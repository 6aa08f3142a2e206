#include "surfiso/cli.hpp"

#include <set>
#include <sstream>

namespace surfiso {

using json = nlohmann::ordered_json;

namespace {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string text_of(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_string()) throw InputError(std::string("missing string field '") + key + "'");
  return doc[key].get<std::string>();
}

const char* chart_name(Chart c) {
  switch (c) {
    case Chart::Simple: return "simple";
    case Chart::A: return "A";
    case Chart::B: return "B";
  }
  return "";
}

json tree_json(const BasePointTree& t) {
  json pts = json::array();
  const char* e = t.domain == Domain::P2 ? "e" : "eps";
  for (int i = 0; i < t.size(); ++i) {
    const auto& p = t.points[i];
    json j;
    j["label"] = e + std::to_string(i + 1);
    j["chart"] = chart_name(p.chart);
    j["point"] = p.to_string(t.domain);
    j["multiplicity"] = p.multiplicity;
    j["parent"] = p.parent < 0 ? json(nullptr) : json(e + std::to_string(p.parent + 1));
    pts.push_back(std::move(j));
  }
  json out;
  out["field"] = t.field.to_string();
  out["points"] = std::move(pts);
  return out;
}

json log_json(const std::vector<LogEntry>& log) {
  json out = json::array();
  for (const auto& e : log) {
    json j;
    j["step"] = e.step;
    j["side"] = e.side;
    j["class"] = e.cls.to_string();
    j["p"] = e.p.to_string();
    j["c0"] = e.flags[0];
    j["c1"] = e.flags[1];
    j["c2"] = e.flags[2];
    j["fixed_degree"] = e.fixed_degree;
    out.push_back(std::move(j));
  }
  return out;
}

json components_json(const std::vector<Poly>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(c.to_string());
  return out;
}

json matrix_json(const PolyMatrix& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::string> parameters_of(const PolyMatrix& u) {
  std::set<int> vars;
  for (int i = 0; i < u.rows(); ++i)
    for (int j = 0; j < u.cols(); ++j)
      for (int v : u(i, j).support()) vars.insert(v);
  std::vector<std::string> out;
  for (int v : vars) out.push_back(u(0, 0).ring().name(v));
  return out;
}

json iso_json(const IsoFamily& iso) {
  json j;
  j["U"] = matrix_json(iso.U);
  j["constraints"] = iso.constraints.to_string();
  j["parameters"] = parameters_of(iso.U);
  j["provenance"] = iso.provenance;
  return j;
}

std::string message_unimplemented(BaseCase b) {
  return "classified " + to_string(b) + "; reparametrization super-set not implemented";
}

json classification_json(const ClassifiedMap& cm) {
  json j;
  j["degree"] = to_string(cm.domain(), cm.cdeg());
  j["class"] = cm.cls.to_string();
  j["canonical"] = cm.canonical.to_string();
  j["p"] = p_invariant(cm).to_string();
  j["c0"] = condition_c0(cm);
  j["c1"] = condition_c1(cm);
  j["c2"] = condition_c2(cm);
  return j;
}

std::vector<LogEntry> side_log(const std::vector<LogEntry>& log, const std::string& side) {
  std::vector<LogEntry> out;
  for (const auto& e : log)
    if (e.side == side) out.push_back(e);
  return out;
}

std::vector<IsoFamily> filtered(const std::vector<IsoFamily>& isos, IsoKind kind) {
  if (kind == IsoKind::Affine) return filter_affine(isos);
  if (kind == IsoKind::Euclidean) return filter_euclidean(isos);
  return isos;
}

const char* kind_name(IsoKind k) {
  switch (k) {
    case IsoKind::Projective: return "projective";
    case IsoKind::Affine: return "affine";
    case IsoKind::Euclidean: return "euclidean";
    case IsoKind::Moebius: return "moebius";
  }
  return "";
}

struct Context {
  const JobSpec& job;
  std::vector<InputMap> inputs;
  std::vector<ClassifiedMap> classified;
  JobResult result;
};

void run_basepoints(Context& c) {
  const auto& cm = c.classified[0];
  c.result.report["tree"] = tree_json(cm.tree);
  c.result.report["class"] = cm.cls.to_string();
}

void run_classify(Context& c, bool with_map) {
  const auto& cm = c.classified[0];
  c.result.report["input"] = classification_json(cm);
  auto res = reduce_pipeline(cm, cm);
  auto log = side_log(res.log, "f");
  c.result.log = log_json(log);
  c.result.report["log"] = c.result.log;
  c.result.report["tag"] = to_string(res.tag);
  if (with_map) {
    c.result.report["reduced"] = {{"degree", to_string(res.f->domain(), res.f->cdeg())},
                                  {"class", res.f->cls.to_string()},
                                  {"components", components_json(res.f->map.components)}};
  }
}

void report_pipeline(Context& c, const PipelineResult& p) {
  c.result.log = log_json(p.log);
  c.result.report["log"] = c.result.log;
  c.result.report["empty"] = p.empty;
  if (p.empty) c.result.report["reason"] = p.reason;
  c.result.report["tag"] = to_string(p.tag);
}

void run_isoms(Context& c) {
  const auto& f = c.classified[0];
  const auto& g = c.classified.size() > 1 ? c.classified[1] : c.classified[0];
  RecoveryOptions ro;
  ro.solve.field = GroundField::join(c.inputs[0].field, c.inputs.back().field);
  auto& rep = c.result.report;
  rep["kind"] = kind_name(c.job.kind);
  rep["p"] = {{"f", p_invariant(f).to_string()}, {"g", p_invariant(g).to_string()}};
  if (c.job.kind == IsoKind::Moebius) {
    auto m = moebius_isomorphisms(f.map, g.map, ro);
    report_pipeline(c, m.lifted.pipeline);
    if (m.lifted.unsupported) {
      c.result.status = kUnimplemented;
      rep["error"] = message_unimplemented(m.lifted.pipeline.tag);
      return;
    }
    json list = json::array();
    for (const auto& mi : m.isomorphisms) {
      json j = iso_json(mi.rho);
      j["alpha"] = components_json(mi.alpha.components);
      list.push_back(std::move(j));
    }
    rep["count"] = list.size();
    rep["isomorphisms"] = std::move(list);
    return;
  }
  LineClassOptions lines;
  lines.bound = c.job.enum_bound;
  auto r = projective_isomorphisms(f, g, ro, lines);
  report_pipeline(c, r.pipeline);
  if (r.unsupported) {
    c.result.status = kUnimplemented;
    rep["error"] = message_unimplemented(r.pipeline.tag);
    return;
  }
  json fams = json::array();
  for (std::size_t i = 0; i < r.families.size(); ++i) {
    json j;
    j["label"] = r.families[i].label;
    j["parameters"] = r.families[i].params.size();
    j["equations"] = r.families[i].equations.size();
    json br = json::array();
    for (const auto& b : r.solutions[i].branches) br.push_back(b.to_string());
    j["branches"] = std::move(br);
    fams.push_back(std::move(j));
  }
  rep["families"] = std::move(fams);
  VerifyOptions vo{c.job.degree_budget};
  json list = json::array();
  for (const auto& iso : filtered(r.isomorphisms, c.job.kind)) {
    json j = iso_json(iso);
    j["verified"] = verify_isomorphism(f, g, iso, vo);
    list.push_back(std::move(j));
  }
  rep["count"] = list.size();
  rep["isomorphisms"] = std::move(list);
}

void run_verify(Context& c) {
  const auto& f = c.classified[0];
  const auto& g = c.classified[1];
  if (!c.job.matrix) throw ParseError("verify needs --matrix");
  ScalarMatrix t;
  try {
    t = parse_matrix(*c.job.matrix, GroundField::join(c.inputs[0].field, c.inputs[1].field));
  } catch (const InputError& e) {
    throw ParseError(e.what());
  }
  if (t.rows() != g.dim() + 1 || t.cols() != f.dim() + 1) throw ParseError("matrix has the wrong shape");
  auto& rep = c.result.report;
  IsoFamily iso;
  iso.U = to_poly_matrix(t, f.map.ring());
  iso.constraints.ring = f.map.ring();
  bool forms = false;
  for (int d = 1; d <= c.job.degree_budget && !forms; ++d) forms = !implicit_forms(g.map, d).empty();
  if (forms || determinant(t).is_zero()) {
    rep["method"] = "implicit forms";
    rep["holds"] = verify_isomorphism(f, g, iso, VerifyOptions{c.job.degree_budget});
    return;
  }
  // no implicit form within the budget: decide membership in P(f,g)
  RecoveryOptions ro;
  ro.solve.field = GroundField::join(c.inputs[0].field, c.inputs[1].field);
  LineClassOptions lines;
  lines.bound = c.job.enum_bound;
  auto r = projective_isomorphisms(f, g, ro, lines);
  report_pipeline(c, r.pipeline);
  rep["method"] = "isomorphism families";
  if (r.unsupported) {
    c.result.status = kUnimplemented;
    rep["error"] = message_unimplemented(r.pipeline.tag);
    return;
  }
  bool holds = false;
  for (const auto& fam : r.isomorphisms) holds = holds || admits_specialization(fam, t, ro.solve);
  rep["holds"] = holds;
}

const char* command_name(Command c) {
  switch (c) {
    case Command::BasePoints: return "basepoints";
    case Command::Classify: return "classify";
    case Command::Reduce: return "reduce";
    case Command::Isoms: return "isoms";
    case Command::Symmetries: return "symmetries";
    case Command::Verify: return "verify";
  }
  return "";
}

std::size_t expected_inputs(Command c) { return c == Command::Isoms || c == Command::Verify ? 2 : 1; }

}  // namespace

Command parse_command(const std::string& s) {
  if (s == "basepoints") return Command::BasePoints;
  if (s == "classify") return Command::Classify;
  if (s == "reduce") return Command::Reduce;
  if (s == "isoms") return Command::Isoms;
  if (s == "symmetries") return Command::Symmetries;
  if (s == "verify") return Command::Verify;
  throw InputError("unknown command '" + s + "'");
}

IsoKind parse_kind(const std::string& s) {
  if (s == "projective") return IsoKind::Projective;
  if (s == "affine") return IsoKind::Affine;
  if (s == "euclidean") return IsoKind::Euclidean;
  if (s == "moebius") return IsoKind::Moebius;
  throw InputError("unknown kind '" + s + "'");
}

InputMap parse_input(const json& doc) {
  if (!doc.is_object()) throw InputError("input must be an object");
  InputMap out;
  out.map.domain = parse_domain(text_of(doc, "domain"));
  if (doc.contains("field") && !doc["field"].is_null()) {
    const auto& fd = doc["field"];
    if (!fd.is_object()) throw InputError("field must be an object");
    std::string gen = text_of(fd, "generator");
    Ring r = Ring::make({gen});
    Poly mp = parse_poly(text_of(fd, "minpoly"), r);
    if (mp.is_zero() || mp.is_constant()) throw InputError("minimal polynomial must have positive degree");
    std::vector<mpq_class> coeffs(mp.degree(0) + 1);
    for (const auto& t : mp.terms()) {
      if (!t.c.is_rational()) throw InputError("minimal polynomial must have rational coefficients");
      coeffs[t.m[0]] = t.c.rational();
    }
    out.field = GroundField::extension(gen, coeffs);
  }
  if (!doc.contains("components") || !doc["components"].is_array() || doc["components"].empty())
    throw InputError("missing component list");
  Ring r = domain_ring(out.map.domain);
  for (const auto& c : doc["components"]) {
    if (!c.is_string()) throw InputError("components must be polynomial strings");
    out.map.components.push_back(parse_poly(c.get<std::string>(), r, out.field));
  }
  out.map.validate();
  return out;
}

ScalarMatrix parse_matrix(const std::string& text, const GroundField& field) {
  std::vector<std::vector<Scalar>> rows;
  Ring r = Ring::make({"_"});
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<Scalar> entries;
    std::stringstream es(row);
    std::string e;
    while (std::getline(es, e, ',')) {
      Poly p = parse_poly(e, r, field);
      if (!p.is_constant()) throw InputError("matrix entries must be constants");
      entries.push_back(p.is_zero() ? Scalar(0) : p.constant_value());
    }
    if (!rows.empty() && entries.size() != rows[0].size()) throw InputError("matrix rows differ in length");
    rows.push_back(std::move(entries));
  }
  if (rows.empty() || rows[0].empty()) throw InputError("empty matrix");
  ScalarMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

JobResult run(const JobSpec& job) {
  Context c{job, {}, {}, {}};
  auto& rep = c.result.report;
  rep["command"] = command_name(job.command);
  auto fail = [&](int status, const std::string& what) {
    c.result.status = status;
    rep["error"] = what;
    return c.result;
  };
  try {
    if (job.inputs.size() != expected_inputs(job.command))
      throw ParseError(std::string(command_name(job.command)) + " takes " +
                       std::to_string(expected_inputs(job.command)) + " input(s)");
    try {
      for (const auto& doc : job.inputs) c.inputs.push_back(parse_input(doc));
    } catch (const InputError& e) {
      throw ParseError(e.what());
    }
    for (const auto& in : c.inputs) c.classified.push_back(classify_map(in.map, in.field));
    switch (job.command) {
      case Command::BasePoints: run_basepoints(c); break;
      case Command::Classify: run_classify(c, false); break;
      case Command::Reduce: run_classify(c, true); break;
      case Command::Isoms:
      case Command::Symmetries: run_isoms(c); break;
      case Command::Verify: run_verify(c); break;
    }
    return c.result;
  } catch (const ParseError& e) {
    return fail(kParse, e.what());
  } catch (const ExtensionRequired& e) {
    rep["factor"] = e.factor();
    return fail(kExtension, e.what());
  } catch (const ConsistencyError& e) {
    return fail(kConsistency, e.what());
  } catch (const ContractError& e) {
    return fail(kConsistency, e.what());
  } catch (const std::exception& e) {
    return fail(kFailure, e.what());
  }
}

}  // namespace surfiso
