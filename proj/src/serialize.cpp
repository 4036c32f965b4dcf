#include "skewline/serialize.hpp"

#include <set>

namespace skewline {

namespace {

[[noreturn]] void bad(const std::string& what) { throw GeometryError(ErrorKind::InvalidTrace, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Scalar scalar_from(const RingDescriptor& ring, const Json& j) {
  if (!j.is_string()) bad("scalar must be a string");
  try {
    return Scalar::parse(ring, j.get<std::string>());
  } catch (const GeometryError& e) {
    bad("bad scalar '" + j.get<std::string>() + "': " + e.detail());
  }
}

Json labelled_points(const std::vector<std::pair<std::string, Point>>& pts) {
  Json arr = Json::array();
  for (const auto& [label, p] : pts) arr.push_back({{"label", label}, {"value", point_json(p)}});
  return arr;
}

Json mode_json(const RunMode& mode) {
  if (mode.kind == ModeKind::Exhaustive) return {{"kind", "exhaustive"}};
  return {{"kind", "sampled"}, {"seed", mode.seed}, {"samples", mode.samples}};
}

}  // namespace

Json point_json(const Point& p) { return {{"x", p.x.to_string()}, {"y", p.y.to_string()}}; }

Json line_json(const Line& l) {
  if (l.is_vertical()) return {{"kind", "vertical"}, {"c", l.abscissa().to_string()}, {"text", l.to_string()}};
  return {{"kind", "sloped"},
          {"m", l.slope().to_string()},
          {"b", l.intercept().to_string()},
          {"text", l.to_string()}};
}

Json frame_json(const Frame& f) {
  return {{"line", line_json(f.line())}, {"O", point_json(f.origin())}, {"I", point_json(f.unit())}};
}

Point point_from_json(const RingDescriptor& ring, const Json& j) {
  return {scalar_from(ring, field(j, "x")), scalar_from(ring, field(j, "y"))};
}

Line line_from_json(const RingDescriptor& ring, const Json& j) {
  const Json& kind = field(j, "kind");
  if (kind == "vertical") return Line::vertical(scalar_from(ring, field(j, "c")));
  if (kind == "sloped") return Line::sloped(scalar_from(ring, field(j, "m")), scalar_from(ring, field(j, "b")));
  bad("line kind must be 'vertical' or 'sloped'");
}

Frame frame_from_json(const RingDescriptor& ring, const Json& j) {
  try {
    return Frame(line_from_json(ring, field(j, "line")), point_from_json(ring, field(j, "O")),
                 point_from_json(ring, field(j, "I")));
  } catch (const GeometryError& e) {
    if (e.kind() == ErrorKind::InvalidTrace) throw;
    bad("bad frame: " + e.detail());
  }
}

Json trace_json(const ConstructionTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    if (s.is_point()) {
      steps.push_back({{"label", s.label}, {"kind", "point"}, {"value", point_json(std::get<Point>(s.value))}});
    } else {
      steps.push_back({{"label", s.label}, {"kind", "line"}, {"value", line_json(std::get<Line>(s.value))}});
    }
  }
  return {{"op", t.op},
          {"frame", t.frame ? frame_json(*t.frame) : Json(nullptr)},
          {"inputs", labelled_points(t.inputs)},
          {"auxiliary_B", t.auxiliary ? point_json(*t.auxiliary) : Json(nullptr)},
          {"steps", std::move(steps)},
          {"result", point_json(t.result)}};
}

ConstructionTrace trace_from_json(const RingDescriptor& ring, const Json& j) {
  const Json& op = field(j, "op");
  if (!op.is_string()) bad("op must be a string");
  std::optional<Frame> frame;
  if (const Json& fj = field(j, "frame"); !fj.is_null()) frame = frame_from_json(ring, fj);
  std::vector<std::pair<std::string, Point>> inputs;
  for (const auto& in : field(j, "inputs")) {
    inputs.emplace_back(field(in, "label").get<std::string>(), point_from_json(ring, field(in, "value")));
  }
  std::optional<Point> aux;
  if (const Json& aj = field(j, "auxiliary_B"); !aj.is_null()) aux = point_from_json(ring, aj);
  std::vector<TraceObject> steps;
  for (const auto& s : field(j, "steps")) {
    const std::string label = field(s, "label").get<std::string>();
    const Json& kind = field(s, "kind");
    if (kind == "point") {
      steps.push_back({label, point_from_json(ring, field(s, "value"))});
    } else if (kind == "line") {
      steps.push_back({label, line_from_json(ring, field(s, "value"))});
    } else {
      bad("step kind must be 'point' or 'line'");
    }
  }
  return ConstructionTrace{op.get<std::string>(), std::move(frame), std::move(inputs), std::move(aux),
                           std::move(steps), point_from_json(ring, field(j, "result"))};
}

Json trace_document(const RingDescriptor& ring, const std::vector<ConstructionTrace>& traces) {
  Json arr = Json::array();
  for (const auto& t : traces) arr.push_back(trace_json(t));
  return {{"schema_version", kSchemaVersion}, {"model", ring.name()}, {"traces", std::move(arr)}};
}

std::vector<ConstructionTrace> traces_from_document(const Json& doc, RingDescriptor* ring_out) {
  if (auto problems = validate_trace_document(doc); !problems.empty()) bad(problems.front());
  RingDescriptor ring = RingDescriptor::rational();
  try {
    ring = RingDescriptor::parse(doc.at("model").get<std::string>());
  } catch (const GeometryError& e) {
    bad("bad model: " + e.detail());
  }
  std::vector<ConstructionTrace> out;
  for (const auto& t : doc.at("traces")) out.push_back(trace_from_json(ring, t));
  if (ring_out) *ring_out = ring;
  return out;
}

Json witness_json(const Witness& w) {
  Json lines = Json::array();
  for (const auto& [label, l] : w.lines) lines.push_back({{"label", label}, {"value", line_json(l)}});
  return {{"note", w.note}, {"points", labelled_points(w.points)}, {"lines", std::move(lines)}};
}

Json claim_json(const ClaimResult& c) {
  Json ws = Json::array();
  for (const auto& w : c.witnesses) ws.push_back(witness_json(w));
  Json j{{"claim", c.claim},
         {"anchor", c.anchor},
         {"status", std::string(claim_status_name(c.status()))},
         {"tested", c.tested},
         {"failures", c.failures},
         {"witnesses", std::move(ws)}};
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

Json search_report_json(const SearchReport& r) {
  Json ws = Json::array();
  for (const auto& w : r.failures) ws.push_back(witness_json(w));
  return {{"schema_version", kSchemaVersion},
          {"kind", std::string(config_kind_name(r.kind))},
          {"model", r.ring.name()},
          {"seed", r.seed},
          {"budget", r.budget},
          {"exhaustive", r.exhaustive},
          {"tested", r.tested},
          {"rejected", r.rejected},
          {"failure_count", r.failure_count},
          {"failures", std::move(ws)}};
}

Json axiom_report_json(const AxiomReport& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims) claims.push_back(claim_json(c));
  return {{"schema_version", kSchemaVersion}, {"passed", r.passed()}, {"claims", std::move(claims)}};
}

Json order_report_json(const OrderReport& r) {
  Json claims = Json::array();
  for (const auto& c : r.claims) claims.push_back(claim_json(c));
  return {{"schema_version", kSchemaVersion},
          {"passed", r.passed()},
          {"orientation", std::string(orientation_name(r.orientation))},
          {"claims", std::move(claims)}};
}

Json suite_report_json(const SuiteReport& r, bool include_timing) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(claim_json(c));
  Json j{{"suite", r.suite},
         {"model", r.ring.name()},
         {"mode", mode_json(r.mode)},
         {"passed", r.passed()},
         {"checks", std::move(checks)}};
  if (include_timing) j["wall_time_ms"] = r.wall_time_ms;
  return j;
}

Json report_document(const std::vector<SuiteReport>& reports, bool include_timing) {
  Json suites = Json::array();
  bool passed = true;
  for (const auto& r : reports) {
    suites.push_back(suite_report_json(r, include_timing));
    passed = passed && r.passed();
  }
  Json doc{{"schema_version", kSchemaVersion}};
  doc["model"] = reports.empty() ? Json(nullptr) : Json(reports.front().ring.name());
  doc["mode"] = reports.empty() ? Json(nullptr) : mode_json(reports.front().mode);
  doc["passed"] = passed;
  doc["suites"] = std::move(suites);
  return doc;
}

// ---------------------------------------------------------------- validation

namespace {

class Checker {
 public:
  std::vector<std::string> problems;

  bool object(const Json& j, const std::string& at, std::initializer_list<const char*> required) {
    if (!j.is_object()) {
      problems.push_back(at + ": expected an object");
      return false;
    }
    bool ok = true;
    for (const char* key : required) {
      if (!j.contains(key)) {
        problems.push_back(at + ": missing '" + key + "'");
        ok = false;
      }
    }
    return ok;
  }
  bool string(const Json& j, const std::string& at) { return expect(j.is_string(), at, "a string"); }
  bool integer(const Json& j, const std::string& at) {
    return expect(j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0), at,
                  "a non-negative integer");
  }
  bool boolean(const Json& j, const std::string& at) { return expect(j.is_boolean(), at, "a boolean"); }
  bool array(const Json& j, const std::string& at) { return expect(j.is_array(), at, "an array"); }
  bool one_of(const Json& j, const std::string& at, std::initializer_list<const char*> values) {
    if (j.is_string()) {
      for (const char* v : values) {
        if (j == v) return true;
      }
    }
    problems.push_back(at + ": unexpected value " + j.dump());
    return false;
  }

  void point(const Json& j, const std::string& at) {
    if (object(j, at, {"x", "y"})) {
      string(j["x"], at + ".x");
      string(j["y"], at + ".y");
    }
  }
  void line(const Json& j, const std::string& at) {
    if (!object(j, at, {"kind"})) return;
    if (!one_of(j["kind"], at + ".kind", {"vertical", "sloped"})) return;
    if (j["kind"] == "vertical") {
      if (object(j, at, {"c"})) string(j["c"], at + ".c");
    } else if (object(j, at, {"m", "b"})) {
      string(j["m"], at + ".m");
      string(j["b"], at + ".b");
    }
  }
  void labelled(const Json& j, const std::string& at, bool lines) {
    if (!array(j, at)) return;
    for (std::size_t k = 0; k < j.size(); ++k) {
      const std::string here = at + "[" + std::to_string(k) + "]";
      if (!object(j[k], here, {"label", "value"})) continue;
      string(j[k]["label"], here + ".label");
      if (lines) {
        line(j[k]["value"], here + ".value");
      } else {
        point(j[k]["value"], here + ".value");
      }
    }
  }
  void version(const Json& j) {
    if (object(j, "$", {"schema_version"}) && j["schema_version"] != kSchemaVersion) {
      problems.push_back("$.schema_version: expected " + std::to_string(kSchemaVersion));
    }
  }

 private:
  bool expect(bool ok, const std::string& at, const char* what) {
    if (!ok) problems.push_back(at + ": expected " + what);
    return ok;
  }
};

}  // namespace

std::vector<std::string> validate_trace_document(const Json& doc) {
  Checker c;
  c.version(doc);
  if (!c.object(doc, "$", {"model", "traces"})) return c.problems;
  c.string(doc["model"], "$.model");
  if (!c.array(doc["traces"], "$.traces")) return c.problems;
  for (std::size_t k = 0; k < doc["traces"].size(); ++k) {
    const Json& t = doc["traces"][k];
    const std::string at = "$.traces[" + std::to_string(k) + "]";
    if (!c.object(t, at, {"op", "frame", "inputs", "auxiliary_B", "steps", "result"})) continue;
    c.one_of(t["op"], at + ".op", {"add", "sub", "mul", "inv-right", "inv-left", "project", "translate"});
    if (!t["frame"].is_null() && c.object(t["frame"], at + ".frame", {"line", "O", "I"})) {
      c.line(t["frame"]["line"], at + ".frame.line");
      c.point(t["frame"]["O"], at + ".frame.O");
      c.point(t["frame"]["I"], at + ".frame.I");
    }
    c.labelled(t["inputs"], at + ".inputs", false);
    if (!t["auxiliary_B"].is_null()) c.point(t["auxiliary_B"], at + ".auxiliary_B");
    if (c.array(t["steps"], at + ".steps")) {
      for (std::size_t s = 0; s < t["steps"].size(); ++s) {
        const Json& step = t["steps"][s];
        const std::string sat = at + ".steps[" + std::to_string(s) + "]";
        if (!c.object(step, sat, {"label", "kind", "value"})) continue;
        c.string(step["label"], sat + ".label");
        if (!c.one_of(step["kind"], sat + ".kind", {"point", "line"})) continue;
        if (step["kind"] == "point") {
          c.point(step["value"], sat + ".value");
        } else {
          c.line(step["value"], sat + ".value");
        }
      }
    }
    c.point(t["result"], at + ".result");
  }
  return c.problems;
}

std::vector<std::string> validate_report_document(const Json& doc) {
  Checker c;
  c.version(doc);
  if (!c.object(doc, "$", {"model", "mode", "passed", "suites"})) return c.problems;
  c.boolean(doc["passed"], "$.passed");
  if (!c.array(doc["suites"], "$.suites")) return c.problems;
  for (std::size_t k = 0; k < doc["suites"].size(); ++k) {
    const Json& s = doc["suites"][k];
    const std::string at = "$.suites[" + std::to_string(k) + "]";
    if (!c.object(s, at, {"suite", "model", "mode", "passed", "checks"})) continue;
    c.string(s["suite"], at + ".suite");
    c.string(s["model"], at + ".model");
    c.boolean(s["passed"], at + ".passed");
    if (c.object(s["mode"], at + ".mode", {"kind"}) &&
        c.one_of(s["mode"]["kind"], at + ".mode.kind", {"exhaustive", "sampled"}) &&
        s["mode"]["kind"] == "sampled" && c.object(s["mode"], at + ".mode", {"seed", "samples"})) {
      c.integer(s["mode"]["seed"], at + ".mode.seed");
      c.integer(s["mode"]["samples"], at + ".mode.samples");
    }
    if (s.contains("wall_time_ms") && !s["wall_time_ms"].is_number()) {
      c.problems.push_back(at + ".wall_time_ms: expected a number");
    }
    if (!c.array(s["checks"], at + ".checks")) continue;
    std::set<std::string> seen;
    for (std::size_t n = 0; n < s["checks"].size(); ++n) {
      const Json& ch = s["checks"][n];
      const std::string cat = at + ".checks[" + std::to_string(n) + "]";
      if (!c.object(ch, cat, {"claim", "anchor", "status", "tested", "failures", "witnesses"})) continue;
      if (c.string(ch["claim"], cat + ".claim") && !seen.insert(ch["claim"].get<std::string>()).second) {
        c.problems.push_back(cat + ".claim: duplicate claim id");
      }
      c.string(ch["anchor"], cat + ".anchor");
      c.one_of(ch["status"], cat + ".status", {"pass", "fail", "not-instantiable", "skipped"});
      c.integer(ch["tested"], cat + ".tested");
      c.integer(ch["failures"], cat + ".failures");
      if (ch.contains("reason")) c.string(ch["reason"], cat + ".reason");
      if (!c.array(ch["witnesses"], cat + ".witnesses")) continue;
      for (std::size_t w = 0; w < ch["witnesses"].size(); ++w) {
        const Json& wit = ch["witnesses"][w];
        const std::string wat = cat + ".witnesses[" + std::to_string(w) + "]";
        if (!c.object(wit, wat, {"note", "points", "lines"})) continue;
        c.string(wit["note"], wat + ".note");
        c.labelled(wit["points"], wat + ".points", false);
        c.labelled(wit["lines"], wat + ".lines", true);
      }
    }
  }
  return c.problems;
}

}  // namespace skewline
