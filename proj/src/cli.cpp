#include "skewline/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "skewline/dsl.hpp"
#include "skewline/serialize.hpp"
#include "skewline/svg.hpp"
#include "skewline/verification.hpp"

namespace skewline {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

struct RunArgs {
  std::string script;
  std::string trace;
  std::string svg;
  std::uint64_t seed = 0;
};

int cmd_run(const RunArgs& a, std::ostream& out, std::ostream& err) {
  std::string text;
  if (!read_file(a.script, text)) {
    err << a.script << ": cannot read file\n";
    return kUsage;
  }
  const auto parsed = dsl::parse(text);
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics) err << a.script << ':' << d.to_string() << '\n';
    return kUsage;
  }
  const dsl::Script& script = *parsed.script;
  const auto result = dsl::execute(script, a.seed);

  for (const auto& s : script.statements) {
    const auto* c = std::get_if<dsl::Construct>(&s.body);
    const auto* p = std::get_if<dsl::Project>(&s.body);
    const std::string name = c ? c->result.name : p ? p->result.name : "";
    if (name.empty()) continue;
    auto it = result.bindings.find(name);
    if (it != result.bindings.end()) out << name << " = " << std::get<Point>(it->second).to_string() << '\n';
  }
  for (const auto& as : result.assertions) {
    out << as.span.line << ": " << as.text << ": " << (as.passed ? "pass" : "FAIL");
    if (!as.passed && !as.detail.empty()) out << " (" << as.detail << ')';
    out << '\n';
  }
  for (const auto& d : result.diagnostics) err << a.script << ':' << d.to_string() << '\n';

  int code = result.ok() ? kOk : kFailed;
  if (!a.trace.empty() && !write_file(a.trace, trace_document(script.ring, result.traces).dump(2) + "\n")) {
    err << a.trace << ": cannot write file\n";
    code = kFailed;
  }
  if (!a.svg.empty()) {
    try {
      if (!write_file(a.svg, render_svg(result.traces))) {
        err << a.svg << ": cannot write file\n";
        code = kFailed;
      }
    } catch (const GeometryError& e) {
      err << "svg: " << error_kind_name(e.kind()) << ": " << e.detail() << '\n';
      code = kFailed;
    }
  }
  return code;
}

struct VerifyArgs {
  std::string suite;
  std::string model;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  bool exhaustive = false;
  bool json = false;
  bool timing = false;
};

void print_report(const SuiteReport& r, bool timing, std::ostream& out) {
  out << r.suite << " [" << r.ring.name() << ", ";
  if (r.mode.kind == ModeKind::Exhaustive) {
    out << "exhaustive";
  } else {
    out << "sampled seed=" << r.mode.seed << " n=" << r.mode.samples;
  }
  out << "]";
  if (timing) out << ' ' << r.wall_time_ms << " ms";
  out << '\n';
  for (const auto& c : r.checks) {
    std::string status(claim_status_name(c.status()));
    std::transform(status.begin(), status.end(), status.begin(), ::toupper);
    out << "  " << status << "  " << c.claim << "  tested=" << c.tested << " failures=" << c.failures;
    if (!c.reason.empty()) out << "  (" << c.reason << ')';
    out << '\n';
    if (!c.witnesses.empty()) {
      const auto& w = c.witnesses.front();
      out << "      witness: " << w.note;
      for (const auto& [label, p] : w.points) out << ' ' << label << '=' << p.to_string();
      for (const auto& [label, l] : w.lines) out << ' ' << label << ": " << l.to_string();
      out << '\n';
    }
  }
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  RingDescriptor ring = RingDescriptor::rational();
  try {
    ring = RingDescriptor::parse(a.model);
  } catch (const GeometryError& e) {
    err << "verify: " << e.what() << '\n';
    return kUsage;
  }
  const RunMode mode = a.exhaustive ? RunMode::exhaustive() : RunMode::sampled(a.seed, a.samples);
  const PlaneModel model(ring);
  std::vector<SuiteReport> reports;
  try {
    if (a.suite == "all") {
      if (a.exhaustive && !ring.finite()) check_compatible("skew-field", ring, mode);
      reports = run_all(model, mode);
    } else {
      reports.push_back(run_suite(a.suite, model, mode));
    }
  } catch (const GeometryError& e) {
    err << "verify: " << error_kind_name(e.kind()) << ": " << e.detail() << '\n';
    return e.kind() == ErrorKind::SuiteModelMismatch ? kUsage : kFailed;
  }
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  if (a.json) {
    out << report_document(reports, a.timing).dump(2) << '\n';
  } else {
    for (const auto& r : reports) print_report(r, a.timing, out);
    out << (passed ? "all checks passed" : "FAILED") << '\n';
  }
  return passed ? kOk : kFailed;
}

struct TableArgs {
  std::string model;
  std::string frame;
  std::string op = "both";
  bool csv = false;
  std::uint64_t seed = 0;
};

// "ox,oy;ix,iy"
Frame parse_frame_spec(const RingDescriptor& ring, const std::string& spec) {
  const auto semi = spec.find(';');
  auto point = [&](const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
      throw GeometryError(ErrorKind::InvalidFrame, "frame points are written x,y; got '" + s + "'");
    }
    return Point{Scalar::parse(ring, s.substr(0, comma)), Scalar::parse(ring, s.substr(comma + 1))};
  };
  if (semi == std::string::npos) {
    throw GeometryError(ErrorKind::InvalidFrame, "frame spec is 'ox,oy;ix,iy'; got '" + spec + "'");
  }
  return Frame::through(point(spec.substr(0, semi)), point(spec.substr(semi + 1)));
}

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const RingDescriptor ring = RingDescriptor::parse(a.model);
    if (!ring.finite()) throw GeometryError(ErrorKind::NotEnumerable, ring.name() + " has no finite table");
    const Frame frame = a.frame.empty() ? Frame::standard(ring) : parse_frame_spec(ring, a.frame);
    const auto tables = cayley_tables(frame, a.seed);
    if (!a.csv) {
      out << "frame " << frame.line().to_string() << "  O = " << frame.origin().to_string()
          << "  I = " << frame.unit().to_string() << '\n';
      for (std::size_t k = 0; k < tables.elements.size(); ++k) {
        out << "  " << k << " = " << tables.elements[k].to_string() << '\n';
      }
      out << '\n';
    }
    const bool add = a.op != "mul", mul = a.op != "add";
    if (add) out << (a.csv ? format_table_csv(tables, false) : format_table_text(tables, false));
    if (add && mul) out << '\n';
    if (mul) out << (a.csv ? format_table_csv(tables, true) : format_table_text(tables, true));
    return kOk;
  } catch (const GeometryError& e) {
    err << "table: " << error_kind_name(e.kind()) << ": " << e.detail() << '\n';
    return kUsage;
  }
}

int cmd_replay(const std::string& path, std::ostream& out, std::ostream& err) {
  std::string text;
  if (!read_file(path, text)) {
    err << path << ": cannot read file\n";
    return kUsage;
  }
  try {
    const Json doc = Json::parse(text);
    const auto traces = traces_from_document(doc);
    std::size_t mismatches = 0;
    for (std::size_t k = 0; k < traces.size(); ++k) {
      const bool same = replay(traces[k]) == traces[k];
      mismatches += !same;
      out << k << ' ' << traces[k].op << ": " << (same ? "reproduced" : "MISMATCH") << '\n';
    }
    return mismatches == 0 ? kOk : kFailed;
  } catch (const Json::exception& e) {
    err << path << ": " << e.what() << '\n';
    return kUsage;
  } catch (const GeometryError& e) {
    err << path << ": " << error_kind_name(e.kind()) << ": " << e.detail() << '\n';
    return e.kind() == ErrorKind::InvalidTrace ? kUsage : kFailed;
  }
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthetic constructions on coordinate affine planes", "skewline"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "execute a construction script");
  run_cmd->add_option("script", run.script, "script file (.geo)")->required();
  run_cmd->add_option("--trace", run.trace, "write construction traces as JSON");
  run_cmd->add_option("--svg", run.svg, "render the traces as SVG");
  run_cmd->add_option("--seed", run.seed, "default auxiliary point choice (0: O + (0,1))");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify_cmd->add_option("suite", verify.suite, "suite name")->required()->check(CLI::IsMember(suites));
  verify_cmd->add_option("--model", verify.model, "rational | gf(p) | quaternion")->required();
  verify_cmd->add_option("--seed", verify.seed, "sampling seed");
  verify_cmd->add_option("--samples", verify.samples, "samples per claim");
  verify_cmd->add_flag("--exhaustive", verify.exhaustive, "enumerate a finite plane completely");
  verify_cmd->add_flag("--json", verify.json, "print the report as JSON");
  verify_cmd->add_flag("--timing", verify.timing, "include wall time");

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "print Cayley tables of the constructed field");
  table_cmd->add_option("--model", table.model, "gf(p)")->required();
  table_cmd->add_option("--frame", table.frame, "frame points 'ox,oy;ix,iy' (default 0,0;1,0)");
  table_cmd->add_option("--op", table.op, "add | mul | both")->check(CLI::IsMember({"add", "mul", "both"}));
  table_cmd->add_flag("--csv", table.csv, "CSV instead of aligned text");
  table_cmd->add_option("--seed", table.seed, "auxiliary point choice");

  std::string replay_path;
  auto* replay_cmd = app.add_subcommand("replay", "re-execute a JSON trace file and compare");
  replay_cmd->add_option("traces", replay_path, "trace file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (run_cmd->parsed()) return cmd_run(run, out, err);
  if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
  if (table_cmd->parsed()) return cmd_table(table, out, err);
  return cmd_replay(replay_path, out, err);
}

}  // namespace skewline
