#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "skewline/configurations.hpp"
#include "skewline/line_algebra.hpp"
#include "skewline/ordering.hpp"
#include "skewline/verification.hpp"

namespace skewline {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Scalars are written in their canonical text form.
Json point_json(const Point& p);
Json line_json(const Line& l);
Json frame_json(const Frame& f);
Point point_from_json(const RingDescriptor& ring, const Json& j);
Line line_from_json(const RingDescriptor& ring, const Json& j);
Frame frame_from_json(const RingDescriptor& ring, const Json& j);

// {op, frame, inputs, auxiliary_B, steps: [{label, kind, value}], result}
Json trace_json(const ConstructionTrace& t);
ConstructionTrace trace_from_json(const RingDescriptor& ring, const Json& j);
// {schema_version, model, traces: [...]}
Json trace_document(const RingDescriptor& ring, const std::vector<ConstructionTrace>& traces);
// Throws InvalidTrace on malformed documents.
std::vector<ConstructionTrace> traces_from_document(const Json& doc, RingDescriptor* ring_out = nullptr);

Json witness_json(const Witness& w);
Json claim_json(const ClaimResult& c);
Json search_report_json(const SearchReport& r);
Json axiom_report_json(const AxiomReport& r);
Json order_report_json(const OrderReport& r);
// Wall time is left out unless asked for so equal seeds give equal bytes.
Json suite_report_json(const SuiteReport& r, bool include_timing = false);
// {schema_version, model, mode, passed, suites: [...]}
Json report_document(const std::vector<SuiteReport>& reports, bool include_timing = false);

// Structural checks mirroring schemas/trace.schema.json and
// schemas/report.schema.json. An empty result means valid.
std::vector<std::string> validate_trace_document(const Json& doc);
std::vector<std::string> validate_report_document(const Json& doc);

}  // namespace skewline
