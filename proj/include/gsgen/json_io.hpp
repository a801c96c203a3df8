#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gsgen/analytics.hpp"
#include "gsgen/graph_state.hpp"
#include "gsgen/monte_carlo.hpp"
#include "gsgen/plan.hpp"
#include "gsgen/redundant_graph.hpp"

namespace gsgen::io {

/// {"vertices":[...],"edges":[[a,b],...],"frames":{"id":"TAG"}}
/// with edges sorted lexicographically; frames holds non-identity tags only.
std::string graph_to_json(const GraphState& g);
GraphState graph_from_json(const std::string& text);

/// {"vertices":[{"id":..,"members":[..],"emitter":bool}],"edges":[..]}
/// plus "frames" and "pending_emitter" when present.
std::string redundant_to_json(const RedundantGraph& rg);
RedundantGraph redundant_from_json(const std::string& text);

/// JSON-lines plan file: a header record followed by one instruction per
/// line, stable field order.
std::string plan_to_jsonl(const GenerationPlan& p);
GenerationPlan plan_from_jsonl(const std::string& text);

/// {plan_meta, eta, trials, successes, p_hat, ci_low, ci_high, seed}
std::string results_to_json(const GenerationPlan& plan, const LossModel& loss, const Estimate& e);

std::string trace_record_to_json(const FusionTraceRecord& r);

/// RFC-4180 CSV with mandatory header; numbers printed with 12 significant
/// digits.
std::string table_to_csv(const analytics::Table& t);
analytics::Table table_from_csv(const std::string& text);
std::string table_to_json(const analytics::Table& t);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

std::string format_double(double v);

}  // namespace gsgen::io
