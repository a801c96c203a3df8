#include "gsgen/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gsgen::io {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string graph_to_json(const GraphState& g) {
  ordered_json j;
  j["vertices"] = g.qubit_ids();
  auto es = ordered_json::array();
  for (const auto& [a, b] : g.edges()) es.push_back({a, b});
  j["edges"] = es;
  ordered_json frames = ordered_json::object();
  for (int q : g.qubit_ids())
    if (!g.frame(q).is_identity()) frames[std::to_string(q)] = g.frame(q).name();
  j["frames"] = frames;
  return j.dump();
}

GraphState graph_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  GraphState g;
  for (int q : j.at("vertices")) g.add_qubit(q);
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0), e.at(1));
  if (j.contains("frames"))
    for (const auto& [key, tag] : j.at("frames").items())
      g.set_frame(std::stoi(key), LocalFrame::from_name(tag.get<std::string>()));
  return g;
}

std::string redundant_to_json(const RedundantGraph& rg) {
  ordered_json j;
  auto vs = ordered_json::array();
  for (int vid : rg.vertex_ids()) {
    ordered_json v;
    v["id"] = vid;
    v["members"] = rg.members(vid);
    bool is_emitter_vertex =
        rg.emitter_vertex().has_value() && *rg.emitter_vertex() == vid;
    v["emitter"] = is_emitter_vertex;
    vs.push_back(v);
  }
  j["vertices"] = vs;
  auto es = ordered_json::array();
  for (const auto& [a, b] : rg.logical_edges()) es.push_back({a, b});
  j["edges"] = es;
  ordered_json frames = ordered_json::object();
  for (int vid : rg.vertex_ids())
    for (int q : rg.members(vid))
      if (!rg.frame(q).is_identity()) frames[std::to_string(q)] = rg.frame(q).name();
  if (!frames.empty()) j["frames"] = frames;
  if (rg.emitter_qubit()) {
    j["emitter_qubit"] = *rg.emitter_qubit();
    if (rg.emitter_pending()) j["pending_emitter"] = true;
  }
  return j.dump();
}

RedundantGraph redundant_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  RedundantGraph rg;
  if (j.contains("emitter_qubit") && j.value("pending_emitter", false))
    rg.init_emitter(j.at("emitter_qubit").get<int>());
  for (const auto& v : j.at("vertices")) {
    std::set<int> ms;
    for (int q : v.at("members")) ms.insert(q);
    rg.add_vertex(v.at("id").get<int>(), ms);
  }
  for (const auto& e : j.at("edges")) rg.add_logical_edge(e.at(0), e.at(1));
  if (j.contains("frames"))
    for (const auto& [key, tag] : j.at("frames").items())
      rg.set_frame(std::stoi(key), LocalFrame::from_name(tag.get<std::string>()));
  return rg;
}

namespace {

const char* op_name(Op op) {
  switch (op) {
    case Op::InitEmitter: return "init_emitter";
    case Op::HadamardEmitter: return "h_emitter";
    case Op::Emit: return "emit";
    case Op::MeasureXEmitter: return "measure_x_emitter";
    case Op::HPush: return "h_push";
    case Op::FuseType1: return "fuse_type1";
    case Op::FuseType2Variant: return "fuse_type2";
    case Op::BoostedFuse: return "boosted_fuse";
    case Op::MeasureX: return "measure_x";
    case Op::MeasureZ: return "measure_z";
  }
  return "?";
}

Op op_from_name(const std::string& s) {
  if (s == "init_emitter") return Op::InitEmitter;
  if (s == "h_emitter") return Op::HadamardEmitter;
  if (s == "emit") return Op::Emit;
  if (s == "measure_x_emitter") return Op::MeasureXEmitter;
  if (s == "h_push") return Op::HPush;
  if (s == "fuse_type1") return Op::FuseType1;
  if (s == "fuse_type2") return Op::FuseType2Variant;
  if (s == "boosted_fuse") return Op::BoostedFuse;
  if (s == "measure_x") return Op::MeasureX;
  if (s == "measure_z") return Op::MeasureZ;
  throw std::invalid_argument("unknown instruction: " + s);
}

}  // namespace

std::string plan_to_jsonl(const GenerationPlan& p) {
  std::ostringstream out;
  ordered_json head;
  head["type"] = "plan";
  head["family"] = p.family;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : p.params) params[k] = v;
  head["params"] = params;
  head["photons"] = p.photon_count();
  head["boosted_fusions"] = p.boosted_fusion_count();
  head["streams"] = p.stream_count();
  out << head.dump() << "\n";
  for (const auto& ins : p.instructions) {
    ordered_json j;
    j["op"] = op_name(ins.op);
    j["stream"] = ins.stream;
    switch (ins.op) {
      case Op::InitEmitter: j["qubit"] = ins.a; break;
      case Op::HadamardEmitter: j["vertex"] = ins.a; break;
      case Op::Emit: j["qubit"] = ins.a; break;
      case Op::MeasureXEmitter: break;
      case Op::HPush:
        j["qubit"] = ins.a;
        j["vertex"] = ins.b;
        break;
      case Op::FuseType1:
      case Op::FuseType2Variant:
        j["qa"] = ins.a;
        j["qb"] = ins.b;
        break;
      case Op::BoostedFuse:
        j["va"] = ins.a;
        j["vb"] = ins.b;
        j["m"] = ins.m;
        break;
      case Op::MeasureX:
      case Op::MeasureZ: j["qubit"] = ins.a; break;
    }
    out << j.dump() << "\n";
  }
  return out.str();
}

GenerationPlan plan_from_jsonl(const std::string& text) {
  GenerationPlan p;
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ordered_json j = ordered_json::parse(line);
    if (!have_header) {
      if (j.value("type", "") != "plan") throw std::invalid_argument("missing plan header record");
      p.family = j.value("family", "");
      if (j.contains("params"))
        for (const auto& [k, v] : j.at("params").items()) p.params[k] = v.get<long long>();
      have_header = true;
      continue;
    }
    Instruction ins;
    ins.op = op_from_name(j.at("op").get<std::string>());
    ins.stream = j.value("stream", 0);
    switch (ins.op) {
      case Op::InitEmitter: ins.a = j.at("qubit"); break;
      case Op::HadamardEmitter: ins.a = j.at("vertex"); break;
      case Op::Emit: ins.a = j.at("qubit"); break;
      case Op::MeasureXEmitter: break;
      case Op::HPush:
        ins.a = j.at("qubit");
        ins.b = j.at("vertex");
        break;
      case Op::FuseType1:
      case Op::FuseType2Variant:
        ins.a = j.at("qa");
        ins.b = j.at("qb");
        break;
      case Op::BoostedFuse:
        ins.a = j.at("va");
        ins.b = j.at("vb");
        ins.m = j.at("m");
        break;
      case Op::MeasureX:
      case Op::MeasureZ: ins.a = j.at("qubit"); break;
    }
    p.instructions.push_back(ins);
  }
  if (!have_header) throw std::invalid_argument("empty plan file");
  return p;
}

std::string results_to_json(const GenerationPlan& plan, const LossModel& loss, const Estimate& e) {
  ordered_json j;
  ordered_json meta;
  meta["family"] = plan.family;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : plan.params) params[k] = v;
  meta["params"] = params;
  meta["photons"] = plan.photon_count();
  meta["boosted_fusions"] = plan.boosted_fusion_count();
  j["plan_meta"] = meta;
  j["eta"] = loss.eta;
  j["trials"] = e.trials;
  j["successes"] = e.successes;
  j["p_hat"] = e.p_hat;
  j["ci_low"] = e.ci_low;
  j["ci_high"] = e.ci_high;
  j["seed"] = loss.seed;
  j["substream"] = loss.substream;
  return j.dump(2);
}

std::string trace_record_to_json(const FusionTraceRecord& r) {
  ordered_json j;
  j["type"] = r.type;
  j["qa"] = r.qa;
  j["qb"] = r.qb;
  j["outcome_bits"] = {r.outcome_bits[0], r.outcome_bits[1]};
  j["kind"] = r.kind;
  j["attempts_used"] = r.attempts_used;
  return j.dump();
}

std::string table_to_csv(const analytics::Table& t) {
  std::ostringstream out;
  for (size_t i = 0; i < t.header.size(); ++i) {
    if (i) out << ",";
    out << t.header[i];
  }
  out << "\r\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << format_double(row[i]);
    }
    out << "\r\n";
  }
  return out.str();
}

analytics::Table table_from_csv(const std::string& text) {
  analytics::Table t;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (header) {
      t.header = cells;
      header = false;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) row.push_back(std::stod(c));
    if (row.size() != t.header.size())
      throw std::invalid_argument("csv row width does not match the header");
    t.rows.push_back(std::move(row));
  }
  if (header) throw std::invalid_argument("csv file has no header row");
  return t;
}

std::string table_to_json(const analytics::Table& t) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json r = ordered_json::object();
    for (size_t i = 0; i < row.size(); ++i) r[t.header[i]] = row[i];
    rows.push_back(r);
  }
  ordered_json j;
  j["columns"] = t.header;
  j["rows"] = rows;
  return j.dump(2);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace gsgen::io
