#include "gsgen/plan.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gsgen {

namespace {

struct StreamResult {
  std::vector<int> vertices;
  std::vector<std::vector<int>> photons;  // per vertex, in emission order
};

struct PlanBuilder {
  std::vector<Instruction> instructions;
  int next_qubit = 0;
  int next_vertex = 0;
  int next_stream = 0;

  StreamResult linear_stream(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("empty block size list");
    for (int s : sizes)
      if (s < 1) throw std::invalid_argument("block sizes must be >= 1");
    int stream = next_stream++;
    instructions.push_back({Op::InitEmitter, stream, next_qubit++, -1, 0});
    StreamResult r;
    for (int size : sizes) {
      int vid = next_vertex++;
      instructions.push_back({Op::HadamardEmitter, stream, vid, -1, 0});
      r.vertices.push_back(vid);
      r.photons.emplace_back();
      for (int k = 0; k < size; ++k) {
        int q = next_qubit++;
        instructions.push_back({Op::Emit, stream, q, -1, 0});
        r.photons.back().push_back(q);
      }
    }
    instructions.push_back({Op::MeasureXEmitter, stream, -1, -1, 0});
    return r;
  }

  void boosted(int va, int vb, int m, int stream = 0) {
    instructions.push_back({Op::BoostedFuse, stream, va, vb, m});
  }

  void measure_x(int q, int stream = 0) {
    instructions.push_back({Op::MeasureX, stream, q, -1, 0});
  }
};

void put_sizes(GenerationPlan& p, const std::vector<int>& sizes) {
  for (size_t i = 0; i < sizes.size(); ++i) p.params["size" + std::to_string(i)] = sizes[i];
}

}  // namespace

int GenerationPlan::photon_count() const {
  int n = 0;
  for (const auto& ins : instructions)
    if (ins.op == Op::Emit) ++n;
  return n;
}

int GenerationPlan::boosted_fusion_count() const {
  int n = 0;
  for (const auto& ins : instructions)
    if (ins.op == Op::BoostedFuse) ++n;
  return n;
}

int GenerationPlan::bare_fusion_count() const {
  int n = 0;
  for (const auto& ins : instructions)
    if (ins.op == Op::FuseType1 || ins.op == Op::FuseType2Variant) ++n;
  return n;
}

int GenerationPlan::measure_x_count() const {
  int n = 0;
  for (const auto& ins : instructions)
    if (ins.op == Op::MeasureX) ++n;
  return n;
}

int GenerationPlan::stream_count() const {
  std::set<int> ss;
  for (const auto& ins : instructions) ss.insert(ins.stream);
  return static_cast<int>(ss.size());
}

GenerationPlan merge_plans(const std::vector<GenerationPlan>& plans, const std::string& family,
                           const std::map<std::string, long long>& params) {
  GenerationPlan out;
  out.family = family;
  out.params = params;
  std::set<int> inited;
  for (const auto& p : plans)
    for (const auto& ins : p.instructions) {
      if (ins.op == Op::InitEmitter && !inited.insert(ins.stream).second)
        throw std::invalid_argument("duplicate emitter stream in merged plans");
      out.instructions.push_back(ins);
    }
  return out;
}

GenerationPlan compile_linear(const std::vector<int>& sizes, int stream, int first_qubit,
                              int first_vertex) {
  PlanBuilder b;
  b.next_stream = stream;
  b.next_qubit = first_qubit;
  b.next_vertex = first_vertex;
  b.linear_stream(sizes);
  GenerationPlan p;
  p.family = "linear";
  p.params["blocks"] = static_cast<long long>(sizes.size());
  put_sizes(p, sizes);
  p.instructions = std::move(b.instructions);
  return p;
}

GenerationPlan compile_ghz(int n) {
  if (n < 1) throw std::invalid_argument("GHZ needs at least one photon");
  GenerationPlan p = compile_linear({n});
  p.family = "ghz";
  p.params.clear();
  p.params["n"] = n;
  return p;
}

std::vector<GenerationPlan> compile_2d_layers(int n1, int n2, int m) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("cluster dimensions must be >= 1");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  std::vector<GenerationPlan> layers;
  if (n2 == 1) {
    GenerationPlan p = compile_linear(std::vector<int>(n1, 1));
    p.family = "cluster2d-layer";
    p.params = {{"n1", n1}, {"n2", 1}, {"m", m}, {"layer", 0}};
    layers.push_back(std::move(p));
    return layers;
  }
  PlanBuilder b;
  std::vector<StreamResult> built;
  for (int j = 0; j < n2; ++j) {
    size_t first_instr = b.instructions.size();
    bool boundary = (j == 0 || j == n2 - 1);
    std::vector<int> sizes(n1, boundary ? m + 1 : 2 * m + 1);
    built.push_back(b.linear_stream(sizes));
    if (j > 0)
      for (int i = 0; i < n1; ++i) b.boosted(built[j - 1].vertices[i], built[j].vertices[i], m, j);
    GenerationPlan p;
    p.family = "cluster2d-layer";
    p.params = {{"n1", n1}, {"n2", n2}, {"m", m}, {"layer", j}};
    p.instructions.assign(b.instructions.begin() + first_instr, b.instructions.end());
    layers.push_back(std::move(p));
  }
  return layers;
}

GenerationPlan compile_cluster_2d(int n1, int n2, int m) {
  auto layers = compile_2d_layers(n1, n2, m);
  return merge_plans(layers, "cluster2d", {{"n1", n1}, {"n2", n2}, {"m", m}});
}

GenerationPlan compile_cluster_nd(const std::vector<int>& dims, int m) {
  if (dims.empty()) throw std::invalid_argument("empty dimension list");
  for (int n : dims)
    if (n < 1) throw std::invalid_argument("cluster dimensions must be >= 1");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  int d = static_cast<int>(dims.size());
  int n1 = dims[0];
  // streams are grid lines along the first dimension
  long long lines = 1;
  for (int i = 1; i < d; ++i) lines *= dims[i];
  PlanBuilder b;
  // vertex ids per (line, x1)
  std::vector<std::vector<int>> vert(lines);
  auto line_coord = [&](long long line, int i) {
    // coordinate x_{i} (i >= 1) of a flattened line index
    for (int k = 1; k < i; ++k) line /= dims[k];
    return static_cast<int>(line % dims[i]);
  };
  for (long long line = 0; line < lines; ++line) {
    std::vector<int> sizes(n1);
    int alloc = 0;
    for (int i = 1; i < d; ++i) {
      int xi = line_coord(line, i);
      alloc += (xi > 0 ? 1 : 0) + (xi < dims[i] - 1 ? 1 : 0);
    }
    for (int x1 = 0; x1 < n1; ++x1) sizes[x1] = 1 + alloc * m;
    vert[line] = b.linear_stream(sizes).vertices;
  }
  for (int i = 1; i < d; ++i) {
    long long stride = 1;
    for (int k = 1; k < i; ++k) stride *= dims[k];
    for (long long line = 0; line < lines; ++line) {
      int xi = line_coord(line, i);
      if (xi == dims[i] - 1) continue;
      long long other = line + stride;
      for (int x1 = 0; x1 < n1; ++x1) b.boosted(vert[line][x1], vert[other][x1], m);
    }
  }
  GenerationPlan p;
  p.family = "clusterNd";
  p.params["d"] = d;
  p.params["m"] = m;
  for (int i = 0; i < d; ++i) p.params["n" + std::to_string(i + 1)] = dims[i];
  p.instructions = std::move(b.instructions);
  return p;
}

GenerationPlan compile_ring(int k, int m) {
  if (k < 3) throw std::invalid_argument("rings need k >= 3");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  PlanBuilder b;
  std::vector<int> sizes(k, 1);
  sizes.front() = 1 + m;
  sizes.back() = 1 + m;
  auto r = b.linear_stream(sizes);
  b.boosted(r.vertices.front(), r.vertices.back(), m);
  GenerationPlan p;
  p.family = "ring";
  p.params = {{"k", k}, {"m", m}};
  p.instructions = std::move(b.instructions);
  return p;
}

GenerationPlan compile_encoded_ring(int k, int n1, int n2, int m) {
  if (k < 3) throw std::invalid_argument("rings need k >= 3");
  if (n1 < 2 || n2 < 1) throw std::invalid_argument("parity encoding needs n1 >= 2, n2 >= 1");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  PlanBuilder b;

  // step 1: ring backbone with spare photons for the step-6 attachments
  std::vector<int> ring_sizes(k, m + 1);
  ring_sizes.front() = 2 * m + 1;
  ring_sizes.back() = 2 * m + 1;
  auto ring = b.linear_stream(ring_sizes);
  // step 2: close the ring
  b.boosted(ring.vertices.front(), ring.vertices.back(), m);

  // step 3: k three-block clusters (n2, (n1-1)m+1, n2)
  std::vector<StreamResult> clusters;
  for (int i = 0; i < k; ++i)
    clusters.push_back(b.linear_stream({n2, (n1 - 1) * m + 1, n2}));

  // step 4: k(n1-2) GHZ blocks of n2+m photons
  std::vector<std::vector<StreamResult>> ghz(k);
  for (int i = 0; i < k; ++i)
    for (int jj = 0; jj < n1 - 2; ++jj) ghz[i].push_back(b.linear_stream({n2 + m}));

  // step 5: complete each logical qubit
  for (int i = 0; i < k; ++i)
    for (int jj = 0; jj < n1 - 2; ++jj) b.boosted(clusters[i].vertices[1], ghz[i][jj].vertices[0], m);

  // step 6: attach logical qubits to the ring
  for (int i = 0; i < k; ++i) b.boosted(clusters[i].vertices[1], ring.vertices[i], m);

  // step 7: X-measure the k original ring photons and the k middle-vertex
  // leftovers (fusions consume lowest ids first, so the survivor is the
  // highest emitted photon of each block)
  for (int i = 0; i < k; ++i) b.measure_x(ring.photons[i].back());
  for (int i = 0; i < k; ++i) b.measure_x(clusters[i].photons[1].back());

  GenerationPlan p;
  p.family = "encoded-ring";
  p.params = {{"k", k}, {"n1", n1}, {"n2", n2}, {"m", m}};
  p.instructions = std::move(b.instructions);
  return p;
}

double plan_duration(const GenerationPlan& p, const TimeModel& t) {
  double d = 0;
  for (const auto& ins : p.instructions) {
    if (ins.op == Op::Emit) d += t.t_emit;
    if (ins.op == Op::HadamardEmitter) d += t.t_h;
  }
  return d;
}

double plan_duration_parallel(const GenerationPlan& p, const TimeModel& t) {
  std::map<int, double> per_stream;
  for (const auto& ins : p.instructions) {
    if (ins.op == Op::Emit) per_stream[ins.stream] += t.t_emit;
    if (ins.op == Op::HadamardEmitter) per_stream[ins.stream] += t.t_h;
  }
  double best = 0;
  for (const auto& [s, d] : per_stream) best = std::max(best, d);
  return best;
}

}  // namespace gsgen
