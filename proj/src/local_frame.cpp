#include "gsgen/local_frame.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace gsgen {
namespace {

using cd = std::complex<double>;
using Mat = LocalFrame::Matrix;

Mat mul(const Mat& a, const Mat& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat dagger(const Mat& a) {
  return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

// Fix the global phase: first entry with |.| > 0.5 is made real positive.
// All nonzero Clifford matrix entries have magnitude >= 1/sqrt(2).
Mat canonical(Mat m) {
  for (const auto& e : m) {
    double a = std::abs(e);
    if (a > 0.5) {
      cd phase = e / a;
      for (auto& x : m) x /= phase;
      break;
    }
  }
  return m;
}

std::array<int64_t, 8> quantize(const Mat& m) {
  std::array<int64_t, 8> k{};
  for (int i = 0; i < 4; ++i) {
    k[2 * i] = std::llround(m[i].real() * 1e6);
    k[2 * i + 1] = std::llround(m[i].imag() * 1e6);
  }
  return k;
}

const Mat kH = {cd(1 / std::sqrt(2.0)), cd(1 / std::sqrt(2.0)),
                cd(1 / std::sqrt(2.0)), cd(-1 / std::sqrt(2.0))};
const Mat kS = {cd(1), cd(0), cd(0), cd(0, 1)};
const Mat kPauli[3] = {
    Mat{cd(0), cd(1), cd(1), cd(0)},            // X
    Mat{cd(0), cd(0, -1), cd(0, 1), cd(0)},     // Y
    Mat{cd(1), cd(0), cd(0), cd(-1)},           // Z
};

struct GroupData {
  std::vector<Mat> mats;
  std::vector<std::string> names;
  std::map<std::array<int64_t, 8>, int> lookup;
  int mult[24][24];
  int inv[24];
  // conj[f][p] = (pauli index, negated) for F^dag P F
  std::pair<int, bool> conj[24][3];
  int h, s, sdag, x, y, z, rzp, rzm, rxp, rxm;

  int find(const Mat& m) const {
    auto it = lookup.find(quantize(canonical(m)));
    if (it == lookup.end()) return -1;
    return it->second;
  }

  GroupData() {
    Mat id = {cd(1), cd(0), cd(0), cd(1)};
    mats.push_back(canonical(id));
    names.push_back("I");
    lookup[quantize(mats[0])] = 0;
    const Mat gens[2] = {kH, kS};
    const char gen_names[2] = {'H', 'S'};
    for (size_t head = 0; head < mats.size(); ++head) {
      for (int g = 0; g < 2; ++g) {
        Mat next = canonical(mul(mats[head], gens[g]));
        auto key = quantize(next);
        if (!lookup.count(key)) {
          lookup[key] = static_cast<int>(mats.size());
          mats.push_back(next);
          std::string base = (head == 0) ? "" : names[head];
          names.push_back(base + gen_names[g]);
        }
      }
    }
    if (mats.size() != 24) throw std::logic_error("clifford group closure failed");

    for (int a = 0; a < 24; ++a)
      for (int b = 0; b < 24; ++b) mult[a][b] = find(mul(mats[a], mats[b]));
    for (int a = 0; a < 24; ++a) {
      inv[a] = -1;
      for (int b = 0; b < 24; ++b)
        if (mult[a][b] == 0) inv[a] = b;
    }
    for (int f = 0; f < 24; ++f) {
      Mat fd = dagger(mats[f]);
      for (int p = 0; p < 3; ++p) {
        Mat c = mul(mul(fd, kPauli[p]), mats[f]);
        bool matched = false;
        for (int q = 0; q < 3 && !matched; ++q) {
          for (int sgn = 0; sgn < 2 && !matched; ++sgn) {
            double err = 0;
            for (int i = 0; i < 4; ++i)
              err += std::abs(c[i] - (sgn ? -kPauli[q][i] : kPauli[q][i]));
            if (err < 1e-6) {
              conj[f][p] = {q, sgn == 1};
              matched = true;
            }
          }
        }
        if (!matched) throw std::logic_error("pauli conjugation not closed");
      }
    }

    h = find(kH);
    s = find(kS);
    sdag = find(dagger(kS));
    x = find(kPauli[0]);
    y = find(kPauli[1]);
    z = find(kPauli[2]);
    double c = std::cos(M_PI / 4), sn = std::sin(M_PI / 4);
    Mat rzplus = {cd(c, -sn), cd(0), cd(0), cd(c, sn)};   // exp(-i pi/4 Z)
    Mat rzminus = {cd(c, sn), cd(0), cd(0), cd(c, -sn)};  // exp(+i pi/4 Z)
    Mat rxplus = {cd(c), cd(0, -sn), cd(0, -sn), cd(c)};  // exp(-i pi/4 X)
    Mat rxminus = {cd(c), cd(0, sn), cd(0, sn), cd(c)};   // exp(+i pi/4 X)
    rzp = find(rzplus);
    rzm = find(rzminus);
    rxp = find(rxplus);
    rxm = find(rxminus);
  }
};

const GroupData& group() {
  static const GroupData g;
  return g;
}

LocalFrame by_index(int i) { return LocalFrame::from_matrix(group().mats[i]); }

}  // namespace

LocalFrame LocalFrame::hadamard() { return by_index(group().h); }
LocalFrame LocalFrame::s_gate() { return by_index(group().s); }
LocalFrame LocalFrame::s_dagger() { return by_index(group().sdag); }
LocalFrame LocalFrame::pauli_x() { return by_index(group().x); }
LocalFrame LocalFrame::pauli_y() { return by_index(group().y); }
LocalFrame LocalFrame::pauli_z() { return by_index(group().z); }
LocalFrame LocalFrame::rot_z_p90() { return by_index(group().rzp); }
LocalFrame LocalFrame::rot_z_m90() { return by_index(group().rzm); }
LocalFrame LocalFrame::rot_x_p90() { return by_index(group().rxp); }
LocalFrame LocalFrame::rot_x_m90() { return by_index(group().rxm); }

LocalFrame LocalFrame::from_matrix(const Matrix& m) {
  int i = group().find(m);
  if (i < 0) throw std::invalid_argument("matrix is not a single-qubit Clifford");
  LocalFrame f;
  f.idx_ = i;
  return f;
}

LocalFrame LocalFrame::from_name(const std::string& name) {
  const auto& g = group();
  for (int i = 0; i < 24; ++i)
    if (g.names[i] == name) {
      LocalFrame f;
      f.idx_ = i;
      return f;
    }
  throw std::invalid_argument("unknown frame tag: " + name);
}

LocalFrame operator*(LocalFrame a, LocalFrame b) {
  LocalFrame f;
  f.idx_ = group().mult[a.idx_][b.idx_];
  return f;
}

LocalFrame LocalFrame::inverse() const {
  LocalFrame f;
  f.idx_ = group().inv[idx_];
  return f;
}

Pauli LocalFrame::conjugate_pauli(Pauli p, bool& negated) const {
  auto [q, neg] = group().conj[idx_][static_cast<int>(p)];
  negated = neg;
  return static_cast<Pauli>(q);
}

bool LocalFrame::is_z_axis_preserving() const {
  bool neg;
  return conjugate_pauli(Pauli::Z, neg) == Pauli::Z;
}

bool LocalFrame::is_diagonal() const {
  const Mat& m = group().mats[idx_];
  return std::abs(m[1]) < 1e-9 && std::abs(m[2]) < 1e-9;
}

const LocalFrame::Matrix& LocalFrame::matrix() const { return group().mats[idx_]; }

const std::string& LocalFrame::name() const { return group().names[idx_]; }

}  // namespace gsgen
