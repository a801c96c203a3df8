#include "doctest.h"

#include <cmath>
#include <set>
#include <vector>

#include "gsgen/local_frame.hpp"

using namespace gsgen;

namespace {
std::vector<LocalFrame> whole_group() {
  std::vector<LocalFrame> all = {LocalFrame::identity()};
  std::set<int> seen = {LocalFrame::identity().index()};
  for (size_t head = 0; head < all.size(); ++head)
    for (const auto& g : {LocalFrame::hadamard(), LocalFrame::s_gate()}) {
      LocalFrame h = all[head] * g;
      if (seen.insert(h.index()).second) all.push_back(h);
    }
  return all;
}
}  // namespace

TEST_CASE("group has 24 elements closed under composition") {
  auto all = whole_group();
  CHECK(all.size() == 24);
  std::set<int> idx;
  for (const auto& a : all)
    for (const auto& b : all) idx.insert((a * b).index());
  CHECK(idx.size() == 24);
}

TEST_CASE("identity frame on creation and inverses") {
  CHECK(LocalFrame().is_identity());
  for (const auto& f : whole_group()) {
    CHECK((f * f.inverse()).is_identity());
    CHECK((f.inverse() * f).is_identity());
  }
}

TEST_CASE("basic algebra") {
  auto H = LocalFrame::hadamard();
  auto S = LocalFrame::s_gate();
  CHECK((H * H).is_identity());
  CHECK(S * S == LocalFrame::pauli_z());
  CHECK(S * S * S == LocalFrame::s_dagger());
  CHECK(H * LocalFrame::pauli_z() * H == LocalFrame::pauli_x());
  // Rz(+90) equals S up to global phase; Rx = H Rz H
  CHECK(LocalFrame::rot_z_p90() == S);
  CHECK(LocalFrame::rot_z_m90() == LocalFrame::s_dagger());
  CHECK(LocalFrame::rot_x_p90() == H * S * H);
}

TEST_CASE("pauli conjugation") {
  bool neg;
  CHECK(LocalFrame::hadamard().conjugate_pauli(Pauli::Z, neg) == Pauli::X);
  CHECK_FALSE(neg);
  CHECK(LocalFrame::hadamard().conjugate_pauli(Pauli::X, neg) == Pauli::Z);
  CHECK_FALSE(neg);
  CHECK(LocalFrame::hadamard().conjugate_pauli(Pauli::Y, neg) == Pauli::Y);
  CHECK(neg);
  CHECK(LocalFrame::pauli_x().conjugate_pauli(Pauli::Z, neg) == Pauli::Z);
  CHECK(neg);
  CHECK(LocalFrame::s_gate().is_z_axis_preserving());
  CHECK(LocalFrame::pauli_x().is_z_axis_preserving());
  CHECK_FALSE(LocalFrame::hadamard().is_z_axis_preserving());

  // conjugation is a group action: (fg)^dag P (fg) = g^dag (f^dag P f) g
  for (const auto& f : whole_group())
    for (const auto& g : {LocalFrame::hadamard(), LocalFrame::s_gate()})
      for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        bool n1, n2, n3;
        Pauli q = f.conjugate_pauli(p, n1);
        Pauli r = g.conjugate_pauli(q, n2);
        Pauli direct = (f * g).conjugate_pauli(p, n3);
        CHECK(direct == r);
        CHECK(n3 == (n1 ^ n2));
      }
}

TEST_CASE("names round-trip") {
  std::set<std::string> names;
  for (const auto& f : whole_group()) names.insert(f.name());
  CHECK(names.size() == 24);
  for (const auto& n : names) CHECK(LocalFrame::from_name(n).name() == n);
  CHECK(LocalFrame::from_name("I").is_identity());
  CHECK_THROWS_AS(LocalFrame::from_name("bogus"), std::invalid_argument);
}

TEST_CASE("diagonal classification") {
  CHECK(LocalFrame::identity().is_diagonal());
  CHECK(LocalFrame::s_gate().is_diagonal());
  CHECK(LocalFrame::s_dagger().is_diagonal());
  CHECK(LocalFrame::pauli_z().is_diagonal());
  CHECK_FALSE(LocalFrame::pauli_x().is_diagonal());
  CHECK_FALSE(LocalFrame::hadamard().is_diagonal());
}
