#pragma once

#include <array>
#include <complex>
#include <string>

namespace gsgen {

enum class Pauli { X, Y, Z };

/// Single-qubit Clifford tag, one of the 24 elements of the Clifford group
/// modulo global phase. Used as the per-qubit byproduct ("frame") record on
/// graph vertices. Tag 0 is the identity. Composition, inverses, names and
/// the conjugation action on Paulis are built once from canonical 2x2
/// matrices generated by H and S.
class LocalFrame {
 public:
  using Matrix = std::array<std::complex<double>, 4>;  // row-major 2x2

  LocalFrame() : idx_(0) {}

  static LocalFrame identity() { return LocalFrame(0); }
  static LocalFrame hadamard();
  static LocalFrame s_gate();    // diag(1, i)
  static LocalFrame s_dagger();  // diag(1, -i)
  static LocalFrame pauli_x();
  static LocalFrame pauli_y();
  static LocalFrame pauli_z();
  static LocalFrame rot_z_p90();  // exp(-i pi/4 Z), i.e. Rz(+pi/2)
  static LocalFrame rot_z_m90();  // exp(+i pi/4 Z)
  static LocalFrame rot_x_p90();  // exp(-i pi/4 X)
  static LocalFrame rot_x_m90();  // exp(+i pi/4 X)

  /// Nearest group element for an arbitrary single-qubit Clifford matrix.
  /// Throws std::invalid_argument if the matrix is not in the group
  /// (tolerance 1e-6, global phase ignored).
  static LocalFrame from_matrix(const Matrix& m);

  static LocalFrame from_name(const std::string& name);

  /// Group product: (a * b) acts as the matrix product M(a) * M(b),
  /// i.e. b is applied first.
  friend LocalFrame operator*(LocalFrame a, LocalFrame b);

  LocalFrame inverse() const;

  /// Conjugation pull-through: computes F^dag P F = sign * P'. Returns the
  /// resulting Pauli, with `sign` set to false for +1 and true for -1.
  Pauli conjugate_pauli(Pauli p, bool& negated) const;

  /// True if F^dag Z F = +/-Z (frame commutes with CZ up to Z byproducts).
  bool is_z_axis_preserving() const;

  /// True if the matrix is diagonal (identity, Z, S, S^dag classes).
  bool is_diagonal() const;

  bool is_identity() const { return idx_ == 0; }

  /// Canonical matrix (global phase fixed by making the first nonzero
  /// entry real positive).
  const Matrix& matrix() const;

  /// Shortest word over the generators {H, S}, e.g. "I", "H", "SS", "HSH".
  const std::string& name() const;

  int index() const { return idx_; }

  bool operator==(const LocalFrame& o) const { return idx_ == o.idx_; }
  bool operator!=(const LocalFrame& o) const { return idx_ != o.idx_; }
  bool operator<(const LocalFrame& o) const { return idx_ < o.idx_; }

 private:
  explicit LocalFrame(int idx) : idx_(idx) {}
  int idx_;
};

}  // namespace gsgen
