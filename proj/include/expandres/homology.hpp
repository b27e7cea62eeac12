#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "expandres/complex.hpp"

namespace expandres {

/// Coefficient field: exact rationals or GF(p).
class FieldSpec {
 public:
  enum class Kind { Rationals, Prime };

  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws InvalidInput unless p is a prime below 2^32.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const noexcept { return p_; }
  /// "QQ" or "GF(p)".
  std::string name() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

/// Dense matrix with entries already reduced into the field's representation
/// (integers for QQ, residues in [0, p) for GF(p)).
struct FieldMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;  // row-major

  std::int64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::int64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
};

FieldMatrix multiply(const FieldMatrix& a, const FieldMatrix& b, const FieldSpec& field);
std::size_t matrix_rank(const FieldMatrix& m, const FieldSpec& field);

/// Matrix of ∂_d from d-faces (columns) to (d-1)-faces (rows), both in the
/// faces() order. ∂[v_0..v_d] = Σ_k (-1)^k [.., v_k omitted, ..]; for d = 0
/// the single row is the empty face (augmentation).
FieldMatrix boundary_matrix(const SimplicialComplex& complex, int d, const FieldSpec& field);

/// dim H̃_d for d = -1 .. dim; zero elsewhere.
class HomologyProfile {
 public:
  HomologyProfile() = default;
  explicit HomologyProfile(std::vector<std::size_t> dims_from_minus_one);

  std::size_t operator[](int degree) const noexcept;
  /// Highest degree with a stored entry (−2 when empty).
  int top_degree() const noexcept { return static_cast<int>(dims_.size()) - 2; }
  bool is_zero() const noexcept;
  std::string to_string() const;

  /// Equal iff every degree agrees.
  bool operator==(const HomologyProfile& other) const noexcept;

 private:
  std::vector<std::size_t> dims_;  // dims_[d + 1] = dim H̃_d
};

/// Reduced homology over `field`; the void complex has the zero profile and
/// the irrelevant complex has H̃_{-1} of dimension 1.
HomologyProfile reduced_homology(const SimplicialComplex& complex, const FieldSpec& field);

bool is_acyclic(const SimplicialComplex& complex, const FieldSpec& field);

}  // namespace expandres
