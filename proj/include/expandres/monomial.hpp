#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace expandres {

/// Ordered list of distinct variable names. Shared by every monomial built
/// over it; the order is the declaration order of the input.
class VarContext {
 public:
  explicit VarContext(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Index of `name`, or size() when absent.
  std::size_t index_of(std::string_view name) const noexcept;

  bool operator==(const VarContext& other) const noexcept { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

ContextPtr make_context(std::vector<std::string> names);

/// x^g for g in N^n. Exponent arithmetic is overflow-checked.
class Monomial {
 public:
  using Exponent = std::uint64_t;

  /// The unit monomial over `ctx`.
  explicit Monomial(ContextPtr ctx);
  Monomial(ContextPtr ctx, std::vector<Exponent> exponents);
  Monomial(ContextPtr ctx, std::initializer_list<Exponent> exponents)
      : Monomial(std::move(ctx), std::vector<Exponent>(exponents)) {}

  /// Square-free monomial prod_{i in vars} x_i.
  static Monomial from_support(ContextPtr ctx, std::span<const std::size_t> vars);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t num_vars() const noexcept { return exps_.size(); }
  std::span<const Exponent> exponents() const noexcept { return exps_; }
  Exponent operator[](std::size_t i) const { return exps_.at(i); }

  Exponent degree() const;
  std::vector<std::size_t> support() const;
  bool is_unit() const noexcept;
  bool is_square_free() const noexcept;

  /// this | other
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// this / divisor; throws InvalidInput unless divisor | this.
  Monomial quotient(const Monomial& divisor) const;

  bool same_context(const Monomial& other) const noexcept;

  /// Rendering with '*' separators ("a^2*b"), "1" for the unit.
  std::string to_string() const;

  bool operator==(const Monomial& other) const noexcept;
  /// Lexicographic on exponent vectors; only meaningful within one context.
  std::strong_ordering operator<=>(const Monomial& other) const noexcept;

 private:
  ContextPtr ctx_;
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// Degree first, then larger leading exponents first. Used for display order.
bool graded_less(const Monomial& a, const Monomial& b);

/// Throws StructuralError when the contexts differ.
void require_same_context(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd_monomials(const Monomial& a, const Monomial& b);
Monomial lcm_of(const ContextPtr& ctx, std::span<const Monomial> ms);

/// Divisibility-minimal subset, duplicates collapsed, first occurrences kept
/// in input order. Throws InvalidInput on a unit generator.
std::vector<Monomial> minimal_generators(std::span<const Monomial> gens);

/// Monomial ideal given by generators; keeps its minimal generating set.
class MonomialIdeal {
 public:
  /// The zero ideal over ctx.
  explicit MonomialIdeal(ContextPtr ctx);
  MonomialIdeal(ContextPtr ctx, std::vector<Monomial> generators);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  const std::vector<Monomial>& mingens() const noexcept { return mingens_; }
  std::size_t num_mingens() const noexcept { return mingens_.size(); }
  bool is_zero() const noexcept { return mingens_.empty(); }
  bool is_square_free() const noexcept;

  bool contains(const Monomial& m) const;
  bool is_minimal_generator(const Monomial& m) const;
  /// Position of m in mingens(), or num_mingens() when absent.
  std::size_t mingen_index(const Monomial& m) const;

  /// I + (m)
  MonomialIdeal with_generator(const Monomial& m) const;
  /// vI
  MonomialIdeal scaled(const Monomial& v) const;

  std::string to_string() const;

  /// Ideal equality: same minimal generators as sets.
  bool operator==(const MonomialIdeal& other) const;

 private:
  ContextPtr ctx_;
  std::vector<Monomial> gens_;
  std::vector<Monomial> mingens_;
};

/// gcd of mingens(I); throws InvalidInput for the zero ideal.
Monomial ideal_gcd(const MonomialIdeal& ideal);

inline bool ideal_contains(const MonomialIdeal& ideal, const Monomial& m) {
  return ideal.contains(m);
}

inline constexpr std::size_t kDefaultSubsetCap = 20;

/// The lcm lattice: bottom element 1 plus all lcms of nonempty subsets of mingens.
class LcmLattice {
 public:
  LcmLattice(std::vector<Monomial> elements, std::vector<Monomial> atoms);

  /// elements()[0] is the bottom 1; the rest are sorted by graded_less.
  const std::vector<Monomial>& elements() const noexcept { return elements_; }
  const std::vector<Monomial>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const Monomial& u) const;
  const Monomial& bottom() const { return elements_.front(); }
  Monomial top() const;

  /// u <= w in the divisibility order (both must be elements).
  bool leq(const Monomial& u, const Monomial& w) const { return u.divides(w); }

 private:
  std::vector<Monomial> elements_;
  std::vector<Monomial> atoms_;
};

/// Throws InvalidInput on the zero ideal, ResourceError when q > cap.
LcmLattice lcm_lattice(const MonomialIdeal& ideal, std::size_t cap = kDefaultSubsetCap);

}  // namespace expandres
