#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "expandres/complex.hpp"
#include "expandres/homology.hpp"
#include "expandres/monomial.hpp"

namespace expandres {

/// Betti numbers of S/I. The multigraded entries are the source of truth;
/// graded and total values are sums over them. β_{0,1} = 1 is stored.
class BettiTable {
 public:
  using Key = std::pair<int, Monomial>;  // (homological degree, multidegree)

  BettiTable(ContextPtr ctx, FieldSpec field);

  const ContextPtr& context() const noexcept { return ctx_; }
  const FieldSpec& field() const noexcept { return field_; }

  /// Nonzero entries only.
  const std::map<Key, std::uint64_t>& multigraded() const noexcept { return entries_; }
  std::uint64_t multigraded(int i, const Monomial& u) const;
  /// Sets β_{i,u}; zero erases the entry.
  void set(int i, const Monomial& u, std::uint64_t value);
  void add(int i, const Monomial& u, std::int64_t delta);

  /// (i, total degree j) -> β_{i,j}, nonzero entries only.
  std::map<std::pair<int, std::uint64_t>, std::uint64_t> graded() const;
  std::uint64_t graded(int i, std::uint64_t j) const;
  /// β_0, β_1, ..., β_pd.
  std::vector<std::uint64_t> totals() const;

  bool operator==(const BettiTable& other) const;

 private:
  ContextPtr ctx_;
  FieldSpec field_;
  std::map<Key, std::uint64_t> entries_;
};

struct InvariantSummary {
  int pd = 0;
  std::int64_t reg = 0;
  std::int64_t depth = 0;

  bool operator==(const InvariantSummary&) const = default;
};

/// Full (q-1)-simplex with vertex k labeled by mingens()[k].
LabeledComplex taylor_complex(const MonomialIdeal& ideal, std::size_t cap = kDefaultSubsetCap);

/// Every sub_leq(Δ, u), 1 ≠ u ∈ 𝕃_I, is acyclic. Throws InvalidInput when the
/// vertex labels do not generate I.
bool supports_resolution(const LabeledComplex& complex, const MonomialIdeal& ideal, const FieldSpec& field,
                         std::size_t cap = kDefaultSubsetCap);

/// No face has the same label as a face covering it.
bool is_minimal_support(const LabeledComplex& complex);

/// β_{i,u} = dim H̃_{i-2}(sub_lt(Δ, u)); throws PreconditionError when Δ does
/// not support a resolution of I.
BettiTable betti_from_complex(const LabeledComplex& complex, const MonomialIdeal& ideal, const FieldSpec& field,
                              std::size_t cap = kDefaultSubsetCap);

/// Betti numbers read off the Taylor complex; the ground truth for every check.
BettiTable betti_oracle(const MonomialIdeal& ideal, const FieldSpec& field, std::size_t cap = kDefaultSubsetCap);

/// pd, reg and depth = num_vars - pd.
InvariantSummary invariants(const BettiTable& table, std::size_t num_vars);

}  // namespace expandres
