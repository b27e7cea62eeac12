#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "expandres/complex.hpp"
#include "expandres/expansion.hpp"
#include "expandres/monomial.hpp"

namespace expandres {

/// Seeded source for every randomized suite. Draws are reduced with `%`
/// rather than std distributions so sequences agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  /// Inclusive range.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (engine_() >> 17) & 1U; }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

struct RandomIdealSpec {
  std::size_t min_vars = 2;
  std::size_t max_vars = 4;
  std::size_t max_gens = 5;
  Monomial::Exponent max_exp = 3;
  bool require_nonunit_gcd = true;
  bool square_free = false;
};

/// Variables x1..xk.
ContextPtr numbered_context(std::size_t k);

/// Exponents drawn from [0, max_exp]; may be the unit.
Monomial random_monomial(const ContextPtr& ctx, Rng& rng, Monomial::Exponent max_exp);

/// Rejection-sampled ideal over x1..xk; never the zero ideal.
MonomialIdeal random_ideal(Rng& rng, const RandomIdealSpec& spec = {});

/// Draws m ∈ C_base(n) through the witness form m = n·w/v. The w exponents
/// are drawn from [0, max_w_exp]. Throws PreconditionError when C_base(n) = ∅.
Monomial sample_member(const Monomial& base, const Monomial& n, Rng& rng, Monomial::Exponent max_w_exp = 2);

/// Random m with m ∉ I, m ≠ 1, m ∤ n and m ∉ C_I(n); nullopt after `tries` misses.
std::optional<Monomial> sample_nonmember(const MonomialIdeal& ideal, const Monomial& n, Rng& rng,
                                         Monomial::Exponent max_exp = 3, std::size_t tries = 200);

/// Random complex on vertices 0..num_vertices-1 with up to max_facets facets.
SimplicialComplex random_complex(Rng& rng, std::size_t num_vertices, std::size_t max_facets);

/// Random family of `steps` expansions: each step picks a generator, a
/// variable v at which that generator's exponent equals the gcd exponent
/// (so C_{vJ}(vn) is nonempty), and a draw of degree <= max_degree
/// (0 means deg(vn)).
FamilyResult random_family(const MonomialIdeal& ideal, std::size_t steps, const BettiTable& base,
                           std::uint64_t seed, std::uint64_t max_degree = 0);

}  // namespace expandres
