#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "expandres/complex.hpp"
#include "expandres/error.hpp"
#include "expandres/homology.hpp"
#include "expandres/monomial.hpp"
#include "expandres/resolution.hpp"

namespace expandres {

/// The data defining C_g(c): indices in Supp(c - g) must keep d_i >= c_i,
/// and some index outside it must drop below c_i.
struct CSpec {
  std::vector<Monomial::Exponent> g;
  std::vector<Monomial::Exponent> c;
  std::vector<std::size_t> required;
  std::vector<std::size_t> droppable;
};

/// Throws InvalidInput unless base | n.
CSpec make_cspec(const Monomial& base, const Monomial& n);

/// Outcome of the definitional membership test, with the first failing reason.
struct CMembership {
  bool member = false;
  bool zero = false;                          // d = 0
  std::optional<std::size_t> short_required;  // first i ∈ Supp(c-g) with d_i < c_i
  bool no_drop = false;                       // no droppable index has d_i < c_i

  std::string explain(const ContextPtr& ctx) const;
};

CMembership c_membership(const CSpec& spec, const Monomial& m);
/// m ∈ C_base(n).
bool c_contains_base(const Monomial& base, const Monomial& n, const Monomial& m);
/// m ∈ C_I(n) = C_{gcd(I)}(n). Throws InvalidInput when n ∉ mingens(I).
bool c_contains(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m);
/// Emptiness criterion for C_g(c) stated in terms of the exponent data.
bool c_nonempty(const CSpec& spec);

/// m ∈ C_I(n) tested through the lcm lattice generated by mingens(I) ∪ {m}:
/// every u ≠ m in it with m | u is divisible by n. Throws InvalidInput when
/// m ∈ I or m = 1.
bool c_contains_via_divisibility(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m,
                                 std::size_t cap = kDefaultSubsetCap);

/// m = n·w / v certificate for m ∈ C_base(n).
struct ExpansionWitness {
  Monomial base;  // gcd(I) or an arbitrary base u | n
  Monomial n;
  Monomial m;
  Monomial v;
  Monomial w;

  /// Throws TheoremViolation when any certificate condition fails.
  void validate() const;
};

/// v = x^{max(c-d,0)}, w = x^{max(d-c,0)}; throws PreconditionError when m ∉ C_base(n).
ExpansionWitness decompose_witness(const Monomial& base, const Monomial& n, const Monomial& m);
ExpansionWitness decompose_witness(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m);

/// Every m with 1 <= deg m <= max_degree and m ∈ C_I(n), in graded order.
std::vector<Monomial> enumerate_c(const MonomialIdeal& ideal, const Monomial& n, std::uint64_t max_degree);
std::vector<Monomial> enumerate_c_base(const Monomial& base, const Monomial& n, std::uint64_t max_degree);

/// For u | m | n and h ∈ C_u(n): (h ∈ C_m(n), h ∈ C_u(m)).
std::pair<bool, bool> containment_check(const Monomial& u, const Monomial& m, const Monomial& n,
                                        const Monomial& h);

/// Δ ∪ {{new}, {new, n_vertex}} with the new vertex labeled m.
LabeledComplex expand_pendant(const LabeledComplex& complex, Vertex n_vertex, const Monomial& m);
/// Same complex, with n_vertex relabeled m. Requires m | n and m ∈ C_I(n),
/// where I is generated by the labels.
LabeledComplex relabel_vertex(const LabeledComplex& complex, Vertex n_vertex, const Monomial& m);

/// mingens(I + (m)) for m ∈ C_I(n); checked against minimal_generators.
std::vector<Monomial> new_mingens(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m);

struct LatticeComparison {
  std::vector<Monomial> common;   // 𝕃_I ∖ {n}, graded order
  bool sets_equal = false;        // 𝕃_I ∖ {n} = 𝕃_{I+(m)} ∖ {m}
  bool order_isomorphic = false;  // n ↦ m preserves and reflects divisibility
};

/// Requires m ∈ C_I(n) and m | n.
LatticeComparison lattice_comparison(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m,
                                     std::size_t cap = kDefaultSubsetCap);

/// Betti table of S/(I+(m)) predicted from the table of S/I.
BettiTable predicted_betti(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m, const BettiTable& base);

/// Which reading of the graded case list reproduces the graded table derived
/// from the multigraded prediction.
struct GradedClauseReadings {
  bool first_match = false;  // clauses exclusive, first applicable wins
  bool additive = false;     // every applicable clause contributes
};

GradedClauseReadings graded_clause_readings(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m,
                                            const BettiTable& base, const BettiTable& predicted);

/// β_{i,u}(S/vI) = β_{i,u/v}(S/I). Throws InvalidInput for v = 1.
BettiTable scaled_betti(const MonomialIdeal& ideal, const Monomial& v, const BettiTable& base);

struct ScaledExpansion {
  MonomialIdeal ideal;  // vI + (m)
  BettiTable table;     // predicted
};

/// vI + (m) for n ∈ mingens(I), m ∈ C_{vI}(vn), with its predicted table.
ScaledExpansion expand_scaled(const MonomialIdeal& ideal, const Monomial& v, const Monomial& n, const Monomial& m,
                              const BettiTable& base);

/// One expansion step: scale by v, pick a generator of the current ideal,
/// and either adjoin m or draw a member of degree <= draw_max_degree.
struct ExpansionStep {
  Monomial v;
  std::variant<std::size_t, Monomial> generator;  // index into mingens or the generator itself
  std::variant<Monomial, std::uint64_t> addition;  // explicit m or a degree bound for a random draw
};

struct TraceRecord {
  std::size_t step = 0;
  Monomial v;
  Monomial n;  // the generator of vJ that m is attached to
  Monomial m;
  Monomial witness_v;
  Monomial witness_w;
  bool divides = false;  // m | n
  std::vector<std::uint64_t> predicted_totals;
};

struct FamilyResult {
  MonomialIdeal ideal;
  BettiTable table;  // predicted
  std::vector<MonomialIdeal> ideals;  // I_1 .. I_s
  std::vector<TraceRecord> trace;
};

/// Thrown when a step cannot be carried out; carries the 1-based step index.
class StepFailure : public PreconditionError {
 public:
  StepFailure(std::size_t step, const std::string& what)
      : PreconditionError("step " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// Applies the steps in order. Random draws use `seed`.
FamilyResult iterate_expansion(const MonomialIdeal& ideal, const std::vector<ExpansionStep>& steps,
                               const BettiTable& base, std::uint64_t seed = 0);

/// pd, depth and reg of S/(I+(m)) predicted from those of S/I. The reg value
/// comes from the predicted graded table; when m ∤ n it is cross-checked
/// against max(reg, deg m - 1, deg lcm(m,n) - 2) and the pd/depth clauses are
/// checked always. Throws TheoremViolation on disagreement.
InvariantSummary predicted_invariants(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m,
                                      const InvariantSummary& base, const BettiTable& base_table);

}  // namespace expandres
