#include "expandres/resolution.hpp"

#include <algorithm>

#include "expandres/error.hpp"

namespace expandres {

BettiTable::BettiTable(ContextPtr ctx, FieldSpec field) : ctx_(std::move(ctx)), field_(field) {}

std::uint64_t BettiTable::multigraded(int i, const Monomial& u) const {
  auto it = entries_.find(Key{i, u});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, const Monomial& u, std::uint64_t value) {
  if (value == 0) {
    entries_.erase(Key{i, u});
  } else {
    entries_.insert_or_assign(Key{i, u}, value);
  }
}

void BettiTable::add(int i, const Monomial& u, std::int64_t delta) {
  const auto current = static_cast<std::int64_t>(multigraded(i, u));
  if (current + delta < 0) {
    throw PreconditionError("betti number beta_{" + std::to_string(i) + "," + u.to_string() +
                            "} would become negative");
  }
  set(i, u, static_cast<std::uint64_t>(current + delta));
}

std::map<std::pair<int, std::uint64_t>, std::uint64_t> BettiTable::graded() const {
  std::map<std::pair<int, std::uint64_t>, std::uint64_t> out;
  for (const auto& [key, value] : entries_) out[{key.first, key.second.degree()}] += value;
  return out;
}

std::uint64_t BettiTable::graded(int i, std::uint64_t j) const {
  std::uint64_t sum = 0;
  for (const auto& [key, value] : entries_) {
    if (key.first == i && key.second.degree() == j) sum += value;
  }
  return sum;
}

std::vector<std::uint64_t> BettiTable::totals() const {
  std::vector<std::uint64_t> out;
  for (const auto& [key, value] : entries_) {
    const auto i = static_cast<std::size_t>(key.first);
    if (out.size() <= i) out.resize(i + 1, 0);
    out[i] += value;
  }
  return out;
}

bool BettiTable::operator==(const BettiTable& other) const {
  return field_ == other.field_ && entries_ == other.entries_;
}

// ---------------------------------------------------------------------------

LabeledComplex taylor_complex(const MonomialIdeal& ideal, std::size_t cap) {
  if (ideal.is_zero()) throw InvalidInput("Taylor complex of the zero ideal");
  const std::size_t q = ideal.num_mingens();
  if (q > cap) {
    throw ResourceError("ideal has " + std::to_string(q) + " minimal generators, above the cap of " +
                        std::to_string(cap));
  }
  std::map<Vertex, Monomial> labels;
  for (std::size_t k = 0; k < q; ++k) labels.emplace(k, ideal.mingens()[k]);
  return LabeledComplex(SimplicialComplex::simplex(q), std::move(labels));
}

namespace {

void require_labels_generate(const LabeledComplex& complex, const MonomialIdeal& ideal) {
  if (!(*complex.context() == *ideal.context())) {
    throw StructuralError("complex labels and ideal use different variable contexts");
  }
  const MonomialIdeal generated(ideal.context(), complex.label_list());
  if (!(generated == ideal)) {
    throw InvalidInput("vertex labels generate " + generated.to_string() + ", not " + ideal.to_string());
  }
}

BettiTable betti_unchecked(const LabeledComplex& complex, const MonomialIdeal& ideal, const FieldSpec& field,
                           std::size_t cap) {
  BettiTable table(ideal.context(), field);
  table.set(0, Monomial(ideal.context()), 1);
  const LcmLattice lattice = lcm_lattice(ideal, cap);
  for (std::size_t k = 1; k < lattice.size(); ++k) {
    const Monomial& u = lattice.elements()[k];
    const HomologyProfile h = reduced_homology(sub_lt(complex, u), field);
    for (int d = -1; d <= h.top_degree(); ++d) {
      if (h[d] != 0) table.set(d + 2, u, h[d]);
    }
  }
  return table;
}

}  // namespace

bool supports_resolution(const LabeledComplex& complex, const MonomialIdeal& ideal, const FieldSpec& field,
                         std::size_t cap) {
  require_labels_generate(complex, ideal);
  const LcmLattice lattice = lcm_lattice(ideal, cap);
  for (std::size_t k = 1; k < lattice.size(); ++k) {
    if (!is_acyclic(sub_leq(complex, lattice.elements()[k]), field)) return false;
  }
  return true;
}

bool is_minimal_support(const LabeledComplex& complex) {
  // Labels grow along inclusions, so comparing covering pairs is enough.
  for (const auto& tau : complex.complex().faces()) {
    if (tau.empty()) continue;
    const Monomial top = complex.face_label(tau);
    for (std::size_t k = 0; k < tau.size(); ++k) {
      Face sigma = tau;
      sigma.erase(sigma.begin() + static_cast<std::ptrdiff_t>(k));
      if (complex.face_label(sigma) == top) return false;
    }
  }
  return true;
}

BettiTable betti_from_complex(const LabeledComplex& complex, const MonomialIdeal& ideal, const FieldSpec& field,
                              std::size_t cap) {
  if (!supports_resolution(complex, ideal, field, cap)) {
    throw PreconditionError("the labeled complex does not support a free resolution of " + ideal.to_string());
  }
  return betti_unchecked(complex, ideal, field, cap);
}

BettiTable betti_oracle(const MonomialIdeal& ideal, const FieldSpec& field, std::size_t cap) {
  return betti_unchecked(taylor_complex(ideal, cap), ideal, field, cap);
}

InvariantSummary invariants(const BettiTable& table, std::size_t num_vars) {
  InvariantSummary out;
  const auto totals = table.totals();
  for (std::size_t i = 0; i < totals.size(); ++i) {
    if (totals[i] != 0) out.pd = static_cast<int>(i);
  }
  bool first = true;
  for (const auto& [key, value] : table.graded()) {
    const auto width = static_cast<std::int64_t>(key.second) - key.first;
    if (first || width > out.reg) out.reg = width;
    first = false;
  }
  out.depth = static_cast<std::int64_t>(num_vars) - out.pd;
  return out;
}

}  // namespace expandres
