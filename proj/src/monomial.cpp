#include "expandres/monomial.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "expandres/error.hpp"

namespace expandres {

namespace {

Monomial::Exponent checked_add(Monomial::Exponent a, Monomial::Exponent b) {
  Monomial::Exponent out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ResourceError("exponent overflow");
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || (c >= '0' && c <= '9'); });
}

}  // namespace

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw InvalidInput("a variable context needs at least one variable");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) {
      throw InvalidInput("variable name '" + n + "' is not an identifier");
    }
    if (!seen.insert(n).second) {
      throw InvalidInput("duplicate variable name '" + n + "'");
    }
  }
}

std::size_t VarContext::index_of(std::string_view name) const noexcept {
  auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

ContextPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const VarContext>(std::move(names));
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw InvalidInput("null variable context");
  exps_.assign(ctx_->size(), 0);
}

Monomial::Monomial(ContextPtr ctx, std::vector<Exponent> exponents)
    : ctx_(std::move(ctx)), exps_(std::move(exponents)) {
  if (!ctx_) throw InvalidInput("null variable context");
  if (exps_.size() != ctx_->size()) {
    throw InvalidInput("exponent vector has " + std::to_string(exps_.size()) +
                       " entries, context has " + std::to_string(ctx_->size()));
  }
}

Monomial Monomial::from_support(ContextPtr ctx, std::span<const std::size_t> vars) {
  Monomial m(std::move(ctx));
  for (auto v : vars) m.exps_.at(v) = 1;
  return m;
}

Monomial::Exponent Monomial::degree() const {
  Exponent d = 0;
  for (auto e : exps_) d = checked_add(d, e);
  return d;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) out.push_back(i);
  }
  return out;
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_square_free() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::same_context(const Monomial& other) const noexcept {
  return ctx_ == other.ctx_ || *ctx_ == *other.ctx_;
}

void require_same_context(const Monomial& a, const Monomial& b) {
  if (!a.same_context(b)) {
    throw StructuralError("monomials " + a.to_string() + " and " + b.to_string() +
                          " live in different variable contexts");
  }
}

bool Monomial::divides(const Monomial& other) const {
  require_same_context(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_context(*this, other);
  std::vector<Exponent> out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out[i] = checked_add(exps_[i], other.exps_[i]);
  return Monomial(ctx_, std::move(out));
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) {
    throw InvalidInput(divisor.to_string() + " does not divide " + to_string());
  }
  std::vector<Exponent> out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) out[i] = exps_[i] - divisor.exps_[i];
  return Monomial(ctx_, std::move(out));
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx_->name(i);
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out.empty() ? "1" : out;
}

bool Monomial::operator==(const Monomial& other) const noexcept {
  return exps_ == other.exps_ && same_context(other);
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const noexcept {
  return exps_ <=> other.exps_;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto e : m.exponents()) {
    h ^= std::hash<std::uint64_t>{}(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

bool graded_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  return a > b;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_context(a, b);
  std::vector<Monomial::Exponent> out(a.num_vars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a[i], b[i]);
  return Monomial(a.context(), std::move(out));
}

Monomial gcd_monomials(const Monomial& a, const Monomial& b) {
  require_same_context(a, b);
  std::vector<Monomial::Exponent> out(a.num_vars());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(a[i], b[i]);
  return Monomial(a.context(), std::move(out));
}

Monomial lcm_of(const ContextPtr& ctx, std::span<const Monomial> ms) {
  Monomial acc(ctx);
  for (const auto& m : ms) acc = lcm(acc, m);
  return acc;
}

std::vector<Monomial> minimal_generators(std::span<const Monomial> gens) {
  for (const auto& g : gens) {
    if (g.is_unit()) throw InvalidInput("the unit monomial cannot be a generator");
    require_same_context(g, gens.front());
  }
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (gens[j] == gens[i]) {
        redundant = j < i;  // keep the first copy
      } else if (gens[j].divides(gens[i])) {
        redundant = true;
      }
    }
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal::MonomialIdeal(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw InvalidInput("null variable context");
}

MonomialIdeal::MonomialIdeal(ContextPtr ctx, std::vector<Monomial> generators)
    : ctx_(std::move(ctx)), gens_(std::move(generators)) {
  if (!ctx_) throw InvalidInput("null variable context");
  for (const auto& g : gens_) {
    if (!(*g.context() == *ctx_)) {
      throw StructuralError("generator " + g.to_string() + " is over a different context");
    }
  }
  mingens_ = minimal_generators(gens_);
}

bool MonomialIdeal::is_square_free() const noexcept {
  return std::all_of(mingens_.begin(), mingens_.end(),
                     [](const Monomial& g) { return g.is_square_free(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(mingens_.begin(), mingens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

std::size_t MonomialIdeal::mingen_index(const Monomial& m) const {
  auto it = std::find(mingens_.begin(), mingens_.end(), m);
  return static_cast<std::size_t>(it - mingens_.begin());
}

bool MonomialIdeal::is_minimal_generator(const Monomial& m) const {
  return mingen_index(m) != mingens_.size();
}

MonomialIdeal MonomialIdeal::with_generator(const Monomial& m) const {
  auto gens = mingens_;
  gens.push_back(m);
  return MonomialIdeal(ctx_, std::move(gens));
}

MonomialIdeal MonomialIdeal::scaled(const Monomial& v) const {
  std::vector<Monomial> gens;
  gens.reserve(mingens_.size());
  for (const auto& g : mingens_) gens.push_back(v * g);
  return MonomialIdeal(ctx_, std::move(gens));
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < mingens_.size(); ++i) {
    if (i) out += ", ";
    out += mingens_[i].to_string();
  }
  return out + ")";
}

bool MonomialIdeal::operator==(const MonomialIdeal& other) const {
  if (!(*ctx_ == *other.ctx_) || mingens_.size() != other.mingens_.size()) return false;
  return std::all_of(mingens_.begin(), mingens_.end(),
                     [&](const Monomial& g) { return other.is_minimal_generator(g); });
}

Monomial ideal_gcd(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw InvalidInput("gcd of the zero ideal is undefined");
  Monomial acc = ideal.mingens().front();
  for (const auto& g : ideal.mingens()) acc = gcd_monomials(acc, g);
  return acc;
}

// ---------------------------------------------------------------------------
// LcmLattice

LcmLattice::LcmLattice(std::vector<Monomial> elements, std::vector<Monomial> atoms)
    : elements_(std::move(elements)), atoms_(std::move(atoms)) {}

bool LcmLattice::contains(const Monomial& u) const {
  return std::find(elements_.begin(), elements_.end(), u) != elements_.end();
}

Monomial LcmLattice::top() const { return lcm_of(elements_.front().context(), elements_); }

LcmLattice lcm_lattice(const MonomialIdeal& ideal, std::size_t cap) {
  if (ideal.is_zero()) throw InvalidInput("lcm lattice of the zero ideal");
  if (ideal.num_mingens() > cap) {
    throw ResourceError("ideal has " + std::to_string(ideal.num_mingens()) +
                        " minimal generators, above the enumeration cap of " +
                        std::to_string(cap));
  }
  // Each pass adjoins lcm(e, g) for every subset-lcm e found so far, so after
  // all generators the set is exactly the lcms of all subsets.
  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> elems{Monomial(ideal.context())};
  seen.insert(elems.front());
  for (const auto& g : ideal.mingens()) {
    const std::size_t before = elems.size();
    for (std::size_t k = 0; k < before; ++k) {
      Monomial u = lcm(elems[k], g);
      if (seen.insert(u).second) elems.push_back(std::move(u));
    }
  }
  std::sort(elems.begin() + 1, elems.end(), graded_less);
  return LcmLattice(std::move(elems), ideal.mingens());
}

}  // namespace expandres
