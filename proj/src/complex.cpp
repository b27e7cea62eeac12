#include "expandres/complex.hpp"

#include <algorithm>
#include <set>

#include "expandres/error.hpp"

namespace expandres {

namespace {

constexpr std::size_t kMaxFacetSize = 30;

/// Drops duplicates and every set contained in another one.
std::vector<Face> maximal_sets(std::vector<Face> sets) {
  std::sort(sets.begin(), sets.end(),
            [](const Face& a, const Face& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Face> out;
  for (auto& s : sets) {
    bool covered = std::any_of(out.begin(), out.end(), [&](const Face& f) { return is_subface(s, f); });
    if (!covered) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Fn>
void for_each_subface(const Face& facet, Fn&& fn) {
  if (facet.size() > kMaxFacetSize) {
    throw ResourceError("facet with " + std::to_string(facet.size()) + " vertices is too large to enumerate");
  }
  const std::uint64_t count = std::uint64_t{1} << facet.size();
  Face sub;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    sub.clear();
    for (std::size_t k = 0; k < facet.size(); ++k) {
      if (mask & (std::uint64_t{1} << k)) sub.push_back(facet[k]);
    }
    fn(sub);
  }
}

bool face_order(const Face& a, const Face& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

Face make_face(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool is_subface(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facets) {
  for (auto& f : facets) f = make_face(std::move(f));
  SimplicialComplex out;
  out.facets_ = maximal_sets(std::move(facets));
  return out;
}

SimplicialComplex SimplicialComplex::simplex(std::size_t num_vertices) {
  Face f(num_vertices);
  for (std::size_t i = 0; i < num_vertices; ++i) f[i] = i;
  return from_facets({f});
}

int SimplicialComplex::dimension() const noexcept {
  if (facets_.empty()) return -2;
  std::size_t top = 0;
  for (const auto& f : facets_) top = std::max(top, f.size());
  return static_cast<int>(top) - 1;
}

bool SimplicialComplex::is_pure() const noexcept {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Face& f) { return f.size() == facets_.front().size(); });
}

Face SimplicialComplex::vertices() const {
  std::vector<Vertex> vs;
  for (const auto& f : facets_) vs.insert(vs.end(), f.begin(), f.end());
  return make_face(std::move(vs));
}

bool SimplicialComplex::contains(const Face& sigma) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& f) { return is_subface(sigma, f); });
}

std::vector<Face> SimplicialComplex::faces() const {
  std::set<Face> all;
  for (const auto& f : facets_) for_each_subface(f, [&](const Face& s) { all.insert(s); });
  std::vector<Face> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), face_order);
  return out;
}

std::vector<Face> faces_of_dim(const SimplicialComplex& complex, int d) {
  std::vector<Face> out;
  if (d < -1) return out;
  const auto want = static_cast<std::size_t>(d + 1);
  for (auto& f : complex.faces()) {
    if (f.size() == want) out.push_back(std::move(f));
  }
  return out;
}

bool is_free_face(const SimplicialComplex& complex, const Face& sigma) {
  if (!complex.contains(sigma)) throw InvalidInput("is_free_face: not a face of the complex");
  const Face* container = nullptr;
  for (const auto& f : complex.facets()) {
    if (!is_subface(sigma, f)) continue;
    if (container) return false;
    container = &f;
  }
  return container->size() > sigma.size();
}

CollapseResult collapse(const SimplicialComplex& complex, const Face& sigma) {
  if (!complex.contains(sigma) || !is_free_face(complex, sigma)) {
    throw PreconditionError("collapse: the face is not a free face");
  }
  std::vector<Face> facets;
  std::size_t tau_size = 0;
  for (const auto& f : complex.facets()) {
    if (!is_subface(sigma, f)) {
      facets.push_back(f);
      continue;
    }
    tau_size = f.size();
    // Faces of tau avoiding sigma are exactly the subsets of tau \ {v}, v in sigma.
    for (Vertex v : sigma) {
      Face g;
      std::copy_if(f.begin(), f.end(), std::back_inserter(g), [&](Vertex x) { return x != v; });
      facets.push_back(std::move(g));
    }
  }
  CollapseResult out;
  out.complex = SimplicialComplex::from_facets(std::move(facets));
  out.elementary = tau_size == sigma.size() + 1;
  return out;
}

SimplicialComplex pure_skeleton(const SimplicialComplex& complex, int i) {
  if (i < 0 || i > complex.dimension()) {
    throw InvalidInput("pure_skeleton: index " + std::to_string(i) + " outside [0, " +
                       std::to_string(complex.dimension()) + "]");
  }
  return SimplicialComplex::from_facets(faces_of_dim(complex, i));
}

SimplicialComplex link(const SimplicialComplex& complex, const Face& sigma) {
  if (!complex.contains(sigma)) throw InvalidInput("link: not a face of the complex");
  std::vector<Face> facets;
  for (const auto& f : complex.facets()) {
    if (!is_subface(sigma, f)) continue;
    Face g;
    std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(), std::back_inserter(g));
    facets.push_back(std::move(g));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex cone(const SimplicialComplex& complex, Vertex apex) {
  std::vector<Face> facets;
  for (auto f : complex.facets()) {
    if (std::binary_search(f.begin(), f.end(), apex)) {
      throw InvalidInput("cone: apex is already a vertex");
    }
    f.push_back(apex);
    facets.push_back(make_face(std::move(f)));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  if (!ideal.is_square_free()) {
    throw InvalidInput("Stanley-Reisner complex needs a square-free ideal, got " + ideal.to_string());
  }
  const std::size_t n = ideal.context()->size();
  if (n > kMaxFacetSize) throw ResourceError("too many variables for subset enumeration");
  // Bitmask of each minimal generator; A is a face iff it contains none of them.
  std::vector<std::uint64_t> gen_masks;
  for (const auto& g : ideal.mingens()) {
    std::uint64_t mask = 0;
    for (auto i : g.support()) mask |= std::uint64_t{1} << i;
    gen_masks.push_back(mask);
  }
  auto is_face = [&](std::uint64_t a) {
    return std::none_of(gen_masks.begin(), gen_masks.end(), [&](std::uint64_t g) { return (g & a) == g; });
  };
  std::vector<Face> facets;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < count; ++a) {
    if (!is_face(a)) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if (!(a & bit) && is_face(a | bit)) maximal = false;
    }
    if (!maximal) continue;
    Face f;
    for (std::size_t i = 0; i < n; ++i) {
      if (a & (std::uint64_t{1} << i)) f.push_back(i);
    }
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex, const ContextPtr& ctx) {
  const std::size_t n = ctx->size();
  if (n > kMaxFacetSize) throw ResourceError("too many variables for subset enumeration");
  for (Vertex v : complex.vertices()) {
    if (v >= n) throw InvalidInput("vertex " + std::to_string(v) + " outside the variable context");
  }
  std::vector<Monomial> nonfaces;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t a = 1; a < count; ++a) {
    Face f;
    for (std::size_t i = 0; i < n; ++i) {
      if (a & (std::uint64_t{1} << i)) f.push_back(i);
    }
    if (!complex.contains(f)) nonfaces.push_back(Monomial::from_support(ctx, f));
  }
  return MonomialIdeal(ctx, std::move(nonfaces));
}

// ---------------------------------------------------------------------------
// LabeledComplex

LabeledComplex::LabeledComplex(SimplicialComplex complex, std::map<Vertex, Monomial> labels)
    : complex_(std::move(complex)), labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidInput("a labeled complex needs at least one labeled vertex");
  ctx_ = labels_.begin()->second.context();
  for (const auto& [v, m] : labels_) require_same_context(m, labels_.begin()->second);
  const Face verts = complex_.vertices();
  for (Vertex v : verts) {
    if (!labels_.count(v)) throw InvalidInput("vertex " + std::to_string(v) + " has no label");
  }
  if (verts.size() != labels_.size()) {
    throw InvalidInput("labels given for vertices that are not in the complex");
  }
}

const Monomial& LabeledComplex::label(Vertex v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) throw InvalidInput("vertex " + std::to_string(v) + " has no label");
  return it->second;
}

Monomial LabeledComplex::face_label(const Face& face) const {
  Monomial acc(ctx_);
  for (Vertex v : face) acc = lcm(acc, label(v));
  return acc;
}

std::vector<Monomial> LabeledComplex::label_list() const {
  std::vector<Monomial> out;
  for (const auto& [v, m] : labels_) out.push_back(m);
  return out;
}

Vertex LabeledComplex::vertex_with_label(const Monomial& label) const {
  for (const auto& [v, m] : labels_) {
    if (m == label) return v;
  }
  throw InvalidInput("no vertex is labeled " + label.to_string());
}

SimplicialComplex sub_leq(const LabeledComplex& complex, const Monomial& u) {
  std::vector<Face> facets;
  for (const auto& f : complex.complex().facets()) {
    Face g;
    std::copy_if(f.begin(), f.end(), std::back_inserter(g),
                 [&](Vertex v) { return complex.label(v).divides(u); });
    facets.push_back(std::move(g));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex sub_lt(const LabeledComplex& complex, const Monomial& u) {
  const SimplicialComplex below = sub_leq(complex, u);
  std::vector<Face> kept;
  for (auto& f : below.faces()) {
    if (!(complex.face_label(f) == u)) kept.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(kept));
}

}  // namespace expandres
