#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "expandres/monomial.hpp"

namespace expandres {

using Vertex = std::size_t;
/// Strictly increasing list of vertex ids.
using Face = std::vector<Vertex>;

/// Sorts and deduplicates.
Face make_face(std::vector<Vertex> vertices);
/// a ⊆ b for sorted faces.
bool is_subface(const Face& a, const Face& b);

/// Simplicial complex stored by its facets.
///
/// The void complex (no faces at all) has no facets; the irrelevant complex
/// {∅} has the single facet ∅. Faces are generated from the facets on demand.
class SimplicialComplex {
 public:
  /// The void complex.
  SimplicialComplex() = default;

  /// Keeps the inclusion-maximal input sets.
  static SimplicialComplex from_facets(std::vector<Face> facets);
  static SimplicialComplex simplex(std::size_t num_vertices);
  static SimplicialComplex irrelevant() { return from_facets({Face{}}); }

  const std::vector<Face>& facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }
  bool is_irrelevant() const noexcept { return facets_.size() == 1 && facets_.front().empty(); }
  /// -1 for {∅}; -2 for the void complex.
  int dimension() const noexcept;
  bool is_pure() const noexcept;
  Face vertices() const;

  bool contains(const Face& sigma) const;
  /// Every face, ordered by size and then lexicographically (∅ first).
  std::vector<Face> faces() const;
  std::size_t num_faces() const { return faces().size(); }

  bool operator==(const SimplicialComplex& other) const noexcept { return facets_ == other.facets_; }

 private:
  std::vector<Face> facets_;  // sorted
};

inline SimplicialComplex from_facets(std::vector<Face> facets) {
  return SimplicialComplex::from_facets(std::move(facets));
}

/// All faces with d+1 vertices (d >= -1).
std::vector<Face> faces_of_dim(const SimplicialComplex& complex, int d);

/// True iff exactly one facet contains sigma and sigma is not that facet.
/// Throws InvalidInput when sigma is not a face.
bool is_free_face(const SimplicialComplex& complex, const Face& sigma);

struct CollapseResult {
  SimplicialComplex complex;
  bool elementary = false;  // the unique facet has exactly one more vertex than sigma
};

/// Removes every face containing sigma; throws PreconditionError unless sigma is free.
CollapseResult collapse(const SimplicialComplex& complex, const Face& sigma);

/// Complex generated by the i-dimensional faces; 0 <= i <= dim.
SimplicialComplex pure_skeleton(const SimplicialComplex& complex, int i);

/// {γ : γ ∩ σ = ∅, γ ∪ σ ∈ Δ}; throws InvalidInput when σ ∉ Δ.
SimplicialComplex link(const SimplicialComplex& complex, const Face& sigma);

/// Cone over the complex with apex `apex` (which must not be a vertex).
SimplicialComplex cone(const SimplicialComplex& complex, Vertex apex);

/// Faces are the variable-index sets A with m_A ∉ I. Requires a square-free ideal.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

/// Minimal non-faces of the complex on the vertex set [ctx.size()], as monomials.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex, const ContextPtr& ctx);

/// A simplicial complex whose vertices carry monomial labels; a face is
/// labeled by the lcm of its vertex labels (∅ by 1).
class LabeledComplex {
 public:
  LabeledComplex(SimplicialComplex complex, std::map<Vertex, Monomial> labels);

  const SimplicialComplex& complex() const noexcept { return complex_; }
  const std::map<Vertex, Monomial>& labels() const noexcept { return labels_; }
  const ContextPtr& context() const noexcept { return ctx_; }
  const Monomial& label(Vertex v) const;
  Monomial face_label(const Face& face) const;
  /// Labels in vertex order.
  std::vector<Monomial> label_list() const;
  /// First vertex carrying `label`; throws InvalidInput when none does.
  Vertex vertex_with_label(const Monomial& label) const;

 private:
  SimplicialComplex complex_;
  std::map<Vertex, Monomial> labels_;
  ContextPtr ctx_;
};

/// Faces whose label divides u.
SimplicialComplex sub_leq(const LabeledComplex& complex, const Monomial& u);
/// Faces whose label divides u and differs from u.
SimplicialComplex sub_lt(const LabeledComplex& complex, const Monomial& u);

}  // namespace expandres
