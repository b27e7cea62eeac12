#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expandres/complex.hpp"
#include "expandres/homology.hpp"
#include "expandres/monomial.hpp"

namespace expandres {

/// τ_u = {i : x_i | u}.
Face support_set(const Monomial& u);
/// m_A = Π_{i∈A} x_i. Throws InvalidInput for a vertex outside ctx.
Monomial face_monomial(const Face& a, const ContextPtr& ctx);

/// dim H̃_j(lk σ) ≠ 0 with j < dim lk σ, found in the complex of dimension i.
struct ReisnerCertificate {
  int i = 0;
  Face sigma;
  int j = 0;

  auto operator<=>(const ReisnerCertificate&) const = default;
};

struct CmVerdict {
  bool cm = true;
  /// Lexicographically least failing (i, σ, j).
  std::optional<ReisnerCertificate> certificate;
};

/// Reisner's criterion over every face, ∅ included. Throws InvalidInput on the void complex.
CmVerdict cohen_macaulay_verdict(const SimplicialComplex& complex, const FieldSpec& field);
bool is_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& field);

/// Recomputes the homology named by the certificate.
bool recheck_certificate(const SimplicialComplex& complex, const ReisnerCertificate& cert, const FieldSpec& field);

struct SkeletonResult {
  int i = 0;
  bool cm = true;
  std::optional<ReisnerCertificate> certificate;
};

struct ScmReport {
  bool verdict = true;
  FieldSpec field = FieldSpec::rationals();
  std::vector<SkeletonResult> skeletons;  // i = 0 .. dim
  bool polarized = false;
  /// Vertex names of the Stanley–Reisner complex (grid names when polarized).
  ContextPtr vertex_names;
  SimplicialComplex complex;

  std::string certificate_text() const;
};

/// Duval's test on the Stanley–Reisner complex: every pure skeleton is CM.
/// Non-square-free ideals are polarized first. Throws InvalidInput on the zero ideal.
ScmReport is_sequentially_cm(const MonomialIdeal& ideal, const FieldSpec& field);

/// Report for I + (m). Throws PreconditionError unless m ∈ C_I(n) and I is SCM.
ScmReport scm_preservation_report(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m,
                                  const FieldSpec& field);
bool verify_scm_preservation(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m,
                             const FieldSpec& field);

}  // namespace expandres
