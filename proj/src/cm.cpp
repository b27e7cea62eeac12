#include "expandres/cm.hpp"

#include "expandres/error.hpp"
#include "expandres/expansion.hpp"
#include "expandres/polarization.hpp"

namespace expandres {

Face support_set(const Monomial& u) { return u.support(); }

Monomial face_monomial(const Face& a, const ContextPtr& ctx) {
  for (auto v : a) {
    if (v >= ctx->size()) throw InvalidInput("vertex " + std::to_string(v) + " has no variable");
  }
  return Monomial::from_support(ctx, a);
}

CmVerdict cohen_macaulay_verdict(const SimplicialComplex& complex, const FieldSpec& field) {
  if (complex.is_void()) throw InvalidInput("Cohen-Macaulay test on the void complex");
  CmVerdict out;
  const int dim = complex.dimension();
  for (const auto& sigma : complex.faces()) {
    const SimplicialComplex lk = link(complex, sigma);
    const int top = lk.dimension();
    if (top <= -1) continue;
    const HomologyProfile h = reduced_homology(lk, field);
    for (int j = -1; j < top; ++j) {
      if (h[j] == 0) continue;
      ReisnerCertificate cert{dim, sigma, j};
      if (!out.certificate || cert < *out.certificate) out.certificate = std::move(cert);
      break;
    }
  }
  out.cm = !out.certificate.has_value();
  return out;
}

bool is_cohen_macaulay(const SimplicialComplex& complex, const FieldSpec& field) {
  return cohen_macaulay_verdict(complex, field).cm;
}

bool recheck_certificate(const SimplicialComplex& complex, const ReisnerCertificate& cert, const FieldSpec& field) {
  if (!complex.contains(cert.sigma)) return false;
  const SimplicialComplex lk = link(complex, cert.sigma);
  return cert.j < lk.dimension() && reduced_homology(lk, field)[cert.j] != 0;
}

std::string ScmReport::certificate_text() const {
  for (const auto& s : skeletons) {
    if (!s.certificate) continue;
    std::string face = "{";
    for (std::size_t k = 0; k < s.certificate->sigma.size(); ++k) {
      if (k) face += ",";
      face += vertex_names->name(s.certificate->sigma[k]);
    }
    return "skeleton i=" + std::to_string(s.i) + ", face " + face + "}, H~_" + std::to_string(s.certificate->j) +
           " of the link is nonzero";
  }
  return "";
}

ScmReport is_sequentially_cm(const MonomialIdeal& ideal, const FieldSpec& field) {
  if (ideal.is_zero()) throw InvalidInput("sequential Cohen-Macaulay test of the zero ideal");
  ScmReport report;
  report.field = field;
  if (ideal.is_square_free()) {
    report.complex = stanley_reisner_complex(ideal);
    report.vertex_names = ideal.context();
  } else {
    const PolarizedIdeal p = polarize_ideal(ideal);
    report.polarized = true;
    report.complex = stanley_reisner_complex(p.ideal);
    report.vertex_names = p.context.grid();
  }
  for (int i = 0; i <= report.complex.dimension(); ++i) {
    const CmVerdict v = cohen_macaulay_verdict(pure_skeleton(report.complex, i), field);
    SkeletonResult s{i, v.cm, v.certificate};
    if (s.certificate) s.certificate->i = i;
    report.verdict = report.verdict && s.cm;
    report.skeletons.push_back(std::move(s));
  }
  return report;
}

ScmReport scm_preservation_report(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m,
                                  const FieldSpec& field) {
  if (!c_contains(ideal, n, m)) {
    throw PreconditionError(m.to_string() + " is not in C_I(" + n.to_string() + ")");
  }
  const ScmReport before = is_sequentially_cm(ideal, field);
  if (!before.verdict) {
    throw PreconditionError(ideal.to_string() + " is not sequentially Cohen-Macaulay over " + field.name() + ": " +
                            before.certificate_text());
  }
  return is_sequentially_cm(ideal.with_generator(m), field);
}

bool verify_scm_preservation(const MonomialIdeal& ideal, const Monomial& n, const Monomial& m,
                             const FieldSpec& field) {
  return scm_preservation_report(ideal, n, m, field).verdict;
}

}  // namespace expandres
