#include "mixknap/cut.hpp"

#include "mixknap/error.hpp"
#include "mixknap/knapsack.hpp"

namespace mixknap {

std::string to_string(CutProvenance p) {
  switch (p) {
    case CutProvenance::Star: return "star";
    case CutProvenance::Tpl: return "tpl";
    case CutProvenance::Fdi: return "fdi";
    case CutProvenance::SeparationLp: return "separation-lp";
    case CutProvenance::Heuristic: return "heuristic";
    case CutProvenance::Manual: return "manual";
  }
  return "manual";
}

CutProvenance provenance_from_string(const std::string& s) {
  if (s == "star") return CutProvenance::Star;
  if (s == "tpl") return CutProvenance::Tpl;
  if (s == "fdi") return CutProvenance::Fdi;
  if (s == "separation-lp") return CutProvenance::SeparationLp;
  if (s == "heuristic") return CutProvenance::Heuristic;
  if (s == "manual") return CutProvenance::Manual;
  throw Error("unknown cut provenance '" + s + "'");
}

MixingCut MixingCut::normalized(const Rat& gamma, RatVector alpha, Rat beta,
                                CutProvenance provenance) {
  if (gamma <= 0)
    throw Error("cuts need a positive y-coefficient; gamma = 0 cuts live in "
                "the knapsack polytope and are out of scope");
  MixingCut cut;
  cut.provenance = provenance;
  cut.beta = beta / gamma;
  cut.alpha = std::move(alpha);
  if (gamma != 1) {
    for (Rat& c : cut.alpha) c /= gamma;
  }
  return cut;
}

Rat MixingCut::lhs(const Rat& y, const std::vector<char>& z) const {
  Rat value = y;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (z[j]) value += alpha[j];
  }
  return value;
}

GMembershipReport g_membership(const Instance& instance, const MixingCut& cut) {
  if (static_cast<int>(cut.alpha.size()) != instance.n())
    throw DimensionMismatch("alpha length must equal n");

  GMembershipReport report;
  report.slacks.reserve(instance.nu() + 1);
  Rat prefix = 0;
  std::optional<Rat> worst;
  for (int k = 0; k <= instance.nu(); ++k) {
    if (k > 0) prefix += cut.alpha[k - 1];
    FkResult fk = minimize_fk(KnapRestriction::at(instance, k), cut.alpha);
    Rat slack = prefix + fk.value + instance.h(k) - cut.beta;
    if (slack < 0 && (!worst || slack < *worst)) {
      worst = slack;
      report.witness_k = k;
      report.witness_z = std::move(fk.argmin);
    }
    report.slacks.push_back(std::move(slack));
  }
  report.member = !worst.has_value();
  return report;
}

FacetSanityReport facet_sanity(const Instance& instance, const MixingCut& cut) {
  GMembershipReport membership = g_membership(instance, cut);
  if (!membership.member)
    throw NotGMember("facet sanity requires a coefficient-polyhedron member");

  FacetSanityReport report;
  FkResult f0 = minimize_fk(KnapRestriction::at(instance, 0), cut.alpha);
  report.f0 = f0.value;
  report.rhs_matches_f0 = (cut.beta == instance.h(0) + report.f0);
  report.negatives_weighted = true;
  for (int j = 0; j < instance.n(); ++j) {
    if (cut.alpha[j] < 0 && instance.a(j) == 0) {
      report.negatives_weighted = false;
      break;
    }
  }
  return report;
}

}  // namespace mixknap
