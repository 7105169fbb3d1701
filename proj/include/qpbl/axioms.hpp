#pragma once

#include <optional>
#include <vector>

#include "qpbl/space.hpp"

namespace qpbl {

/// Result of the coefficient supremum
///   sup { (dist(x,y) + dist(z,z)) / (dist(x,z) + dist(z,y)) },
/// clamped below at 1. Exact on finite rational tables; a lower bound on
/// sampled interval domains (lower_bound_only is then set).
///
/// Triples with a zero denominator are skipped: dist(x,z) = dist(z,y) = 0
/// forces x = z and z = y (QPbl1), and then dist(z,z) <= dist(z,y) = 0
/// (QPbl2) makes the numerator dist(x,x) + dist(x,x) = 0 as well, so such
/// triples contribute nothing to the supremum.
struct MinimalCoefficient {
  double value = 1.0;
  std::optional<Rational> exact;    // present on exact finite tables
  bool lower_bound_only = false;    // sampled interval domains
  std::vector<Point> witness;       // maximizing triple in (x, z, y) order
};

/// Full classification of a space at its claimed coefficient.
struct SpaceClassification {
  bool quasi_partial_b_metric_like = false;  // QPbl1-QPbl4
  bool quasi_partial_b_metric = false;       // QPb1 + QPbl2-QPbl4
  bool symmetric = false;
  bool b_metric_like = false;                // bl1-bl3 on the space itself
  bool sampled_evidence_only = false;
  std::vector<AxiomReport> reports;          // one per checked axiom
};

/// Checks QPbl1-QPbl4 at coefficient s. Finite domains sweep every pair
/// and triple (exactly, when the table is rational); interval domains sweep
/// the plan's sample set: pair axioms over all ordered sample pairs, the
/// triangle axiom over all grid triples plus, for each random point, every
/// placement of it against all grid pairs. Reports on interval domains are
/// flagged sampled_evidence_only: positivity and triangle claims over an
/// uncountable set are only ever evidenced, not proved, by sampling.
///
/// QPbl4 witnesses are reported in path order (x, z, y).
std::vector<AxiomReport> check_axioms(const Space& space, const Rational& s,
                                      const SamplePlan& plan = {});
std::vector<AxiomReport> check_axioms(const Space& space, double s,
                                      const SamplePlan& plan = {});
/// Same checks at the space's own claimed coefficient (exact when available).
std::vector<AxiomReport> check_axioms_claimed(const Space& space,
                                              const SamplePlan& plan = {});

/// Single-axiom check; accepts every AxiomId, including QPb1 (the stricter
/// first axiom of a quasi-partial b-metric) and bl1-bl3.
AxiomReport check_axiom(const Space& space, AxiomId id, const Rational& s,
                        const SamplePlan& plan = {});
AxiomReport check_axiom(const Space& space, AxiomId id, double s,
                        const SamplePlan& plan = {});

/// Requires QPbl1-QPbl3 on the evaluated set (AxiomPrereqFailed otherwise).
MinimalCoefficient minimal_coefficient(const Space& space, const SamplePlan& plan = {});

AxiomReport is_symmetric(const Space& space, const SamplePlan& plan = {});

/// Light plan used for operation preconditions so that chained calls stay
/// fast; full-strength verification is the caller's explicit check_axioms.
SamplePlan precondition_plan();

/// D(x,y) = dist(x,y) + dist(y,x) on the same domain, same coefficient.
/// Precondition: the space passes QPbl1-QPbl4 at its claimed coefficient
/// on the given plan's evaluation set. The derived space satisfies bl1-bl3
/// by construction; check_axiom(.., bl1..bl3, ..) can confirm.
Space derive_bml(const Space& space, const SamplePlan& plan = precondition_plan());

SpaceClassification classify(const Space& space, const SamplePlan& plan = {});

}  // namespace qpbl
