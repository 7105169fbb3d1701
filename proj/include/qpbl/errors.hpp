#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qpbl {

/// Base error carrying a stable machine-readable code alongside the message.
/// The code is what the CLI emits in error reports; messages are for humans.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

#define QPBL_DEFINE_ERROR(Name, code_string)                          \
  class Name : public Error {                                         \
  public:                                                             \
    explicit Name(const std::string& message)                         \
        : Error(code_string, message) {}                              \
  }

QPBL_DEFINE_ERROR(PointOutsideDomain, "point_outside_domain");
QPBL_DEFINE_ERROR(InvalidCoefficient, "invalid_coefficient");
QPBL_DEFINE_ERROR(AxiomPrereqFailed, "axiom_prereq_failed");
QPBL_DEFINE_ERROR(UnknownId, "unknown_id");
QPBL_DEFINE_ERROR(BadParams, "bad_params");
QPBL_DEFINE_ERROR(NonpositiveRadius, "nonpositive_radius");
QPBL_DEFINE_ERROR(NotInBall, "not_in_ball");
QPBL_DEFINE_ERROR(InfiniteDomain, "infinite_domain");
QPBL_DEFINE_ERROR(ContainmentUnverified, "containment_unverified");
QPBL_DEFINE_ERROR(HypothesisNotMet, "hypothesis_not_met");
QPBL_DEFINE_ERROR(MaxIterExceeded, "max_iter_exceeded");
QPBL_DEFINE_ERROR(DomainEscape, "domain_escape");
QPBL_DEFINE_ERROR(NoInverse, "no_inverse");
QPBL_DEFINE_ERROR(SeriesDiverging, "series_diverging");
QPBL_DEFINE_ERROR(LambdaOutOfRange, "lambda_out_of_range");
QPBL_DEFINE_ERROR(IndexError, "index_error");
QPBL_DEFINE_ERROR(UnknownExample, "unknown_example");
QPBL_DEFINE_ERROR(UsageError, "usage_error");
QPBL_DEFINE_ERROR(FileFormatError, "file_format_error");
QPBL_DEFINE_ERROR(RationalOverflow, "rational_overflow");

#undef QPBL_DEFINE_ERROR

/// Raised by solvers when a named hypothesis check fails; carries the
/// check's name so callers can report which assumption broke.
class HypothesisFailed : public Error {
public:
  HypothesisFailed(std::string check, const std::string& message)
      : Error("hypothesis_failed", message), check_(std::move(check)) {}

  const std::string& check() const noexcept { return check_; }

private:
  std::string check_;
};

}  // namespace qpbl
