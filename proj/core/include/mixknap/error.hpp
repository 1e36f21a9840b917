#pragma once

#include <stdexcept>
#include <string>

namespace mixknap {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance data violates the model preconditions (negative entries,
/// a_j > p, sum(a) <= p, too few scenarios).
class RejectsInstance : public Error {
 public:
  using Error::Error;
};

/// Closed-form evaluation requested outside its hypotheses.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

/// Facet sanity checks require a coefficient-polyhedron member.
class NotGMember : public Error {
 public:
  using Error::Error;
};

/// LP rows/vectors of inconsistent length.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Chain T outside {1,..,nu} or not strictly increasing.
class BadT : public Error {
 public:
  using Error::Error;
};

/// p - s_m is not an integer.
class NotIntegral : public Error {
 public:
  using Error::Error;
};

/// An FdiSpec condition failed; message names the condition.
class SpecViolation : public Error {
 public:
  using Error::Error;
};

/// A structured-separation hypothesis failed; message names it.
class ConfigViolation : public Error {
 public:
  using Error::Error;
};

/// A sign-pattern precondition failed (m_S <= 0, bad signs).
class PatternViolation : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration requested beyond the configured cap.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

/// Bad or inconsistent CLI flags.
class BadFlags : public Error {
 public:
  using Error::Error;
};

}  // namespace mixknap
