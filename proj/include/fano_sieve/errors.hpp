#pragma once

#include <stdexcept>
#include <string>

namespace fano {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& msg)
      : Error("validation error: " + msg) {}
};

// General member fails to be quasismooth at a vertex: no x_i^k x_j monomial.
struct NoTangentMonomial : Error {
  explicit NoTangentMonomial(const std::string& msg)
      : Error("no tangent monomial: " + msg) {}
};

// The generic form restricts to zero on a coordinate stratum.
struct EmptyRestriction : Error {
  explicit EmptyRestriction(const std::string& msg)
      : Error("empty restriction: " + msg) {}
};

// A pencil generator meets the dependent variable of some chart, so its
// vanishing order there is undetermined.
struct DependentGenerator : Error {
  explicit DependentGenerator(const std::string& msg)
      : Error("dependent generator: " + msg) {}
};

struct NotMinusOne : Error {
  explicit NotMinusOne(const std::string& msg)
      : Error("not a -1-curve: " + msg) {}
};

struct SingularGram : Error {
  explicit SingularGram(const std::string& msg)
      : Error("singular Gram matrix: " + msg) {}
};

struct EmptyPolygon : Error {
  explicit EmptyPolygon(const std::string& msg)
      : Error("empty polygon: " + msg) {}
};

// A conditional exclusion point is missing from its own pencil's centre set.
struct InconsistentRule : Error {
  explicit InconsistentRule(const std::string& msg)
      : Error("inconsistent rule: " + msg) {}
};

struct IncompleteEvidence : Error {
  explicit IncompleteEvidence(const std::string& msg)
      : Error("incomplete evidence: " + msg) {}
};

}  // namespace fano
