#ifndef JDM_ERRORS_HPP
#define JDM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jdm {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// k does not divide the degree-k endpoint total of a JDM.
class NonIntegerDegreeCount : public Error {
 public:
  NonIntegerDegreeCount(int degree, long long numerator)
      : Error("degree " + std::to_string(degree) + " endpoint total " +
              std::to_string(numerator) + " is not divisible by " +
              std::to_string(degree)),
        degree(degree),
        numerator(numerator) {}
  int degree;
  long long numerator;
};

class EmptyGraph : public Error {
 public:
  EmptyGraph() : Error("graph has no edges") {}
};

class NotGraphical : public Error {
 public:
  explicit NotGraphical(const std::string& detail = "")
      : Error(detail.empty() ? "joint degree matrix is not graphical"
                             : "not graphical: " + detail) {}
};

class Infeasible : public Error {
 public:
  explicit Infeasible(const std::string& detail)
      : Error("infeasible: " + detail) {}
};

class InfeasibleSpec : public Error {
 public:
  explicit InfeasibleSpec(const std::string& detail)
      : Error("infeasible synthetic spec: " + detail) {}
};

class TooLarge : public Error {
 public:
  explicit TooLarge(const std::string& detail)
      : Error("instance too large: " + detail) {}
};

class LimitExceeded : public Error {
 public:
  explicit LimitExceeded(const std::string& detail)
      : Error("limit exceeded: " + detail) {}
};

class UnknownDegreeClass : public Error {
 public:
  explicit UnknownDegreeClass(int degree)
      : Error("no degree class " + std::to_string(degree)), degree(degree) {}
  int degree;
};

class ZeroVariance : public Error {
 public:
  ZeroVariance() : Error("series has zero variance") {}
};

class LagTooLarge : public Error {
 public:
  LagTooLarge(long long lag, long long n)
      : Error("lag " + std::to_string(lag) + " out of range for series of length " +
              std::to_string(n)) {}
};

class EmptySeries : public Error {
 public:
  EmptySeries() : Error("empty series") {}
};

class NotSimple : public Error {
 public:
  explicit NotSimple(const std::string& detail) : Error("not simple: " + detail) {}
};

class ParseError : public Error {
 public:
  ParseError(long long line, const std::string& detail)
      : Error("parse error at line " + std::to_string(line) + ": " + detail),
        line(line) {}
  long long line;
};

}  // namespace jdm

#endif
