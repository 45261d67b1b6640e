#pragma once

#include <stdexcept>
#include <string>

namespace bsq {

// Base for every error raised by the library. Each subclass names one failure
// category so callers (and the CLI) can report it without string matching.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RangeError : public Error { using Error::Error; };
class GaugeError : public Error { using Error::Error; };          // singular operator on non-mean-zero data
class DomainError : public Error { using Error::Error; };         // e.g. negative time
class RegimeError : public Error { using Error::Error; };         // slow-regime formula used outside |mu| < alpha/(2N)
class AccuracyError : public Error { using Error::Error; };       // quadrature tolerance not reached
class LatticeMismatchError : public Error { using Error::Error; };
class StepSizeError : public Error { using Error::Error; };       // CFL guard
class BlowUpError : public Error {
 public:
  BlowUpError(const std::string& what, double last_healthy_time)
      : Error(what), last_healthy_time_(last_healthy_time) {}
  double last_healthy_time() const { return last_healthy_time_; }

 private:
  double last_healthy_time_;
};
class FitError : public Error { using Error::Error; };
class UndefinedRatioError : public Error { using Error::Error; };
class EnvelopeError : public Error { using Error::Error; };
class ConfigError : public Error { using Error::Error; };

}  // namespace bsq
