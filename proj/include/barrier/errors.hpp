#ifndef BARRIER_ERRORS_HPP
#define BARRIER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace barrier {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// |k| below the normalization guard: amplitudes undefined at E = 0.
struct ZeroWavenumber : Error {
  explicit ZeroWavenumber(const std::string& msg) : Error(msg) {}
};

// Resolvent requested on the continuous spectrum [0, inf).
struct OnCut : Error {
  explicit OnCut(const std::string& msg) : Error(msg) {}
};

struct TransmissionZero : Error {
  explicit TransmissionZero(const std::string& msg) : Error(msg) {}
};

struct QuadratureFailure : Error {
  explicit QuadratureFailure(const std::string& msg) : Error(msg) {}
};

struct ExtrapolationUnstable : Error {
  explicit ExtrapolationUnstable(const std::string& msg) : Error(msg) {}
};

// Spectral data does not decay inside the truncated grid.
struct TailMass : Error {
  explicit TailMass(const std::string& msg) : Error(msg) {}
};

}  // namespace barrier

#endif
