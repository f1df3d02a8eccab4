#ifndef POLWAV_ERRORS_HPP
#define POLWAV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polwav {

// Iterative numerics (quadrature node search, adaptive refinement) ran out
// of iterations or depth before reaching the requested tolerance.
class convergence_error : public std::runtime_error {
public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

// Operands live on different spheres or have different bandlimits.
class mismatch_error : public std::invalid_argument {
public:
  explicit mismatch_error(const std::string& what) : std::invalid_argument(what) {}
};

// Requested builtin profile name does not exist.
class unknown_profile_error : public std::invalid_argument {
public:
  explicit unknown_profile_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace polwav

#endif
