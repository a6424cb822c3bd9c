#pragma once

#include <stdexcept>
#include <string>

namespace aloha {

/// An iterative solver ran out of iterations before reaching the requested
/// residual. Carries the last residual seen.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const { return residual_; }

  private:
    double residual_;
};

}  // namespace aloha
