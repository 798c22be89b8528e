#ifndef SIXEQ_ERRORS_HPP
#define SIXEQ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sixeq {

/// Base class for all errors raised by the solver library.
class SolverError : public std::runtime_error {
public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid grid, parameter or state construction.
class InvalidArgumentError : public SolverError {
public:
  explicit InvalidArgumentError(const std::string& what) : SolverError(what) {}
};

/// Per-cell closure failure. `cell` is the grid index the failure was
/// detected at, or npos for cell-free contexts (e.g. direct (A, B) input).
class ClosureError : public SolverError {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ClosureError(const std::string& what, std::size_t cell_index = npos)
      : SolverError(what), cell(cell_index) {}

  std::size_t cell;
};

/// Mollifier kernel construction failure (under-resolved support, bad shape).
class KernelError : public SolverError {
public:
  explicit KernelError(const std::string& what) : SolverError(what) {}
};

/// Time integration failure; carries the stage of the multi-stage step the
/// error surfaced in (0-based, npos when outside a stage).
class IntegrationError : public SolverError {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  IntegrationError(const std::string& what, std::size_t stage_index = npos)
      : SolverError(what), stage(stage_index) {}

  std::size_t stage;
};

/// Configuration file errors: syntax (with line number) or validation (with
/// the offending key).
class ConfigError : public SolverError {
public:
  explicit ConfigError(const std::string& what, int line_number = -1,
                       std::string key_name = {})
      : SolverError(what), line(line_number), key(std::move(key_name)) {}

  int line;
  std::string key;
};

/// File I/O failure.
class IoError : public SolverError {
public:
  explicit IoError(const std::string& what) : SolverError(what) {}
};

}  // namespace sixeq

#endif  // SIXEQ_ERRORS_HPP
