#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stpack {

/// Root of every exception thrown by the library.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A generator or row received parameters outside its documented bounds.
class parameter_error : public error {
  public:
    using error::error;
};

class parse_error : public error {
  public:
    parse_error(std::size_t line, const std::string &what)
        : error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Input graph is unusable for the requested operation (e.g. disconnected).
class input_error : public error {
  public:
    using error::error;
};

/// A caller broke a documented precondition.
class contract_error : public error {
  public:
    using error::error;
};

/// A construction could not be completed, or produced a result that failed verification.
class construction_error : public error {
  public:
    using error::error;
};

class extraction_error : public error {
  public:
    extraction_error(std::size_t vertex, const std::string &what) : error(what), vertex_(vertex) {}

    /// A vertex that is not reachable from vertex 0 through the subgraph.
    std::size_t separated_vertex() const noexcept { return vertex_; }

  private:
    std::size_t vertex_;
};

class unsupported_operation : public error {
  public:
    using error::error;
};

class size_error : public error {
  public:
    using error::error;
};

} // namespace stpack
