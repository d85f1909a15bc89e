#ifndef MQA_ERRORS_HPP
#define MQA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mqa {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input data: quiver files, element text, rep files, CLI arguments.
struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

// A coefficient sits above the field level its path's range vertex admits.
struct LevelViolation : Error {
    std::string where;
    unsigned found_level;
    unsigned required_level;
    LevelViolation(std::string where_, unsigned found, unsigned required)
        : Error("level violation at " + where_ + ": coefficient level " +
                std::to_string(found) + " exceeds admitted level " +
                std::to_string(required)),
          where(std::move(where_)),
          found_level(found),
          required_level(required) {}
};

struct EpsilonNonzero : Error {
    EpsilonNonzero() : Error("matrix entry has a nonzero trivial-path part") {}
};

struct InternalInvariantViolation : Error {
    using Error::Error;
};

struct CyclicQuiver : Error {
    CyclicQuiver() : Error("operation requires an acyclic quiver") {}
};

struct UnsupportedTower : Error {
    using Error::Error;
};

struct SinkVertex : Error {
    explicit SinkVertex(const std::string& v)
        : Error("vertex " + v + " emits no edges") {}
};

}  // namespace mqa

#endif  // MQA_ERRORS_HPP
