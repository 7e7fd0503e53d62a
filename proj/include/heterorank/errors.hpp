#ifndef HETERORANK_ERRORS_HPP
#define HETERORANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hr {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Vertex id out of range, self-loop, or query on equal endpoints.
class InvalidVertexError : public Error {
public:
    using Error::Error;
};

// Exhaustive computation refused because the instance exceeds its guard.
class SizeLimitError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// A caller violated a documented precondition (e.g. cross sets not covered
// by the ordering passed to a backward-edge count).
class ContractError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace hr

#endif
