#ifndef MIXPORT_ERRORS_HPP
#define MIXPORT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mixport {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct NotHermitian : Error {
    explicit NotHermitian(const std::string& msg) : Error(msg) {}
};

struct InvalidState : Error {
    explicit InvalidState(const std::string& msg) : Error(msg) {}
};

struct NotBipartite : Error {
    explicit NotBipartite(const std::string& msg) : Error(msg) {}
};

struct WrongShape : Error {
    explicit WrongShape(const std::string& msg) : Error(msg) {}
};

struct InvalidParams : Error {
    explicit InvalidParams(const std::string& msg) : Error(msg) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& msg) : Error(msg) {}
};

} // namespace mixport

#endif
