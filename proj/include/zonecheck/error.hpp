#pragma once

#include <stdexcept>
#include <string>

namespace zonecheck {

// Malformed model or property input.
class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside an engine's supported fragment (e.g. strict constraints
// for the digital-clocks engine).
class EngineLimitation : public std::runtime_error {
public:
    explicit EngineLimitation(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured iteration cap was exceeded; reported instead of hanging.
class IterationCapExceeded : public std::runtime_error {
public:
    explicit IterationCapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace zonecheck
