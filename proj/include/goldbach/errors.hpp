#pragma once

#include <stdexcept>
#include <string>

namespace goldbach {

// Invalid experiment or generator configuration (maps to CLI exit code 4).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A table or scan would exceed the configured memory cap.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Runtime guard: input exceeds a policy size limit (e.g. the AKS bound).
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace goldbach
