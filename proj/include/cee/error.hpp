#pragma once

#include <stdexcept>
#include <string>

namespace cee {

// Base for all toolkit errors. `code()` is a stable machine-readable tag,
// what() carries the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define CEE_DEFINE_ERROR(NAME, CODE)                                  \
    class NAME : public ::cee::Error {                                \
    public:                                                           \
        explicit NAME(const std::string& message)                     \
            : ::cee::Error(CODE, message) {}                          \
    }

CEE_DEFINE_ERROR(ConfigError, "config");
CEE_DEFINE_ERROR(FormatError, "format");
CEE_DEFINE_ERROR(MissingArtifact, "missing-artifact");

}  // namespace cee
