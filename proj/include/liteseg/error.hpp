#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace liteseg {

/// Error with a machine-parsable kind tag. what() yields
/// "error: <kind>: <detail>", which is also the CLI's failure line.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error("error: " + kind + ": " + detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& detail) {
    throw Error(kind, detail);
}

// Common kinds used across the library. Kept as functions so call sites
// stay greppable and the kind strings stay consistent.
[[noreturn]] inline void fail_shape(const std::string& detail) { fail("invalid-shape", detail); }
[[noreturn]] inline void fail_mismatch(const std::string& detail) { fail("shape-mismatch", detail); }
[[noreturn]] inline void fail_unsupported(const std::string& detail) { fail("unsupported-operation", detail); }
[[noreturn]] inline void fail_usage(const std::string& detail) { fail("usage", detail); }
[[noreturn]] inline void fail_parse(const std::string& detail) { fail("parse", detail); }
[[noreturn]] inline void fail_io(const std::string& detail) { fail("io", detail); }
[[noreturn]] inline void fail_load(const std::string& detail) { fail("load", detail); }
[[noreturn]] inline void fail_domain(const std::string& detail) { fail("domain", detail); }

}  // namespace liteseg
