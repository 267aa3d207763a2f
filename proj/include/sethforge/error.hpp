#pragma once

#include <stdexcept>
#include <string>

namespace sethforge {

// All domain errors carry a machine-parsable category so the CLI can emit
// "error: <category>: <detail>" lines.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& detail)
        : std::runtime_error("error: " + category + ": " + detail),
          category_(std::move(category)) {}

    const std::string& category() const { return category_; }

private:
    std::string category_;
};

[[noreturn]] inline void fail(const std::string& category, const std::string& detail) {
    throw Error(category, detail);
}

} // namespace sethforge
