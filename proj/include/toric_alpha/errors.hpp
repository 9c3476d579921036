#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace toric_alpha {

/// A violated mathematical precondition (as opposed to malformed input).
///
/// `code` is a short machine-readable tag such as "not-interior" or
/// "extremal"; `data` carries exact values (already rendered as strings)
/// that explain the failure, e.g. the offending lattice point.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message,
                std::map<std::string, std::string> data = {})
        : std::runtime_error(message), code_(std::move(code)), data_(std::move(data)) {}

    const std::string& code() const noexcept { return code_; }
    const std::map<std::string, std::string>& data() const noexcept { return data_; }

private:
    std::string code_;
    std::map<std::string, std::string> data_;
};

}  // namespace toric_alpha
