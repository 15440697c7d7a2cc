#pragma once

#include <stdexcept>
#include <string>

namespace mfwild {

/// Structural misuse: mixing elements from different rings, mismatched
/// variable counts, incompatible dimensions.
class config_error : public std::invalid_argument {
public:
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A documented hypothesis of an operation is violated (order too low,
/// non-commuting tuple, repeated scalars, bad arity).
class precondition_error : public std::invalid_argument {
public:
    precondition_error(std::string code, const std::string& what)
        : std::invalid_argument(what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace mfwild
