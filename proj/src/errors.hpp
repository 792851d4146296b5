#pragma once

#include <stdexcept>
#include <string>

namespace arthur {

enum class ErrorKind {
    invalid_block,
    invalid_input,
    invalid_parameter,
    invalid_character,
    precondition,
    unsupported,
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::invalid_block: return "invalid_block";
        case ErrorKind::invalid_input: return "invalid_input";
        case ErrorKind::invalid_parameter: return "invalid_parameter";
        case ErrorKind::invalid_character: return "invalid_character";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::unsupported: return "unsupported";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace arthur
