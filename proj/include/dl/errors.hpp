#pragma once

#include <stdexcept>
#include <string>

namespace dl {

// Exit-code classes used by the CLI: domain errors (1), syntax errors (2),
// resource limits (3).
enum class ErrorKind { Domain = 1, Syntax = 2, Resource = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string label, const std::string& message)
        : std::runtime_error(label + ": " + message),
          kind_(kind),
          label_(std::move(label)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& label() const noexcept { return label_; }

private:
    ErrorKind kind_;
    std::string label_;
};

inline Error domain_error(const std::string& label, const std::string& msg) {
    return Error(ErrorKind::Domain, label, msg);
}

inline Error syntax_error(const std::string& msg, std::size_t pos) {
    return Error(ErrorKind::Syntax, "SyntaxError",
                 msg + " (at position " + std::to_string(pos) + ")");
}

inline Error resource_error(const std::string& label, const std::string& msg) {
    return Error(ErrorKind::Resource, label, msg);
}

// A failed internal consistency check always signals an implementation bug,
// never bad user input.
inline Error internal_error(const std::string& msg) {
    return Error(ErrorKind::Domain, "InternalInconsistency", msg);
}

} // namespace dl
