#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tgr {

// Raised when an input violates a documented invariant (bad matrix, bad label,
// mismatched dimensions, unsatisfied assignment, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised by the text readers. The message always names the file, the line and
// the offending token.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& file, std::size_t line, const std::string& token,
               const std::string& what)
        : ValidationError(file + ":" + std::to_string(line) + ": " + what +
                          (token.empty() ? std::string() : " (token '" + token + "')")),
          file_(file), line_(line), token_(token) {}

    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }
    const std::string& token() const noexcept { return token_; }

private:
    std::string file_;
    std::size_t line_;
    std::string token_;
};

// Raised when an explicit size guard (oracle enumeration bounds, ranged DP k)
// would be exceeded. Never used to signal a NO answer.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tgr
