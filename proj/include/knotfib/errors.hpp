#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace knotfib {

// Base error carrying a stable machine-readable code alongside the message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error("parse", "line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> violations)
        : Error("validation", join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& vs) {
        std::string out;
        for (size_t i = 0; i < vs.size(); ++i) {
            if (i) out += "; ";
            out += vs[i];
        }
        return out;
    }

    std::vector<std::string> violations_;
};

class RangeError : public Error {
public:
    explicit RangeError(const std::string& condition)
        : Error("range", condition), condition_(condition) {}

    const std::string& condition() const { return condition_; }

private:
    std::string condition_;
};

} // namespace knotfib
