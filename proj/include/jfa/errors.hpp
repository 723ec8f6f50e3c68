#pragma once

#include <stdexcept>
#include <string>

namespace jfa {

// Malformed automaton text. line() is 1-based; 0 means the file as a whole.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// A configured enumeration or exploration limit was exceeded. Distinct from
// bad input: callers map this to a "resource" outcome, never to a boolean.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace jfa
