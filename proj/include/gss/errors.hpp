#pragma once

#include <stdexcept>
#include <string>

namespace gss {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed digit strings, out-of-space values, padding violations.
class CodecError : public Error {
public:
    using Error::Error;
};

// Parameter or share-set problems in the sharing schemes.
class SchemeError : public Error {
public:
    using Error::Error;
};

class ProtocolError : public Error {
public:
    using Error::Error;
};

// Enumeration request outside the exhaustive range.
class AnalysisError : public Error {
public:
    using Error::Error;
};

// GSF/GSH parse failures; carries a 1-based line number when known.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace gss
