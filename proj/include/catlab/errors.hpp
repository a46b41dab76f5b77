#ifndef CATLAB_ERRORS_HPP
#define CATLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace catlab {

/// Base class for all domain errors raised by the library. `code()` is the
/// machine-readable identifier the CLI forwards in its JSON error documents.
class CatlabError : public std::runtime_error {
public:
    CatlabError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Raised when an enumeration or tableau would exceed a configured cap.
/// Maps to CLI exit code 2 (resource limit, not a mathematical result).
class CapExceededError : public CatlabError {
public:
    explicit CapExceededError(const std::string& message)
        : CatlabError("cap-exceeded", message) {}
};

class InvalidParameterError : public CatlabError {
public:
    explicit InvalidParameterError(const std::string& message)
        : CatlabError("invalid-parameters", message) {}
};

/// Tree-encoding parse failure; carries the offending character position.
class MalformedEncodingError : public CatlabError {
public:
    MalformedEncodingError(std::size_t position, const std::string& message)
        : CatlabError("malformed-encoding",
                      message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DegreeMismatchError : public CatlabError {
public:
    explicit DegreeMismatchError(const std::string& message)
        : CatlabError("degree-mismatch", message) {}
};

class InvalidDegreeError : public CatlabError {
public:
    explicit InvalidDegreeError(const std::string& message)
        : CatlabError("invalid-degree", message) {}
};

class HeightTooSmallError : public CatlabError {
public:
    explicit HeightTooSmallError(const std::string& message)
        : CatlabError("height-too-small", message) {}
};

class ChainUndefinedError : public CatlabError {
public:
    explicit ChainUndefinedError(const std::string& message)
        : CatlabError("chain-undefined", message) {}
};

class SingularLinearPartError : public CatlabError {
public:
    explicit SingularLinearPartError(const std::string& message)
        : CatlabError("singular-linear-part", message) {}
};

class IoError : public CatlabError {
public:
    explicit IoError(const std::string& message)
        : CatlabError("io-error", message) {}
};

} // namespace catlab

#endif
