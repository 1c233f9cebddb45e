#pragma once

#include <stdexcept>
#include <string>

namespace hobs {

/// Input outside an operation's domain: out-of-range angles, non-unit
/// directions, unnormalized amplitudes, mismatched sphere labels.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A numerical result that violates an internal consistency check, such as a
/// non-integer unwrapped winding or an integrator step that is too large.
class InconsistencyError : public std::runtime_error {
public:
    explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/// Reading or writing a file failed.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hobs
