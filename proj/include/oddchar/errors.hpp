#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace oddchar {

/// Exact integer used for degrees, character values and counts.
using Integer = boost::multiprecision::cpp_int;

/// A precondition of an operation was violated by the caller.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// The operation is well defined mathematically but not offered for this input
/// (e.g. the parabolic correspondence for unitary groups).
class Unsupported : public DomainError {
public:
    explicit Unsupported(const std::string& what) : DomainError(what) {}
};

/// A structural statement that must hold for every valid input failed.
/// Raised only by internal consistency assertions; a correct build never
/// produces one.
class TheoremViolation : public std::logic_error {
public:
    explicit TheoremViolation(const std::string& what) : std::logic_error(what) {}
};

/// Permutation group enumeration hit its element cap.
class ElementCapExceeded : public std::length_error {
public:
    explicit ElementCapExceeded(const std::string& what) : std::length_error(what) {}
};

namespace detail {

inline void require(bool cond, const std::string& msg)
{
    if (!cond)
        throw DomainError(msg);
}

inline void ensure(bool cond, const std::string& msg)
{
    if (!cond)
        throw TheoremViolation(msg);
}

} // namespace detail

} // namespace oddchar
