#pragma once

#include <stdexcept>
#include <string>

namespace hyperdyn {

/// An exact result would need carrier points outside the truncation window.
/// The caller has to enlarge the window; results are never silently clipped.
class WindowOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation that requires a center element was given a non-central one.
class NotCentral : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A probe hypothesis (aperiodicity, L^1 embedding, Delta_2, ...) is not met.
class PreconditionFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonFiniteIntegrand : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent scenario input.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hyperdyn
