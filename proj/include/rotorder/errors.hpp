#pragma once

#include <stdexcept>
#include <string>

namespace rotorder {

/// Polynomial division left a nonzero remainder where the caller required
/// exactness. Load-bearing: the divide-down constructions rely on it.
struct NonExactDivision : std::runtime_error {
    explicit NonExactDivision(const std::string& what) : std::runtime_error(what) {}
};

/// Root isolation was asked to run on a polynomial with repeated roots.
struct NotSquarefree : std::runtime_error {
    explicit NotSquarefree(const std::string& what) : std::runtime_error(what) {}
};

/// Interval refinement lost track of its root; the caller violated an
/// isolation precondition.
struct LostRoot : std::logic_error {
    explicit LostRoot(const std::string& what) : std::logic_error(what) {}
};

/// Isolation did not converge within the documented width cap.
struct IsolationFailure : std::logic_error {
    explicit IsolationFailure(const std::string& what) : std::logic_error(what) {}
};

/// An annihilator exceeded the degree cap for word composition.
struct DegreeOverflow : std::runtime_error {
    explicit DegreeOverflow(const std::string& what) : std::runtime_error(what) {}
};

/// A checked mathematical invariant failed. Never expected to fire; maps to
/// exit code 3 in the CLI.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Unknown command vocabulary or an out-of-cap parameter; maps to exit
/// code 1 in the CLI (input errors in well-formed requests map to 2).
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace rotorder
