#pragma once

#include <stdexcept>
#include <string>

namespace fredpair {

/// Shape or ambient-dimension mismatch between operands.
class dimension_error : public std::invalid_argument {
public:
    explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A stated precondition does not hold (bad block table, not a
/// generalized inverse, vector outside its ambient space, ...).
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

/// A guaranteed structural identity failed on concrete data.  Thrown by
/// the verifying constructions; reaching it means either corrupted input
/// or a genuine defect, so the test suite treats it as fatal.
class theorem_violation : public std::logic_error {
public:
    explicit theorem_violation(const std::string& what) : std::logic_error(what) {}
};

/// Malformed textual input (JSON or rational literals).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fredpair
