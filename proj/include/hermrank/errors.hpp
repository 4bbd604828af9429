#pragma once

#include <stdexcept>
#include <string>

namespace hermrank {

/// Root of the library's error hierarchy.  Every precondition violation or
/// impossible request throws a subclass of this; expected negative verdicts
/// (e.g. "not divisible", "rank is not one") are reported through return
/// values instead, never through exceptions.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Division by an exact zero (rational, Gaussian rational, or polynomial).
struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
    explicit division_by_zero(const std::string& msg) : error(msg) {}
};

/// Malformed textual or JSON input.
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error("parse error: " + msg) {}
};

/// Two operands live over different variable counts.
struct variable_count_mismatch : error {
    variable_count_mismatch() : error("variable count mismatch") {}
    explicit variable_count_mismatch(const std::string& msg) : error(msg) {}
};

/// Matrix (or tuple) dimensions do not line up.
struct shape_mismatch : error {
    shape_mismatch() : error("shape mismatch") {}
    explicit shape_mismatch(const std::string& msg) : error(msg) {}
};

/// An (r,s,t) triple fails its basic constraints for the requested operation.
struct invalid_signature : error {
    invalid_signature() : error("invalid signature") {}
    explicit invalid_signature(const std::string& msg) : error(msg) {}
};

/// The operation needs r+s >= 1 but the form has no nondegenerate part.
struct degenerate_norm : error {
    degenerate_norm() : error("norm form is identically zero (r+s = 0)") {}
};

/// A biform expected to be hermitian-symmetric is not.
struct not_hermitian : error {
    not_hermitian() : error("biform is not hermitian-symmetric") {}
};

/// The zero form was passed where a nonzero one is required.
struct zero_form : error {
    zero_form() : error("biform is identically zero") {}
};

/// A polynomial map tuple is empty (or has no nonzero member where one is
/// required).
struct empty_tuple : error {
    empty_tuple() : error("empty polynomial tuple") {}
    explicit empty_tuple(const std::string& what) : error(what) {}
};

/// The pair fails the orthogonality (divisibility) criterion.
struct not_an_orthogonal_pair : error {
    not_an_orthogonal_pair() : error("not an orthogonal pair") {}
};

/// Decomposition requested for a pair whose multiplier is not rank one.
struct not_quasi_standard : error {
    not_quasi_standard() : error("pair is not quasi-standard") {}
    explicit not_quasi_standard(const std::string& msg) : error(msg) {}
};

/// A map's multiplier has the wrong sign profile for the requested target.
struct signature_obstruction : error {
    signature_obstruction() : error("multiplier signature obstructs the decomposition") {}
    explicit signature_obstruction(const std::string& msg) : error(msg) {}
};

/// Defensive: an internal certificate failed to check.  Unreachable for
/// well-formed inputs; kept so corruption surfaces loudly instead of silently.
struct genericity_failure : error {
    genericity_failure() : error("internal certificate failed to verify") {}
    explicit genericity_failure(const std::string& msg) : error(msg) {}
};

/// A bounded randomized search ran out of retries.
struct generation_exhausted : error {
    generation_exhausted() : error("random generation exhausted its retry budget") {}
    explicit generation_exhausted(const std::string& msg) : error(msg) {}
};

/// Restriction analysis requires a degenerate source (t >= 1).
struct source_not_degenerate : error {
    source_not_degenerate() : error("source signature has t = 0; nothing to restrict away") {}
};

}  // namespace hermrank
