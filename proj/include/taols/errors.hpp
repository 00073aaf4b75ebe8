#pragma once

#include <stdexcept>
#include <string>

namespace taols {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A series violates the TimeSeries invariants (too short, non-finite values).
class InvalidSeriesError : public Error {
public:
    using Error::Error;
};

/// Two or more series that must share start year and length do not.
class AlignmentError : public Error {
public:
    using Error::Error;
};

/// An argument lies outside the domain of a closed-form function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A coefficient or interval that must be positive for a physical reading is not.
class NonPhysicalError : public Error {
public:
    using Error::Error;
};

/// Requested basis size K is invalid for the sample (K < 1, K > T, or too few dof).
class InvalidKError : public Error {
public:
    InvalidKError(const std::string& what, long k) : Error(what), k_(k) {}
    long k() const noexcept { return k_; }

private:
    long k_;
};

/// The transformed design has fewer than one residual degree of freedom.
class InsufficientKError : public InvalidKError {
public:
    using InvalidKError::InvalidKError;
};

/// The transformed design matrix is numerically rank deficient.
class SingularDesignError : public Error {
public:
    SingularDesignError(const std::string& what, std::string column)
        : Error(what), column_(std::move(column)) {}
    const std::string& column() const noexcept { return column_; }

private:
    std::string column_;
};

/// Failure classes for dataset ingestion.
enum class DataErrorKind {
    MissingFile,
    MissingHeader,
    MalformedRow,
    NonNumeric,
    Unsorted,
    YearGap,
    EmptyIntersection,
};

const char* to_string(DataErrorKind kind) noexcept;

class DataError : public Error {
public:
    DataError(DataErrorKind kind, const std::string& what);
    DataErrorKind kind() const noexcept { return kind_; }

private:
    DataErrorKind kind_;
};

}  // namespace taols
