#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ballotwire {

enum class ErrorKind {
    // usage / configuration
    InvalidArgument,
    ConfigError,
    // data validation
    MissingColumn,
    EmptyFile,
    EncodingError,
    MalformedRow,
    ZeroFollowers,
    DuplicateDate,
    ShareOutOfRange,
    MissingCandidateColumn,
    EmptyCorpus,
    MissingFeatureDay,
    MissingLagAnchor,
    MissingPollDay,
    MissingTarget,
    SpecMismatch,
    DimensionMismatch,
    LengthMismatch,
    Empty,
    MalformedLexiconRow,
    EmptyLexicon,
    IoError,
    // numerical
    SeriesTooShort,
    ConstantSeries,
    ConstantReference,
    DegenerateRegression,
    DegenerateKernel,
    SingularSystem,
    NotConverged,
    TooLarge,
    AllModelsFailed,
};

/// Maps onto the CLI exit codes: usage 1, data 2, numerical 3.
enum class ErrorCategory { Usage = 1, Data = 2, Numerical = 3 };

std::string_view to_string(ErrorKind kind) noexcept;
ErrorCategory category_of(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    ErrorCategory category() const noexcept { return category_of(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace ballotwire
