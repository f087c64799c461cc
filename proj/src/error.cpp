#include "ballotwire/error.hpp"

namespace ballotwire {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::MissingColumn: return "MissingColumn";
    case ErrorKind::EmptyFile: return "EmptyFile";
    case ErrorKind::EncodingError: return "EncodingError";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::ZeroFollowers: return "ZeroFollowers";
    case ErrorKind::DuplicateDate: return "DuplicateDate";
    case ErrorKind::ShareOutOfRange: return "ShareOutOfRange";
    case ErrorKind::MissingCandidateColumn: return "MissingCandidateColumn";
    case ErrorKind::EmptyCorpus: return "EmptyCorpus";
    case ErrorKind::MissingFeatureDay: return "MissingFeatureDay";
    case ErrorKind::MissingLagAnchor: return "MissingLagAnchor";
    case ErrorKind::MissingPollDay: return "MissingPollDay";
    case ErrorKind::MissingTarget: return "MissingTarget";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::MalformedLexiconRow: return "MalformedLexiconRow";
    case ErrorKind::EmptyLexicon: return "EmptyLexicon";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::SeriesTooShort: return "SeriesTooShort";
    case ErrorKind::ConstantSeries: return "ConstantSeries";
    case ErrorKind::ConstantReference: return "ConstantReference";
    case ErrorKind::DegenerateRegression: return "DegenerateRegression";
    case ErrorKind::DegenerateKernel: return "DegenerateKernel";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::AllModelsFailed: return "AllModelsFailed";
    }
    return "Unknown";
}

ErrorCategory category_of(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::ConfigError:
        return ErrorCategory::Usage;
    case ErrorKind::SeriesTooShort:
    case ErrorKind::ConstantSeries:
    case ErrorKind::ConstantReference:
    case ErrorKind::DegenerateRegression:
    case ErrorKind::DegenerateKernel:
    case ErrorKind::SingularSystem:
    case ErrorKind::NotConverged:
    case ErrorKind::TooLarge:
    case ErrorKind::AllModelsFailed:
        return ErrorCategory::Numerical;
    default:
        return ErrorCategory::Data;
    }
}

}  // namespace ballotwire
