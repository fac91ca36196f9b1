#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gfano {

using Int = std::int64_t;

enum class Errc {
    NegativeDegree,
    ArityMismatch,
    NotRigid,
    EmptySystem,
    IndexOutOfRange,
    TooFewSummands,
    NegativeTwist,
    SurfaceMismatch,
    NotEffectiveShape,
    RankMismatch,
    NotElephantShape,
    InvalidM,
    WrongSurface,
    NoSection,
    WrongDimension,
    NonIntegralChi,
    Inconsistent,
    InvalidWeights,
    WrongRank,
    InvalidDegree,
    OutOfRange,
    CheckFailure,
};

constexpr std::string_view to_string(Errc e) noexcept
{
    switch (e) {
    case Errc::NegativeDegree: return "NegativeDegree";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::NotRigid: return "NotRigid";
    case Errc::EmptySystem: return "EmptySystem";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::TooFewSummands: return "TooFewSummands";
    case Errc::NegativeTwist: return "NegativeTwist";
    case Errc::SurfaceMismatch: return "SurfaceMismatch";
    case Errc::NotEffectiveShape: return "NotEffectiveShape";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::NotElephantShape: return "NotElephantShape";
    case Errc::InvalidM: return "InvalidM";
    case Errc::WrongSurface: return "WrongSurface";
    case Errc::NoSection: return "NoSection";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::NonIntegralChi: return "NonIntegralChi";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::InvalidWeights: return "InvalidWeights";
    case Errc::WrongRank: return "WrongRank";
    case Errc::InvalidDegree: return "InvalidDegree";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::CheckFailure: return "CheckFailure";
    }
    return "Unknown";
}

/// Raised when an operation's precondition on its mathematical input fails.
class DomainError : public std::domain_error {
public:
    DomainError(Errc code, const std::string& what)
        : std::domain_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what)
{
    throw DomainError(code, what);
}

} // namespace gfano
