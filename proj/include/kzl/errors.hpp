#pragma once
#include <stdexcept>
#include <string>

namespace kzl {

enum class Errc {
    NotDivisible,
    NotInIdeal,
    BadBidegree,
    ZeroElement,
    InhomogeneousInput,
    NotACycle,
    BracketUndefined,
    BadIndexPair,
    IdealMembershipFailure,
    InvalidCandidate,
    InvalidConfig,
    InternalFault,
};

inline const char* errcName(Errc c) {
    switch (c) {
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NotInIdeal: return "NotInIdeal";
    case Errc::BadBidegree: return "BadBidegree";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::InhomogeneousInput: return "InhomogeneousInput";
    case Errc::NotACycle: return "NotACycle";
    case Errc::BracketUndefined: return "BracketUndefined";
    case Errc::BadIndexPair: return "BadIndexPair";
    case Errc::IdealMembershipFailure: return "IdealMembershipFailure";
    case Errc::InvalidCandidate: return "InvalidCandidate";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::InternalFault: return "InternalFault";
    }
    return "Unknown";
}

struct Error : std::runtime_error {
    Errc code;
    Error(Errc c, const std::string& what)
        : std::runtime_error(std::string(errcName(c)) + ": " + what), code(c) {}
};

} // namespace kzl
