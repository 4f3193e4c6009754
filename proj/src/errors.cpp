#include "dsc/errors.hpp"

namespace dsc {

const char *errc_name(Errc code)
{
    switch (code) {
    case Errc::Validation: return "Validation";
    case Errc::NonDiscreteParameter: return "NonDiscreteParameter";
    case Errc::NotSelfDual: return "NotSelfDual";
    case Errc::InvalidEpsilon: return "InvalidEpsilon";
    case Errc::MixedMonotonicity: return "MixedMonotonicity";
    case Errc::NonPositiveX: return "NonPositiveX";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::InconsistentDelta: return "InconsistentDelta";
    case Errc::SignVectorNotInComponentGroup: return "SignVectorNotInComponentGroup";
    case Errc::AlphabetNotClosedUnderTwist: return "AlphabetNotClosedUnderTwist";
    case Errc::BlockSetMismatch: return "BlockSetMismatch";
    case Errc::UnsupportedSymbol: return "UnsupportedSymbol";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string &what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
{
}

} // namespace dsc
