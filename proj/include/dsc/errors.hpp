#pragma once

#include <stdexcept>
#include <string>

namespace dsc {

enum class Errc {
    Validation,
    NonDiscreteParameter,
    NotSelfDual,
    InvalidEpsilon,
    MixedMonotonicity,
    NonPositiveX,
    NotAdmissible,
    InconsistentDelta,
    SignVectorNotInComponentGroup,
    AlphabetNotClosedUnderTwist,
    BlockSetMismatch,
    UnsupportedSymbol,
};

const char *errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string &what);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace dsc
