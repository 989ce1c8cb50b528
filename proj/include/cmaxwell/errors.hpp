#pragma once

#include <stdexcept>
#include <string>

namespace cmaxwell {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define CMAXWELL_ERROR(Name)                  \
    struct Name : Error {                     \
        using Error::Error;                   \
    };

CMAXWELL_ERROR(OutOfRange)
CMAXWELL_ERROR(SingularPoint)
CMAXWELL_ERROR(ZeroFrequency)
CMAXWELL_ERROR(DegenerateElimination)
CMAXWELL_ERROR(SeriesDiverged)
CMAXWELL_ERROR(ParameterPole)
CMAXWELL_ERROR(InvalidQuantumNumbers)
CMAXWELL_ERROR(InvalidBranch)
CMAXWELL_ERROR(WaveEquationViolated)
CMAXWELL_ERROR(StepLimitExceeded)
CMAXWELL_ERROR(SingularityApproached)
CMAXWELL_ERROR(NoBracket)

#undef CMAXWELL_ERROR

}  // namespace cmaxwell
