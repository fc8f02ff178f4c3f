#pragma once

#include <stdexcept>
#include <string>

namespace gmult {

struct DimMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotHermitian : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotPsd : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotOrthonormalBasis : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotRieszBasis : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PreconditionFailed : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BiorthogonalityViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SharedDataMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroVector : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroProbe : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotTraceClass : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gmult
