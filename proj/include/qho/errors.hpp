#pragma once

#include <stdexcept>
#include <string>

namespace qho {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedMatrix : Error {
    using Error::Error;
};

struct DimMismatch : Error {
    using Error::Error;
};

struct DimTooSmall : Error {
    using Error::Error;
};

struct TruncationTooCoarse : Error {
    int required_dim;
    TruncationTooCoarse(const std::string& msg, int required)
        : Error(msg), required_dim(required) {}
};

struct ConvergenceFailure : Error {
    using Error::Error;
};

struct MomentTestFailure : Error {
    int moment;
    double error;
    MomentTestFailure(const std::string& msg, int m, double err)
        : Error(msg), moment(m), error(err) {}
};

struct NonFiniteIntegrand : Error {
    long node_index;
    NonFiniteIntegrand(const std::string& msg, long node)
        : Error(msg), node_index(node) {}
};

struct NotInImage : Error {
    using Error::Error;
};

struct ConfigParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace qho
