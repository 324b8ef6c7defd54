// Copyright 2026 The shadowtomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace sht {

enum class ErrorKind {
    Dimension,
    NotHermitian,
    SizeLimit,
    Positivity,
    Normalization,
    UnknownSolid,
    NonUnitary,
    Range,
    Approximation,
    NotUniform,
    Degenerate,
    NotInformationallyComplete,
    NotRigidlySymmetric,
    SingularH,
    InvalidState,
    EmptyData,
    NotFactorized,
    Config,
    Parse,
    Io,
    Usage,
    Internal,
};

/// Stable string identifier, e.g. "NormalizationError". Used in CLI error
/// reports and by the C API status mapping.
inline const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Dimension: return "DimensionError";
        case ErrorKind::NotHermitian: return "NotHermitianError";
        case ErrorKind::SizeLimit: return "SizeLimitError";
        case ErrorKind::Positivity: return "PositivityError";
        case ErrorKind::Normalization: return "NormalizationError";
        case ErrorKind::UnknownSolid: return "UnknownSolidError";
        case ErrorKind::NonUnitary: return "NonUnitaryError";
        case ErrorKind::Range: return "RangeError";
        case ErrorKind::Approximation: return "ApproximationError";
        case ErrorKind::NotUniform: return "NotUniformError";
        case ErrorKind::Degenerate: return "DegenerateError";
        case ErrorKind::NotInformationallyComplete: return "NotInformationallyCompleteError";
        case ErrorKind::NotRigidlySymmetric: return "NotRigidlySymmetricError";
        case ErrorKind::SingularH: return "SingularHError";
        case ErrorKind::InvalidState: return "InvalidStateError";
        case ErrorKind::EmptyData: return "EmptyDataError";
        case ErrorKind::NotFactorized: return "NotFactorizedError";
        case ErrorKind::Config: return "ConfigError";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::Io: return "IoError";
        case ErrorKind::Usage: return "UsageError";
        case ErrorKind::Internal: return "InternalError";
    }
    return "InternalError";
}

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    const char *kind_name() const { return error_kind_name(kind_); }

   private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &message) {
    throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string &message) {
    if (!condition) {
        fail(kind, message);
    }
}

}  // namespace sht
