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

namespace sht::tol {

// Hermiticity: inputs are symmetrized at construction; anything that needs a
// correction larger than kHermitianReject is considered genuinely
// non-Hermitian rather than noisy.
inline constexpr double kHermitianReject = 1e-9;

// Effects may dip this far below zero before we call them non-positive.
inline constexpr double kPsdFloor = -1e-10;

// Max-norm slack for sums of effects against the identity.
inline constexpr double kNormalization = 1e-9;

// A frame is invertible when its smallest eigenvalue exceeds this fraction of
// the largest; below that, inversion fails hard (no silent pseudo-inverse).
inline constexpr double kIcRelative = 1e-10;

// Uniformity of trace moments across effects (alpha, beta, gamma).
inline constexpr double kUniformity = 1e-9;

// Denominator of the symmetric closed form: |D*gamma - alpha^3| below this is
// treated as degenerate.
inline constexpr double kDegenerate = 1e-12;

// Agreement required between the symmetric closed form and direct inversion.
inline constexpr double kSymmetricCrossCheck = 1e-9;

// Matching tolerance when merging duplicate effects.
inline constexpr double kEffectMerge = 1e-9;

// Unitarity check for measurement ensembles.
inline constexpr double kUnitarity = 1e-10;

// Rational approximation of effect traces when splitting to uniform trace.
inline constexpr double kTraceApprox = 1e-9;

// Probabilities this far below zero are treated as rounding noise and
// clamped; anything lower indicates an invalid state.
inline constexpr double kProbabilityClamp = -1e-12;

}  // namespace sht::tol
