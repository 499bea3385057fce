// Copyright 2026 The dimerqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dimerqc/errors.hpp"

namespace dimerqc {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "invalid-input";
        case ErrorKind::InvalidGeometry: return "invalid-geometry";
        case ErrorKind::UnsupportedGeometry: return "unsupported-geometry";
        case ErrorKind::Stiffness: return "stiffness";
        case ErrorKind::ModelError: return "model-error";
        case ErrorKind::IntegratorAccuracy: return "integrator-accuracy";
        case ErrorKind::NonUniqueSteadyState: return "non-unique-steady-state";
        case ErrorKind::NoCoupling: return "no-coupling";
        case ErrorKind::CannotInitialize: return "cannot-initialize";
        case ErrorKind::RegimeViolation: return "regime-violation";
    }
    return "unknown";
}

}  // namespace dimerqc
