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

#ifndef DIMERQC_OPTIMIZE_HPP
#define DIMERQC_OPTIMIZE_HPP

#include <functional>

namespace dimerqc {

struct ScalarMinimum {
    double x = 0.0;
    double value = 0.0;
    int evaluations = 0;
};

/// Golden-section search for a unimodal f on [lo, hi]; stops once the bracket
/// is narrower than rel_tol * |x|.
ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo,
                                      double hi, double rel_tol = 1e-10);

/// Same search carried out in log(x), for positive drives spanning decades.
ScalarMinimum golden_section_minimize_log(const std::function<double(double)>& f, double lo,
                                          double hi, double rel_tol = 1e-10);

/// Bisection on a sign change of f over [lo, hi]; throws InvalidInput if the
/// endpoints do not bracket a root.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double abs_tol = 1e-12);

}  // namespace dimerqc

#endif  // DIMERQC_OPTIMIZE_HPP
