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

#include "dimerqc/optimize.hpp"

#include <cmath>
#include <utility>

#include "dimerqc/errors.hpp"

namespace dimerqc {

ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo,
                                      double hi, double rel_tol) {
    if (!(lo < hi)) throw Error(ErrorKind::InvalidInput, "golden section: need lo < hi");
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    int evals = 2;
    while ((b - a) > rel_tol * std::max(std::abs(c), std::abs(d)) && evals < 10'000) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++evals;
    }
    const double x = 0.5 * (a + b);
    return {x, f(x), evals + 1};
}

ScalarMinimum golden_section_minimize_log(const std::function<double(double)>& f, double lo,
                                          double hi, double rel_tol) {
    if (!(lo > 0.0)) throw Error(ErrorKind::InvalidInput, "log golden section: need lo > 0");
    // In log space an absolute bracket width w is a relative width ~w in x.
    const double log_lo = std::log(lo);
    const double log_hi = std::log(hi);
    const double scale = std::max(std::abs(log_lo), std::abs(log_hi));
    ScalarMinimum m = golden_section_minimize([&f](double u) { return f(std::exp(u)); }, log_lo,
                                              log_hi, rel_tol / std::max(scale, 1.0));
    m.x = std::exp(m.x);
    return m;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double abs_tol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw Error(ErrorKind::InvalidInput, "bisect_root: endpoints do not bracket a root");
    for (int i = 0; i < 200 && (hi - lo) > abs_tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace dimerqc
