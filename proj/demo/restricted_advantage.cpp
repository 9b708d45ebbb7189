// Copyright 2026 The qrac-sim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Prints, for each alphabet size d, the smallest quantum dimension that still
// beats the best classical [(2,d)->1] code, and the margin it wins by.

#include <cstdio>

#include "qrac/qrac.hpp"

int main() {
    std::printf("%4s %6s %12s %12s %12s\n", "d", "dprime", "classical", "quantum", "margin");
    for (std::size_t d = 2; d <= 24; ++d) {
        const std::size_t r = qrac::r_max(d);
        const qrac::ProtocolSpec spec(d, d - r);
        const double quantum = qrac::exact_success(spec).average;
        const double classical = qrac::closed_form_classical(2, d);
        std::printf("%4zu %6zu %12.7f %12.7f %+12.2e\n", d, spec.d_prime(), classical, quantum,
                    quantum - classical);
    }
    return 0;
}
