// Copyright 2026 The shordecoh Authors
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

#include "shordecoh/kernel.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "shordecoh/errors.h"

namespace shordecoh {

Kernel::Kernel(Kind kind, double param) : kind_(kind), param_(param) {
    if (kind_ == Kind::kHamming) {
        for (unsigned d = 0; d < hamming_table_.size(); ++d) {
            hamming_table_[d] = std::exp(-param_ * d);
        }
    }
}

Kernel Kernel::coherent() {
    return Kernel(Kind::kCoherent, 0.0);
}

Kernel Kernel::hamming(double xi) {
    if (!std::isfinite(xi) || xi < 0) {
        throw DomainError("kernel xi must be finite and >= 0");
    }
    return Kernel(Kind::kHamming, xi);
}

Kernel Kernel::constant_beta(double beta) {
    if (!(beta >= 0 && beta <= 1)) {
        throw DomainError("kernel beta must lie in [0, 1]");
    }
    return Kernel(Kind::kConstantBeta, beta);
}

namespace {

double parse_real(std::string_view text) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw DomainError("not a number: '" + std::string(text) + "'");
    }
    return value;
}

/// Shortest %g rendering that parses back to the same double.
std::string format_real(double v) {
    char buf[64];
    for (int digits = 1; digits <= 17; ++digits) {
        std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
        if (std::strtod(buf, nullptr) == v) {
            break;
        }
    }
    return buf;
}

}  // namespace

Kernel Kernel::parse(std::string_view text) {
    if (text == "coherent") {
        return coherent();
    }
    if (text.starts_with("xi:")) {
        return hamming(parse_real(text.substr(3)));
    }
    if (text.starts_with("beta:")) {
        return constant_beta(parse_real(text.substr(5)));
    }
    throw DomainError("unknown kernel '" + std::string(text) +
                      "' (expected coherent, xi:<real> or beta:<real>)");
}

std::string Kernel::to_string() const {
    switch (kind_) {
        case Kind::kCoherent:
            return "coherent";
        case Kind::kHamming:
            return "xi:" + format_real(param_);
        case Kind::kConstantBeta:
            return "beta:" + format_real(param_);
    }
    return "coherent";
}

}  // namespace shordecoh
