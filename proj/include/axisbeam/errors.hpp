// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace axisbeam {

// Bad input: out-of-range parameters, violated preconditions, malformed
// scenario documents. The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Degenerate geometry (coincident points, zero effective channel,
// unsatisfiable scatterer placement). Exit code 3.
class GeometryError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// File system failures. Exit code 4.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace axisbeam
