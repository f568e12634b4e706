#pragma once

// Structured outcome of comparing a closed form against its oracle: both
// sides are kept as canonical serializations, and pass means they agree
// bit-exactly.

#include <string>

namespace subres {

struct VerificationReport {
    std::string subject;
    std::string inputs;
    bool pass = false;
    std::string lhs;
    std::string rhs;
    double elapsed_ms = 0.0;
};

} // namespace subres
