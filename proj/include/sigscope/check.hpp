#pragma once

#include <string>
#include <vector>

#include "sigscope/arith.hpp"

namespace sigscope {

// Outcome of a certificate verifier: either clean or a list of violations.
struct CheckReport {
    bool ok = true;
    std::vector<std::string> failures;

    void add(const std::string& what) {
        ok = false;
        failures.push_back(what);
    }
};

// Default bounds for snapshot-based certificate checks.
inline constexpr int kVerifyDepth = 4;
inline constexpr Letter kVerifyLetterBound = 8;
inline constexpr Letter kVerifyNMax = 8;

}  // namespace sigscope
