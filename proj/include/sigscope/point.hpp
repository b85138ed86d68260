#ifndef SIGSCOPE_POINT_HPP
#define SIGSCOPE_POINT_HPP

#include <string>
#include <vector>

#include "sigscope/arith.hpp"

namespace sigscope {

/// Eventually periodic point of Baire space: prefix followed by the period
/// repeated forever. The period is never empty.
struct EPPoint {
    std::vector<Letter> prefix;
    std::vector<Letter> period;

    Letter at(std::size_t i) const {
        if (i < prefix.size()) return prefix[i];
        return period[(i - prefix.size()) % period.size()];
    }

    /// Index the run position i maps to when detecting cycles: positions inside
    /// the prefix are distinct, positions beyond it collapse to their phase.
    std::size_t phase(std::size_t i) const {
        if (i < prefix.size()) return i;
        return prefix.size() + (i - prefix.size()) % period.size();
    }

    std::size_t phase_count() const { return prefix.size() + period.size(); }

    std::vector<Letter> unroll(std::size_t n) const;

    /// Literal form "a1,a2,(p1,p2)"; the parenthesized period is mandatory.
    std::string to_string() const;
};

EPPoint parse_point(const std::string& text);

/// Semantic equality, decided by unrolling both points to an lcm-aligned length.
bool points_equal(const EPPoint& a, const EPPoint& b);

}  // namespace sigscope

#endif
