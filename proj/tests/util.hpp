#pragma once

#include <stdexcept>
#include <string>

#include "sigscope/parse.hpp"

namespace testutil {

using namespace sigscope;

inline const SpecFile& suite() {
    static SpecFile file = load_file(SIGSCOPE_FIXTURE_FILE);
    return file;
}

inline const NTree& fixture_ntree(const std::string& name) {
    const NTree* t = suite().find_ntree(name);
    if (!t) throw std::runtime_error("fixture suite has no ntree " + name);
    return *t;
}

inline const PairTree& fixture_pair(const std::string& name) {
    const PairTree* p = suite().find_pairtree(name);
    if (!p) throw std::runtime_error("fixture suite has no pairtree " + name);
    return *p;
}

inline Ideal fixture_ideal(const std::string& name) {
    auto i = suite().find_ideal(name);
    if (!i) throw std::runtime_error("fixture suite has no ideal " + name);
    return *i;
}

}  // namespace testutil
