#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigscope/ideal.hpp"
#include "sigscope/ntree.hpp"
#include "sigscope/pairtree.hpp"

namespace sigscope {

struct NamedNTree {
    std::string name;
    NTree tree;
};

struct NamedPairTree {
    std::string name;
    PairTree tree;
};

// One input file: any number of named trees, pair trees and ideals.
struct SpecFile {
    std::vector<NamedNTree> ntrees;
    std::vector<NamedPairTree> pairtrees;
    std::vector<Ideal> ideals;

    const NTree* find_ntree(const std::string& name) const;
    const PairTree* find_pairtree(const std::string& name) const;
    // "fin" is always present and cannot be declared.
    std::optional<Ideal> find_ideal(const std::string& name) const;
};

SpecFile parse_file(const std::string& text);
SpecFile load_file(const std::string& path);

// Round-trip serializations; state names are uniquified where construction
// produced duplicates.
std::string to_text(const NTree& t, const std::string& name);
std::string to_text(const PairTree& s, const std::string& name);
std::string to_text(const Ideal& ideal);

}  // namespace sigscope
