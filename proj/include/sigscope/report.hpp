#pragma once

#include <string>

#include "sigscope/classify.hpp"
#include "sigscope/derivative.hpp"
#include "sigscope/game.hpp"
#include "sigscope/uniformize.hpp"

namespace sigscope {

inline constexpr const char* kSchema = "sigma-scope/1";

// JSON reports. Keys are emitted sorted and the timing block holds work
// counters rather than clocks, so equal inputs produce byte-identical reports.
std::string classification_report(const std::string& input, const std::string& ideal,
                                  const PairTree& host, const Classification& c,
                                  int depth = kVerifyDepth, Letter letters = kVerifyLetterBound,
                                  Letter nmax = kVerifyNMax, bool include_trace = false);
std::string derive_report(const std::string& input, const DerivativeTrace& trace,
                          int depth = kVerifyDepth);
std::string uniformize_report(const std::string& input, const EPPoint& x,
                              const UniformizeResult& r);
std::string game_report(const std::string& left, const std::string& right, const GameResult& g);

// Rebuild a certificate from a classification report so it can be rechecked
// against a host tree parsed separately.
struct LoadedCertificate {
    std::string kind;  // "witness" or "cover"
    std::string verdict;
    std::string ideal;
    WitnessPairTree witness;
    CoverScheme cover;
};

LoadedCertificate load_certificate(const std::string& json_text, const PairTree& host,
                                   const Ideal& ideal);

}  // namespace sigscope
