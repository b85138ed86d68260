#pragma once

#include <optional>

#include "sigscope/check.hpp"
#include "sigscope/cover.hpp"
#include "sigscope/derivative.hpp"
#include "sigscope/ideal.hpp"
#include "sigscope/pairtree.hpp"
#include "sigscope/witness.hpp"

namespace sigscope {

enum class Verdict { SmallCover, Positive };
enum class Method { Kernel, Derivative };

const char* verdict_name(Verdict v);
const char* method_name(Method m);

struct Classification {
    Verdict verdict = Verdict::SmallCover;
    Method method = Method::Kernel;
    bool trivial_empty = false;
    std::optional<WitnessPairTree> witness;
    std::optional<CoverScheme> cover;
    std::optional<DerivativeTrace> trace;
    CheckReport certificate_check;
    int kernel_iterations = 0;
    int big_count = 0;
    int game_calls = 0;
    int piece_count = 0;
};

// Decide the dichotomy for the projection of s and verify the certificate
// before returning. A certificate that fails its own verifier raises
// InternalSoundness; the derivative method requires the finite ideal and
// raises MethodMismatch otherwise.
Classification classify(const PairTree& s, const Ideal& ideal, Method method, int depth = 4);

}  // namespace sigscope
