#include "sigscope/classify.hpp"

#include "sigscope/errors.hpp"
#include "sigscope/kernel.hpp"
#include "sigscope/project.hpp"

namespace sigscope {

const char* verdict_name(Verdict v) {
    return v == Verdict::Positive ? "Positive" : "SmallCover";
}

const char* method_name(Method m) {
    return m == Method::Kernel ? "kernel" : "derivative";
}

namespace {

void require_clean(const CheckReport& rep, const char* what) {
    if (rep.ok) return;
    std::string msg = std::string(what) + " failed verification";
    for (const std::string& f : rep.failures) msg += "; " + f;
    fail(Errc::InternalSoundness, msg);
}

// Host state played by a piece state: visiting subtrees mark the visited
// copies with a trailing quote, so try the name as written first and fall
// back to the unquoted one.
int host_state_for(const PairTree& host, const std::string& name) {
    int q = host.state_by_name(name);
    if (q < 0 && !name.empty() && name.back() == '\'')
        q = host.state_by_name(name.substr(0, name.size() - 1));
    return q;
}

Classification classify_kernel(const PairTree& s0, const Ideal& ideal) {
    Classification out;
    out.method = Method::Kernel;

    KernelResult kr = pair_kernel(s0, ideal);
    out.kernel_iterations = kr.iterations;
    for (char c : kr.kernel) out.big_count += c;

    if (kr.start_in_kernel) {
        out.verdict = Verdict::Positive;
        out.witness = build_witness(s0, ideal);
        out.certificate_check = verify_witness(s0, *out.witness, ideal);
        require_clean(out.certificate_check, "witness");
    } else {
        out.verdict = Verdict::SmallCover;
        out.cover = build_cover(s0, ideal);
        out.certificate_check = verify_cover(s0, *out.cover, ideal);
        require_clean(out.certificate_check, "cover");
    }
    return out;
}

Classification classify_derivative(const PairTree& s0, const Ideal& ideal, int depth) {
    Classification out;
    out.method = Method::Derivative;

    DerivativeTrace trace = derive_sequence(s0, depth);
    out.game_calls = trace.game_calls;
    if (!trace.stabilized)
        fail(Errc::BoundsTooLarge, "derivative sequence did not stabilize within the depth bound");

    std::vector<PairTree> pieces;
    for (const Removal& r : trace.removals)
        if (r.reason == RemovalReason::ClosureContained)
            pieces.push_back(removal_piece(trace, r));
    out.piece_count = static_cast<int>(pieces.size());

    const PairTree& final_stage = trace.stages.back();
    auto adopt_witness = [&](const PairTree& on) {
        WitnessPairTree wit = build_witness(on, fin_ideal());
        for (int q = 0; q < wit.w.state_count(); ++q) {
            int h = host_state_for(s0, on.state(wit.embedding[q]).name);
            if (h < 0)
                fail(Errc::InternalSoundness, "piece state does not map back to the input");
            wit.embedding[q] = h;
        }
        out.witness = wit;
        out.certificate_check = verify_witness(s0, *out.witness, ideal);
        require_clean(out.certificate_check, "witness");
        out.verdict = Verdict::Positive;
    };

    if (final_stage.is_empty()) {
        int positive_piece = -1;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            NTree proj = project(pieces[i]);
            if (positive_kernel(proj, fin_ideal()).start_in_kernel) {
                positive_piece = static_cast<int>(i);
                break;
            }
        }
        if (positive_piece >= 0) {
            adopt_witness(pieces[positive_piece]);
        } else {
            out.verdict = Verdict::SmallCover;
            out.cover = build_cover_pieces(std::move(pieces), ideal);
            out.certificate_check = verify_cover(s0, *out.cover, ideal);
            require_clean(out.certificate_check, "cover");
        }
    } else {
        if (!pair_kernel(final_stage, ideal).start_in_kernel)
            fail(Errc::InternalSoundness,
                 "derivative stabilized on a nonempty stage without a positive core");
        adopt_witness(final_stage);
    }
    out.trace = std::move(trace);
    return out;
}

}  // namespace

Classification classify(const PairTree& s, const Ideal& ideal, Method method, int depth) {
    check_proper(ideal);
    if (method == Method::Derivative && !is_fin(ideal))
        fail(Errc::MethodMismatch, "the derivative method runs over the finite ideal only");

    PairTree s0 = pair_prune(s);
    if (s0.is_empty()) {
        Classification out;
        out.method = method;
        out.trivial_empty = true;
        out.verdict = Verdict::SmallCover;
        out.cover = method == Method::Kernel
                        ? cover_scheme_unchecked(s0, ideal)
                        : build_cover_pieces({}, ideal);
        return out;
    }
    Classification out = method == Method::Kernel ? classify_kernel(s0, ideal)
                                                  : classify_derivative(s0, ideal, depth);
    return out;
}

}  // namespace sigscope
