// sigma-scope: decides whether the projection of a regular pair tree is
// coverable by countably many ideal-small trees or contains an ideal-positive
// subtree, and emits a verifiable certificate either way.
//
// Exit codes: 0 = SmallCover, 10 = Positive, 2 = input or precondition error,
// 3 = a certificate failed its own verifier (never expected).

#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sigscope/classify.hpp"
#include "sigscope/errors.hpp"
#include "sigscope/game.hpp"
#include "sigscope/kernel.hpp"
#include "sigscope/parse.hpp"
#include "sigscope/project.hpp"
#include "sigscope/report.hpp"
#include "sigscope/snapshot.hpp"
#include "sigscope/uniformize.hpp"

namespace {

using namespace sigscope;
using nlohmann::json;

struct Options {
    std::string input;
    std::string name;
    std::string ideal_name = "fin";
    std::string method = "kernel";
    std::string point;
    std::string report_path;
    std::string left;
    std::string right;
    int depth = kVerifyDepth;
    Letter letters = kVerifyLetterBound;
    Letter nmax = kVerifyNMax;
    bool json_out = false;
    bool trace = false;
    bool all = false;
};

int exit_for(const Error& e) { return e.code() == Errc::InternalSoundness ? 3 : 2; }

int verdict_code(Verdict v) { return v == Verdict::Positive ? 10 : 0; }

Method method_of(const std::string& name) {
    return name == "derivative" ? Method::Derivative : Method::Kernel;
}

Ideal need_ideal(const SpecFile& f, const std::string& name) {
    std::optional<Ideal> i = f.find_ideal(name);
    if (!i) fail(Errc::Validation, "unknown ideal " + name);
    return *i;
}

PairTree resolve_pair(const SpecFile& f, const std::string& name) {
    if (const PairTree* p = f.find_pairtree(name)) return *p;
    if (const NTree* t = f.find_ntree(name)) return diag_pairize(*t);
    fail(Errc::Validation, "no tree named " + name + " in the input");
}

// Trees name closed sets directly; pair trees contribute their projection.
NTree resolve_ntree(const SpecFile& f, const std::string& name) {
    if (const NTree* t = f.find_ntree(name)) return prune(*t);
    if (const PairTree* p = f.find_pairtree(name)) {
        PairTree pruned = pair_prune(*p);
        if (pruned.is_empty()) return NTree::empty_tree();
        return project(pruned);
    }
    fail(Errc::Validation, "no tree named " + name + " in the input");
}

std::string only_name(const SpecFile& f) {
    if (f.pairtrees.size() + f.ntrees.size() == 1)
        return f.pairtrees.empty() ? f.ntrees[0].name : f.pairtrees[0].name;
    fail(Errc::Validation, "the input defines several trees; pick one with --name");
}

std::vector<std::string> all_names(const SpecFile& f) {
    std::vector<std::string> names;
    for (const auto& p : f.pairtrees) names.push_back(p.name);
    for (const auto& t : f.ntrees) names.push_back(t.name);
    if (names.empty()) fail(Errc::Validation, "the input defines no trees");
    return names;
}

// One object's worth of output, assembled off-thread and printed in order.
struct Outcome {
    std::string out;
    std::string err;
    int code = 0;
};

int severity(int code) {
    if (code == 3) return 3;
    if (code == 2) return 2;
    if (code == 10) return 1;
    return 0;
}

int flush_outcomes(const std::vector<Outcome>& results) {
    int code = 0;
    for (const Outcome& r : results) {
        if (!r.out.empty()) std::fputs(r.out.c_str(), stdout);
        if (!r.err.empty()) std::fputs(r.err.c_str(), stderr);
        if (severity(r.code) > severity(code)) code = r.code;
    }
    return code;
}

Outcome classify_one(const SpecFile& f, const Options& o, const Ideal& ideal,
                     const std::string& name) {
    try {
        PairTree host = pair_prune(resolve_pair(f, name));
        Classification c = classify(host, ideal, method_of(o.method), o.depth);
        Outcome r;
        r.code = verdict_code(c.verdict);
        if (o.json_out) {
            r.out = classification_report(name, ideal.name, host, c, o.depth, o.letters, o.nmax,
                                          o.trace);
            return r;
        }
        std::ostringstream line;
        line << name << ": " << verdict_name(c.verdict);
        if (c.trivial_empty)
            line << " (empty tree)";
        else if (c.verdict == Verdict::Positive)
            line << " (witness verified, " << c.witness->w.state_count() << " states)";
        else
            line << " (cover verified)";
        line << "\n";
        if (o.trace && c.trace) {
            for (std::size_t i = 0; i < c.trace->stages.size(); ++i)
                line << "  stage " << i << ": " << c.trace->stages[i].state_count()
                     << " states\n";
            line << "  lambda = " << c.trace->lambda << "\n";
        }
        r.out = line.str();
        return r;
    } catch (const Error& e) {
        return {"", "error: " + name + ": " + e.what() + "\n", exit_for(e)};
    } catch (const std::exception& e) {
        return {"", "error: " + name + ": " + e.what() + "\n", 2};
    }
}

int cmd_classify(const Options& o) {
    SpecFile f = load_file(o.input);
    Ideal ideal = need_ideal(f, o.ideal_name);
    if (!o.all) {
        std::string name = o.name.empty() ? only_name(f) : o.name;
        Outcome r = classify_one(f, o, ideal, name);
        return flush_outcomes({r});
    }
    // Objects classify concurrently; printing stays in file order.
    std::vector<std::string> names = o.name.empty() ? all_names(f)
                                                    : std::vector<std::string>{o.name};
    std::vector<std::future<Outcome>> futures;
    for (const std::string& name : names)
        futures.push_back(std::async(std::launch::async, [&f, &o, &ideal, name] {
            return classify_one(f, o, ideal, name);
        }));
    std::vector<Outcome> results;
    for (auto& fut : futures) results.push_back(fut.get());
    return flush_outcomes(results);
}

int cmd_derive(const Options& o) {
    SpecFile f = load_file(o.input);
    std::string name = o.name.empty() ? only_name(f) : o.name;
    PairTree host = pair_prune(resolve_pair(f, name));
    DerivativeTrace trace = derive_sequence(host, o.depth);
    if (o.json_out) {
        std::fputs(derive_report(name, trace, o.depth).c_str(), stdout);
    } else {
        for (std::size_t i = 0; i < trace.stages.size(); ++i)
            std::printf("stage %zu: %d states\n", i, trace.stages[i].state_count());
        for (const Removal& r : trace.removals)
            std::printf("removed %s at stage %d (%s)\n", r.state.c_str(), r.stage,
                        r.reason == RemovalReason::ClosureContained ? "closure contained"
                                                                    : "pruned");
        if (trace.stabilized)
            std::printf("lambda = %d\n", trace.lambda);
    }
    if (!trace.stabilized) {
        std::fprintf(stderr, "error: %s: derivative did not stabilize within %d stages\n",
                     name.c_str(), o.depth);
        return 2;
    }
    return 0;
}

int cmd_certificate(const Options& o, bool want_positive) {
    SpecFile f = load_file(o.input);
    Ideal ideal = need_ideal(f, o.ideal_name);
    std::string name = o.name.empty() ? only_name(f) : o.name;
    PairTree host = pair_prune(resolve_pair(f, name));
    Classification c = classify(host, ideal, method_of(o.method), o.depth);
    if (want_positive && c.verdict != Verdict::Positive)
        fail(Errc::NotPositive, name + " projects to a coverable set; no witness exists");
    if (!want_positive && c.verdict != Verdict::SmallCover)
        fail(Errc::NotSmall, name + " projects to an ideal-positive set; no cover exists");
    if (o.json_out) {
        std::fputs(
            classification_report(name, ideal.name, host, c, o.depth, o.letters, o.nmax, o.trace)
                .c_str(),
            stdout);
    } else if (c.witness) {
        std::printf("%s: witness verified (%d states, first-coordinate tree %d states)\n",
                    name.c_str(), c.witness->w.state_count(), c.witness->tx.state_count());
    } else {
        std::printf("%s: cover verified (%s)\n", name.c_str(),
                    c.cover->mode == CoverMode::LetterBound ? "letter bound" : "derived pieces");
    }
    return verdict_code(c.verdict);
}

int cmd_uniformize(const Options& o) {
    SpecFile f = load_file(o.input);
    std::string name = o.name.empty() ? only_name(f) : o.name;
    PairTree host = resolve_pair(f, name);
    EPPoint x = parse_point(o.point);
    UniformizeResult r = leftmost_uniformize(host, x);
    if (o.json_out) {
        std::fputs(uniformize_report(name, x, r).c_str(), stdout);
    } else {
        std::printf("y = %s\n", r.y.to_string().c_str());
        if (r.noncompact_warning)
            std::printf("warning: the section over x is not compact\n");
    }
    return 0;
}

int cmd_game(const Options& o) {
    SpecFile f = load_file(o.input);
    NTree left = resolve_ntree(f, o.left);
    NTree right = resolve_ntree(f, o.right);
    GameResult g = closure_contained(left, right);
    if (o.json_out) {
        std::fputs(game_report(o.left, o.right, g).c_str(), stdout);
    } else if (g.contained) {
        std::printf("contained\n");
    } else {
        std::printf("not contained; counterexample x = %s\n",
                    g.counterexample->to_string().c_str());
    }
    return 0;
}

// Recomputes the engine's three load-bearing answers by independent routes:
// the projection language by walking the pair tree directly, the kernel by
// subset enumeration, and the certificate by reverification at the given
// bounds. Any disagreement is a soundness failure.
int cmd_oracle(const Options& o) {
    SpecFile f = load_file(o.input);
    Ideal ideal = need_ideal(f, o.ideal_name);
    std::vector<std::string> names =
        o.name.empty() ? all_names(f) : std::vector<std::string>{o.name};
    bool all_agree = true;
    json results = json::array();

    for (const std::string& name : names) {
        PairTree host = pair_prune(resolve_pair(f, name));
        json row;
        row["name"] = name;
        if (host.is_empty()) {
            row["empty"] = true;
            results.push_back(row);
            if (!o.json_out) std::printf("%s: empty tree, nothing to cross-check\n", name.c_str());
            continue;
        }

        NTree proj = project(host);
        LetterSet probes = extended_letters(host, o.letters);
        bool proj_ok = snapshot_ntree(proj, probes, o.depth) ==
                       proj_snapshot_pair(host, probes, o.depth);
        row["projection"] = proj_ok ? "ok" : "mismatch";

        auto enumerate = [&](auto&& fast, auto&& slow) -> std::string {
            try {
                return fast() == slow() ? "ok" : "mismatch";
            } catch (const Error& e) {
                if (e.code() == Errc::BoundsTooLarge) return "skipped";
                throw;
            }
        };
        std::string pair_ok = enumerate([&] { return pair_kernel(host, ideal).kernel; },
                                        [&] { return pair_kernel_oracle(host, ideal); });
        std::string tree_ok = enumerate([&] { return positive_kernel(proj, ideal).kernel; },
                                        [&] { return kernel_oracle(proj, ideal); });
        row["pair_kernel"] = pair_ok;
        row["tree_kernel"] = tree_ok;

        std::string cert = "ok";
        std::string verdict;
        try {
            Classification c = classify(host, ideal, Method::Kernel, o.depth);
            verdict = verdict_name(c.verdict);
            CheckReport rep = c.witness
                                  ? verify_witness(host, *c.witness, ideal, o.depth, o.letters)
                                  : verify_cover(host, *c.cover, ideal, o.depth, o.letters,
                                                 o.nmax);
            if (!rep.ok) cert = "mismatch";
        } catch (const Error& e) {
            cert = std::string("mismatch (") + e.what() + ")";
        }
        row["certificate"] = cert;
        row["verdict"] = verdict;
        results.push_back(row);

        bool agree = proj_ok && pair_ok != "mismatch" && tree_ok != "mismatch" && cert == "ok";
        all_agree = all_agree && agree;
        if (!o.json_out)
            std::printf("%s: projection %s, pair kernel %s, tree kernel %s, certificate %s%s%s\n",
                        name.c_str(), proj_ok ? "ok" : "mismatch", pair_ok.c_str(),
                        tree_ok.c_str(), cert.c_str(), verdict.empty() ? "" : " ",
                        verdict.c_str());
    }

    if (o.json_out) {
        json doc;
        doc["schema"] = kSchema;
        doc["command"] = "oracle";
        doc["input"] = json{{"ideal", ideal.name}};
        doc["flags"] = json{{"depth", o.depth}, {"letters", o.letters}, {"nmax", o.nmax}};
        doc["results"] = results;
        doc["agree"] = all_agree;
        std::fputs((doc.dump(2) + "\n").c_str(), stdout);
    }
    return all_agree ? 0 : 3;
}

int cmd_verify(const Options& o) {
    SpecFile f = load_file(o.input);
    Ideal ideal = need_ideal(f, o.ideal_name);
    std::string name = o.name.empty() ? only_name(f) : o.name;
    PairTree host = pair_prune(resolve_pair(f, name));

    std::ifstream in(o.report_path);
    if (!in) fail(Errc::Parse, "cannot read report " + o.report_path);
    std::ostringstream buf;
    buf << in.rdbuf();

    LoadedCertificate lc = load_certificate(buf.str(), host, ideal);
    CheckReport rep;
    std::string verdict;
    if (lc.kind == "witness") {
        rep = verify_witness(host, lc.witness, ideal, o.depth, o.letters);
        verdict = "Positive";
    } else {
        rep = verify_cover(host, lc.cover, ideal, o.depth, o.letters, o.nmax);
        verdict = "SmallCover";
    }
    if (!lc.verdict.empty() && lc.verdict != verdict)
        rep.add("report claims verdict " + lc.verdict + " but carries a " + lc.kind +
                " certificate");

    if (o.json_out) {
        json doc;
        doc["schema"] = kSchema;
        doc["command"] = "verify";
        doc["input"] = json{{"name", name}, {"ideal", ideal.name}};
        doc["flags"] = json{{"depth", o.depth}, {"letters", o.letters}, {"nmax", o.nmax}};
        doc["verdict"] = verdict;
        doc["checks"] = json{{"ok", rep.ok}, {"failures", rep.failures}};
        std::fputs((doc.dump(2) + "\n").c_str(), stdout);
    } else if (rep.ok) {
        std::printf("%s: %s certificate verifies (%s)\n", name.c_str(), lc.kind.c_str(),
                    verdict.c_str());
    } else {
        std::printf("%s: %s certificate FAILS verification\n", name.c_str(), lc.kind.c_str());
        for (const std::string& fmsg : rep.failures) std::printf("  %s\n", fmsg.c_str());
    }
    if (!rep.ok) return 3;
    return verdict == "Positive" ? 10 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{
        "sigma-scope: dichotomy for projections of regular pair trees.\n"
        "Classifies the projection as coverable by countably many ideal-small\n"
        "trees (exit 0) or as containing an ideal-positive subtree (exit 10),\n"
        "with independently verified certificates."};
    app.require_subcommand(1);

    auto add_input = [&](CLI::App* cmd, bool with_name = true) {
        cmd->add_option("--input", o.input, "definitions file")->required();
        if (with_name) cmd->add_option("--name", o.name, "tree to operate on");
        cmd->add_flag("--json", o.json_out, "emit a JSON report");
    };
    auto add_ideal = [&](CLI::App* cmd) {
        cmd->add_option("--ideal", o.ideal_name, "ideal of small letter sets")
            ->capture_default_str();
    };
    auto add_method = [&](CLI::App* cmd) {
        cmd->add_option("--method", o.method, "kernel or derivative")
            ->check(CLI::IsMember({"kernel", "derivative"}))
            ->capture_default_str();
    };
    auto add_bounds = [&](CLI::App* cmd) {
        cmd->add_option("--depth", o.depth, "snapshot and stage depth")->capture_default_str();
        cmd->add_option("--letters", o.letters, "snapshot letter bound")->capture_default_str();
        cmd->add_option("--nmax", o.nmax, "largest cover index checked")->capture_default_str();
    };

    CLI::App* cls = app.add_subcommand("classify", "decide the dichotomy and emit a certificate");
    add_input(cls);
    add_ideal(cls);
    add_method(cls);
    add_bounds(cls);
    cls->add_flag("--trace", o.trace, "include the derivative trace");
    cls->add_flag("--all", o.all, "classify every tree in the input");

    CLI::App* der = app.add_subcommand("derive", "run the stage sequence and report the trace");
    add_input(der);
    der->add_option("--depth", o.depth, "stage cap")->capture_default_str();

    CLI::App* wit = app.add_subcommand("witness", "build and verify a positivity witness");
    add_input(wit);
    add_ideal(wit);
    add_method(wit);
    add_bounds(wit);

    CLI::App* cov = app.add_subcommand("cover", "build and verify a small cover");
    add_input(cov);
    add_ideal(cov);
    add_method(cov);
    add_bounds(cov);

    CLI::App* uni = app.add_subcommand("uniformize", "leftmost section through a given point");
    add_input(uni);
    uni->add_option("--point", o.point, "first coordinate, e.g. \"2,(7)\"")->required();

    CLI::App* gam = app.add_subcommand("game", "closure containment between two trees");
    add_input(gam, false);
    gam->add_option("--left", o.left, "tree whose branches are tested")->required();
    gam->add_option("--right", o.right, "tree that must contain them")->required();

    CLI::App* ora = app.add_subcommand("oracle", "cross-check the engine by brute force");
    add_input(ora);
    add_ideal(ora);
    add_bounds(ora);

    CLI::App* ver = app.add_subcommand("verify", "recheck a stored report's certificate");
    add_input(ver);
    add_ideal(ver);
    add_bounds(ver);
    ver->add_option("--report", o.report_path, "JSON report to recheck")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cls->parsed()) return cmd_classify(o);
        if (der->parsed()) return cmd_derive(o);
        if (wit->parsed()) return cmd_certificate(o, true);
        if (cov->parsed()) return cmd_certificate(o, false);
        if (uni->parsed()) return cmd_uniformize(o);
        if (gam->parsed()) return cmd_game(o);
        if (ora->parsed()) return cmd_oracle(o);
        if (ver->parsed()) return cmd_verify(o);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_for(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
