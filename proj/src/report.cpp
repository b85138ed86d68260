#include "sigscope/report.hpp"

#include "json.hpp"
#include "sigscope/errors.hpp"
#include "sigscope/parse.hpp"

namespace sigscope {

namespace {

using nlohmann::json;

json check_json(const CheckReport& rep) {
    return json{{"ok", rep.ok}, {"failures", rep.failures}};
}

const char* mode_name(CoverMode m) {
    return m == CoverMode::LetterBound ? "letter-bound" : "derived-pieces";
}

json trace_json(const DerivativeTrace& trace) {
    json doc;
    json stages = json::array();
    for (std::size_t i = 0; i < trace.stages.size(); ++i)
        stages.push_back(json{{"index", i},
                              {"states", trace.stages[i].state_count()},
                              {"text", to_text(trace.stages[i], "S" + std::to_string(i))}});
    doc["stages"] = stages;
    json removals = json::array();
    for (const Removal& r : trace.removals)
        removals.push_back(json{
            {"stage", r.stage},
            {"state", r.state},
            {"reason", r.reason == RemovalReason::ClosureContained ? "closure-contained"
                                                                   : "pruned"}});
    doc["removals"] = removals;
    doc["lambda"] = trace.lambda;
    doc["stabilized"] = trace.stabilized;
    return doc;
}

json certificate_json(const Classification& c, const PairTree& host, Letter nmax) {
    json cert;
    if (c.witness) {
        cert["kind"] = "witness";
        cert["w"] = to_text(c.witness->w, "W");
        cert["tx"] = to_text(c.witness->tx, "TX");
        json emb = json::array();
        for (int q = 0; q < c.witness->w.state_count(); ++q)
            emb.push_back(json::array(
                {c.witness->w.state(q).name, host.state(c.witness->embedding[q]).name}));
        cert["embedding"] = emb;
    } else if (c.cover) {
        cert["kind"] = "cover";
        cert["mode"] = mode_name(c.cover->mode);
        cert["source"] = to_text(c.cover->source, "SRC");
        json pieces = json::array();
        for (std::size_t i = 0; i < c.cover->pieces.size(); ++i)
            pieces.push_back(to_text(c.cover->pieces[i], "P" + std::to_string(i)));
        cert["pieces"] = pieces;
        json trees = json::array();
        for (Letter n = 0; n <= nmax; ++n)
            trees.push_back(to_text(cover_tree(*c.cover, n), "T" + std::to_string(n)));
        cert["trees"] = trees;
    }
    return cert;
}

}  // namespace

std::string classification_report(const std::string& input, const std::string& ideal,
                                  const PairTree& host, const Classification& c,
                                  int depth, Letter letters, Letter nmax, bool include_trace) {
    json doc;
    doc["schema"] = kSchema;
    doc["command"] = "classify";
    doc["input"] = json{{"name", input}, {"ideal", ideal}, {"method", method_name(c.method)}};
    doc["flags"] = json{{"depth", depth}, {"letters", letters}, {"nmax", nmax}};
    doc["verdict"] = verdict_name(c.verdict);
    doc["trivial_empty"] = c.trivial_empty;
    doc["certificate"] = certificate_json(c, host, nmax);
    doc["checks"] = check_json(c.certificate_check);
    if (include_trace && c.trace) doc["trace"] = trace_json(*c.trace);
    doc["timing"] = json{{"kernel_iterations", c.kernel_iterations},
                         {"big_count", c.big_count},
                         {"game_calls", c.game_calls},
                         {"piece_count", c.piece_count}};
    return doc.dump(2) + "\n";
}

std::string derive_report(const std::string& input, const DerivativeTrace& trace, int depth) {
    json doc = trace_json(trace);
    doc["schema"] = kSchema;
    doc["command"] = "derive";
    doc["input"] = json{{"name", input}};
    doc["flags"] = json{{"depth", depth}};
    doc["timing"] = json{{"game_calls", trace.game_calls}};
    return doc.dump(2) + "\n";
}

std::string uniformize_report(const std::string& input, const EPPoint& x,
                              const UniformizeResult& r) {
    json doc;
    doc["schema"] = kSchema;
    doc["command"] = "uniformize";
    doc["input"] = json{{"name", input}};
    doc["x"] = x.to_string();
    doc["y"] = r.y.to_string();
    doc["noncompact_warning"] = r.noncompact_warning;
    doc["timing"] = json{{"walk_steps", r.walk_steps}};
    return doc.dump(2) + "\n";
}

std::string game_report(const std::string& left, const std::string& right, const GameResult& g) {
    json doc;
    doc["schema"] = kSchema;
    doc["command"] = "game";
    doc["input"] = json{{"left", left}, {"right", right}};
    doc["contained"] = g.contained;
    if (g.counterexample)
        doc["counterexample"] = g.counterexample->to_string();
    else
        doc["counterexample"] = nullptr;
    doc["timing"] = json{{"positions_explored", g.positions_explored}};
    return doc.dump(2) + "\n";
}

LoadedCertificate load_certificate(const std::string& json_text, const PairTree& host,
                                   const Ideal& ideal) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const std::exception& e) {
        fail(Errc::Parse, std::string("report is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("schema", "") != kSchema)
        fail(Errc::Parse, "report schema is not " + std::string(kSchema));

    LoadedCertificate out;
    out.verdict = doc.value("verdict", "");
    out.ideal = doc.contains("input") ? doc["input"].value("ideal", "") : "";
    if (!out.ideal.empty() && out.ideal != ideal.name)
        fail(Errc::Validation, "report was produced for ideal " + out.ideal + ", not " +
                                   ideal.name);
    const json& cert = doc.at("certificate");
    out.kind = cert.value("kind", "");
    if (out.kind == "witness") {
        SpecFile wf = parse_file(cert.at("w").get<std::string>());
        SpecFile tf = parse_file(cert.at("tx").get<std::string>());
        if (wf.pairtrees.size() != 1 || tf.ntrees.size() != 1)
            fail(Errc::Parse, "witness certificate must carry one pair tree and one tree");
        out.witness.w = wf.pairtrees[0].tree;
        out.witness.tx = tf.ntrees[0].tree;
        out.witness.embedding.assign(out.witness.w.state_count(), -1);
        for (const json& pair : cert.at("embedding")) {
            std::string wname = pair.at(0).get<std::string>();
            std::string hname = pair.at(1).get<std::string>();
            int wq = out.witness.w.state_by_name(wname);
            if (wq < 0) fail(Errc::Validation, "embedding names unknown witness state " + wname);
            out.witness.embedding[wq] = host.state_by_name(hname);
        }
    } else if (out.kind == "cover") {
        std::string mode = cert.value("mode", "");
        out.cover.mode =
            mode == "derived-pieces" ? CoverMode::DerivedPieces : CoverMode::LetterBound;
        out.cover.ideal = ideal;
        SpecFile sf = parse_file(cert.at("source").get<std::string>());
        if (sf.pairtrees.size() == 1) out.cover.source = sf.pairtrees[0].tree;
        for (const json& piece : cert.at("pieces")) {
            SpecFile pf = parse_file(piece.get<std::string>());
            if (pf.pairtrees.size() != 1)
                fail(Errc::Parse, "cover piece must carry exactly one pair tree");
            out.cover.pieces.push_back(pf.pairtrees[0].tree);
        }
    } else {
        fail(Errc::Parse, "certificate kind must be witness or cover");
    }
    return out;
}

}  // namespace sigscope
