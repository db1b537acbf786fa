#include <helix/errors.hpp>
#include <helix/solver.hpp>

#include <json.hpp>

using json = nlohmann::ordered_json;

namespace helix
{
    namespace
    {
        auto counts_to_json(const OpCounts & c) -> json
        {
            return {{"append", c.append}, {"copy", c.copy}, {"merge", c.merge}, {"extract", c.extract},
                {"detect", c.detect}, {"discard", c.discard}};
        }

        auto counts_from_json(const json & j) -> OpCounts
        {
            OpCounts c;
            c.append = j.at("append").get<std::uint64_t>();
            c.copy = j.at("copy").get<std::uint64_t>();
            c.merge = j.at("merge").get<std::uint64_t>();
            c.extract = j.at("extract").get<std::uint64_t>();
            c.detect = j.at("detect").get<std::uint64_t>();
            c.discard = j.at("discard").get<std::uint64_t>();
            return c;
        }

        auto mode_from_string(const std::string & s) -> SolveMode
        {
            if (s == "incremental")
                return SolveMode::incremental;
            if (s == "monolithic")
                return SolveMode::monolithic;
            throw EncodingError("trace: unknown mode '" + s + "'");
        }
    }

    auto run_to_json(const RunResult & run) -> std::string
    {
        const auto & t = run.trace;
        json steps = json::array();
        for (const auto & s : t.steps)
            steps.push_back({{"vertex", s.vertex}, {"t0_before", s.t0_before},
                {"per_color_after_append", s.per_color_after_append},
                {"per_color_after_filter", s.per_color_after_filter}, {"discarded", s.discarded},
                {"t0_after", s.t0_after}});

        json doc = {
            {"graph", {{"n", t.graph_n}, {"m", t.graph_m}}},
            {"k", t.k},
            {"order", t.order},
            {"mode", to_string(t.mode)},
            {"match", to_string(t.match)},
            {"construction", t.construction},
            {"steps", std::move(steps)},
            {"op_totals", counts_to_json(t.op_totals)},
            {"peak_tube_size", t.peak_tube_size},
            {"colorable", run.solutions.colorable},
            {"solutions", run.solutions.colorings}};
        return doc.dump(2) + "\n";
    }

    auto run_from_json(std::string_view text) -> RunResult
    {
        try {
            auto doc = json::parse(text);
            RunResult run;
            auto & t = run.trace;
            t.graph_n = doc.at("graph").at("n").get<Vertex>();
            t.graph_m = doc.at("graph").at("m").get<std::uint64_t>();
            t.k = doc.at("k").get<Color>();
            t.order = doc.at("order").get<std::vector<Vertex>>();
            t.mode = mode_from_string(doc.at("mode").get<std::string>());
            t.match = match_mode_from_string(doc.at("match").get<std::string>());
            t.construction = doc.at("construction").get<std::string>();
            for (const auto & s : doc.at("steps")) {
                StepRecord r;
                r.vertex = s.at("vertex").get<Vertex>();
                r.t0_before = s.at("t0_before").get<std::uint64_t>();
                r.per_color_after_append = s.at("per_color_after_append").get<std::vector<std::uint64_t>>();
                r.per_color_after_filter = s.at("per_color_after_filter").get<std::vector<std::uint64_t>>();
                r.discarded = s.at("discarded").get<std::uint64_t>();
                r.t0_after = s.at("t0_after").get<std::uint64_t>();
                t.steps.push_back(std::move(r));
            }
            t.op_totals = counts_from_json(doc.at("op_totals"));
            t.peak_tube_size = doc.at("peak_tube_size").get<std::uint64_t>();
            run.solutions.colorable = doc.at("colorable").get<bool>();
            run.solutions.colorings = doc.at("solutions").get<std::vector<Coloring>>();
            return run;
        }
        catch (const json::exception & e) {
            throw EncodingError(std::string{"trace: "} + e.what());
        }
        catch (const LookupError & e) {
            throw EncodingError(std::string{"trace: "} + e.what());
        }
    }
}
