#include <helix/codec.hpp>
#include <helix/errors.hpp>

#include <json.hpp>

using nlohmann::json;

namespace helix
{
    namespace
    {
        auto provenance_to_json(const Provenance & p) -> json
        {
            return std::visit(
                [](const auto & v) -> json {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, Table1Provenance>)
                        return {{"kind", "table1"}};
                    else if constexpr (std::is_same_v<T, GeneratedProvenance>)
                        return {{"kind", "generated"}, {"seed", v.seed}, {"length", v.length}};
                    else
                        return {{"kind", "external"}, {"note", v.note}};
                },
                p);
        }

        auto provenance_from_json(const json & j) -> Provenance
        {
            auto kind = j.at("kind").get<std::string>();
            if (kind == "table1")
                return Table1Provenance{};
            if (kind == "generated")
                return GeneratedProvenance{j.at("seed").get<std::uint64_t>(), j.at("length").get<std::size_t>()};
            if (kind == "external")
                return ExternalProvenance{j.value("note", std::string{})};
            throw LookupError("unknown codebook provenance '" + kind + "'");
        }
    }

    auto codebook_to_json(const Codebook & cb) -> std::string
    {
        json entries = json::array();
        for (const auto & e : cb.entries())
            entries.push_back({{"vertex", e.vertex}, {"color", e.color}, {"sequence", e.sequence.str()}});

        json doc = {
            {"n", cb.vertex_count()},
            {"k", cb.color_count()},
            {"length", cb.length() ? json(*cb.length()) : json(nullptr)},
            {"provenance", provenance_to_json(cb.provenance())},
            {"entries", std::move(entries)}};
        return doc.dump(2) + "\n";
    }

    auto codebook_from_json(std::string_view text) -> Codebook
    {
        json doc;
        try {
            doc = json::parse(text);
        }
        catch (const json::parse_error & e) {
            throw EncodingError(std::string{"codebook JSON: "} + e.what());
        }

        try {
            std::vector<Codeword> entries;
            for (const auto & e : doc.at("entries"))
                entries.push_back(Codeword{e.at("vertex").get<Vertex>(), e.at("color").get<Color>(),
                    DnaSequence{e.at("sequence").get<std::string>()}});

            Provenance provenance = ExternalProvenance{};
            if (doc.contains("provenance"))
                provenance = provenance_from_json(doc.at("provenance"));

            Codebook cb{doc.at("n").get<Vertex>(), doc.at("k").get<Color>(), std::move(entries), std::move(provenance)};
            if (doc.contains("length") && ! doc.at("length").is_null() && cb.length() != doc.at("length").get<std::size_t>())
                throw EncodingError("codebook JSON: declared length does not match the entries");
            return cb;
        }
        catch (const json::exception & e) {
            throw EncodingError(std::string{"codebook JSON: "} + e.what());
        }
    }
}
