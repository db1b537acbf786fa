#include <helix/codec.hpp>
#include <helix/errors.hpp>

#include <algorithm>

using std::string;

namespace helix
{
    auto Strand::contains(Token t) const noexcept -> bool
    {
        return std::find(_tokens.begin(), _tokens.end(), t) != _tokens.end();
    }

    auto Strand::has_vertex(Vertex v) const noexcept -> bool
    {
        return std::any_of(_tokens.begin(), _tokens.end(), [v](Token t) { return t.vertex == v; });
    }

    auto encode_assignment(const Codebook & cb, const std::map<Vertex, Color> & coloring) -> Strand
    {
        Strand strand;
        Vertex expected = 1;
        for (auto [v, c] : coloring) {
            if (v != expected)
                throw EncodingError("coloring must cover vertices 1.." + std::to_string(coloring.size())
                    + " without gaps; vertex " + std::to_string(expected) + " is missing");
            if (! cb.contains({v, c}))
                throw EncodingError("vertex " + std::to_string(v) + " color " + std::to_string(c)
                    + " is outside the codebook");
            strand.push_back({v, c});
            ++expected;
        }
        return strand;
    }

    auto encode_assignment(const Codebook & cb, std::span<const Color> coloring) -> Strand
    {
        Strand strand;
        for (std::size_t i = 0; i < coloring.size(); ++i) {
            Token t{static_cast<Vertex>(i + 1), coloring[i]};
            if (! cb.contains(t))
                throw EncodingError("vertex " + std::to_string(t.vertex) + " color " + std::to_string(t.color)
                    + " is outside the codebook");
            strand.push_back(t);
        }
        return strand;
    }

    auto render(const Strand & strand, const Codebook & cb) -> DnaSequence
    {
        DnaSequence out;
        for (auto t : strand.tokens())
            out += cb.sequence(t);
        return out;
    }

    auto decode_strand(std::string_view bases, const Codebook & cb) -> Strand
    {
        Strand strand;
        std::size_t pos = 0;
        while (pos < bases.size()) {
            std::optional<Token> hit;
            std::size_t hit_length = 0;
            for (auto len : cb.lengths()) {
                if (pos + len > bases.size())
                    break;
                if ((hit = cb.find(bases.substr(pos, len)))) {
                    hit_length = len;
                    break;
                }
            }
            if (! hit) {
                if (cb.lengths().empty() || bases.size() - pos < cb.lengths().front())
                    throw DecodeError(std::to_string(bases.size() - pos) + " trailing bases at position "
                        + std::to_string(pos) + " do not form a codeword");
                throw DecodeError("no codeword matches at position " + std::to_string(pos));
            }
            strand.push_back(*hit);
            pos += hit_length;
        }
        return strand;
    }

    auto decode_strand(const DnaSequence & seq, const Codebook & cb) -> Strand
    {
        return decode_strand(seq.view(), cb);
    }
}
