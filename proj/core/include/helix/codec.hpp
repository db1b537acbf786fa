#pragma once

#include <helix/graph.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace helix
{
    /// Color index in 0..k-1. 0, 1, 2 are red, green, blue.
    using Color = std::int32_t;

    /// "red", "green", "blue", then "color3", "color4", ...
    auto color_name(Color c) -> std::string;

    /// One (vertex, color) assignment; the symbolic content of a codeword.
    struct Token
    {
        Vertex vertex;
        Color color;

        auto operator<=>(const Token &) const = default;
    };

    /// A string over {A, C, G, T}.
    class DnaSequence
    {
    public:
        DnaSequence() = default;

        /// Throws EncodingError on any symbol outside ACGT.
        explicit DnaSequence(std::string bases);

        [[nodiscard]] auto str() const noexcept -> const std::string & { return _bases; }
        [[nodiscard]] auto view() const noexcept -> std::string_view { return _bases; }
        [[nodiscard]] auto size() const noexcept -> std::size_t { return _bases.size(); }
        [[nodiscard]] auto empty() const noexcept -> bool { return _bases.empty(); }

        auto operator+=(const DnaSequence & other) -> DnaSequence &
        {
            _bases += other._bases;
            return *this;
        }

        auto operator<=>(const DnaSequence &) const = default;

    private:
        std::string _bases;
    };

    struct Codeword
    {
        Vertex vertex;
        Color color;
        DnaSequence sequence;

        [[nodiscard]] auto token() const noexcept -> Token { return {vertex, color}; }
    };

    struct Table1Provenance
    {
        auto operator==(const Table1Provenance &) const -> bool = default;
    };

    struct GeneratedProvenance
    {
        std::uint64_t seed;
        std::size_t length;
        auto operator==(const GeneratedProvenance &) const -> bool = default;
    };

    /// Loaded from a user file, or derived (e.g. restricted) from another codebook.
    struct ExternalProvenance
    {
        std::string note;
        auto operator==(const ExternalProvenance &) const -> bool = default;
    };

    using Provenance = std::variant<Table1Provenance, GeneratedProvenance, ExternalProvenance>;

    /// An occurrence of `codeword` inside the concatenation
    /// left ‖ between... ‖ right that is not the codeword's own aligned slot.
    /// `between` is empty unless codeword lengths differ by more than one,
    /// in which case an occurrence may straddle a whole middle codeword.
    struct JunctionViolation
    {
        Token codeword;
        Token left;
        Token right;
        std::size_t offset;
        std::vector<Token> between = {};

        auto operator==(const JunctionViolation &) const -> bool = default;
    };

    struct ValidationReport
    {
        std::vector<std::pair<Token, Token>> duplicates;
        std::vector<JunctionViolation> junction_violations;
        /// Over equal-length pairs only; nullopt if there are no such pairs.
        std::optional<std::size_t> min_pairwise_hamming;

        [[nodiscard]] auto ok() const noexcept -> bool
        {
            return duplicates.empty() && junction_violations.empty();
        }
    };

    /// Immutable map from (vertex, color) to DNA codeword, with exactly one
    /// entry per pair for vertices 1..n and colors 0..k-1. Validation runs
    /// once at construction and the report is kept alongside.
    class Codebook
    {
    public:
        Codebook() = default;

        /// `entries` must hold exactly one codeword per (vertex, color)
        /// pair; throws LookupError otherwise. Sequences must be non-empty.
        Codebook(Vertex n, Color k, std::vector<Codeword> entries, Provenance provenance);

        [[nodiscard]] auto vertex_count() const noexcept -> Vertex { return _n; }
        [[nodiscard]] auto color_count() const noexcept -> Color { return _k; }
        [[nodiscard]] auto size() const noexcept -> std::size_t { return _entries.size(); }
        [[nodiscard]] auto provenance() const noexcept -> const Provenance & { return _provenance; }

        /// Common codeword length, or nullopt if lengths vary.
        [[nodiscard]] auto length() const -> std::optional<std::size_t>;

        [[nodiscard]] auto contains(Token t) const noexcept -> bool;
        [[nodiscard]] auto codeword(Vertex v, Color c) const -> const Codeword &;
        [[nodiscard]] auto codeword(Token t) const -> const Codeword & { return codeword(t.vertex, t.color); }
        [[nodiscard]] auto sequence(Token t) const -> const DnaSequence & { return codeword(t).sequence; }

        /// All entries, vertex-major then color.
        [[nodiscard]] auto entries() const noexcept -> std::span<const Codeword> { return _entries; }

        [[nodiscard]] auto report() const noexcept -> const ValidationReport & { return _report; }
        [[nodiscard]] auto validated() const noexcept -> bool { return _report.ok(); }

        /// First n vertices and first k colors of this codebook.
        [[nodiscard]] auto restrict(Vertex n, Color k) const -> Codebook;

        /// Token whose codeword is exactly `bases`, if any.
        [[nodiscard]] auto find(std::string_view bases) const -> std::optional<Token>;

        /// Distinct codeword lengths, ascending.
        [[nodiscard]] auto lengths() const noexcept -> std::span<const std::size_t> { return _lengths; }

        auto operator==(const Codebook & other) const -> bool;

    private:
        Vertex _n = 0;
        Color _k = 0;
        std::vector<Codeword> _entries;
        Provenance _provenance = ExternalProvenance{};
        std::map<std::string, Token, std::less<>> _by_sequence;
        std::vector<std::size_t> _lengths;
        ValidationReport _report;
    };

    /// Duplicate sequences plus every non-aligned codeword occurrence across
    /// codeword junctions. Exhaustive, never throws.
    auto validate_codebook(std::span<const Codeword> entries) -> ValidationReport;
    auto validate_codebook(const Codebook & cb) -> ValidationReport;

    /// The 12-vertex, 3-color codebook, stored exactly as published.
    auto builtin_table1() -> const Codebook &;

    /// Seeded, junction-safe, fixed-length codebook. Deterministic across
    /// platforms for identical arguments.
    auto generate_codebook(Vertex n, Color k, std::size_t length, std::uint64_t seed,
        std::size_t attempts_per_codeword = 10'000) -> Codebook;

    /// JSON document {n, k, length, provenance, entries:[{vertex, color, sequence}]}.
    auto codebook_to_json(const Codebook & cb) -> std::string;
    auto codebook_from_json(std::string_view text) -> Codebook;

    /// A candidate (possibly partial) solution: ordered (vertex, color) tokens.
    class Strand
    {
    public:
        Strand() = default;
        explicit Strand(std::vector<Token> tokens) : _tokens(std::move(tokens)) {}

        [[nodiscard]] auto tokens() const noexcept -> std::span<const Token> { return _tokens; }
        [[nodiscard]] auto size() const noexcept -> std::size_t { return _tokens.size(); }
        [[nodiscard]] auto empty() const noexcept -> bool { return _tokens.empty(); }
        [[nodiscard]] auto contains(Token t) const noexcept -> bool;
        [[nodiscard]] auto has_vertex(Vertex v) const noexcept -> bool;

        void push_back(Token t) { _tokens.push_back(t); }

        auto operator<=>(const Strand &) const = default;

    private:
        std::vector<Token> _tokens;
    };

    /// Strand [(1, c(1)), ..., (i, c(i))]. The map must cover exactly 1..i.
    auto encode_assignment(const Codebook & cb, const std::map<Vertex, Color> & coloring) -> Strand;

    /// Same, with coloring[v - 1] the color of vertex v.
    auto encode_assignment(const Codebook & cb, std::span<const Color> coloring) -> Strand;

    /// Concatenated codeword sequences in token order.
    auto render(const Strand & strand, const Codebook & cb) -> DnaSequence;

    /// Greedy left-to-right segmentation into codewords.
    auto decode_strand(std::string_view bases, const Codebook & cb) -> Strand;
    auto decode_strand(const DnaSequence & seq, const Codebook & cb) -> Strand;
}
