#include <helix/codec.hpp>
#include <helix/errors.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace helix
{
    auto color_name(Color c) -> string
    {
        switch (c) {
            case 0: return "red";
            case 1: return "green";
            case 2: return "blue";
            default: return "color" + std::to_string(c);
        }
    }

    DnaSequence::DnaSequence(string bases) :
        _bases(std::move(bases))
    {
        for (size_t i = 0; i < _bases.size(); ++i) {
            char b = _bases[i];
            if (b != 'A' && b != 'C' && b != 'G' && b != 'T')
                throw EncodingError("invalid base '" + string(1, b) + "' at position " + std::to_string(i));
        }
    }

    Codebook::Codebook(Vertex n, Color k, vector<Codeword> entries, Provenance provenance) :
        _n(n),
        _k(k),
        _entries(std::move(entries)),
        _provenance(std::move(provenance))
    {
        if (n < 0 || k < 1)
            throw LookupError("codebook needs n >= 0 and k >= 1");
        if (_entries.size() != static_cast<size_t>(n) * static_cast<size_t>(k))
            throw LookupError("codebook for n=" + std::to_string(n) + ", k=" + std::to_string(k) + " needs "
                + std::to_string(static_cast<size_t>(n) * static_cast<size_t>(k)) + " entries, got "
                + std::to_string(_entries.size()));

        std::sort(_entries.begin(), _entries.end(), [](const Codeword & a, const Codeword & b) {
            return a.token() < b.token();
        });
        for (size_t i = 0; i < _entries.size(); ++i) {
            const auto & e = _entries[i];
            Token expected{static_cast<Vertex>(i / k + 1), static_cast<Color>(i % k)};
            if (e.token() != expected)
                throw LookupError("codebook entry (" + std::to_string(e.vertex) + "," + std::to_string(e.color)
                    + ") is duplicated or out of range");
            if (e.sequence.empty())
                throw EncodingError("empty codeword for vertex " + std::to_string(e.vertex) + ", color "
                    + std::to_string(e.color));
            _by_sequence.emplace(e.sequence.str(), e.token());
            _lengths.push_back(e.sequence.size());
        }
        std::sort(_lengths.begin(), _lengths.end());
        _lengths.erase(std::unique(_lengths.begin(), _lengths.end()), _lengths.end());

        _report = validate_codebook(_entries);
    }

    auto Codebook::length() const -> std::optional<size_t>
    {
        if (_lengths.size() == 1)
            return _lengths.front();
        return std::nullopt;
    }

    auto Codebook::contains(Token t) const noexcept -> bool
    {
        return t.vertex >= 1 && t.vertex <= _n && t.color >= 0 && t.color < _k;
    }

    auto Codebook::codeword(Vertex v, Color c) const -> const Codeword &
    {
        if (! contains({v, c}))
            throw LookupError("no codeword for vertex " + std::to_string(v) + ", color " + std::to_string(c)
                + " (codebook covers " + std::to_string(_n) + " vertices x " + std::to_string(_k) + " colors)");
        return _entries[static_cast<size_t>(v - 1) * static_cast<size_t>(_k) + static_cast<size_t>(c)];
    }

    auto Codebook::restrict(Vertex n, Color k) const -> Codebook
    {
        if (n < 0 || n > _n || k < 1 || k > _k)
            throw LookupError("cannot restrict a " + std::to_string(_n) + "x" + std::to_string(_k) + " codebook to "
                + std::to_string(n) + "x" + std::to_string(k));
        vector<Codeword> kept;
        for (const auto & e : _entries)
            if (e.vertex <= n && e.color < k)
                kept.push_back(e);
        return Codebook{n, k, std::move(kept), _provenance};
    }

    auto Codebook::find(string_view bases) const -> std::optional<Token>
    {
        if (auto it = _by_sequence.find(bases); it != _by_sequence.end())
            return it->second;
        return std::nullopt;
    }

    auto Codebook::operator==(const Codebook & other) const -> bool
    {
        if (_n != other._n || _k != other._k || _provenance != other._provenance)
            return false;
        return std::equal(_entries.begin(), _entries.end(), other._entries.begin(), other._entries.end(),
            [](const Codeword & a, const Codeword & b) { return a.token() == b.token() && a.sequence == b.sequence; });
    }

    namespace
    {
        struct JunctionScanner
        {
            std::span<const Codeword> entries;
            std::unordered_map<string_view, vector<size_t>> by_sequence;
            vector<size_t> lengths;
            size_t max_length = 0;
            size_t min_length = 0;
            ValidationReport * report;

            JunctionScanner(std::span<const Codeword> e, ValidationReport & r) :
                entries(e),
                report(&r)
            {
                for (size_t i = 0; i < entries.size(); ++i) {
                    by_sequence[entries[i].sequence.view()].push_back(i);
                    lengths.push_back(entries[i].sequence.size());
                }
                std::sort(lengths.begin(), lengths.end());
                lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
                if (! lengths.empty()) {
                    min_length = lengths.front();
                    max_length = lengths.back();
                }
            }

            // Every occurrence in left ‖ right except each end's own aligned copy.
            void scan_pair(size_t left, size_t right)
            {
                const auto & x = entries[left].sequence.str();
                const auto & y = entries[right].sequence.str();
                string joined = x + y;
                string_view view{joined};
                for (size_t offset = 0; offset < joined.size(); ++offset)
                    for (auto len : lengths) {
                        if (offset + len > joined.size())
                            break;
                        auto window = view.substr(offset, len);
                        if ((offset == 0 && window == x) || (offset == x.size() && window == y))
                            continue;
                        auto it = by_sequence.find(window);
                        if (it == by_sequence.end())
                            continue;
                        for (auto c : it->second)
                            report->junction_violations.push_back(
                                {entries[c].token(), entries[left].token(), entries[right].token(), offset});
                    }
            }

            // Occurrences that start inside `left`, cover every codeword in
            // `between` and finish inside `right`. Only possible when some
            // codeword is at least two bases longer than another.
            void scan_spanning(size_t left, const vector<size_t> & between, size_t right)
            {
                string joined = entries[left].sequence.str();
                size_t left_size = joined.size();
                for (auto m : between)
                    joined += entries[m].sequence.str();
                size_t before_right = joined.size();
                joined += entries[right].sequence.str();
                string_view view{joined};

                for (size_t offset = 0; offset < left_size; ++offset)
                    for (auto len : lengths) {
                        if (offset + len <= before_right)
                            continue;
                        if (offset + len > joined.size())
                            break;
                        auto it = by_sequence.find(view.substr(offset, len));
                        if (it == by_sequence.end())
                            continue;
                        vector<Token> middle;
                        for (auto m : between)
                            middle.push_back(entries[m].token());
                        for (auto c : it->second)
                            report->junction_violations.push_back(
                                {entries[c].token(), entries[left].token(), entries[right].token(), offset, middle});
                    }
            }

            void extend_between(vector<size_t> & between, size_t between_length)
            {
                for (size_t m = 0; m < entries.size(); ++m) {
                    size_t grown = between_length + entries[m].sequence.size();
                    // An occurrence must start at least one base into the left
                    // word and end at least one base into the right word.
                    if (grown + 2 > max_length)
                        continue;
                    between.push_back(m);
                    for (size_t left = 0; left < entries.size(); ++left)
                        for (size_t right = 0; right < entries.size(); ++right)
                            scan_spanning(left, between, right);
                    extend_between(between, grown);
                    between.pop_back();
                }
            }

            void run()
            {
                for (size_t left = 0; left < entries.size(); ++left)
                    for (size_t right = 0; right < entries.size(); ++right)
                        scan_pair(left, right);

                if (max_length >= min_length + 2) {
                    vector<size_t> between;
                    extend_between(between, 0);
                }
            }
        };
    }

    auto validate_codebook(std::span<const Codeword> entries) -> ValidationReport
    {
        ValidationReport report;

        for (size_t i = 0; i < entries.size(); ++i)
            for (size_t j = i + 1; j < entries.size(); ++j) {
                const auto & a = entries[i].sequence;
                const auto & b = entries[j].sequence;
                if (a == b)
                    report.duplicates.emplace_back(entries[i].token(), entries[j].token());
                if (a.size() == b.size()) {
                    auto d = static_cast<size_t>(std::inner_product(a.str().begin(), a.str().end(), b.str().begin(),
                        size_t{0}, std::plus<>{}, std::not_equal_to<>{}));
                    if (! report.min_pairwise_hamming || d < *report.min_pairwise_hamming)
                        report.min_pairwise_hamming = d;
                }
            }

        JunctionScanner scanner{entries, report};
        scanner.run();
        return report;
    }

    auto validate_codebook(const Codebook & cb) -> ValidationReport
    {
        return validate_codebook(cb.entries());
    }

    namespace
    {
        // Incremental junction-safety check for equal-length words. A word w
        // occurs at offset o (0 < o < L) of x ‖ y exactly when w's first L - o
        // bases are a suffix of x and its last o bases are a prefix of y, so
        // keeping every prefix and suffix of the accepted words makes each
        // candidate check O(L^2).
        class FixedLengthPool
        {
        public:
            explicit FixedLengthPool(size_t length) :
                _length(length),
                _prefixes(length),
                _suffixes(length)
            {
            }

            [[nodiscard]] auto admits(const string & w) const -> bool
            {
                if (_words.contains(w))
                    return false;

                for (size_t o = 1; o < _length; ++o) {
                    auto head = w.substr(0, _length - o);
                    auto tail = w.substr(_length - o);
                    bool head_is_suffix = _suffixes[_length - o].contains(head) || ends_with(w, head);
                    bool tail_is_prefix = _prefixes[o].contains(tail) || w.starts_with(tail);
                    // w straddling a junction of two pool words (or itself).
                    if (head_is_suffix && tail_is_prefix)
                        return false;
                }

                // Some pool word (or w) straddling a junction that involves w.
                string self_pair = w + w;
                for (size_t o = 1; o < _length; ++o)
                    if (_words.contains(self_pair.substr(o, _length)) || self_pair.compare(o, _length, w) == 0)
                        return false;
                for (const auto & x : _words) {
                    string wx = w + x;
                    string xw = x + w;
                    for (size_t o = 1; o < _length; ++o) {
                        auto a = wx.substr(o, _length);
                        auto b = xw.substr(o, _length);
                        if (_words.contains(a) || a == w || _words.contains(b) || b == w)
                            return false;
                    }
                }
                return true;
            }

            void add(const string & w)
            {
                _words.insert(w);
                for (size_t len = 1; len < _length; ++len) {
                    _prefixes[len].insert(w.substr(0, len));
                    _suffixes[len].insert(w.substr(_length - len));
                }
            }

        private:
            static auto ends_with(const string & s, const string & suffix) -> bool
            {
                return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
            }

            size_t _length;
            std::unordered_set<string> _words;
            vector<std::unordered_set<string>> _prefixes;
            vector<std::unordered_set<string>> _suffixes;
        };
    }

    auto generate_codebook(Vertex n, Color k, size_t length, std::uint64_t seed, size_t attempts_per_codeword)
        -> Codebook
    {
        if (n < 0 || k < 1)
            throw GenerationError("generate_codebook needs n >= 0 and k >= 1");
        if (length < 4)
            throw GenerationError("codeword length must be at least 4");

        static constexpr char bases[] = {'A', 'C', 'G', 'T'};
        std::mt19937_64 rng{seed};
        FixedLengthPool pool{length};
        vector<Codeword> entries;

        for (Vertex v = 1; v <= n; ++v)
            for (Color c = 0; c < k; ++c) {
                string candidate(length, 'A');
                bool accepted = false;
                for (size_t attempt = 0; attempt < attempts_per_codeword && ! accepted; ++attempt) {
                    for (auto & b : candidate)
                        b = bases[rng() >> 62];
                    accepted = pool.admits(candidate);
                }
                if (! accepted)
                    throw GenerationError("no junction-safe codeword for vertex " + std::to_string(v) + ", color "
                        + std::to_string(c) + " after " + std::to_string(attempts_per_codeword)
                        + " attempts; try a longer codeword length than " + std::to_string(length));
                pool.add(candidate);
                entries.push_back(Codeword{v, c, DnaSequence{candidate}});
            }

        Codebook result{n, k, std::move(entries), GeneratedProvenance{seed, length}};
        if (! result.validated())
            throw GenerationError("internal error: generated codebook failed validation");
        return result;
    }
}
