#pragma once

#include <helix/codec.hpp>

#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

namespace helix
{
    enum class MatchMode
    {
        /// Token membership.
        symbolic,
        /// Substring search of the codeword within the rendered strand.
        nucleotide
    };

    auto to_string(MatchMode m) -> std::string;
    auto match_mode_from_string(std::string_view s) -> MatchMode;

    /// Snapshot of per-operation counts.
    struct OpCounts
    {
        std::uint64_t append = 0;
        std::uint64_t copy = 0;
        std::uint64_t merge = 0;
        std::uint64_t extract = 0;
        std::uint64_t detect = 0;
        std::uint64_t discard = 0;

        [[nodiscard]] auto total() const noexcept -> std::uint64_t
        {
            return append + copy + merge + extract + detect + discard;
        }

        auto operator==(const OpCounts &) const -> bool = default;
    };

    /// Thread-safe operation counter; increments are never lost.
    class OpCounter
    {
    public:
        enum class Kind
        {
            append,
            copy,
            merge,
            extract,
            detect,
            discard
        };

        void bump(Kind kind) noexcept;
        [[nodiscard]] auto snapshot() const noexcept -> OpCounts;

    private:
        std::atomic<std::uint64_t> _append{0}, _copy{0}, _merge{0}, _extract{0}, _detect{0}, _discard{0};
    };

    class TubeMachine;

    /// A labelled multiset of strands. Tubes are created by a TubeMachine and
    /// are move-only: duplicating contents is a biological Copy and goes
    /// through the machine. The machine must outlive its tubes.
    class Tube
    {
    public:
        Tube() = default;
        Tube(const Tube &) = delete;
        auto operator=(const Tube &) -> Tube & = delete;
        Tube(Tube && other) noexcept;
        auto operator=(Tube && other) noexcept -> Tube &;
        ~Tube();

        [[nodiscard]] auto label() const noexcept -> const std::string & { return _label; }
        [[nodiscard]] auto id() const noexcept -> std::uint64_t { return _id; }

        /// Number of strands, counting multiplicity.
        [[nodiscard]] auto size() const noexcept -> std::size_t { return _strands.size(); }
        [[nodiscard]] auto empty() const noexcept -> bool { return _strands.empty(); }

        /// Contents in no particular order; equal strands appear once per copy.
        [[nodiscard]] auto strands() const noexcept -> std::span<const Strand> { return _strands; }

        /// Contents as strand -> multiplicity.
        [[nodiscard]] auto multiset() const -> std::map<Strand, std::size_t>;

        /// Largest multiplicity of any strand (0 for an empty tube).
        [[nodiscard]] auto max_multiplicity() const -> std::size_t;

    private:
        friend class TubeMachine;

        Tube(TubeMachine * machine, std::uint64_t id, std::string label, std::vector<Strand> strands);
        void release() noexcept;

        TubeMachine * _machine = nullptr;
        std::uint64_t _id = 0;
        std::string _label;
        std::vector<Strand> _strands;
    };

    struct ExtractResult
    {
        /// Strands containing the codeword.
        Tube plus;
        /// Everything else.
        Tube minus;
    };

    /// Adleman-Lipton machine: the six tube operations, operation accounting,
    /// tube lifecycle checks and a running count of strands held in live tubes.
    ///
    /// Operations on distinct tubes may be issued from different threads.
    /// Any one tube must be used by one thread at a time.
    class TubeMachine
    {
    public:
        TubeMachine() = default;
        TubeMachine(const TubeMachine &) = delete;
        auto operator=(const TubeMachine &) -> TubeMachine & = delete;

        auto make_tube(std::string label, std::vector<Strand> strands = {}) -> Tube;

        /// Appends cw's token to the end of every strand. Throws MachineFault
        /// if a strand already holds cw's vertex.
        void append(Tube & tube, const Codeword & cw);

        /// `count` tubes with the source's contents; the source is left empty.
        auto copy(Tube & source, std::size_t count) -> std::vector<Tube>;
        auto copy(Tube & source, std::span<const std::string> labels) -> std::vector<Tube>;

        /// Pours every source into dest; the sources are left empty.
        void merge(Tube & dest, std::span<Tube * const> sources);
        void merge(Tube & dest, std::initializer_list<Tube *> sources);

        /// Partitions the source by whether each strand carries cw; the source
        /// is left empty. Nucleotide mode requires a validated codebook.
        auto extract(Tube & source, const Codeword & cw, MatchMode mode, const Codebook & cb,
            std::string plus_label = {}, std::string minus_label = {}) -> ExtractResult;

        auto detect(const Tube & tube) -> bool;

        /// Drops the contents and retires the tube. Any later operation on
        /// it, including a second discard, is a MachineFault.
        void discard(Tube & tube);

        [[nodiscard]] auto counts() const noexcept -> OpCounts { return _counter.snapshot(); }

        /// Strands currently held by live tubes created by this machine.
        [[nodiscard]] auto live_strands() const noexcept -> std::size_t { return _live.load(); }
        [[nodiscard]] auto peak_live_strands() const noexcept -> std::size_t { return _peak.load(); }

    private:
        friend class Tube;

        void check_live(const Tube & tube, const char * op) const;
        auto fresh_id() noexcept -> std::uint64_t { return _next_id.fetch_add(1) + 1; }
        void add_live(std::size_t n) noexcept;
        void remove_live(std::size_t n) noexcept;

        OpCounter _counter;
        std::atomic<std::uint64_t> _next_id{0};
        std::atomic<std::size_t> _live{0};
        std::atomic<std::size_t> _peak{0};
        mutable std::mutex _retired_mutex;
        std::unordered_set<std::uint64_t> _retired;
    };
}
