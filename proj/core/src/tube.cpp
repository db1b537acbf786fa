#include <helix/errors.hpp>
#include <helix/tube.hpp>

#include <algorithm>

using std::size_t;
using std::string;
using std::vector;

namespace helix
{
    auto to_string(MatchMode m) -> string
    {
        return m == MatchMode::symbolic ? "symbolic" : "nucleotide";
    }

    auto match_mode_from_string(std::string_view s) -> MatchMode
    {
        if (s == "symbolic")
            return MatchMode::symbolic;
        if (s == "nucleotide")
            return MatchMode::nucleotide;
        throw LookupError("unknown match mode '" + string{s} + "' (valid: symbolic, nucleotide)");
    }

    void OpCounter::bump(Kind kind) noexcept
    {
        switch (kind) {
            case Kind::append: _append.fetch_add(1, std::memory_order_relaxed); break;
            case Kind::copy: _copy.fetch_add(1, std::memory_order_relaxed); break;
            case Kind::merge: _merge.fetch_add(1, std::memory_order_relaxed); break;
            case Kind::extract: _extract.fetch_add(1, std::memory_order_relaxed); break;
            case Kind::detect: _detect.fetch_add(1, std::memory_order_relaxed); break;
            case Kind::discard: _discard.fetch_add(1, std::memory_order_relaxed); break;
        }
    }

    auto OpCounter::snapshot() const noexcept -> OpCounts
    {
        return {_append.load(), _copy.load(), _merge.load(), _extract.load(), _detect.load(), _discard.load()};
    }

    Tube::Tube(TubeMachine * machine, std::uint64_t id, string label, vector<Strand> strands) :
        _machine(machine),
        _id(id),
        _label(std::move(label)),
        _strands(std::move(strands))
    {
    }

    Tube::Tube(Tube && other) noexcept :
        _machine(std::exchange(other._machine, nullptr)),
        _id(std::exchange(other._id, 0)),
        _label(std::move(other._label)),
        _strands(std::move(other._strands))
    {
        other._strands.clear();
    }

    auto Tube::operator=(Tube && other) noexcept -> Tube &
    {
        if (this != &other) {
            release();
            _machine = std::exchange(other._machine, nullptr);
            _id = std::exchange(other._id, 0);
            _label = std::move(other._label);
            _strands = std::move(other._strands);
            other._strands.clear();
        }
        return *this;
    }

    Tube::~Tube()
    {
        release();
    }

    void Tube::release() noexcept
    {
        if (_machine)
            _machine->remove_live(_strands.size());
        _strands.clear();
        _machine = nullptr;
    }

    auto Tube::multiset() const -> std::map<Strand, size_t>
    {
        std::map<Strand, size_t> result;
        for (const auto & s : _strands)
            ++result[s];
        return result;
    }

    auto Tube::max_multiplicity() const -> size_t
    {
        size_t best = 0;
        for (const auto & [strand, count] : multiset())
            best = std::max(best, count);
        return best;
    }

    void TubeMachine::add_live(size_t n) noexcept
    {
        auto now = _live.fetch_add(n) + n;
        auto peak = _peak.load();
        while (now > peak && ! _peak.compare_exchange_weak(peak, now))
            ;
    }

    void TubeMachine::remove_live(size_t n) noexcept
    {
        _live.fetch_sub(n);
    }

    void TubeMachine::check_live(const Tube & tube, const char * op) const
    {
        if (tube._machine != this)
            throw MachineFault(string{op} + ": tube '" + tube._label + "' does not belong to this machine");
        std::lock_guard lock{_retired_mutex};
        if (_retired.contains(tube._id))
            throw MachineFault(string{op} + ": tube '" + tube._label + "' has been discarded");
    }

    auto TubeMachine::make_tube(string label, vector<Strand> strands) -> Tube
    {
        add_live(strands.size());
        return Tube{this, fresh_id(), std::move(label), std::move(strands)};
    }

    void TubeMachine::append(Tube & tube, const Codeword & cw)
    {
        check_live(tube, "append");
        for (const auto & s : tube._strands)
            if (s.has_vertex(cw.vertex))
                throw MachineFault("append: a strand in tube '" + tube._label + "' already holds vertex "
                    + std::to_string(cw.vertex));
        for (auto & s : tube._strands)
            s.push_back(cw.token());
        _counter.bump(OpCounter::Kind::append);
    }

    auto TubeMachine::copy(Tube & source, size_t count) -> vector<Tube>
    {
        vector<string> labels;
        for (size_t i = 1; i <= count; ++i)
            labels.push_back(source._label + "#" + std::to_string(i));
        return copy(source, labels);
    }

    auto TubeMachine::copy(Tube & source, std::span<const string> labels) -> vector<Tube>
    {
        check_live(source, "copy");
        if (labels.empty())
            throw MachineFault("copy: needs at least one destination tube");

        auto size = source._strands.size();
        add_live(size * (labels.size() - 1));

        vector<Tube> out;
        out.reserve(labels.size());
        for (size_t i = 0; i + 1 < labels.size(); ++i)
            out.push_back(Tube{this, fresh_id(), labels[i], source._strands});
        out.push_back(Tube{this, fresh_id(), labels.back(), std::move(source._strands)});
        source._strands.clear();

        _counter.bump(OpCounter::Kind::copy);
        return out;
    }

    void TubeMachine::merge(Tube & dest, std::span<Tube * const> sources)
    {
        check_live(dest, "merge");
        for (auto * s : sources) {
            check_live(*s, "merge");
            if (s == &dest)
                throw MachineFault("merge: tube '" + dest._label + "' cannot be poured into itself");
        }

        for (auto * s : sources) {
            auto & from = s->_strands;
            dest._strands.insert(dest._strands.end(), std::make_move_iterator(from.begin()),
                std::make_move_iterator(from.end()));
            from.clear();
        }
        _counter.bump(OpCounter::Kind::merge);
    }

    void TubeMachine::merge(Tube & dest, std::initializer_list<Tube *> sources)
    {
        merge(dest, std::span<Tube * const>{sources.begin(), sources.size()});
    }

    auto TubeMachine::extract(Tube & source, const Codeword & cw, MatchMode mode, const Codebook & cb,
        string plus_label, string minus_label) -> ExtractResult
    {
        check_live(source, "extract");
        if (mode == MatchMode::nucleotide && ! cb.validated())
            throw SoundnessError("extract: nucleotide matching needs a junction-safe codebook; this one fails validation");

        vector<Strand> plus, minus;
        auto token = cw.token();
        for (auto & s : source._strands) {
            bool hit = mode == MatchMode::symbolic
                ? s.contains(token)
                : render(s, cb).view().find(cw.sequence.view()) != std::string_view::npos;
            (hit ? plus : minus).push_back(std::move(s));
        }
        source._strands.clear();

        if (plus_label.empty())
            plus_label = source._label + "+";
        if (minus_label.empty())
            minus_label = source._label + "-";

        _counter.bump(OpCounter::Kind::extract);
        return ExtractResult{
            Tube{this, fresh_id(), std::move(plus_label), std::move(plus)},
            Tube{this, fresh_id(), std::move(minus_label), std::move(minus)}};
    }

    auto TubeMachine::detect(const Tube & tube) -> bool
    {
        check_live(tube, "detect");
        _counter.bump(OpCounter::Kind::detect);
        return ! tube._strands.empty();
    }

    void TubeMachine::discard(Tube & tube)
    {
        check_live(tube, "discard");
        {
            std::lock_guard lock{_retired_mutex};
            _retired.insert(tube._id);
        }
        remove_live(tube._strands.size());
        tube._strands.clear();
        _counter.bump(OpCounter::Kind::discard);
    }
}
