#include <magus/search.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>

#include <omp.h>

using std::optional;
using std::size_t;
using std::uint64_t;
using std::vector;

namespace magus
{
    auto twin_classes(const Graph & g) -> vector<vector<Vertex>>
    {
        std::map<vector<std::uint64_t>, size_t> by_neighbourhood;
        vector<vector<Vertex>> classes;
        for (Vertex v = 0; v < g.order(); ++v) {
            auto bits = g.neighbour_bits(v);
            vector<std::uint64_t> key(bits.begin(), bits.end());
            auto [it, inserted] = by_neighbourhood.emplace(std::move(key), classes.size());
            if (inserted)
                classes.emplace_back();
            classes[it->second].push_back(v);
        }
        return classes;
    }

    auto default_thread_count() -> unsigned
    {
        if (auto env = std::getenv("MAGUS_THREADS")) {
            char * end = nullptr;
            auto value = std::strtol(env, &end, 10);
            if (end != env && value > 0)
                return static_cast<unsigned>(value);
        }
        return static_cast<unsigned>(std::max(1, omp_get_max_threads()));
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;
        using Decision = std::pair<Vertex, Label>;

        enum class Status
        {
            Exhausted,
            Found,
            Aborted
        };

        struct Job
        {
            vector<Decision> prefix;
            uint64_t internal_before;
            optional<vector<Label>> solved;
        };

        class Searcher
        {
            public:
                Searcher(const Graph & g, const SearchBudget & budget, const SearchOptions & options,
                        optional<Clock::time_point> deadline, std::function<bool ()> cancelled = {}) :
                    _g(g),
                    _n(g.order()),
                    _options(options),
                    _max_nodes(budget.max_nodes.value_or(std::numeric_limits<uint64_t>::max())),
                    _deadline(deadline),
                    _cancelled(std::move(cancelled)),
                    _label(_n, 0),
                    _used(_n + 2, 0),
                    _open(_n),
                    _partial(_n, 0),
                    _twin_class(_n),
                    _twin_pos(_n)
                {
                    for (Vertex v = 0; v < _n; ++v) {
                        _nbrs.push_back(g.neighbours(v));
                        _deg.push_back(g.degree(v));
                        _open[v] = g.degree(v);
                        if (_open[v] == 0)
                            _k = 0;
                    }

                    if (_options.symmetry_breaking)
                        _classes = twin_classes(g);
                    else
                        for (Vertex v = 0; v < _n; ++v)
                            _classes.push_back({v});
                    for (size_t c = 0; c < _classes.size(); ++c)
                        for (size_t p = 0; p < _classes[c].size(); ++p) {
                            _twin_class[_classes[c][p]] = c;
                            _twin_pos[_classes[c][p]] = p;
                        }

                    _static_order.resize(_n);
                    for (Vertex v = 0; v < _n; ++v)
                        _static_order[v] = v;
                    std::stable_sort(_static_order.begin(), _static_order.end(),
                            [&] (Vertex a, Vertex b) { return _deg[a] > _deg[b]; });
                }

                auto nodes() const -> uint64_t { return _nodes; }
                auto abort_limit() const -> BudgetLimit { return _abort_limit; }
                auto solution() const -> const vector<Label> & { return _solution; }
                auto solution_k() const -> Weight { return _solution_k; }
                auto jobs() -> vector<Job> & { return _jobs; }

                void collect_frontier(size_t depth)
                {
                    _frontier_depth = depth;
                }

                /// Replays decisions exactly as the recursion would have made them.
                auto replay(const vector<Decision> & prefix) -> bool
                {
                    for (auto [u, l] : prefix) {
                        if (! propagate())
                            return false;
                        if (! assign(u, l))
                            return false;
                        _prefix.emplace_back(u, l);
                    }
                    return true;
                }

                auto run() -> Status
                {
                    return dfs(_prefix.size());
                }

            private:
                struct TrailEntry
                {
                    Vertex vertex;
                    bool set_k;
                };

                const Graph & _g;
                size_t _n;
                SearchOptions _options;
                uint64_t _max_nodes;
                optional<Clock::time_point> _deadline;
                std::function<bool ()> _cancelled;

                vector<vector<Vertex>> _nbrs;
                vector<size_t> _deg;
                vector<Label> _label;
                vector<char> _used;
                vector<size_t> _open;
                vector<Weight> _partial;
                Weight _deg_sum = 0;
                size_t _assigned = 0;
                optional<Weight> _k;

                vector<vector<Vertex>> _classes;
                vector<size_t> _twin_class, _twin_pos;
                vector<Vertex> _static_order;

                vector<TrailEntry> _trail;
                vector<Decision> _prefix;

                uint64_t _nodes = 0;
                BudgetLimit _abort_limit = BudgetLimit::Nodes;
                vector<Label> _solution;
                Weight _solution_k = 0;

                optional<size_t> _frontier_depth;
                vector<Job> _jobs;

                // Bounds for the current node.
                Weight _klo = 0, _khi = 0;
                vector<Label> _unused;
                vector<Weight> _smallest, _largest;

                auto assign(Vertex u, Label l) -> bool
                {
                    _label[u] = l;
                    _used[l] = 1;
                    _deg_sum += static_cast<Weight>(_deg[u]) * l;
                    ++_assigned;
                    bool ok = true, set_k = false;
                    for (auto v : _nbrs[u]) {
                        --_open[v];
                        _partial[v] += l;
                        if (_open[v] == 0) {
                            if (! _k) {
                                _k = _partial[v];
                                set_k = true;
                            }
                            else if (_partial[v] != *_k)
                                ok = false;
                        }
                    }
                    _trail.push_back({u, set_k});
                    return ok;
                }

                void undo()
                {
                    auto [u, set_k] = _trail.back();
                    _trail.pop_back();
                    auto l = _label[u];
                    for (auto v : _nbrs[u]) {
                        ++_open[v];
                        _partial[v] -= l;
                    }
                    if (set_k)
                        _k.reset();
                    _deg_sum -= static_cast<Weight>(_deg[u]) * l;
                    --_assigned;
                    _used[l] = 0;
                    _label[u] = 0;
                }

                void undo_to(size_t mark)
                {
                    while (_trail.size() > mark)
                        undo();
                }

                auto twin_bounds(Vertex u) const -> std::pair<Label, Label>
                {
                    Label lo = 1, hi = static_cast<Label>(_n);
                    auto & members = _classes[_twin_class[u]];
                    auto pos = static_cast<Label>(_twin_pos[u]);
                    for (size_t j = 0; j < members.size(); ++j) {
                        auto l = _label[members[j]];
                        if (l == 0 || members[j] == u)
                            continue;
                        auto gap = static_cast<Label>(j) - pos;
                        if (gap < 0)
                            lo = std::max(lo, l - gap);
                        else
                            hi = std::min(hi, l - gap);
                    }
                    return {lo, hi};
                }

                auto compute_bounds() -> bool
                {
                    _unused.clear();
                    for (Label l = 1; l <= static_cast<Label>(_n); ++l)
                        if (! _used[l])
                            _unused.push_back(l);
                    auto free = _unused.size();
                    _smallest.assign(free + 1, 0);
                    _largest.assign(free + 1, 0);
                    for (size_t r = 1; r <= free; ++r) {
                        _smallest[r] = _smallest[r - 1] + _unused[r - 1];
                        _largest[r] = _largest[r - 1] + _unused[free - r];
                    }

                    _klo = 0;
                    _khi = std::numeric_limits<Weight>::max();
                    if (_k)
                        _klo = _khi = *_k;
                    for (Vertex v = 0; v < _n; ++v) {
                        _klo = std::max(_klo, _partial[v] + _smallest[_open[v]]);
                        _khi = std::min(_khi, _partial[v] + _largest[_open[v]]);
                    }

                    // sum deg(v) f(v) = k N, with the free labels paired against the free degrees.
                    vector<size_t> free_degrees;
                    for (Vertex v = 0; v < _n; ++v)
                        if (_label[v] == 0)
                            free_degrees.push_back(_deg[v]);
                    std::sort(free_degrees.begin(), free_degrees.end());
                    Weight low = _deg_sum, high = _deg_sum;
                    for (size_t i = 0; i < free; ++i) {
                        low += static_cast<Weight>(free_degrees[free - 1 - i]) * _unused[i];
                        high += static_cast<Weight>(free_degrees[i]) * _unused[i];
                    }
                    auto n = static_cast<Weight>(_n);
                    _klo = std::max(_klo, (low + n - 1) / n);
                    _khi = std::min(_khi, high / n);
                    return _klo <= _khi;
                }

                auto propagate() -> bool
                {
                    if (! _options.pruning)
                        return true;
                    while (true) {
                        if (! compute_bounds())
                            return false;
                        if (_klo != _khi)
                            return true;

                        bool forced = false;
                        for (Vertex v = 0; v < _n && ! forced; ++v) {
                            if (_open[v] != 1)
                                continue;
                            Vertex u = 0;
                            for (auto w : _nbrs[v])
                                if (_label[w] == 0)
                                    u = w;
                            auto l = _klo - _partial[v];
                            auto [lo, hi] = twin_bounds(u);
                            if (l < lo || l > hi || _used[l])
                                return false;
                            if (! assign(u, l))
                                return false;
                            forced = true;
                        }
                        if (! forced)
                            return true;
                    }
                }

                /// Branching vertex and its label window.
                auto choose(Vertex & chosen, Label & lo_out, Label & hi_out) -> bool
                {
                    if (! _options.pruning) {
                        for (auto u : _static_order)
                            if (_label[u] == 0) {
                                chosen = u;
                                std::tie(lo_out, hi_out) = twin_bounds(u);
                                return true;
                            }
                        return false;
                    }

                    size_t best_count = std::numeric_limits<size_t>::max();
                    for (Vertex u = 0; u < _n; ++u) {
                        if (_label[u] != 0)
                            continue;
                        auto [lo, hi] = twin_bounds(u);
                        for (auto v : _nbrs[u]) {
                            auto others = _open[v] - 1;
                            lo = std::max(lo, _klo - _partial[v] - _largest[others]);
                            hi = std::min(hi, _khi - _partial[v] - _smallest[others]);
                        }
                        size_t count = 0;
                        if (lo <= hi)
                            count = std::upper_bound(_unused.begin(), _unused.end(), hi)
                                - std::lower_bound(_unused.begin(), _unused.end(), lo);
                        if (count < best_count || (count == best_count && _deg[u] > _deg[chosen])) {
                            best_count = count;
                            chosen = u;
                            lo_out = lo;
                            hi_out = hi;
                        }
                        if (count == 0)
                            return false;
                    }
                    return best_count != std::numeric_limits<size_t>::max();
                }

                auto out_of_budget() -> bool
                {
                    if (++_nodes > _max_nodes) {
                        _abort_limit = BudgetLimit::Nodes;
                        return true;
                    }
                    if ((_nodes & 1023) == 0) {
                        if (_deadline && Clock::now() > *_deadline) {
                            _abort_limit = BudgetLimit::WallClock;
                            return true;
                        }
                        if (_cancelled && _cancelled())
                            return true;
                    }
                    return false;
                }

                auto dfs(size_t depth) -> Status
                {
                    auto mark = _trail.size();
                    auto leave = [&] (Status s) { undo_to(mark); return s; };

                    if (! propagate())
                        return leave(Status::Exhausted);

                    if (_assigned == _n) {
                        if (_frontier_depth) {
                            _jobs.push_back({_prefix, _nodes, _label});
                            return leave(Status::Exhausted);
                        }
                        _solution = _label;
                        _solution_k = _k.value_or(0);
                        return leave(Status::Found);
                    }

                    if (_frontier_depth && depth == *_frontier_depth) {
                        _jobs.push_back({_prefix, _nodes, std::nullopt});
                        return leave(Status::Exhausted);
                    }

                    Vertex u = 0;
                    Label lo = 1, hi = 0;
                    if (! choose(u, lo, hi))
                        return leave(Status::Exhausted);

                    for (Label l = std::max<Label>(lo, 1); l <= hi && l <= static_cast<Label>(_n); ++l) {
                        if (_used[l])
                            continue;
                        if (out_of_budget())
                            return leave(Status::Aborted);
                        _prefix.emplace_back(u, l);
                        auto status = assign(u, l) ? dfs(depth + 1) : Status::Exhausted;
                        undo();
                        _prefix.pop_back();
                        if (status != Status::Exhausted)
                            return leave(status);
                    }
                    return leave(Status::Exhausted);
                }
        };

        auto finish(Searcher & s, Status status) -> SearchOutcome
        {
            switch (status) {
                case Status::Found:
                    return Found{Labeling{s.solution()}, s.solution_k(), s.nodes()};
                case Status::Exhausted:
                    return ProvedNone{s.nodes()};
                case Status::Aborted:
                    break;
            }
            return BudgetExceeded{s.nodes(), s.abort_limit()};
        }

        auto solved_k(const Graph & g, const vector<Label> & labels) -> Weight
        {
            auto result = verify(g, Labeling{labels});
            return std::get<Magic>(result).k;
        }

        struct JobResult
        {
            Status status = Status::Exhausted;
            uint64_t nodes = 0;
            BudgetLimit limit = BudgetLimit::Nodes;
            vector<Label> solution;
            Weight k = 0;
            bool cancelled = false;
        };

        auto parallel_search(const Graph & g, const SearchBudget & budget, const SearchOptions & options,
                optional<Clock::time_point> deadline, unsigned threads) -> SearchOutcome
        {
            vector<Job> jobs;
            uint64_t internal_total = 0;
            for (size_t depth = 1; depth <= 6; ++depth) {
                Searcher frontier{g, budget, options, deadline};
                frontier.collect_frontier(depth);
                auto status = frontier.run();
                if (status == Status::Aborted)
                    return BudgetExceeded{frontier.nodes(), frontier.abort_limit()};
                auto previous = jobs.size();
                jobs = std::move(frontier.jobs());
                internal_total = frontier.nodes();
                bool open_jobs = std::any_of(jobs.begin(), jobs.end(), [] (const Job & j) { return ! j.solved; });
                if (jobs.size() >= 4 * threads || ! open_jobs || (depth > 1 && jobs.size() == previous))
                    break;
            }

            auto max_nodes = budget.max_nodes.value_or(std::numeric_limits<uint64_t>::max());
            std::atomic<size_t> first_found{jobs.size()};
            vector<JobResult> results(jobs.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
            for (size_t i = 0; i < jobs.size(); ++i) {
                auto & result = results[i];
                if (i > first_found.load()) {
                    result.cancelled = true;
                    continue;
                }
                if (jobs[i].solved) {
                    result.status = Status::Found;
                    result.solution = *jobs[i].solved;
                    result.k = solved_k(g, result.solution);
                }
                else {
                    Searcher s{g, budget, options, deadline, [&first_found, i] { return first_found.load() < i; }};
                    if (! s.replay(jobs[i].prefix)) {
                        result.status = Status::Exhausted;
                    }
                    else {
                        result.status = s.run();
                        result.nodes = s.nodes();
                        result.limit = s.abort_limit();
                        if (result.status == Status::Found) {
                            result.solution = s.solution();
                            result.k = s.solution_k();
                        }
                        if (result.status == Status::Aborted && first_found.load() < i)
                            result.cancelled = true;
                    }
                }
                if (result.status == Status::Found) {
                    auto current = first_found.load();
                    while (i < current && ! first_found.compare_exchange_weak(current, i))
                        ;
                }
            }

            // Merge in depth-first order, reproducing the serial node count.
            uint64_t job_nodes = 0;
            for (size_t i = 0; i < jobs.size(); ++i) {
                auto & r = results[i];
                auto before = jobs[i].internal_before + job_nodes;
                if (before > max_nodes)
                    return BudgetExceeded{max_nodes + 1, BudgetLimit::Nodes};
                if (r.status == Status::Aborted) {
                    if (r.limit == BudgetLimit::WallClock)
                        return BudgetExceeded{before + r.nodes, BudgetLimit::WallClock};
                    return BudgetExceeded{max_nodes + 1, BudgetLimit::Nodes};
                }
                if (before + r.nodes > max_nodes)
                    return BudgetExceeded{max_nodes + 1, BudgetLimit::Nodes};
                if (r.status == Status::Found)
                    return Found{Labeling{r.solution}, r.k, before + r.nodes};
                job_nodes += r.nodes;
            }
            auto total = internal_total + job_nodes;
            if (total > max_nodes)
                return BudgetExceeded{max_nodes + 1, BudgetLimit::Nodes};
            return ProvedNone{total};
        }
    }

    auto search_labeling(const Graph & g, const SearchBudget & budget, const SearchOptions & options) -> SearchOutcome
    {
        optional<Clock::time_point> deadline;
        if (budget.wall_clock_limit)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                    std::chrono::duration<double>(*budget.wall_clock_limit));

        auto threads = options.threads == 0 ? default_thread_count() : options.threads;
        if (threads > 1 && g.order() > 1)
            return parallel_search(g, budget, options, deadline, threads);

        Searcher s{g, budget, options, deadline};
        auto status = s.run();
        return finish(s, status);
    }
}
