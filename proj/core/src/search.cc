/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <indsat/search.hh>
#include <indsat/errors.hh>
#include <indsat/saturation.hh>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>

namespace indsat
{
    namespace
    {
        // Up to n = 8 there are 28 pairs, so colourings fit in 32 bits.
        using SmallMask = std::uint32_t;
        using PairMap = std::array<std::uint8_t, 28>;

        auto permutation_tables() -> const std::array<std::vector<PairMap>, max_canonical_vertices + 1> &
        {
            static const auto tables = [] {
                std::array<std::vector<PairMap>, max_canonical_vertices + 1> result;
                for (int n = 0 ; n <= max_canonical_vertices ; ++n) {
                    std::vector<int> perm(static_cast<unsigned>(n));
                    std::iota(perm.begin(), perm.end(), 0);
                    do {
                        PairMap map{};
                        for (int p = 0 ; p < num_pairs(n) ; ++p) {
                            auto [u, v] = pair_at(p);
                            map[unsigned(p)] = std::uint8_t(pair_index(perm[unsigned(u)], perm[unsigned(v)]));
                        }
                        result[unsigned(n)].push_back(map);
                    } while (std::next_permutation(perm.begin(), perm.end()));
                }
                return result;
            }();
            return tables;
        }

        auto permute(SmallMask m, const PairMap & map) -> SmallMask
        {
            SmallMask result = 0;
            while (m) {
                int p = std::countr_zero(m);
                m &= m - 1;
                result |= SmallMask{ 1 } << map[unsigned(p)];
            }
            return result;
        }

        auto next_combination(SmallMask s) -> SmallMask
        {
            SmallMask c = s & -s, r = s + c;
            return (((r ^ s) >> 2) / c) | r;
        }

        auto deposit(std::uint64_t index, SmallMask into) -> SmallMask
        {
            SmallMask result = 0;
            for (SmallMask m = into ; m && index ; m &= m - 1, index >>= 1)
                if (index & 1)
                    result |= m & -m;
            return result;
        }

        struct GrayOrbit
        {
            SmallMask gray;
            std::vector<const PairMap *> automorphisms;    // identity first
        };

        /// Everything one level (fixed gray count) needs, shared read-only by workers.
        struct Level
        {
            int n;
            const PatternGraph & h;
            const SearchOptions & options;
            bool use_complement;
            std::vector<GrayOrbit> orbits;
            std::atomic<std::uint64_t> & examined_total;
            std::atomic<bool> & capped;
        };

        struct WorkerOutput
        {
            std::set<CanonicalForm> witnesses;
            SearchStats stats;
        };

        auto min_under(SmallMask m, const GrayOrbit & orbit) -> SmallMask
        {
            SmallMask best = m;
            for (auto * map : orbit.automorphisms)
                best = std::min(best, permute(m, *map));
            return best;
        }

        auto process_range(const Level & level, const GrayOrbit & orbit, std::uint64_t begin, std::uint64_t end,
                std::unordered_set<std::uint64_t> & seen, WorkerOutput & out) -> void
        {
            SmallMask all = (SmallMask{ 1 } << num_pairs(level.n)) - 1;
            SmallMask free = all & ~orbit.gray;
            SmallMask black = deposit(begin, free);

            for (std::uint64_t i = begin ; i < end ; ++i, black = ((black | ~free) + 1) & free) {
                SmallMask complement_black = free & ~black;
                bool skip = false;

                if (level.options.dedup == DedupStrategy::Orderly) {
                    for (auto * map : orbit.automorphisms) {
                        if (permute(black, *map) < black || (level.use_complement && permute(complement_black, *map) < black)) {
                            skip = true;
                            break;
                        }
                    }
                }
                else {
                    SmallMask key = min_under(black, orbit);
                    if (level.use_complement)
                        key = std::min(key, min_under(complement_black, orbit));
                    std::uint64_t full_key = (std::uint64_t(orbit.gray) << 32) | key;
                    if (seen.contains(full_key))
                        skip = true;
                    else if (seen.size() < level.options.seen_cap)
                        seen.insert(full_key);
                }

                if (skip) {
                    ++out.stats.symmetry_skipped;
                    continue;
                }

                if (level.options.candidate_cap != 0) {
                    if (level.capped.load(std::memory_order_relaxed))
                        return;
                    if (level.examined_total.fetch_add(1, std::memory_order_relaxed) >= level.options.candidate_cap) {
                        level.capped.store(true);
                        return;
                    }
                }

                ++out.stats.candidates_examined;
                if (is_indsat(Trigraph::from_masks(level.n, black, orbit.gray), level.h)) {
                    ++out.stats.indsat_found;
                    out.witnesses.insert(CanonicalForm{ level.n, orbit.gray, min_under(black, orbit) });
                    if (level.use_complement)
                        out.witnesses.insert(CanonicalForm{ level.n, orbit.gray, min_under(complement_black, orbit) });
                }
            }
        }

        /// All canonical indsat trigraphs with exactly k gray pairs.
        auto search_level(int n, const PatternGraph & h, int k, const SearchOptions & options,
                std::atomic<std::uint64_t> & examined_total, std::atomic<bool> & capped) -> WorkerOutput
        {
            const auto & perms = permutation_tables()[unsigned(n)];
            int pairs = num_pairs(n);
            SmallMask all = (SmallMask{ 1 } << pairs) - 1;

            bool use_complement = options.complement_symmetry && is_self_complementary(h);
            Level level{ n, h, options, use_complement, {}, examined_total, capped };

            WorkerOutput merged;

            // Gray sets: keep only the smallest member of each S_n orbit.
            auto consider_gray = [&] (SmallMask gray) {
                ++merged.stats.gray_sets;
                GrayOrbit orbit{ gray, {} };
                for (auto & map : perms) {
                    SmallMask image = permute(gray, map);
                    if (image < gray)
                        return;
                    if (image == gray)
                        orbit.automorphisms.push_back(&map);
                }
                ++merged.stats.gray_orbits;
                level.orbits.push_back(std::move(orbit));
            };

            if (k == 0)
                consider_gray(0);
            else
                for (SmallMask g = (SmallMask{ 1 } << k) - 1 ; g <= all && g != 0 ; g = next_combination(g)) {
                    consider_gray(g);
                    if (g == all)
                        break;
                }

            int workers = std::max(1, options.workers);
            std::vector<WorkerOutput> outputs(static_cast<unsigned>(workers));
            std::vector<std::unordered_set<std::uint64_t>> seen(static_cast<unsigned>(workers));

            auto run_worker = [&] (int w) {
                for (auto & orbit : level.orbits) {
                    std::uint64_t total = std::uint64_t{ 1 } << (pairs - k);
                    std::uint64_t begin = total * unsigned(w) / unsigned(workers);
                    std::uint64_t end = total * unsigned(w + 1) / unsigned(workers);
                    if (begin < end)
                        process_range(level, orbit, begin, end, seen[unsigned(w)], outputs[unsigned(w)]);
                    if (capped.load(std::memory_order_relaxed))
                        return;
                }
            };

            if (workers == 1)
                run_worker(0);
            else {
                std::vector<std::jthread> threads;
                for (int w = 0 ; w < workers ; ++w)
                    threads.emplace_back(run_worker, w);
            }

            for (auto & o : outputs) {
                merged.witnesses.merge(o.witnesses);
                merged.stats += o.stats;
            }
            return merged;
        }

        auto check_search_size(int n, int lowest) -> void
        {
            if (n < lowest || n > max_search_vertices)
                throw ArgumentError("exhaustive search supports " + std::to_string(lowest) + " <= n <= "
                        + std::to_string(max_search_vertices) + ", got " + std::to_string(n));
        }
    }

    auto SearchStats::operator+= (const SearchStats & other) -> SearchStats &
    {
        gray_sets += other.gray_sets;
        gray_orbits += other.gray_orbits;
        candidates_examined += other.candidates_examined;
        symmetry_skipped += other.symmetry_skipped;
        indsat_found += other.indsat_found;
        return *this;
    }

    auto canonical_form(const Trigraph & t) -> CanonicalForm
    {
        if (t.size() > max_canonical_vertices)
            throw ResourceError("canonical forms enumerate all n! relabelings and are limited to n <= "
                    + std::to_string(max_canonical_vertices));

        auto gray = SmallMask(t.gray_mask()), black = SmallMask(t.black_mask());
        SmallMask best_gray = gray, best_black = black;
        for (auto & map : permutation_tables()[unsigned(t.size())]) {
            SmallMask g = permute(gray, map);
            if (g < best_gray) {
                best_gray = g;
                best_black = permute(black, map);
            }
            else if (g == best_gray)
                best_black = std::min(best_black, permute(black, map));
        }
        return CanonicalForm{ t.size(), best_gray, best_black };
    }

    auto enumerate_indsat(int n, const PatternGraph & h, int k, const SearchOptions & options) -> std::vector<CanonicalForm>
    {
        check_search_size(n, 1);
        if (k < 0 || k > num_pairs(n))
            throw ArgumentError("gray count " + std::to_string(k) + " out of range for n = " + std::to_string(n));

        std::atomic<std::uint64_t> examined{ 0 };
        std::atomic<bool> capped{ false };
        auto level = search_level(n, h, k, options, examined, capped);
        if (capped)
            throw ResourceError("candidate cap reached while enumerating");
        return std::vector<CanonicalForm>(level.witnesses.begin(), level.witnesses.end());
    }

    auto isat_min(int n, const PatternGraph & h, const SearchOptions & options) -> SearchResult
    {
        check_search_size(n, 2);
        int k_max = options.k_max < 0 ? num_pairs(n) : options.k_max;
        if (k_max > num_pairs(n))
            throw ArgumentError("k_max exceeds C(n,2)");

        auto start = std::chrono::steady_clock::now();
        SearchResult result;
        result.n = n;
        result.pattern = h.name;

        std::atomic<std::uint64_t> examined{ 0 };
        std::atomic<bool> capped{ false };
        for (int k = 0 ; k <= k_max ; ++k) {
            auto level = search_level(n, h, k, options, examined, capped);
            result.stats += level.stats;
            if (capped) {
                result.capped = true;
                break;
            }
            if (! level.witnesses.empty()) {
                result.min_gray = k;
                result.witnesses.assign(level.witnesses.begin(), level.witnesses.end());
                break;
            }
        }

        result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    }

    auto isat_min_naive(int n, const PatternGraph & h, int k_max) -> SearchResult
    {
        if (n < 1 || n > 6)
            throw ArgumentError("the naive sweep supports 1 <= n <= 6");
        if (k_max < 0)
            k_max = num_pairs(n);

        auto start = std::chrono::steady_clock::now();
        SearchResult result;
        result.n = n;
        result.pattern = h.name;

        SmallMask all = (SmallMask{ 1 } << num_pairs(n)) - 1;
        std::set<CanonicalForm> at_min;
        int best = k_max + 1;

        for (SmallMask gray = 0 ; ; ++gray) {
            int k = std::popcount(gray);
            if (k <= k_max) {
                ++result.stats.gray_sets;
                SmallMask free = all & ~gray;
                SmallMask black = 0;
                do {
                    auto t = Trigraph::from_masks(n, black, gray);
                    ++result.stats.candidates_examined;
                    if (is_indsat(t, h)) {
                        ++result.stats.indsat_found;
                        if (k < best) {
                            best = k;
                            at_min.clear();
                        }
                        if (k == best)
                            at_min.insert(canonical_form(t));
                    }
                    black = (black - free) & free;
                } while (black);
            }
            if (gray == all)
                break;
        }

        if (best <= k_max) {
            result.min_gray = best;
            result.witnesses.assign(at_min.begin(), at_min.end());
        }
        result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    }

    auto seen_cap_from_environment(std::size_t fallback) -> std::size_t
    {
        const char * value = std::getenv("INDSAT_SEEN_CAP");
        if (! value || ! *value)
            return fallback;
        char * end = nullptr;
        unsigned long long parsed = std::strtoull(value, &end, 10);
        if (*end != '\0')
            return fallback;
        return std::size_t(parsed);
    }
}
