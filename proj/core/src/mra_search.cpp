#include <boost/dynamic_bitset.hpp>
#include <stdexcept>

#include "coarr/optimize.hpp"

namespace coarr {

namespace detail {
bool varsigma_less(const SensorArray& a, const SensorArray& b);
}

namespace {

using Bitset = boost::dynamic_bitset<>;

// Depth-first enumeration over normalized arrays with elements chosen in
// increasing order. The covering-prefix rule keeps the branching factor down:
// a sum t below the next element can only be formed by elements below it, so
// the next element may not exceed the first uncovered sum.

struct RestrictedSearch {
    std::int64_t n;
    Position aperture;
    std::size_t forced_count = 0;
    std::vector<std::vector<Position>> solutions;

    void run() {
        std::vector<Position> chosen;
        Bitset covered(static_cast<std::size_t>(2 * aperture + 1));
        // Forced endpoints {0, 1, L-1, L}: covering 1 needs 0+1, covering
        // 2L-1 needs (L-1)+L. Deduplicated and clipped for tiny apertures.
        std::vector<Position> forced{0, 1, aperture - 1, aperture};
        std::sort(forced.begin(), forced.end());
        forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
        forced.erase(std::remove_if(forced.begin(), forced.end(),
                                    [this](Position p) {
                                        return p < 0 || p > aperture;
                                    }),
                     forced.end());
        if (static_cast<std::int64_t>(forced.size()) > n) return;
        forced_count = forced.size();
        for (Position p : forced) add(chosen, covered, p);
        dfs(chosen, covered);
    }

    static void add(std::vector<Position>& chosen, Bitset& covered, Position e) {
        for (Position q : chosen) covered.set(static_cast<std::size_t>(q + e));
        covered.set(static_cast<std::size_t>(2 * e));
        chosen.push_back(e);
    }

    Position first_uncovered(const Bitset& covered) const {
        const auto i = (~covered).find_first();
        return i == Bitset::npos ? 2 * aperture + 1 : static_cast<Position>(i);
    }

    void dfs(std::vector<Position>& chosen, const Bitset& covered) {
        const std::int64_t remaining = n - static_cast<std::int64_t>(chosen.size());
        if (remaining == 0) {
            if (covered.all()) {
                auto sol = chosen;
                std::sort(sol.begin(), sol.end());
                solutions.push_back(std::move(sol));
            }
            return;
        }
        // Coverage potential: the i-th new element adds at most |D|+i sums.
        std::int64_t potential = 0;
        const std::int64_t s = static_cast<std::int64_t>(chosen.size());
        for (std::int64_t i = 1; i <= remaining; ++i) potential += s + i;
        if (static_cast<std::int64_t>(covered.count()) + potential < 2 * aperture + 1)
            return;

        const Position fu = first_uncovered(covered);
        // Mid elements live in (1, L-1); endpoints are pre-placed. When the
        // interval is already covered, remaining sensors may sit anywhere.
        const Position last_mid = chosen.size() > forced_count ? chosen.back() : 1;
        const Position lo = std::max<Position>(last_mid + 1, 2);
        const Position hi = std::min<Position>(fu, aperture - 2);
        for (Position e = lo; e <= hi; ++e) {
            auto next_chosen = chosen;
            Bitset next_covered = covered;
            add(next_chosen, next_covered, e);
            dfs(next_chosen, next_covered);
        }
    }
};

struct GeneralSearch {
    std::int64_t n;
    Position sum_cap;  // n(n+1)/2: no first hole can exceed it
    std::int64_t best_h = -1;
    std::vector<std::vector<Position>> solutions;

    void run() {
        if (n == 1) {
            best_h = 1;
            solutions.push_back({0});
            return;
        }
        std::vector<Position> chosen;
        Bitset covered(static_cast<std::size_t>(sum_cap + 1));
        add(chosen, covered, 0);
        add(chosen, covered, 1);
        dfs(chosen, covered);
    }

    void add(std::vector<Position>& chosen, Bitset& covered, Position e) {
        for (Position q : chosen)
            if (q + e <= sum_cap) covered.set(static_cast<std::size_t>(q + e));
        if (2 * e <= sum_cap) covered.set(static_cast<std::size_t>(2 * e));
        chosen.push_back(e);
    }

    Position first_uncovered(const Bitset& covered) const {
        const auto i = (~covered).find_first();
        return i == Bitset::npos ? sum_cap + 1 : static_cast<Position>(i);
    }

    void dfs(std::vector<Position>& chosen, const Bitset& covered) {
        const std::int64_t remaining = n - static_cast<std::int64_t>(chosen.size());
        const Position fu = first_uncovered(covered);
        if (remaining == 0) {
            const std::int64_t h = fu;
            if (h > best_h) {
                best_h = h;
                solutions.clear();
            }
            if (h == best_h) solutions.push_back(chosen);
            return;
        }
        // Bound: the first hole h needs all of {0:h-1} covered, and each of
        // the r remaining elements covers at most |D|+i new sums, so h never
        // exceeds the current coverage plus that potential.
        std::int64_t potential = static_cast<std::int64_t>(covered.count());
        const std::int64_t s = static_cast<std::int64_t>(chosen.size());
        for (std::int64_t i = 1; i <= remaining; ++i) potential += s + i;
        if (potential < best_h) return;

        // Elements above the first uncovered sum can never help cover it.
        for (Position e = fu; e > chosen.back(); --e) {
            auto next_chosen = chosen;
            Bitset next_covered = covered;
            add(next_chosen, next_covered, e);
            dfs(next_chosen, next_covered);
        }
    }
};

std::vector<SearchOutcome> collect(std::vector<std::vector<Position>> raw) {
    std::vector<SearchOutcome> out;
    for (auto& sol : raw) {
        SearchOutcome o;
        o.array = SensorArray(std::move(sol));
        o.aperture = o.array.aperture();
        const CoArray sums = sum_coarray(o.array);
        const ContiguousRun run = contiguous_dof(sums);
        o.contiguous_dofs = run.length;
        o.contiguous_offset = run.offset;
        out.push_back(std::move(o));
    }
    // Fill varsigma with a common reference so printed values are comparable.
    Position ref = 0;
    for (const auto& o : out) ref = std::max(ref, o.aperture);
    for (auto& o : out)
        if (ref > 0) o.varsigma = varsigma(o.array, ref);
    return out;
}

}  // namespace

std::vector<SearchOutcome> mra_search_all(std::int64_t n, bool restricted,
                                          const MraOptions& options) {
    if (n < 1) throw std::invalid_argument("need at least one sensor");
    if (n > options.max_sensors) throw std::length_error("search space too large");

    if (restricted) {
        // Maximum feasible aperture first: 2L+1 distinct sums require
        // 2L+1 <= N(N+1)/2.
        const Position upper = (n * (n + 1) / 2 - 1) / 2;
        for (Position l = upper; l >= std::max<Position>(n - 1, 0); --l) {
            RestrictedSearch search{n, l, {}};
            search.run();
            if (!search.solutions.empty()) return collect(std::move(search.solutions));
        }
        throw std::runtime_error("restricted search found no feasible array");
    }

    GeneralSearch search{n, n * (n + 1) / 2, -1, {}};
    search.run();
    return collect(std::move(search.solutions));
}

SearchOutcome mra_search(std::int64_t n, bool restricted, const MraOptions& options) {
    auto all = mra_search_all(n, restricted, options);
    std::size_t best = 0;
    for (std::size_t i = 1; i < all.size(); ++i) {
        const bool replaces =
            detail::varsigma_less(all[i].array, all[best].array) ||
            (!detail::varsigma_less(all[best].array, all[i].array) &&
             all[i].array.positions() < all[best].array.positions());
        if (replaces) best = i;
    }
    return all[best];
}

}  // namespace coarr
