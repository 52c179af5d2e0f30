#include "coarr/coarray.hpp"

#include <boost/dynamic_bitset.hpp>
#include <stdexcept>

namespace coarr {

namespace {

// Marks every pairwise sum in a bitset over [0, 2*max], then extracts the
// sorted element list. Positions need not start at 0 here; the bitset is
// anchored at 2*min.
std::vector<Position> pairwise_sums(const std::vector<Position>& p) {
    const Position lo = 2 * p.front();
    const Position hi = 2 * p.back();
    boost::dynamic_bitset<> seen(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i; j < p.size(); ++j)
            seen.set(static_cast<std::size_t>(p[i] + p[j] - lo));
    std::vector<Position> out;
    out.reserve(seen.count());
    for (auto b = seen.find_first(); b != boost::dynamic_bitset<>::npos;
         b = seen.find_next(b))
        out.push_back(static_cast<Position>(b) + lo);
    return out;
}

}  // namespace

CoArray sum_coarray(const SensorArray& d) {
    if (d.empty()) throw std::invalid_argument("empty array");
    return CoArray(pairwise_sums(d.positions()), CoArrayKind::sum);
}

CoArray diff_coarray(const SensorArray& d) {
    if (d.empty()) throw std::invalid_argument("empty array");
    const auto& p = d.positions();
    const Position span = p.back() - p.front();
    boost::dynamic_bitset<> seen(static_cast<std::size_t>(span + 1));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i; j < p.size(); ++j)
            seen.set(static_cast<std::size_t>(p[j] - p[i]));
    std::vector<Position> out;
    out.reserve(2 * seen.count() - 1);
    for (Position v = span; v >= 1; --v)
        if (seen.test(static_cast<std::size_t>(v))) out.push_back(-v);
    for (Position v = 0; v <= span; ++v)
        if (seen.test(static_cast<std::size_t>(v))) out.push_back(v);
    return CoArray(std::move(out), CoArrayKind::difference);
}

ContiguousRun contiguous_dof(const CoArray& c) {
    if (c.empty()) throw std::invalid_argument("empty co-array");
    const auto& e = c.elements();
    ContiguousRun best{1, e.front()};
    std::int64_t run = 1;
    Position start = e.front();
    for (std::size_t i = 1; i < e.size(); ++i) {
        if (e[i] == e[i - 1] + 1) {
            ++run;
        } else {
            run = 1;
            start = e[i];
        }
        if (run > best.length) best = {run, start};
    }
    return best;
}

Position first_hole(const CoArray& c) {
    Position expect = 0;
    for (Position v : c.elements()) {
        if (v < 0) continue;
        if (v != expect) break;
        ++expect;
    }
    return expect;
}

bool is_contiguous(const CoArray& c) {
    if (c.empty()) return false;
    return static_cast<Position>(c.size()) == c.max() - c.min() + 1;
}

}  // namespace coarr
