#pragma once

// Canonical triple variables and the orientation axiom clauses over them.
// One Boolean variable per sorted triple a<b<c, meaning "abc in sorted order
// is a clockwise triple"; the other five permutations are signed aliases.

#include <array>
#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace obsat {

using TripleKey = std::array<int, 3>;  // sorted ascending

// A literal over a canonical triple variable.
struct TripleRef {
    TripleKey key;
    bool positive;

    bool operator==(const TripleRef&) const = default;
    auto operator<=>(const TripleRef&) const = default;
};

// Canonicalize an ordered triple: even permutations of the sorted order are
// the positive literal, odd permutations the negation.
inline TripleRef triple_ref(int a, int b, int c) {
    if (a == b || a == c || b == c)
        throw std::invalid_argument("triple with repeated vertex");
    bool even = true;
    if (a > b) { std::swap(a, b); even = !even; }
    if (b > c) { std::swap(b, c); even = !even; }
    if (a > b) { std::swap(a, b); even = !even; }
    return {{a, b, c}, even};
}

inline TripleRef negate(TripleRef t) {
    t.positive = !t.positive;
    return t;
}

using TripleClause = std::vector<TripleRef>;

namespace detail {

template <typename Emit>
void for_each_ordered_tuple(int n, int k, const Emit& emit) {
    std::vector<int> tuple(static_cast<size_t>(k));
    std::vector<bool> used(static_cast<size_t>(n), false);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            emit(tuple);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = true;
            tuple[static_cast<size_t>(depth)] = v;
            self(self, depth + 1);
            used[static_cast<size_t>(v)] = false;
        }
    };
    rec(rec, 0);
}

}  // namespace detail

// Cycling three chosen positions of a tuple (an even permutation) leaves the
// instantiated clause unchanged once variables are canonical, so only the
// lexicographically least tuple of each 3-orbit is emitted. This matches the
// counts 8*C(n,4) and 80*C(n,5).
namespace detail {

template <size_t K>
bool orbit_min(const std::vector<int>& t, int i, int j, int k) {
    std::array<int, K> orig, rot;
    std::copy(t.begin(), t.end(), orig.begin());
    rot = orig;
    for (int step = 0; step < 2; ++step) {
        int tmp = rot[static_cast<size_t>(i)];
        rot[static_cast<size_t>(i)] = rot[static_cast<size_t>(j)];
        rot[static_cast<size_t>(j)] = rot[static_cast<size_t>(k)];
        rot[static_cast<size_t>(k)] = tmp;
        if (rot < orig) return false;
    }
    return true;
}

}  // namespace detail

// Every instantiation of the interiority axiom
//   not(abc) or not(acd) or not(adb) or bcd
// over ordered 4-tuples, one per even-permutation orbit of {b,c,d}:
// exactly 8*C(n,4) clauses.
inline std::vector<TripleClause> four_point_clauses(int n) {
    std::vector<TripleClause> out;
    detail::for_each_ordered_tuple(n, 4, [&](const std::vector<int>& t) {
        if (!detail::orbit_min<4>(t, 1, 2, 3)) return;
        int a = t[0], b = t[1], c = t[2], d = t[3];
        out.push_back({negate(triple_ref(a, b, c)), negate(triple_ref(a, c, d)),
                       negate(triple_ref(a, d, b)), triple_ref(b, c, d)});
    });
    return out;
}

// Both transitivity clauses
//   not(abc) or not(acd) or not(ade) or not(abe) or  abd or not(ace)
//   not(abc) or not(acd) or not(ade) or not(abe) or not(abd) or  ace
// over ordered 5-tuples, one per even-permutation orbit ({b,c,d} for the
// first template, {c,d,e} for the second): exactly 80*C(n,5) clauses.
inline std::vector<TripleClause> five_point_clauses(int n) {
    std::vector<TripleClause> out;
    detail::for_each_ordered_tuple(n, 5, [&](const std::vector<int>& t) {
        int a = t[0], b = t[1], c = t[2], d = t[3], e = t[4];
        TripleClause common{negate(triple_ref(a, b, c)), negate(triple_ref(a, c, d)),
                            negate(triple_ref(a, d, e)), negate(triple_ref(a, b, e))};
        if (detail::orbit_min<5>(t, 1, 2, 3)) {
            TripleClause c1 = common;
            c1.push_back(triple_ref(a, b, d));
            c1.push_back(negate(triple_ref(a, c, e)));
            out.push_back(std::move(c1));
        }
        if (detail::orbit_min<5>(t, 2, 3, 4)) {
            TripleClause c2 = common;
            c2.push_back(negate(triple_ref(a, b, d)));
            c2.push_back(triple_ref(a, c, e));
            out.push_back(std::move(c2));
        }
    });
    return out;
}

}  // namespace obsat
