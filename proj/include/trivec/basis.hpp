// basis.hpp — index combinatorics for the exterior powers of C^6:
// lexicographic triple/pair tables, sign-extended lookup, Levi-Civita symbol.
#pragma once

#include <array>
#include <cstdint>

namespace trivec {

inline constexpr int kDim = 6;       // one-particle dimension
inline constexpr int kTriples = 20;  // dim of wedge^3 C^6
inline constexpr int kPairs = 15;    // dim of wedge^2 C^6

struct Triple {
    int i, j, k;  // 1-based, strictly increasing
};

struct Pair {
    int i, j;  // 1-based, strictly increasing
};

namespace detail {

constexpr std::array<Triple, kTriples> make_triples() {
    std::array<Triple, kTriples> t{};
    int n = 0;
    for (int i = 1; i <= kDim; ++i)
        for (int j = i + 1; j <= kDim; ++j)
            for (int k = j + 1; k <= kDim; ++k) t[n++] = Triple{i, j, k};
    return t;
}

constexpr std::array<Pair, kPairs> make_pairs() {
    std::array<Pair, kPairs> p{};
    int n = 0;
    for (int i = 1; i <= kDim; ++i)
        for (int j = i + 1; j <= kDim; ++j) p[n++] = Pair{i, j};
    return p;
}

}  // namespace detail

inline constexpr std::array<Triple, kTriples> kTripleList = detail::make_triples();
inline constexpr std::array<Pair, kPairs> kPairList = detail::make_pairs();

// Signed slot for permuted index access: amplitude(perm) = sign * amplitude[index].
struct SignedIndex {
    int index;   // position in the lexicographic table, -1 if indices repeat
    int sign;    // +1 / -1, 0 if indices repeat
};

namespace detail {

constexpr int triple_pos(int i, int j, int k) {
    // i<j<k assumed, 1-based
    int n = 0;
    for (int a = 1; a <= kDim; ++a)
        for (int b = a + 1; b <= kDim; ++b)
            for (int c = b + 1; c <= kDim; ++c) {
                if (a == i && b == j && c == k) return n;
                ++n;
            }
    return -1;
}

constexpr int pair_pos(int i, int j) {
    int n = 0;
    for (int a = 1; a <= kDim; ++a)
        for (int b = a + 1; b <= kDim; ++b) {
            if (a == i && b == j) return n;
            ++n;
        }
    return -1;
}

// 6x6x6 lookup: arbitrary (i,j,k) -> lexicographic slot and permutation sign.
constexpr auto make_triple_lut() {
    std::array<SignedIndex, kDim * kDim * kDim> lut{};
    for (int i = 1; i <= kDim; ++i)
        for (int j = 1; j <= kDim; ++j)
            for (int k = 1; k <= kDim; ++k) {
                SignedIndex s{-1, 0};
                if (i != j && j != k && i != k) {
                    int a = i, b = j, c = k, sg = 1;
                    if (a > b) { int t = a; a = b; b = t; sg = -sg; }
                    if (b > c) { int t = b; b = c; c = t; sg = -sg; }
                    if (a > b) { int t = a; a = b; b = t; sg = -sg; }
                    s.index = triple_pos(a, b, c);
                    s.sign = sg;
                }
                lut[(i - 1) * 36 + (j - 1) * 6 + (k - 1)] = s;
            }
    return lut;
}

constexpr auto make_pair_lut() {
    std::array<SignedIndex, kDim * kDim> lut{};
    for (int i = 1; i <= kDim; ++i)
        for (int j = 1; j <= kDim; ++j) {
            SignedIndex s{-1, 0};
            if (i != j) {
                s.index = (i < j) ? pair_pos(i, j) : pair_pos(j, i);
                s.sign = (i < j) ? 1 : -1;
            }
            lut[(i - 1) * 6 + (j - 1)] = s;
        }
    return lut;
}

inline constexpr auto kTripleLut = make_triple_lut();
inline constexpr auto kPairLut = make_pair_lut();

}  // namespace detail

// Arbitrary-permutation access, 1-based indices.
constexpr SignedIndex triple_slot(int i, int j, int k) {
    return detail::kTripleLut[(i - 1) * 36 + (j - 1) * 6 + (k - 1)];
}

constexpr SignedIndex pair_slot(int i, int j) {
    return detail::kPairLut[(i - 1) * 6 + (j - 1)];
}

constexpr int triple_index(int i, int j, int k) { return triple_slot(i, j, k).index; }
constexpr int pair_index(int i, int j) { return pair_slot(i, j).index; }

// Levi-Civita symbol on six 1-based indices; 0 on repeats.
constexpr int epsilon6(int a, int b, int c, int d, int e, int f) {
    int v[6] = {a, b, c, d, e, f};
    int sign = 1;
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            if (v[i] == v[j]) return 0;
            if (v[i] > v[j]) sign = -sign;
        }
    }
    return sign;
}

namespace detail {

// Flat 6^6 table of epsilon6 for contraction hot loops (indices 0-based here).
inline const std::array<std::int8_t, 46656>& epsilon6_table() {
    static const std::array<std::int8_t, 46656> table = [] {
        std::array<std::int8_t, 46656> t{};
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b)
                for (int c = 0; c < 6; ++c)
                    for (int d = 0; d < 6; ++d)
                        for (int e = 0; e < 6; ++e)
                            for (int f = 0; f < 6; ++f)
                                t[((((a * 6 + b) * 6 + c) * 6 + d) * 6 + e) * 6 + f] =
                                    static_cast<std::int8_t>(
                                        epsilon6(a + 1, b + 1, c + 1, d + 1, e + 1, f + 1));
        return t;
    }();
    return table;
}

}  // namespace detail

}  // namespace trivec
