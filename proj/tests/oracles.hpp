#pragma once

// Reference data and brute-force checks shared by the unit tests and the acceptance
// runner. Only word arithmetic and the target group tables come from the library.

#include "conline/bigness.hpp"
#include "conline/fpgroup.hpp"
#include "conline/van_kampen.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using conline::Word;

// ---- golden relation lists, transcribed relation by relation ----

// Raw affine C_1 list, generators x1, x1p, x2.
std::vector<Word> golden_C1();
// Raw affine C_2 list, generators x1, x1p, x2, x3.
std::vector<Word> golden_C2();
// Raw affine C_n list with x1p already replaced by x1 (the stated list is post-elimination).
std::vector<Word> golden_Cn_merged(int n);
// Raw projective T_{n,m} list: 23 relation families plus the projective relation.
// Each entry carries the relation family number.
struct Tagged {
    Word w;
    std::string tag;
};
std::vector<Tagged> golden_Tnm(int n, int m);

// Substitution x1p -> x1.
Word merge_conic(const Word &w);

// Matches relators up to cyclic rotation and inversion, as multisets or as sets.
struct MatchReport {
    std::vector<std::size_t> unmatched_raw;    // indices into raw
    std::vector<std::size_t> unmatched_golden; // indices into golden
    bool ok() const { return unmatched_raw.empty() && unmatched_golden.empty(); }
};
MatchReport match_multiset(const std::vector<Word> &raw, const std::vector<Word> &golden);
MatchReport match_set(const std::vector<Word> &raw, const std::vector<Word> &golden);

// ---- brute force ----

// Plain |G|^g enumeration.
std::uint64_t brute_force_homs(const conline::Presentation &p, const conline::FiniteGroup &g);

// ---- random inputs ----

conline::Presentation random_presentation(std::mt19937 &rng, int gens, int rels, int max_len);
conline::IntMatrix random_matrix(std::mt19937 &rng, int rows, int cols, int bound);
std::vector<conline::Syllable> random_syllables(std::mt19937 &rng, int max_len);

// ---- SNF replay ----

// U A V == D, D diagonal with a divisibility chain, U and V of determinant +-1.
bool snf_replay_ok(const conline::IntMatrix &a, int cols, std::string *why = nullptr);
std::int64_t determinant(conline::IntMatrix m);

// ---- Z/2 * Z/3 as PSL(2, Z) ----

struct Mat2 {
    std::int64_t a, b, c, d;
};
Mat2 psl_image(const std::vector<conline::Syllable> &w); // s -> [[0,-1],[1,0]], t -> [[0,-1],[1,1]]
bool psl_equal(const Mat2 &x, const Mat2 &y);             // equal up to sign

} // namespace oracle
