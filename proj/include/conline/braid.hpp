#pragma once

#include "conline/words.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace conline {

struct ArtinLetter {
    int i = 1;
    int sign = 1;
    bool operator==(const ArtinLetter &) const = default;
};

struct ArtinWord {
    int strands = 1;
    std::vector<ArtinLetter> letters;

    ArtinWord() = default;
    ArtinWord(int n, std::vector<ArtinLetter> l);

    ArtinWord inverse() const;
    ArtinWord operator*(const ArtinWord &o) const;
    ArtinWord pow(int k) const;

    std::string str() const;
    static ArtinWord parse(int strands, const std::string &text);

    bool operator==(const ArtinWord &) const = default;
};

enum class Side { Below, Above };

struct Skeleton {
    int i = 1, j = 2;
    Side side = Side::Below;
    bool operator==(const Skeleton &) const = default;
};

struct Conjugator {
    Skeleton sk;
    int power = 2;
    bool operator==(const Conjugator &) const = default;
};

// (base^power)^{c_1 c_2 ... c_t}, with a^b = b^-1 a b applied left to right.
struct ConjugatedTwist {
    Skeleton base;
    int power = 1;
    std::vector<Conjugator> conjugators;
    bool operator==(const ConjugatedTwist &) const = default;
};

struct Permutation {
    std::vector<int> images; // 1-based: images[k-1] is the image of k

    static Permutation identity(int n);
    bool is_identity() const;
    // this applied first, then o
    Permutation then(const Permutation &o) const;
    bool operator==(const Permutation &) const = default;
};

// Band word for the half-twist along the skeleton. Below routes with sigma^-1 on the
// left band, Above with sigma^+1; see README for why this orientation was chosen.
ArtinWord compile_skeleton(const Skeleton &s, int N);
// Left band (the part before the core sigma_i); compile_skeleton = L s_i L^-1.
ArtinWord skeleton_band(const Skeleton &s, int N);
ArtinWord compile_factor(const ConjugatedTwist &t, int N);

std::vector<std::string> default_labels(int N);
// sigma_i: x_i -> x_i^-1 x_{i+1} x_i, x_{i+1} -> x_i. Words act on the left: the
// last letter is applied first, so artin_action(ab) = artin_action(a) o artin_action(b).
GroupMap artin_action(const ArtinWord &b, const std::vector<std::string> &labels);
GroupMap artin_action(const ArtinWord &b);
// phi_b(w) without building the full map.
Word act(const ArtinWord &b, const Word &w, const std::vector<std::string> &labels);

ArtinWord full_twist(int N);
int exponent_sum(const ArtinWord &b);
Permutation permutation(const ArtinWord &b);

void to_json(nlohmann::json &j, const Skeleton &s);
void from_json(const nlohmann::json &j, Skeleton &s);
void to_json(nlohmann::json &j, const ConjugatedTwist &t);
void from_json(const nlohmann::json &j, ConjugatedTwist &t);

std::string side_name(Side s);
std::string twist_str(const ConjugatedTwist &t);

} // namespace conline
