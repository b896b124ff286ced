#include "conline/braid.hpp"

#include <doctest.h>

#include <random>

using namespace conline;

namespace {

ArtinWord random_braid(std::mt19937 &rng, int N, int len)
{
    std::uniform_int_distribution<int> i(1, N - 1), s(0, 1);
    std::vector<ArtinLetter> l;
    for (int k = 0; k < len; ++k)
        l.push_back({i(rng), s(rng) ? 1 : -1});
    return ArtinWord(N, l);
}

Word descending_product(int N)
{
    std::vector<Letter> l;
    for (int k = N; k >= 1; --k)
        l.push_back({"x" + std::to_string(k), 1});
    return Word(l);
}

Permutation transposition(int N, int a, int b)
{
    Permutation p = Permutation::identity(N);
    std::swap(p.images[a - 1], p.images[b - 1]);
    return p;
}

} // namespace

TEST_CASE("skeleton compilation")
{
    CHECK(compile_skeleton({1, 2, Side::Below}, 3).str() == "s1");
    CHECK(compile_skeleton({1, 2, Side::Above}, 3).str() == "s1");
    // Calibrated routing: below-axis bands conjugate by sigma^-1 on the left.
    CHECK(compile_skeleton({1, 3, Side::Below}, 3).str() == "s2^-1 s1 s2");
    CHECK(compile_skeleton({1, 3, Side::Above}, 3).str() == "s2 s1 s2^-1");
    CHECK(compile_skeleton({1, 4, Side::Below}, 4) == skeleton_band({1, 4, Side::Below}, 4) * ArtinWord::parse(4, "s1") *
                                                        skeleton_band({1, 4, Side::Below}, 4).inverse());
    CHECK_THROWS(compile_skeleton({2, 5, Side::Below}, 4));
    CHECK_THROWS(compile_skeleton({3, 3, Side::Below}, 4));
}

TEST_CASE("compile_factor stacks conjugators as a^b = b^-1 a b")
{
    ConjugatedTwist plain{{1, 2, Side::Below}, 1, {}};
    CHECK(compile_factor(plain, 2).str() == "s1");

    ArtinWord zb13 = compile_skeleton({1, 3, Side::Above}, 4);
    ConjugatedTwist a{{3, 4, Side::Below}, 1, {{{1, 3, Side::Above}, 2}}};
    CHECK(compile_factor(a, 4) == zb13.pow(-2) * ArtinWord::parse(4, "s3") * zb13.pow(2));

    ArtinWord z23 = compile_skeleton({2, 3, Side::Below}, 4), z13 = compile_skeleton({1, 3, Side::Below}, 4);
    ConjugatedTwist b{{3, 4, Side::Below}, 1, {{{2, 3, Side::Below}, 2}, {{1, 3, Side::Below}, 2}}};
    CHECK(compile_factor(b, 4) == z13.pow(-2) * z23.pow(-2) * ArtinWord::parse(4, "s3") * z23.pow(2) * z13.pow(2));
}

TEST_CASE("Artin action basics")
{
    auto labels = default_labels(3);
    GroupMap id = artin_action(ArtinWord(3, {}));
    for (auto &g : labels)
        CHECK(id.at(g) == Word::gen(g));
    // sigma_1: x1 -> x1^-1 x2 x1, x2 -> x1
    GroupMap s1 = artin_action(ArtinWord::parse(3, "s1"));
    CHECK(s1.at("x1") == Word::parse("x1^-1 x2 x1"));
    CHECK(s1.at("x2") == Word::parse("x1"));
    CHECK(s1.at("x3") == Word::parse("x3"));
    GroupMap back = artin_action(ArtinWord::parse(3, "s1 s1^-1"));
    for (auto &g : labels)
        CHECK(back.at(g) == Word::gen(g));
}

TEST_CASE("full twist, exponent sum, permutation")
{
    CHECK(full_twist(2).str() == "s1 s1");
    CHECK(exponent_sum(full_twist(2)) == 2);
    CHECK(permutation(full_twist(2)).is_identity());
    CHECK(exponent_sum(full_twist(4)) == 12);
    for (int N = 1; N <= 7; ++N) {
        CHECK(exponent_sum(full_twist(N)) == N * (N - 1));
        CHECK(permutation(full_twist(N)).is_identity());
    }
    CHECK(permutation(ArtinWord::parse(3, "s2 s1 s2^-1")) == transposition(3, 1, 3));
}

TEST_CASE("product preservation: x_N ... x_1 is fixed")
{
    std::mt19937 rng(21);
    for (int N = 2; N <= 8; ++N)
        for (int t = 0; t < 20; ++t) {
            ArtinWord b = random_braid(rng, N, 12);
            CHECK(act(b, descending_product(N), default_labels(N)) == descending_product(N));
        }
}

TEST_CASE("braid relations hold in the action")
{
    for (int N = 3; N <= 6; ++N) {
        for (int i = 1; i + 1 < N; ++i) {
            ArtinWord l = ArtinWord(N, {{i, 1}, {i + 1, 1}, {i, 1}});
            ArtinWord r = ArtinWord(N, {{i + 1, 1}, {i, 1}, {i + 1, 1}});
            CHECK(artin_action(l) == artin_action(r));
        }
        for (int i = 1; i < N; ++i)
            for (int j = i + 2; j < N; ++j)
                CHECK(artin_action(ArtinWord(N, {{i, 1}, {j, 1}})) == artin_action(ArtinWord(N, {{j, 1}, {i, 1}})));
    }
}

TEST_CASE("full twist acts as conjugation by the boundary product")
{
    for (int N = 1; N <= 5; ++N) {
        GroupMap d = artin_action(full_twist(N));
        Word P = descending_product(N);
        for (auto &g : default_labels(N)) {
            Word x = Word::gen(g);
            bool left = d.at(g) == conjugate(x, P);
            bool right = d.at(g) == conjugate(x, invert(P));
            CHECK((left || right));
        }
    }
}

TEST_CASE("half-twists permute their endpoints; even powers are pure")
{
    std::mt19937 rng(22);
    for (int N = 2; N <= 7; ++N)
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j)
                for (Side s : {Side::Below, Side::Above}) {
                    ArtinWord h = compile_skeleton({i, j, s}, N);
                    CHECK(permutation(h) == transposition(N, i, j));
                    CHECK(permutation(h.pow(2)).is_identity());
                    ConjugatedTwist t{{i, j, s}, 4, {{{1, N, Side::Below}, -2}, {{i, j, Side::Above}, 2}}};
                    CHECK(exponent_sum(compile_factor(t, N)) == 4);
                }
}

TEST_CASE("text and JSON forms round-trip")
{
    ArtinWord b = ArtinWord::parse(4, "s1 s2^-1 s1");
    CHECK(ArtinWord::parse(4, b.str()) == b);
    CHECK_THROWS(ArtinWord::parse(3, "s3"));
    ConjugatedTwist t{{2, 4, Side::Above}, 2, {{{1, 2, Side::Below}, -2}}};
    nlohmann::json j = t;
    CHECK(j.get<ConjugatedTwist>() == t);
    CHECK(j["base"]["side"] == "above");
}
