#include "conline/fpgroup.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace conline;

namespace {

Presentation P(const char *text) { return parse_presentation(text); }

const std::vector<std::string> kSmall{"S3", "D4", "A4"};

} // namespace

TEST_CASE("target groups")
{
    for (auto [name, order] : std::vector<std::pair<std::string, int>>{{"S3", 6}, {"D4", 8}, {"A4", 12}, {"S4", 24}}) {
        FiniteGroup g = perm_group(name);
        CHECK(g.order == order);
        for (int a = 0; a < g.order; ++a) {
            CHECK(g.mul[a][g.inv[a]] == g.identity);
            CHECK(g.mul[g.identity][a] == a);
        }
    }
    CHECK_THROWS(perm_group("Q8"));
    CHECK(parse_battery("S3, A4") == std::vector<std::string>{"S3", "A4"});
    CHECK_THROWS(parse_battery("S3,Z5"));
}

TEST_CASE("abelianization")
{
    auto a = abelianization(P("gens: a b\n(a b)^2 = (b a)^2\n"));
    CHECK(a.rank_free == 2);
    CHECK(a.torsion().empty());
    auto b = abelianization(P("gens: a b\n(a b)^2\n(b a)^2\n"));
    CHECK(b.rank_free == 1);
    CHECK(b.torsion() == std::vector<std::int64_t>{2});
    CHECK(b.str() == "Z + Z/2");
    auto c = smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, 3);
    CHECK(c.diagonal == std::vector<std::int64_t>{2, 6, 12});
    CHECK(smith_normal_form({}, 3).rank_free == 3);
}

TEST_CASE("SNF replay on random matrices")
{
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int t = 0; t < 300; ++t) {
        int r = dim(rng), c = dim(rng);
        auto m = oracle::random_matrix(rng, r, c, 6);
        std::string why;
        CHECK_MESSAGE(oracle::snf_replay_ok(m, c, &why), why);
    }
}

TEST_CASE("hom counts")
{
    FiniteGroup s3 = perm_group("S3");
    CHECK(count_homs(P("gens: a\n"), s3) == 6);
    CHECK(count_homs(P("gens: a b\n(a b)^2 = (b a)^2\n(a b)^2\n"), s3) == 24);
    CHECK(count_homs(P("gens: a\na^2\n"), s3) == 4);
    CHECK(count_homs(P("gens: a\na^3\n"), s3) == 3);
    CHECK(count_homs(P("gens: a b\n"), s3) == 36);
    CHECK(count_homs(Presentation{}, s3) == 1);
}

TEST_CASE("backtracking equals plain enumeration")
{
    std::mt19937 rng(32);
    for (const char *name : {"S3", "D4"}) {
        FiniteGroup g = perm_group(name);
        for (int t = 0; t < 150; ++t) {
            std::uniform_int_distribution<int> gens(1, 3), rels(0, 4);
            Presentation p = oracle::random_presentation(rng, gens(rng), rels(rng), 8);
            CHECK(count_homs(p, g) == oracle::brute_force_homs(p, g));
        }
    }
}

TEST_CASE("Tietze moves")
{
    auto a = tietze(P("gens: x1 x1p x2\nx1 x1p^-1\n(x1p x1 x1p^-1 x2)^2 = (x2 x1p x1 x1p^-1)^2\n"));
    CHECK(a.p.generators == std::vector<std::string>{"x1", "x2"});
    CHECK(a.eliminated == std::vector<std::string>{"x1p"});
    auto b = tietze_simplify(P("gens: a\na a^-1\n"));
    CHECK(b.generators == std::vector<std::string>{"a"});
    CHECK(b.relators.empty());
    auto c = tietze_simplify(raw_presentation(bmf_Cn(1), true));
    CHECK(c.generators.size() == 1);
    CHECK(c.relators.empty());
    auto d = tietze(P("gens: a b\na b a^-1 b^-1\n"), {.budget = 0});
    CHECK(d.passes == 0);
    CHECK(d.p.relators.size() == 1);
}

TEST_CASE("Tietze preserves fingerprints and abelianization")
{
    std::mt19937 rng(33);
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<int> gens(1, 4), rels(0, 4);
        Presentation p = oracle::random_presentation(rng, gens(rng), rels(rng), 7);
        Presentation q = tietze_simplify(p);
        for (auto &name : kSmall)
            CHECK(count_homs(p, perm_group(name)) == count_homs(q, perm_group(name)));
        auto sp = abelianization(p), sq = abelianization(q);
        CHECK(sp.rank_free == sq.rank_free);
        CHECK(sp.torsion() == sq.torsion());
    }
    for (auto p : {raw_presentation(bmf_Cn(3), true), raw_presentation(bmf_Tnm(1, 2), true), presentation_Tnm(2, 2)}) {
        Presentation q = tietze_simplify(p);
        for (auto &name : kSmall)
            CHECK(count_homs(p, perm_group(name)) == count_homs(q, perm_group(name)));
    }
}

TEST_CASE("fingerprint and compare")
{
    auto f = fingerprint(P("gens: a\n"), {"S3"});
    REQUIRE(f.counts.size() == 1);
    CHECK(f.counts[0].second == 6);
    CHECK(compare(P("gens: a\na^2\n"), P("gens: a\na^3\n"), {"S3"}).verdict == "distinguished");
    CHECK(compare(raw_presentation(bmf_Cn(2), true), presentation_C2_proj(), kSmall).consistent());
    auto free2 = P("gens: a b\n");
    auto r = compare(presentation_T00(), free2, {"S3"});
    CHECK(r.verdict == "distinguished");
    CHECK(r.rows[0].a == 24);
    CHECK(r.rows[0].b == 36);
    CHECK_THROWS(fingerprint(free2, {}));
}

TEST_CASE("S4 is skipped above six generators")
{
    Presentation p;
    for (int k = 0; k < 7; ++k)
        p.generators.push_back("g" + std::to_string(k));
    p.add(Word::parse("g0 g1 g0^-1 g1^-1"));
    auto f = fingerprint(p, {"S3", "S4"});
    CHECK(f.skipped == std::vector<std::string>{"S4"});
}

TEST_CASE("stated presentations")
{
    auto t11 = presentation_Tnm(1, 1);
    CHECK(t11.generators == std::vector<std::string>{"x2", "x5", "x6"});
    CHECK(presentation_Tnm(2, 2).generators.size() == 5);
    CHECK(presentation_Tn0(3).generators == std::vector<std::string>{"x1", "x2", "x3", "x5"});
    CHECK(presentation_T00().relators.size() == 2);
    CHECK_THROWS(presentation_Tnm(0, 1));
    CHECK_THROWS(presentation_Cn_proj(0));
    CHECK_THROWS(paper_presentation("T", 2, 2, false));
    for (int n = 1; n <= 3; ++n)
        CHECK(compare(presentation_Tnm(n, 0), presentation_Tn0(n), kSmall).consistent());
    CHECK(compare(presentation_Tnm(1, 1), presentation_T11(), kSmall).consistent());
}
