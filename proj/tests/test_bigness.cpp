#include "conline/bigness.hpp"
#include "conline/fpgroup.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace conline;

TEST_CASE("normal forms")
{
    CHECK(nf({{'s', 1}, {'t', 1}, {'t', 1}, {'t', 1}, {'s', 1}, {'s', 1}}) == FPWord::s());
    CHECK(FPWord::parse("s t s t^-1").str() == "s t s t^-1");
    CHECK(FPWord::parse("s s").is_identity());
    CHECK(FPWord::parse("t t t").is_identity());
    CHECK(FPWord::parse("t t").str() == "t^-1");
    CHECK(FPWord().str() == "e");
    CHECK(inverse(FPWord::parse("s t")) == FPWord::parse("t^-1 s"));
}

TEST_CASE("normal forms are multiplicative and faithful to PSL(2,Z)")
{
    std::mt19937 rng(41);
    for (int k = 0; k < 500; ++k) {
        auto u = oracle::random_syllables(rng, 10), v = oracle::random_syllables(rng, 10);
        auto uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(nf(uv) == nf(u) * nf(v));
        CHECK(nf(nf(u).syllables()) == nf(u));
        CHECK(oracle::psl_equal(oracle::psl_image(nf(uv).syllables()), oracle::psl_image(uv)));
        // distinct normal forms are distinct group elements
        if (!(nf(u) == nf(v))) {
            CHECK_FALSE(oracle::psl_equal(oracle::psl_image(nf(u).syllables()), oracle::psl_image(nf(v).syllables())));
        }
    }
}

TEST_CASE("certify on the C_2 projective group")
{
    Presentation p = presentation_C2_proj();
    FPImages im{{"x1", FPWord::parse("s t^-1")}, {"x2", FPWord::t()}};
    CHECK(certify(p, im, Word::parse("x1 x2"), Word::parse("x2")).ok());

    FPImages triv{{"x1", FPWord()}, {"x2", FPWord()}};
    auto r = certify(p, triv, Word::parse("x1 x2"), Word::parse("x2"));
    CHECK(r.relators_ok);
    CHECK_FALSE(r.witnesses_ok);

    FPImages ss{{"x1", FPWord::s()}, {"x2", FPWord::s()}};
    auto q = certify(p, ss, Word::parse("x1"), Word::parse("x2"));
    CHECK(q.relators_ok);
    CHECK_FALSE(q.witnesses_ok);
    CHECK_THROWS_AS(certify(p, {{"x1", FPWord()}}, Word(), Word()), MissingImage);
}

TEST_CASE("standard certificates")
{
    for (int n = 2; n <= 5; ++n)
        CHECK(certify(standard_certificate("C", n)).ok());
    for (const char *f : {"T00", "T10", "T20", "T11"})
        CHECK(certify(standard_certificate(f, 0)).ok());
    for (int n = 1; n <= 5; ++n) {
        CHECK(certify(standard_certificate("Tn0", n)).ok());
        for (int m = 0; m <= 5; ++m)
            CHECK(certify(standard_certificate("Tnm", n, m)).ok());
    }
    auto c = standard_certificate("Tnm", 2, 2);
    CHECK(c.images.at("x2") == FPWord::parse("s t^-1"));
    CHECK(c.images.at("x5") == FPWord::t());
    for (const char *g : {"x6", "x7", "x8"})
        CHECK(c.images.at(g).is_identity());
    CHECK_THROWS(standard_certificate("C", 1));
    CHECK_THROWS(standard_certificate("C", 0));
    CHECK_THROWS(standard_certificate("Tnm", 0, 2));
    auto j = certificate_json(c, certify(c));
    CHECK(j["ok"] == true);
    CHECK(j["images"]["x2"] == "s t^-1");
}
