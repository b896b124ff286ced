#include "conline/words.hpp"

#include <doctest.h>

#include <random>

using namespace conline;

namespace {

Word w(const char *s) { return Word::parse(s); }

Word random_word(std::mt19937 &rng, int gens, int max_len)
{
    std::uniform_int_distribution<int> len(0, max_len), g(1, gens), sign(0, 1);
    std::vector<Letter> l;
    for (int k = len(rng); k > 0; --k)
        l.push_back({"x" + std::to_string(g(rng)), sign(rng) ? 1 : -1});
    return Word(std::move(l));
}

} // namespace

TEST_CASE("reduce cancels adjacent inverse pairs")
{
    CHECK(w("x1 x1^-1").empty());
    CHECK(w("x1 x2 x2^-1 x1") == w("x1 x1"));
    CHECK(w("x1 x2 x1^-1").str() == "x1 x2 x1^-1");
    CHECK(Word().str() == "1");
    CHECK(w("1").empty());
    CHECK(w("x3^2 x3^-3") == w("x3^-1"));
}

TEST_CASE("multiply, invert and conjugate")
{
    CHECK(multiply(w("x1"), w("x1^-1")).empty());
    CHECK(invert(w("x1 x2")) == w("x2^-1 x1^-1"));
    CHECK(multiply(w("x1 x2"), w("x2^-1 x3")) == w("x1 x3"));
    CHECK(conjugate(w("x1"), Word()) == w("x1"));
    CHECK(conjugate(w("x1"), w("x2")) == w("x2^-1 x1 x2"));
    CHECK(conjugate(w("x2^-1 x1 x2"), w("x2^-1")) == w("x1"));
    CHECK(commutator(w("x1"), w("x2")) == w("x1 x2 x1^-1 x2^-1"));
    CHECK(cyclic_reduce(w("x2 x1 x3 x2^-1")) == w("x1 x3"));
}

TEST_CASE("apply_map substitutes and reduces")
{
    CHECK(apply_map(identity_map({"x1", "x2"}), w("x1 x2")) == w("x1 x2"));
    GroupMap m{{"x1", w("x1 x2 x1^-1")}, {"x2", w("x1")}};
    CHECK(apply_map(m, w("x2^-1")) == w("x1^-1"));
    CHECK(apply_map(m, w("x1 x2")) == w("x1 x2"));
    CHECK_THROWS_AS(apply_map(m, w("x3")), MissingImage);
}

TEST_CASE("reduction is confluent under random insertion of cancelling pairs")
{
    std::mt19937 rng(11);
    for (int t = 0; t < 300; ++t) {
        Word base = random_word(rng, 4, 12);
        std::vector<Letter> l = base.letters();
        std::uniform_int_distribution<int> g(1, 4), sign(0, 1);
        for (int k = 0; k < 6; ++k) {
            std::uniform_int_distribution<std::size_t> at(0, l.size());
            std::size_t p = at(rng);
            Letter a{"x" + std::to_string(g(rng)), sign(rng) ? 1 : -1};
            Letter b{a.gen, -a.sign};
            l.insert(l.begin() + static_cast<long>(p), {a, b});
        }
        Word again(l);
        CHECK(again == base);
        CHECK(reduce(again) == again);
    }
}

TEST_CASE("apply_map is a homomorphism and composes")
{
    std::mt19937 rng(12);
    for (int t = 0; t < 200; ++t) {
        GroupMap m1, m2;
        for (int k = 1; k <= 3; ++k) {
            m1["x" + std::to_string(k)] = random_word(rng, 3, 4);
            m2["x" + std::to_string(k)] = random_word(rng, 3, 4);
        }
        Word a = random_word(rng, 3, 8), b = random_word(rng, 3, 8);
        CHECK(apply_map(m1, multiply(a, b)) == multiply(apply_map(m1, a), apply_map(m1, b)));
        CHECK(apply_map(m1, invert(a)) == invert(apply_map(m1, a)));
        CHECK(apply_map(compose_maps(m1, m2), a) == apply_map(m2, apply_map(m1, a)));
        CHECK(conjugate(conjugate(a, b), invert(b)) == a);
    }
}
