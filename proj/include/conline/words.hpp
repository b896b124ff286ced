#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace conline {

struct Letter {
    std::string gen;
    int sign = 1;

    bool operator==(const Letter &) const = default;
    auto operator<=>(const Letter &) const = default;
};

// A free-group element. Always kept freely reduced.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);

    static Word gen(const std::string &label, int sign = 1);
    // Parses "x1 x2^-1 x3"; "1" or "" is the empty word. x^k for any integer k is accepted.
    static Word parse(const std::string &text);

    const std::vector<Letter> &letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    // Number of letters on generator g (either sign).
    int occurrences(const std::string &g) const;
    // Signed exponent sum of generator g.
    int exponent(const std::string &g) const;

    std::string str() const;

    bool operator==(const Word &) const = default;
    auto operator<=>(const Word &) const = default;

private:
    std::vector<Letter> letters_;
};

std::vector<Letter> reduce(std::vector<Letter> letters);
Word reduce(const Word &w);
Word multiply(const Word &a, const Word &b);
Word multiply(std::initializer_list<Word> ws);
Word invert(const Word &a);
Word power(const Word &a, int k);
// a^b = b^-1 a b
Word conjugate(const Word &a, const Word &b);
Word commutator(const Word &a, const Word &b);
// Strips matching letters from both ends.
Word cyclic_reduce(const Word &w);

struct MissingImage : std::runtime_error {
    explicit MissingImage(const std::string &g) : std::runtime_error("no image for generator " + g) {}
};

using GroupMap = std::map<std::string, Word>;

Word apply_map(const GroupMap &m, const Word &w);
// apply_map(compose_maps(m1, m2), w) == apply_map(m2, apply_map(m1, w))
GroupMap compose_maps(const GroupMap &m1, const GroupMap &m2);
GroupMap identity_map(const std::vector<std::string> &gens);

} // namespace conline
