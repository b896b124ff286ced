#include "conline/words.hpp"

#include <sstream>

namespace conline {

std::vector<Letter> reduce(std::vector<Letter> letters)
{
    std::vector<Letter> out;
    out.reserve(letters.size());
    for (auto &l : letters) {
        if (l.sign == 0)
            continue;
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(std::move(l));
    }
    return out;
}

Word::Word(std::vector<Letter> letters) : letters_(reduce(std::move(letters))) {}

Word Word::gen(const std::string &label, int sign)
{
    Word w;
    w.letters_.push_back({label, sign > 0 ? 1 : -1});
    return w;
}

Word Word::parse(const std::string &text)
{
    std::istringstream in(text);
    std::vector<Letter> out;
    std::string tok;
    while (in >> tok) {
        if (tok == "1" || tok == "e")
            continue;
        auto caret = tok.find('^');
        std::string g = tok.substr(0, caret);
        int k = 1;
        if (caret != std::string::npos) {
            try {
                std::size_t used = 0;
                k = std::stoi(tok.substr(caret + 1), &used);
                if (used != tok.size() - caret - 1)
                    throw std::invalid_argument(tok);
            } catch (const std::logic_error &) {
                throw std::invalid_argument("bad letter: " + tok);
            }
        }
        if (g.empty())
            throw std::invalid_argument("bad letter: " + tok);
        for (int i = 0; i < std::abs(k); ++i)
            out.push_back({g, k > 0 ? 1 : -1});
    }
    return Word(std::move(out));
}

int Word::occurrences(const std::string &g) const
{
    int c = 0;
    for (auto &l : letters_)
        c += l.gen == g;
    return c;
}

int Word::exponent(const std::string &g) const
{
    int c = 0;
    for (auto &l : letters_)
        if (l.gen == g)
            c += l.sign;
    return c;
}

std::string Word::str() const
{
    if (letters_.empty())
        return "1";
    std::string s;
    for (auto &l : letters_) {
        if (!s.empty())
            s += ' ';
        s += l.gen;
        if (l.sign < 0)
            s += "^-1";
    }
    return s;
}

Word reduce(const Word &w) { return Word(w.letters()); }

Word multiply(const Word &a, const Word &b)
{
    std::vector<Letter> v = a.letters();
    v.insert(v.end(), b.letters().begin(), b.letters().end());
    return Word(std::move(v));
}

Word multiply(std::initializer_list<Word> ws)
{
    std::vector<Letter> v;
    for (auto &w : ws)
        v.insert(v.end(), w.letters().begin(), w.letters().end());
    return Word(std::move(v));
}

Word invert(const Word &a)
{
    std::vector<Letter> v(a.letters().rbegin(), a.letters().rend());
    for (auto &l : v)
        l.sign = -l.sign;
    return Word(std::move(v));
}

Word power(const Word &a, int k)
{
    Word base = k < 0 ? invert(a) : a;
    std::vector<Letter> v;
    for (int i = 0; i < std::abs(k); ++i)
        v.insert(v.end(), base.letters().begin(), base.letters().end());
    return Word(std::move(v));
}

Word conjugate(const Word &a, const Word &b) { return multiply({invert(b), a, b}); }

Word commutator(const Word &a, const Word &b) { return multiply({a, b, invert(a), invert(b)}); }

Word cyclic_reduce(const Word &w)
{
    auto &l = w.letters();
    std::size_t lo = 0, hi = l.size();
    while (hi - lo >= 2 && l[lo].gen == l[hi - 1].gen && l[lo].sign == -l[hi - 1].sign) {
        ++lo;
        --hi;
    }
    return Word(std::vector<Letter>(l.begin() + lo, l.begin() + hi));
}

Word apply_map(const GroupMap &m, const Word &w)
{
    std::vector<Letter> out;
    for (auto &l : w.letters()) {
        auto it = m.find(l.gen);
        if (it == m.end())
            throw MissingImage(l.gen);
        const auto &img = it->second.letters();
        if (l.sign > 0) {
            for (auto &x : img) {
                if (!out.empty() && out.back().gen == x.gen && out.back().sign == -x.sign)
                    out.pop_back();
                else
                    out.push_back(x);
            }
        } else {
            for (auto r = img.rbegin(); r != img.rend(); ++r) {
                if (!out.empty() && out.back().gen == r->gen && out.back().sign == r->sign)
                    out.pop_back();
                else
                    out.push_back({r->gen, -r->sign});
            }
        }
    }
    return Word(std::move(out));
}

GroupMap compose_maps(const GroupMap &m1, const GroupMap &m2)
{
    GroupMap r;
    for (auto &[g, w] : m1)
        r[g] = apply_map(m2, w);
    return r;
}

GroupMap identity_map(const std::vector<std::string> &gens)
{
    GroupMap m;
    for (auto &g : gens)
        m[g] = Word::gen(g);
    return m;
}

} // namespace conline
