#include "conline/van_kampen.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace conline {

void Presentation::add(Word r, std::string origin)
{
    relators.push_back(std::move(r));
    origins.push_back(std::move(origin));
}

bool Presentation::well_formed() const
{
    std::set<std::string> g(generators.begin(), generators.end());
    for (auto &r : relators)
        for (auto &l : r.letters())
            if (!g.contains(l.gen))
                return false;
    return true;
}

std::pair<Word, Word> relation_pair(const BMFactor &f, const BMF &b)
{
    const auto &t = f.twist;
    ArtinWord C(b.N, {});
    for (auto &c : t.conjugators)
        C = compile_skeleton(c.sk, b.N).pow(c.power).inverse() * C;
    C = C * skeleton_band(t.base, b.N);
    int i = t.base.i;
    return {act(C, Word::gen(b.labels[i - 1]), b.labels), act(C, Word::gen(b.labels[i]), b.labels)};
}

Word relator_for_power(int exponent, const Word &a, const Word &b)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("relation pair words must be nonempty");
    switch (exponent) {
    case 1:
        return multiply(a, invert(b));
    case 2:
        return commutator(a, b);
    case 4: {
        Word ab = multiply(a, b), ba = multiply(b, a);
        return multiply(power(ab, 2), invert(power(ba, 2)));
    }
    }
    throw std::invalid_argument("no van Kampen rule for exponent " + std::to_string(exponent));
}

Word relator_for(SingType t, const Word &a, const Word &b) { return relator_for_power(sing_exponent(t), a, b); }

Presentation raw_presentation(const BMF &b, bool projective)
{
    Presentation p;
    p.generators = b.labels;
    for (auto &f : b.factors) {
        auto [A, B] = relation_pair(f, b);
        p.add(cyclic_reduce(relator_for(f.sing_type, A, B)), f.origin);
    }
    if (projective) {
        std::vector<Letter> l;
        for (int k = b.N; k >= 1; --k)
            l.push_back({b.labels[k - 1], 1});
        p.add(Word(std::move(l)), "projective");
    }
    return p;
}

bool relator_equal_up_to_cyc(const Word &a, const Word &b)
{
    Word x = cyclic_reduce(a);
    for (const Word &y : {cyclic_reduce(b), cyclic_reduce(invert(b))}) {
        if (x.size() != y.size())
            continue;
        if (x.empty())
            return true;
        auto &xl = x.letters();
        auto yl = y.letters();
        for (std::size_t k = 0; k < yl.size(); ++k) {
            if (xl == yl)
                return true;
            std::rotate(yl.begin(), yl.begin() + 1, yl.end());
        }
    }
    return false;
}

std::string presentation_text(const Presentation &p)
{
    std::string s = "gens:";
    for (auto &g : p.generators)
        s += " " + g;
    s += "\n";
    for (auto &r : p.relators)
        s += r.str() + "\n";
    return s;
}

Presentation parse_presentation(const std::string &text)
{
    std::istringstream in(text);
    std::string line;
    Presentation p;
    bool header = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        if (!header) {
            auto colon = line.find(':');
            if (colon == std::string::npos || line.substr(0, colon).find("gens") == std::string::npos)
                throw std::invalid_argument("presentation must start with 'gens:'");
            std::istringstream g(line.substr(colon + 1));
            std::string tok;
            while (g >> tok)
                p.generators.push_back(tok);
            header = true;
            continue;
        }
        p.add(parse_relation(line));
    }
    if (!header)
        throw std::invalid_argument("empty presentation");
    if (!p.well_formed())
        throw std::invalid_argument("relator uses an undeclared generator");
    return p;
}

nlohmann::json presentation_json(const Presentation &p)
{
    nlohmann::json rs = nlohmann::json::array();
    for (std::size_t k = 0; k < p.relators.size(); ++k)
        rs.push_back({{"relator", p.relators[k].str()}, {"origin", k < p.origins.size() ? p.origins[k] : ""}});
    return {{"generators", p.generators}, {"relators", rs}};
}

Presentation presentation_from_json(const nlohmann::json &j)
{
    Presentation p;
    p.generators = j.at("generators").get<std::vector<std::string>>();
    for (auto &r : j.at("relators"))
        p.add(Word::parse(r.at("relator").get<std::string>()), r.value("origin", std::string()));
    return p;
}

// ---- relation notation ----

namespace {

std::string trim(const std::string &s)
{
    auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return {};
    auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Word with optional parenthesised groups raised to integer powers: "(x1 x2)^2 x3".
Word parse_term(const std::string &s)
{
    std::vector<Letter> out;
    std::size_t p = 0;
    while (p < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[p]))) {
            ++p;
            continue;
        }
        if (s[p] == '(') {
            int depth = 1;
            std::size_t q = p + 1;
            while (q < s.size() && depth) {
                depth += s[q] == '(';
                depth -= s[q] == ')';
                ++q;
            }
            if (depth)
                throw std::invalid_argument("unbalanced parentheses: " + s);
            Word inner = parse_term(s.substr(p + 1, q - p - 2));
            int k = 1;
            if (q < s.size() && s[q] == '^') {
                std::size_t used = 0;
                k = std::stoi(s.substr(q + 1), &used);
                q += 1 + used;
            }
            Word w = power(inner, k);
            out.insert(out.end(), w.letters().begin(), w.letters().end());
            p = q;
            continue;
        }
        if (s[p] == '[') {
            int depth = 1;
            std::size_t q = p + 1;
            while (q < s.size() && depth) {
                depth += s[q] == '[';
                depth -= s[q] == ']';
                ++q;
            }
            if (depth)
                throw std::invalid_argument("unbalanced brackets: " + s);
            std::string inner = s.substr(p + 1, q - p - 2);
            // split at the top-level comma
            int d = 0;
            std::size_t comma = std::string::npos;
            for (std::size_t k = 0; k < inner.size(); ++k) {
                d += inner[k] == '(' || inner[k] == '[';
                d -= inner[k] == ')' || inner[k] == ']';
                if (inner[k] == ',' && d == 0) {
                    comma = k;
                    break;
                }
            }
            if (comma == std::string::npos)
                throw std::invalid_argument("commutator needs two arguments: " + s);
            Word c = commutator(parse_term(inner.substr(0, comma)), parse_term(inner.substr(comma + 1)));
            out.insert(out.end(), c.letters().begin(), c.letters().end());
            p = q;
            continue;
        }
        std::size_t q = p;
        while (q < s.size() && !std::isspace(static_cast<unsigned char>(s[q])) && s[q] != '(' && s[q] != '[')
            ++q;
        Word w = Word::parse(s.substr(p, q - p));
        out.insert(out.end(), w.letters().begin(), w.letters().end());
        p = q;
    }
    return Word(std::move(out));
}

} // namespace

Word parse_relation(const std::string &text)
{
    std::vector<std::string> sides;
    std::string cur;
    for (char ch : text) {
        if (ch == '=') {
            sides.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    sides.push_back(trim(cur));
    // "a = b = e" chains yield a b^-1 only for the first pair; callers split chains.
    Word lhs = parse_term(sides[0]);
    if (sides.size() == 1)
        return lhs;
    if (sides.size() > 2)
        throw std::invalid_argument("chained relation; split it first: " + text);
    return multiply(lhs, invert(parse_term(sides[1])));
}

} // namespace conline
