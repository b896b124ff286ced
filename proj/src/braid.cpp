#include "conline/braid.hpp"

#include <sstream>
#include <stdexcept>

namespace conline {

ArtinWord::ArtinWord(int n, std::vector<ArtinLetter> l) : strands(n), letters(std::move(l))
{
    for (auto &a : letters)
        if (a.i < 1 || a.i >= strands)
            throw std::out_of_range("artin letter s" + std::to_string(a.i) + " outside B_" + std::to_string(strands));
}

ArtinWord ArtinWord::inverse() const
{
    ArtinWord r;
    r.strands = strands;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        r.letters.push_back({it->i, -it->sign});
    return r;
}

ArtinWord ArtinWord::operator*(const ArtinWord &o) const
{
    ArtinWord r = *this;
    r.strands = std::max(strands, o.strands);
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    return r;
}

ArtinWord ArtinWord::pow(int k) const
{
    ArtinWord base = k < 0 ? inverse() : *this;
    ArtinWord r;
    r.strands = strands;
    for (int t = 0; t < std::abs(k); ++t)
        r.letters.insert(r.letters.end(), base.letters.begin(), base.letters.end());
    return r;
}

std::string ArtinWord::str() const
{
    if (letters.empty())
        return "1";
    std::string s;
    for (auto &a : letters) {
        if (!s.empty())
            s += ' ';
        s += "s" + std::to_string(a.i);
        if (a.sign < 0)
            s += "^-1";
    }
    return s;
}

ArtinWord ArtinWord::parse(int strands, const std::string &text)
{
    std::istringstream in(text);
    std::vector<ArtinLetter> l;
    std::string tok;
    while (in >> tok) {
        if (tok == "1")
            continue;
        if (tok.size() < 2 || tok[0] != 's')
            throw std::invalid_argument("bad artin letter: " + tok);
        int sign = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            if (tok.substr(caret) != "^-1")
                throw std::invalid_argument("bad artin letter: " + tok);
            sign = -1;
        }
        l.push_back({std::stoi(tok.substr(1, caret - 1)), sign});
    }
    return ArtinWord(strands, std::move(l));
}

Permutation Permutation::identity(int n)
{
    Permutation p;
    for (int k = 1; k <= n; ++k)
        p.images.push_back(k);
    return p;
}

bool Permutation::is_identity() const
{
    for (std::size_t k = 0; k < images.size(); ++k)
        if (images[k] != int(k) + 1)
            return false;
    return true;
}

Permutation Permutation::then(const Permutation &o) const
{
    Permutation r;
    for (int x : images)
        r.images.push_back(o.images[x - 1]);
    return r;
}

static void check_skeleton(const Skeleton &s, int N)
{
    if (s.i < 1 || s.j > N || s.i >= s.j)
        throw std::out_of_range("skeleton endpoints (" + std::to_string(s.i) + "," + std::to_string(s.j) +
                                ") invalid for " + std::to_string(N) + " strands");
}

ArtinWord skeleton_band(const Skeleton &s, int N)
{
    check_skeleton(s, N);
    ArtinWord w;
    w.strands = N;
    int sign = s.side == Side::Below ? -1 : 1;
    for (int k = s.j - 1; k > s.i; --k)
        w.letters.push_back({k, sign});
    return w;
}

ArtinWord compile_skeleton(const Skeleton &s, int N)
{
    ArtinWord band = skeleton_band(s, N);
    return band * ArtinWord(N, {{s.i, 1}}) * band.inverse();
}

ArtinWord compile_factor(const ConjugatedTwist &t, int N)
{
    ArtinWord pre(N, {}), post(N, {});
    for (auto &c : t.conjugators) {
        ArtinWord cw = compile_skeleton(c.sk, N).pow(c.power);
        pre = cw.inverse() * pre;
        post = post * cw;
    }
    return pre * compile_skeleton(t.base, N).pow(t.power) * post;
}

std::vector<std::string> default_labels(int N)
{
    std::vector<std::string> l;
    for (int k = 1; k <= N; ++k)
        l.push_back("x" + std::to_string(k));
    return l;
}

// Image of a single generator under one Artin letter; nullptr-like empty means fixed.
static bool letter_image(const ArtinLetter &a, const std::string &g, const std::vector<std::string> &labels,
                         std::vector<Letter> &out)
{
    const std::string &xi = labels[a.i - 1], &xj = labels[a.i];
    if (a.sign > 0) {
        if (g == xi) {
            out = {{xi, -1}, {xj, 1}, {xi, 1}};
            return true;
        }
        if (g == xj) {
            out = {{xi, 1}};
            return true;
        }
    } else {
        if (g == xi) {
            out = {{xj, 1}};
            return true;
        }
        if (g == xj) {
            out = {{xj, 1}, {xi, 1}, {xj, -1}};
            return true;
        }
    }
    return false;
}

static Word act_letter(const ArtinLetter &a, const Word &w, const std::vector<std::string> &labels)
{
    std::vector<Letter> out, img;
    for (auto &l : w.letters()) {
        if (!letter_image(a, l.gen, labels, img)) {
            out.push_back(l);
            continue;
        }
        if (l.sign > 0) {
            out.insert(out.end(), img.begin(), img.end());
        } else {
            for (auto r = img.rbegin(); r != img.rend(); ++r)
                out.push_back({r->gen, -r->sign});
        }
    }
    return Word(std::move(out));
}

Word act(const ArtinWord &b, const Word &w, const std::vector<std::string> &labels)
{
    if (int(labels.size()) < b.strands)
        throw std::invalid_argument("label list shorter than strand count");
    Word r = w;
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
        r = act_letter(*it, r, labels);
    return r;
}

GroupMap artin_action(const ArtinWord &b, const std::vector<std::string> &labels)
{
    GroupMap m;
    for (int k = 0; k < b.strands; ++k)
        m[labels[k]] = act(b, Word::gen(labels[k]), labels);
    return m;
}

GroupMap artin_action(const ArtinWord &b) { return artin_action(b, default_labels(b.strands)); }

ArtinWord full_twist(int N)
{
    ArtinWord w;
    w.strands = N;
    for (int r = 0; r < N; ++r)
        for (int i = 1; i < N; ++i)
            w.letters.push_back({i, 1});
    return w;
}

int exponent_sum(const ArtinWord &b)
{
    int s = 0;
    for (auto &a : b.letters)
        s += a.sign;
    return s;
}

Permutation permutation(const ArtinWord &b)
{
    Permutation p = Permutation::identity(b.strands);
    for (auto &a : b.letters) {
        Permutation t = Permutation::identity(b.strands);
        std::swap(t.images[a.i - 1], t.images[a.i]);
        p = p.then(t);
    }
    return p;
}

std::string side_name(Side s) { return s == Side::Below ? "below" : "above"; }

static Side side_from(const std::string &s)
{
    if (s == "below" || s == "B")
        return Side::Below;
    if (s == "above" || s == "A")
        return Side::Above;
    throw std::invalid_argument("unknown side: " + s);
}

void to_json(nlohmann::json &j, const Skeleton &s) { j = {{"i", s.i}, {"j", s.j}, {"side", side_name(s.side)}}; }

void from_json(const nlohmann::json &j, Skeleton &s)
{
    s.i = j.at("i").get<int>();
    s.j = j.at("j").get<int>();
    s.side = side_from(j.value("side", std::string("below")));
}

void to_json(nlohmann::json &j, const ConjugatedTwist &t)
{
    nlohmann::json cs = nlohmann::json::array();
    for (auto &c : t.conjugators) {
        nlohmann::json e = c.sk;
        e["power"] = c.power;
        cs.push_back(e);
    }
    j = {{"base", t.base}, {"power", t.power}, {"conjugators", cs}};
}

void from_json(const nlohmann::json &j, ConjugatedTwist &t)
{
    t.base = j.at("base").get<Skeleton>();
    t.power = j.at("power").get<int>();
    t.conjugators.clear();
    for (auto &e : j.value("conjugators", nlohmann::json::array()))
        t.conjugators.push_back({e.get<Skeleton>(), e.at("power").get<int>()});
}

static std::string zname(const Skeleton &s, int p)
{
    std::string r = s.side == Side::Above ? "Zbar" : "Z";
    r += "_{" + std::to_string(s.i) + "," + std::to_string(s.j) + "}";
    if (p != 1)
        r += "^" + std::to_string(p);
    return r;
}

std::string twist_str(const ConjugatedTwist &t)
{
    std::string r = zname(t.base, t.power);
    if (t.conjugators.empty())
        return r;
    r = "(" + r + ")^{";
    for (std::size_t k = 0; k < t.conjugators.size(); ++k) {
        if (k)
            r += " ";
        r += zname(t.conjugators[k].sk, t.conjugators[k].power);
    }
    return r + "}";
}

} // namespace conline
