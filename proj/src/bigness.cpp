#include "conline/bigness.hpp"
#include "conline/fpgroup.hpp"

#include <sstream>
#include <stdexcept>

namespace conline {

FPWord FPWord::s() { return nf({{'s', 1}}); }
FPWord FPWord::t(int e) { return nf({{'t', e}}); }

FPWord nf(const std::vector<Syllable> &raw)
{
    FPWord out;
    auto &v = out.syl_;
    for (auto y : raw) {
        if (y.factor != 's' && y.factor != 't')
            throw std::invalid_argument(std::string("unknown factor ") + y.factor);
        if (!v.empty() && v.back().factor == y.factor) {
            y.exp += v.back().exp;
            v.pop_back();
        }
        int mod = y.factor == 's' ? 2 : 3;
        int e = ((y.exp % mod) + mod) % mod;
        if (e == 0)
            continue; // neighbours may now merge; the next push handles it
        y.exp = y.factor == 's' ? 1 : (e == 1 ? 1 : -1);
        v.push_back(y);
    }
    return out;
}

FPWord operator*(const FPWord &a, const FPWord &b)
{
    auto raw = a.syllables();
    raw.insert(raw.end(), b.syllables().begin(), b.syllables().end());
    return nf(raw);
}

FPWord inverse(const FPWord &a)
{
    std::vector<Syllable> raw(a.syllables().rbegin(), a.syllables().rend());
    for (auto &y : raw)
        y.exp = -y.exp;
    return nf(raw);
}

FPWord FPWord::parse(const std::string &text)
{
    std::istringstream in(text);
    std::string tok;
    std::vector<Syllable> raw;
    while (in >> tok) {
        if (tok == "e" || tok == "1")
            continue;
        char f = tok[0];
        int e = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^')
                throw std::invalid_argument("bad syllable " + tok);
            e = std::stoi(tok.substr(2));
        }
        raw.push_back({f, e});
    }
    return nf(raw);
}

std::string FPWord::str() const
{
    if (syl_.empty())
        return "e";
    std::string s;
    for (auto &y : syl_) {
        if (!s.empty())
            s += " ";
        s += y.factor;
        if (y.exp != 1)
            s += "^" + std::to_string(y.exp);
    }
    return s;
}

FPWord evaluate(const Word &w, const FPImages &images)
{
    std::vector<Syllable> raw;
    for (auto &l : w.letters()) {
        auto it = images.find(l.gen);
        if (it == images.end())
            throw MissingImage(l.gen);
        FPWord x = l.sign > 0 ? it->second : inverse(it->second);
        raw.insert(raw.end(), x.syllables().begin(), x.syllables().end());
    }
    return nf(raw);
}

CertReport certify(const Presentation &p, const FPImages &images, const Word &witness_s, const Word &witness_t)
{
    CertReport r;
    for (auto &g : p.generators)
        if (!images.contains(g))
            throw MissingImage(g);
    for (std::size_t k = 0; k < p.relators.size(); ++k) {
        FPWord v = evaluate(p.relators[k], images);
        CertCheck c{"relator " + std::to_string(k + 1), v.is_identity(), p.relators[k].str() + " -> " + v.str()};
        r.relators_ok = r.relators_ok && c.pass;
        r.checks.push_back(std::move(c));
    }
    FPWord vs = evaluate(witness_s, images), vt = evaluate(witness_t, images);
    r.checks.push_back({"witness s", vs == FPWord::s(), witness_s.str() + " -> " + vs.str()});
    r.checks.push_back({"witness t", vt == FPWord::t(), witness_t.str() + " -> " + vt.str()});
    r.witnesses_ok = vs == FPWord::s() && vt == FPWord::t();
    return r;
}

CertReport certify(const BignessCertificate &c) { return certify(c.source, c.images, c.witness_s, c.witness_t); }

namespace {

// a -> s t^-1, b -> t, everything else -> e; s = ab, t = b.
BignessCertificate conic_pair(Presentation p, const std::string &a, const std::string &b)
{
    BignessCertificate c;
    for (auto &g : p.generators)
        c.images[g] = FPWord();
    c.images[a] = FPWord::parse("s t^-1");
    c.images[b] = FPWord::t();
    c.witness_s = multiply(Word::gen(a), Word::gen(b));
    c.witness_t = Word::gen(b);
    c.source = std::move(p);
    return c;
}

std::string x(int k) { return "x" + std::to_string(k); }

} // namespace

BignessCertificate standard_certificate(const std::string &family, int n, int m)
{
    BignessCertificate c;
    const std::string affine_note = "the affine group surjects onto the projective one, so it is big as well";
    if (family == "C") {
        if (n <= 1)
            throw std::invalid_argument("C_n with n <= 1 has an abelian group; no bigness certificate");
        if (n == 2) {
            c = conic_pair(presentation_C2_proj(), "x1", "x2");
        } else {
            // The relation x_{n+1} ... x2 x1^2 = e forces a nontrivial image for x3.
            c = conic_pair(presentation_Cn_proj(n), "x1", "x2");
            c.images["x3"] = FPWord::parse("t s t s t^-1");
        }
        c.note = affine_note;
    } else if (family == "T00") {
        c = conic_pair(presentation_T00(), "x1", "x2");
    } else if (family == "T10") {
        c = conic_pair(presentation_T10(), "x1", "x2");
    } else if (family == "T20") {
        c = conic_pair(presentation_T20(), "x2", "x3");
    } else if (family == "T11") {
        c = conic_pair(presentation_T11(), "x2", "x3");
    } else if (family == "Tn0" || (family == "Tnm" && m == 0)) {
        if (n < 1)
            throw std::invalid_argument("T_{n,0} needs n >= 1");
        c = conic_pair(presentation_Tn0(n), x(n), x(n + 2));
        m = 0;
    } else if (family == "Tnm") {
        if (n < 1 || m < 1)
            throw std::invalid_argument("T_{n,m} needs n >= 1 and m >= 1");
        c = conic_pair(presentation_Tnm(n, m), "x2", "x5");
    } else {
        throw std::invalid_argument("no bigness certificate for family " + family);
    }
    c.family = family;
    c.n = n;
    c.m = m;
    if (c.note.empty())
        c.note = "lines map to e; " + affine_note;
    return c;
}

nlohmann::json certificate_json(const BignessCertificate &c, const CertReport &r)
{
    nlohmann::json im = nlohmann::json::object();
    for (auto &[g, w] : c.images)
        im[g] = w.str();
    nlohmann::json checks = nlohmann::json::array();
    for (auto &k : r.checks)
        checks.push_back({{"name", k.name}, {"pass", k.pass}, {"detail", k.detail}});
    return {{"family", c.family},
            {"n", c.n},
            {"m", c.m},
            {"images", im},
            {"witnesses", {{"s", c.witness_s.str()}, {"t", c.witness_t.str()}}},
            {"checks", checks},
            {"ok", r.ok()},
            {"note", c.note}};
}

} // namespace conline
