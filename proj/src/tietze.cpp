#include "conline/fpgroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace conline {

namespace {

// Letters are +-(k+1) for generator k.
using IWord = std::vector<int>;

IWord free_reduce(const IWord &w)
{
    IWord out;
    for (int l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

IWord cyc_reduce(IWord w)
{
    w = free_reduce(w);
    std::size_t a = 0, b = w.size();
    while (b - a >= 2 && w[a] == -w[b - 1]) {
        ++a;
        --b;
    }
    return IWord(w.begin() + a, w.begin() + b);
}

IWord inv(const IWord &w)
{
    IWord r(w.rbegin(), w.rend());
    for (int &l : r)
        l = -l;
    return r;
}

// Least rotation of w or w^-1; equal keys mean the relators are interchangeable.
IWord canonical(const IWord &w)
{
    IWord best = w;
    for (const IWord &v : {w, inv(w)}) {
        IWord t = v;
        for (std::size_t k = 0; k < t.size(); ++k) {
            if (t < best)
                best = t;
            std::rotate(t.begin(), t.begin() + 1, t.end());
        }
    }
    return best;
}

bool is_primed(const std::string &g) { return g.find('\'') != std::string::npos || (!g.empty() && g.back() == 'p'); }

struct State {
    std::vector<std::string> names;
    std::vector<bool> alive;
    std::vector<IWord> rels;
    std::vector<std::string> origins;

    std::size_t total() const
    {
        std::size_t t = 0;
        for (auto &r : rels)
            t += r.size();
        return t;
    }

    // (a) reduce, (c) drop trivial and duplicate relators. Returns true on change.
    bool normalize()
    {
        bool changed = false;
        std::vector<IWord> out;
        std::vector<std::string> org;
        std::set<IWord> seen;
        for (std::size_t k = 0; k < rels.size(); ++k) {
            IWord r = cyc_reduce(rels[k]);
            changed = changed || r.size() != rels[k].size();
            if (r.empty() || !seen.insert(canonical(r)).second) {
                changed = true;
                continue;
            }
            out.push_back(std::move(r));
            org.push_back(origins[k]);
        }
        rels = std::move(out);
        origins = std::move(org);
        return changed;
    }

    static int count(const IWord &w, int g)
    {
        int c = 0;
        for (int l : w)
            c += std::abs(l) == g + 1;
        return c;
    }

    IWord substitute(const IWord &w, int g, const IWord &img) const
    {
        IWord out;
        IWord iimg = inv(img);
        for (int l : w) {
            if (l == g + 1)
                out.insert(out.end(), img.begin(), img.end());
            else if (l == -(g + 1))
                out.insert(out.end(), iimg.begin(), iimg.end());
            else
                out.push_back(l);
        }
        return cyc_reduce(out);
    }

    // (b) one generator elimination; primed generators first, then cheapest.
    bool eliminate_one(std::size_t cap, std::vector<std::string> &eliminated)
    {
        struct Cand {
            int primed_rank;
            long cost;
            int g;
            std::size_t r;
        };
        std::vector<Cand> cands;
        for (int g = 0; g < static_cast<int>(names.size()); ++g) {
            if (!alive[g])
                continue;
            long occ_total = 0;
            for (auto &r : rels)
                occ_total += count(r, g);
            for (std::size_t k = 0; k < rels.size(); ++k)
                if (count(rels[k], g) == 1) {
                    long len = static_cast<long>(rels[k].size());
                    cands.push_back({is_primed(names[g]) ? 0 : 1, (len - 2) * (occ_total - 1) - len, g, k});
                }
        }
        std::sort(cands.begin(), cands.end(), [](const Cand &a, const Cand &b) {
            return std::tie(a.primed_rank, a.cost, a.g, a.r) < std::tie(b.primed_rank, b.cost, b.g, b.r);
        });
        for (auto &c : cands) {
            IWord r = rels[c.r];
            auto pos = std::find_if(r.begin(), r.end(), [&](int l) { return std::abs(l) == c.g + 1; });
            std::rotate(r.begin(), pos, r.end());
            int sign = r[0] > 0 ? 1 : -1;
            IWord w(r.begin() + 1, r.end());
            IWord img = sign > 0 ? inv(w) : w; // g^sign w = e
            std::vector<IWord> next;
            std::vector<std::string> org;
            std::size_t len = 0;
            for (std::size_t k = 0; k < rels.size(); ++k) {
                if (k == c.r)
                    continue;
                next.push_back(substitute(rels[k], c.g, img));
                org.push_back(origins[k]);
                len += next.back().size();
            }
            if (len > cap)
                continue;
            rels = std::move(next);
            origins = std::move(org);
            alive[c.g] = false;
            eliminated.push_back(names[c.g]);
            return true;
        }
        return false;
    }

    // (d) replace a cyclic subword of r that is more than half of a relator s (rotated,
    // possibly inverted) by the inverse of the remaining part of s.
    bool shorten_sweep()
    {
        bool changed = false;
        for (std::size_t i = 0; i < rels.size(); ++i) {
            for (std::size_t j = 0; j < rels.size(); ++j) {
                if (i == j || rels[i].empty() || rels[j].empty())
                    continue;
                const IWord &s = rels[j];
                std::size_t L = s.size();
                bool done = false;
                for (const IWord &sv : {s, inv(s)}) {
                    for (std::size_t rot = 0; rot < L && !done; ++rot) {
                        IWord &r = rels[i];
                        std::size_t R = r.size();
                        for (std::size_t p = 0; p < R && !done; ++p) {
                            std::size_t k = 0;
                            while (k < L && k < R && r[(p + k) % R] == sv[(rot + k) % L])
                                ++k;
                            if (2 * k <= L)
                                continue;
                            // u = sv[rot .. rot+k), v = rest; u = v^-1
                            IWord v;
                            for (std::size_t q = k; q < L; ++q)
                                v.push_back(sv[(rot + q) % L]);
                            IWord nr = inv(v);
                            for (std::size_t q = k; q < R; ++q)
                                nr.push_back(r[(p + q) % R]);
                            r = cyc_reduce(nr);
                            done = true;
                        }
                    }
                    if (done)
                        break;
                }
                if (done) {
                    changed = true;
                    if (rels[i].empty())
                        break;
                }
            }
        }
        return changed;
    }
};

} // namespace

TietzeResult tietze(const Presentation &p, const TietzeOptions &opt)
{
    State st;
    st.names = p.generators;
    st.alive.assign(p.generators.size(), true);
    std::map<std::string, int> idx;
    for (std::size_t k = 0; k < p.generators.size(); ++k)
        if (!idx.emplace(p.generators[k], static_cast<int>(k)).second)
            throw std::invalid_argument("duplicate generator " + p.generators[k]);
    for (std::size_t k = 0; k < p.relators.size(); ++k) {
        IWord w;
        for (auto &l : p.relators[k].letters()) {
            auto it = idx.find(l.gen);
            if (it == idx.end())
                throw std::invalid_argument("relator uses undeclared generator " + l.gen);
            w.push_back(l.sign * (it->second + 1));
        }
        st.rels.push_back(std::move(w));
        st.origins.push_back(k < p.origins.size() ? p.origins[k] : std::string());
    }
    st.normalize();
    std::size_t cap = static_cast<std::size_t>(opt.length_cap * static_cast<double>(std::max<std::size_t>(st.total(), 1)));

    TietzeResult res;
    bool changed = true;
    while (changed && res.passes < opt.budget) {
        ++res.passes;
        changed = false;
        while (st.eliminate_one(cap, res.eliminated)) {
            st.normalize();
            changed = true;
        }
        if (opt.shorten && st.shorten_sweep())
            changed = true;
        changed = st.normalize() || changed;
    }
    res.budget_exhausted = changed;

    for (std::size_t k = 0; k < st.names.size(); ++k)
        if (st.alive[k])
            res.p.generators.push_back(st.names[k]);
    for (std::size_t k = 0; k < st.rels.size(); ++k) {
        std::vector<Letter> l;
        for (int x : st.rels[k])
            l.push_back({st.names[std::abs(x) - 1], x > 0 ? 1 : -1});
        res.p.add(Word(std::move(l)), st.origins[k]);
    }
    return res;
}

Presentation tietze_simplify(const Presentation &p, int budget)
{
    TietzeOptions opt;
    opt.budget = budget;
    return tietze(p, opt).p;
}

} // namespace conline
