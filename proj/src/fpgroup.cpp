#include "conline/fpgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace conline {

// ---- Smith normal form ----

namespace {

std::int64_t ck_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in Smith normal form");
    return r;
}

std::int64_t ck_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in Smith normal form");
    return r;
}

IntMatrix identity_matrix(int n)
{
    IntMatrix m(n, std::vector<std::int64_t>(n, 0));
    for (int k = 0; k < n; ++k)
        m[k][k] = 1;
    return m;
}

struct SNFState {
    IntMatrix D, U, V;
    int r, c;
    bool track;

    // row_i += q * row_j
    void add_row(int i, int j, std::int64_t q)
    {
        for (int k = 0; k < c; ++k)
            D[i][k] = ck_add(D[i][k], ck_mul(q, D[j][k]));
        if (track)
            for (int k = 0; k < r; ++k)
                U[i][k] = ck_add(U[i][k], ck_mul(q, U[j][k]));
    }
    // col_i += q * col_j
    void add_col(int i, int j, std::int64_t q)
    {
        for (int k = 0; k < r; ++k)
            D[k][i] = ck_add(D[k][i], ck_mul(q, D[k][j]));
        if (track)
            for (int k = 0; k < c; ++k)
                V[k][i] = ck_add(V[k][i], ck_mul(q, V[k][j]));
    }
    void swap_rows(int i, int j)
    {
        std::swap(D[i], D[j]);
        if (track)
            std::swap(U[i], U[j]);
    }
    void swap_cols(int i, int j)
    {
        for (auto &row : D)
            std::swap(row[i], row[j]);
        if (track)
            for (auto &row : V)
                std::swap(row[i], row[j]);
    }
    void negate_row(int i)
    {
        for (auto &x : D[i])
            x = -x;
        if (track)
            for (auto &x : U[i])
                x = -x;
    }
};

} // namespace

std::vector<std::int64_t> SNFResult::torsion() const
{
    std::vector<std::int64_t> t;
    for (auto d : diagonal)
        if (d > 1)
            t.push_back(d);
    return t;
}

std::string SNFResult::str() const
{
    std::string s;
    if (rank_free > 0)
        s = rank_free == 1 ? "Z" : "Z^" + std::to_string(rank_free);
    for (auto d : torsion())
        s += (s.empty() ? "" : " + ") + std::string("Z/") + std::to_string(d);
    return s.empty() ? "0" : s;
}

SNFResult smith_normal_form(const IntMatrix &a, int cols, SNFTrace *trace)
{
    SNFState st;
    st.r = static_cast<int>(a.size());
    st.c = cols;
    st.track = trace != nullptr;
    st.D = a;
    for (auto &row : st.D)
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("ragged matrix");
    if (st.track) {
        st.U = identity_matrix(st.r);
        st.V = identity_matrix(st.c);
    }
    auto &D = st.D;
    int lim = std::min(st.r, st.c);
    int t = 0;
    for (; t < lim; ++t) {
        bool found_any = true;
        for (;;) {
            int pi = -1, pj = -1;
            for (int i = t; i < st.r; ++i)
                for (int j = t; j < st.c; ++j)
                    if (D[i][j] != 0 && (pi < 0 || std::llabs(D[i][j]) < std::llabs(D[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) {
                found_any = false;
                break;
            }
            st.swap_rows(t, pi);
            st.swap_cols(t, pj);
            bool clean = true;
            for (int i = t + 1; i < st.r; ++i)
                if (D[i][t] != 0) {
                    st.add_row(i, t, -(D[i][t] / D[t][t]));
                    clean = clean && D[i][t] == 0;
                }
            for (int j = t + 1; j < st.c; ++j)
                if (D[t][j] != 0) {
                    st.add_col(j, t, -(D[t][j] / D[t][t]));
                    clean = clean && D[t][j] == 0;
                }
            if (!clean)
                continue;
            int bad = -1;
            for (int i = t + 1; i < st.r && bad < 0; ++i)
                for (int j = t + 1; j < st.c; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0)
                break;
            st.add_row(t, bad, 1);
        }
        if (!found_any)
            break;
        if (D[t][t] < 0)
            st.negate_row(t);
    }
    SNFResult res;
    for (int k = 0; k < t; ++k)
        res.diagonal.push_back(D[k][k]);
    res.rank_free = st.c - t;
    if (trace) {
        trace->U = std::move(st.U);
        trace->V = std::move(st.V);
        trace->D = std::move(st.D);
    }
    return res;
}

IntMatrix mat_mul(const IntMatrix &a, const IntMatrix &b)
{
    if (a.empty())
        return {};
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix r(n, std::vector<std::int64_t>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t j = 0; j < m; ++j)
                r[i][j] = ck_add(r[i][j], ck_mul(a[i][l], b[l][j]));
    return r;
}

IntMatrix relator_matrix(const Presentation &p)
{
    IntMatrix m;
    for (auto &r : p.relators) {
        std::vector<std::int64_t> row;
        for (auto &g : p.generators)
            row.push_back(r.exponent(g));
        m.push_back(std::move(row));
    }
    return m;
}

SNFResult abelianization(const Presentation &p)
{
    return smith_normal_form(relator_matrix(p), static_cast<int>(p.generators.size()));
}

// ---- permutation groups ----

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm &a, const Perm &b)
{
    Perm r(a.size());
    for (std::size_t x = 0; x < a.size(); ++x)
        r[x] = a[b[x]];
    return r;
}

FiniteGroup closure(const std::string &name, int degree, const std::vector<Perm> &gens)
{
    Perm id(degree);
    for (int k = 0; k < degree; ++k)
        id[k] = k;
    std::set<Perm> seen{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (auto &p : frontier)
            for (auto &g : gens) {
                Perm q = compose(p, g);
                if (seen.insert(q).second)
                    next.push_back(q);
            }
        frontier = std::move(next);
    }
    FiniteGroup G;
    G.name = name;
    G.perms.assign(seen.begin(), seen.end());
    G.order = static_cast<int>(G.perms.size());
    std::map<Perm, int> index;
    for (int k = 0; k < G.order; ++k)
        index[G.perms[k]] = k;
    G.identity = index.at(id);
    G.mul.assign(G.order, std::vector<int>(G.order));
    G.inv.assign(G.order, 0);
    for (int a = 0; a < G.order; ++a)
        for (int b = 0; b < G.order; ++b) {
            int c = index.at(compose(G.perms[a], G.perms[b]));
            G.mul[a][b] = c;
            if (c == G.identity)
                G.inv[a] = b;
        }
    return G;
}

} // namespace

FiniteGroup perm_group(const std::string &name)
{
    if (name == "S3")
        return closure(name, 3, {{1, 0, 2}, {1, 2, 0}});
    if (name == "D4")
        return closure(name, 4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
    if (name == "A4")
        return closure(name, 4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
    if (name == "S4")
        return closure(name, 4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
    throw std::invalid_argument("unknown target group " + name + " (expected S3, D4, A4 or S4)");
}

const std::vector<std::string> &default_battery()
{
    static const std::vector<std::string> b = [] {
        const char *env = std::getenv("CONLINE_BATTERY");
        if (env && *env)
            return parse_battery(env);
        return std::vector<std::string>{"S3", "D4", "A4", "S4"};
    }();
    return b;
}

std::vector<std::string> parse_battery(const std::string &s)
{
    if (s.empty())
        return default_battery();
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty())
            continue;
        perm_group(tok); // validates the name
        out.push_back(tok);
    }
    if (out.empty())
        throw std::invalid_argument("empty battery");
    return out;
}

// ---- homomorphism counting ----

IndexedPresentation index_presentation(const Presentation &p)
{
    IndexedPresentation ip;
    ip.gens = static_cast<int>(p.generators.size());
    std::map<std::string, int> idx;
    for (int k = 0; k < ip.gens; ++k)
        idx[p.generators[k]] = k;
    for (auto &r : p.relators) {
        if (r.empty())
            continue;
        std::vector<int> rel;
        for (auto &l : r.letters()) {
            auto it = idx.find(l.gen);
            if (it == idx.end())
                throw std::invalid_argument("relator uses undeclared generator " + l.gen);
            rel.push_back(2 * it->second + (l.sign < 0));
        }
        ip.relators.push_back(std::move(rel));
    }
    return ip;
}

int eval_relator(const std::vector<int> &rel, const std::vector<int> &assign, const FiniteGroup &g)
{
    int x = g.identity;
    for (int l : rel) {
        int e = assign[l >> 1];
        x = g.mul[x][(l & 1) ? g.inv[e] : e];
    }
    return x;
}

namespace {

struct HomSearch {
    const FiniteGroup &G;
    int gens;
    std::vector<int> order;                    // generator assigned at each depth
    std::vector<std::vector<int>> checks;      // relator ids completed at each depth
    const std::vector<std::vector<int>> &rels;

    HomSearch(const IndexedPresentation &ip, const FiniteGroup &g) : G(g), gens(ip.gens), rels(ip.relators)
    {
        // Greedy order: complete as many relators as early as possible.
        std::vector<std::set<int>> support;
        for (auto &r : rels) {
            std::set<int> s;
            for (int l : r)
                s.insert(l >> 1);
            support.push_back(std::move(s));
        }
        std::vector<bool> placed(gens, false);
        for (int d = 0; d < gens; ++d) {
            int best = -1;
            long best_score = -1;
            for (int x = 0; x < gens; ++x) {
                if (placed[x])
                    continue;
                long done = 0, touch = 0;
                for (auto &s : support) {
                    if (!s.contains(x))
                        continue;
                    ++touch;
                    bool all = true;
                    for (int y : s)
                        all = all && (y == x || placed[y]);
                    done += all;
                }
                long score = done * 1000 + touch;
                if (score > best_score) {
                    best_score = score;
                    best = x;
                }
            }
            placed[best] = true;
            order.push_back(best);
        }
        std::vector<int> depth(gens);
        for (int d = 0; d < gens; ++d)
            depth[order[d]] = d;
        checks.assign(gens, {});
        for (std::size_t k = 0; k < rels.size(); ++k) {
            int lvl = 0;
            for (int y : support[k])
                lvl = std::max(lvl, depth[y]);
            checks[lvl].push_back(static_cast<int>(k));
        }
    }

    bool ok_at(int d, const std::vector<int> &assign) const
    {
        for (int k : checks[d])
            if (eval_relator(rels[k], assign, G) != G.identity)
                return false;
        return true;
    }

    std::uint64_t dfs(int d, std::vector<int> &assign) const
    {
        if (d == gens)
            return 1;
        std::uint64_t total = 0;
        int x = order[d];
        for (int e = 0; e < G.order; ++e) {
            assign[x] = e;
            if (ok_at(d, assign))
                total += dfs(d + 1, assign);
        }
        return total;
    }

    std::uint64_t branch(int first_image) const
    {
        std::vector<int> assign(gens, G.identity);
        assign[order[0]] = first_image;
        if (!ok_at(0, assign))
            return 0;
        return dfs(1, assign);
    }
};

} // namespace

std::uint64_t count_homs(const Presentation &p, const FiniteGroup &g)
{
    IndexedPresentation ip = index_presentation(p);
    if (ip.gens == 0)
        return 1;
    HomSearch hs(ip, g);
    // Parallel over the first generator's image; totals are summed in a fixed order.
    std::vector<std::uint64_t> part(g.order, 0);
    unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), g.order));
    if (ip.gens <= 2)
        workers = 1;
    std::vector<std::future<void>> fs;
    for (unsigned w = 0; w < workers; ++w)
        fs.push_back(std::async(std::launch::async, [&, w] {
            for (int e = static_cast<int>(w); e < g.order; e += static_cast<int>(workers))
                part[e] = hs.branch(e);
        }));
    for (auto &f : fs)
        f.get();
    std::uint64_t total = 0;
    for (auto v : part)
        total += v;
    return total;
}

// ---- fingerprints ----

Fingerprint fingerprint(const Presentation &p, const std::vector<std::string> &battery)
{
    if (battery.empty())
        throw std::invalid_argument("empty battery");
    Presentation q = tietze_simplify(p);
    Fingerprint f;
    f.generators = static_cast<int>(q.generators.size());
    for (auto &name : battery) {
        if (name == "S4" && f.generators > 6) {
            f.skipped.push_back(name);
            continue;
        }
        f.counts.push_back({name, count_homs(q, perm_group(name))});
    }
    return f;
}

CompareReport compare(const Presentation &a, const Presentation &b, const std::vector<std::string> &battery)
{
    Fingerprint fa = fingerprint(a, battery), fb = fingerprint(b, battery);
    CompareReport r;
    std::map<std::string, std::uint64_t> mb(fb.counts.begin(), fb.counts.end());
    bool same = true;
    for (auto &[name, ca] : fa.counts) {
        auto it = mb.find(name);
        if (it == mb.end()) {
            r.skipped.push_back(name);
            continue;
        }
        r.rows.push_back({name, ca, it->second, ca == it->second});
        same = same && ca == it->second;
    }
    for (auto &name : fa.skipped)
        r.skipped.push_back(name);
    SNFResult sa = abelianization(a), sb = abelianization(b);
    r.abelian_a = sa.str();
    r.abelian_b = sb.str();
    r.abelian_equal = sa.rank_free == sb.rank_free && sa.torsion() == sb.torsion();
    r.verdict = same && r.abelian_equal ? "consistent" : "distinguished";
    return r;
}

nlohmann::json fingerprint_json(const Fingerprint &f)
{
    nlohmann::json c = nlohmann::json::object();
    for (auto &[name, v] : f.counts)
        c[name] = v;
    return {{"counts", c}, {"skipped", f.skipped}, {"generators_after_simplification", f.generators}};
}

nlohmann::json compare_json(const CompareReport &r)
{
    nlohmann::json rows = nlohmann::json::array();
    for (auto &row : r.rows)
        rows.push_back({{"target", row.target}, {"a", row.a}, {"b", row.b}, {"equal", row.equal}});
    return {{"verdict", r.verdict},
            {"targets", rows},
            {"skipped", r.skipped},
            {"abelianization", {{"a", r.abelian_a}, {"b", r.abelian_b}, {"equal", r.abelian_equal}}}};
}

} // namespace conline
