// Factor lists of the catalog. Positions are fiber indices 1..N; for the C family
// position 2 is the second point 1' of the conic.

#include "conline/bmf_catalog.hpp"

#include <stdexcept>

namespace conline {

namespace {

constexpr Side B = Side::Below;
constexpr Side A = Side::Above;

Conjugator c(int i, int j, int p, Side s = B) { return {{i, j, s}, p}; }

struct Builder {
    BMF b;

    void add(int i, int j, int p, std::vector<Conjugator> cs, std::string origin, Side s = B)
    {
        BMFactor f;
        f.twist = {{i, j, s}, p, std::move(cs)};
        f.sing_type = sing_from_power(p);
        f.origin = std::move(origin);
        b.factors.push_back(std::move(f));
    }
    void add(ConjugatedTwist t, std::string origin, bool provisional)
    {
        BMFactor f;
        f.sing_type = sing_from_power(t.power);
        f.twist = std::move(t);
        f.origin = std::move(origin);
        f.provisional = provisional;
        b.factors.push_back(std::move(f));
    }
};

Builder start(std::string family, int n, int m, int N)
{
    Builder r;
    r.b.family = std::move(family);
    r.b.n = n;
    r.b.m = m;
    r.b.N = N;
    r.b.labels = default_labels(N);
    return r;
}

std::string idx(int i, int j) { return std::to_string(i) + "," + std::to_string(j); }

} // namespace

BMF bmf_Cn(int n)
{
    if (n < 1)
        throw std::invalid_argument("C_n needs n >= 1");
    auto r = start("C", n, 0, n + 2);
    r.b.labels = {"x1", "x1p"};
    for (int k = 2; k <= n + 1; ++k)
        r.b.labels.push_back("x" + std::to_string(k));
    // line k sits at position k+1
    auto P = [](int k) { return k + 1; };

    r.add(1, 2, 1, {}, "branch Q");
    r.add(1, P(2), 4, {c(1, 2, 2)}, "tangency L1.Q");
    for (int i = 2; i <= n; ++i) {
        for (int k = 2; k <= i; ++k)
            r.add(P(k), P(i + 1), 2, {c(1, P(k), 2, A)}, "node L" + std::to_string(k - 1) + ".L" + std::to_string(i),
                  A);
        r.add(1, P(i + 1), 4, {}, "tangency L" + std::to_string(i) + ".Q", A);
    }
    std::vector<Conjugator> cs;
    for (int i = 2; i <= n + 1; ++i)
        cs.push_back(c(2, P(i), -2));
    r.add(1, 2, 1, cs, "branch Q");
    return r.b;
}

BMF bmf_T00()
{
    auto r = start("T00", 0, 0, 4);
    r.add(3, 4, 1, {}, "branch");
    r.add(2, 4, 4, {}, "tangency Q1.Q2");
    r.add(1, 2, 1, {c(2, 4, 2)}, "branch");
    r.add(1, 2, 1, {c(2, 3, 2)}, "branch");
    r.add(2, 3, 4, {}, "tangency Q1.Q2");
    r.add(3, 4, 1, {}, "branch");
    return r.b;
}

BMF bmf_T10()
{
    auto r = start("T10", 1, 0, 5);
    r.add(4, 5, 1, {}, "branch");
    r.add(1, 2, 2, {}, "node");
    r.add(3, 5, 4, {}, "tangency");
    r.add(1, 3, 2, {c(3, 5, 2), c(1, 2, 2)}, "node");
    r.add(2, 3, 1, {c(3, 5, 2)}, "branch");
    r.add(2, 3, 1, {c(1, 2, -2), c(3, 4, 2)}, "branch");
    r.add(1, 5, 4, {c(1, 2, 2)}, "tangency");
    r.add(3, 4, 4, {}, "tangency");
    r.add(4, 5, 1, {c(1, 4, -2), c(1, 2, 2)}, "branch");
    return r.b;
}

BMF bmf_T20()
{
    auto r = start("T20", 2, 0, 6);
    r.add(2, 3, 2, {}, "node");
    r.add(5, 6, 1, {}, "branch");
    r.add(4, 6, 4, {}, "tangency");
    r.add(2, 3, 2, {}, "node");
    r.add(3, 4, 1, {c(2, 3, 2), c(4, 6, 2)}, "branch");
    r.add(3, 4, 1, {c(2, 3, -2), c(4, 5, 2)}, "branch");
    r.add(4, 5, 4, {}, "tangency");
    r.add(2, 6, 4, {c(2, 3, 2)}, "tangency");
    r.add(1, 2, 2, {c(2, 6, 2), c(2, 3, 2)}, "node");
    r.add(1, 6, 4, {}, "tangency");
    r.add(5, 6, 1, {c(1, 5, -2), c(2, 5, -2), c(2, 3, 2)}, "branch");
    r.add(1, 4, 2, {c(1, 2, 2), c(2, 3, 2)}, "node");
    r.add(1, 3, 2, {}, "node");
    return r.b;
}

BMF bmf_Tn0(int n, const TildeTable &tt)
{
    if (n < 1)
        throw std::invalid_argument("T_{n,0} needs n >= 1");
    if (n == 1) {
        // the general list needs position n-1 >= 1
        BMF b = bmf_T10();
        b.family = "Tn0";
        return b;
    }
    const int a = n + 1, b = n + 2, cc = n + 3, d = n + 4;
    auto r = start("Tn0", n, 0, n + 4);
    std::map<std::string, int> vars{{"n", n}, {"m", 0}};

    r.add(b, cc, 1, {}, "branch 1");
    r.add(n, a, 1, {c(n - 1, n, 2), c(a, cc, 2)}, "branch 2");
    r.add(n, a, 1, {c(n - 1, n, 2), c(a, b, -2)}, "branch 3");
    r.add(tt.build("Tn0:Z~(n+2,n+3)", vars), "branch 4 Z~(n+2,n+3)", true);

    r.add(a, cc, 4, {}, "tangency Q1.Q2");
    r.add(a, b, 4, {}, "tangency Q1.Q2");
    r.add(n - 1, cc, 4, {c(n - 1, n, 2)}, "tangency L.Q2");
    r.add(b, d, 4, {}, "tangency L.Q2");
    for (int i = 1; i <= n - 2; ++i)
        r.add(i, cc, 4, {}, "tangency L.Q2 " + std::to_string(i));

    for (int i = 1; i <= n - 2; ++i)
        r.add(i, n - 1, 2, {c(n - 1, cc, 2), c(n - 1, n, 2)}, "node " + idx(i, n - 1));
    for (int i = 1; i <= n - 2; ++i) {
        vars["i"] = i;
        r.add(tt.build("Tn0:Z~(i,n+4)", vars), "node Z~(" + idx(i, n + 4) + ")", true);
    }
    for (int i = 1; i <= n - 2; ++i)
        for (int j = i + 1; j <= n - 2; ++j)
            r.add(i, j, 2, {c(j, cc, 2)}, "node " + idx(i, j));
    for (int i = 1; i <= n - 2; ++i) {
        vars["i"] = i;
        r.add(tt.build("Tn0:Z~(i,n)", vars), "node Z~(" + idx(i, n) + ")", true);
    }
    for (int i = 1; i <= n - 2; ++i) {
        vars["i"] = i;
        r.add(tt.build("Tn0:Z~(i,n+1)", vars), "node Z~(" + idx(i, n + 1) + ")", true);
    }
    r.add(n - 1, n, 2, {}, "node " + idx(n - 1, n));
    // second intersection of the same pair; the degree count needs it
    r.add(n - 1, n, 2, {}, "node " + idx(n - 1, n) + " (second)");
    r.add(n, d, 2, {c(n - 1, n, 2)}, "node " + idx(n, d), A);
    r.add(tt.build("Tn0:Z~(n+1,n+4)", vars), "node Z~(" + idx(a, d) + ")", true);
    r.add(n - 1, d, 2, {c(n - 1, n, 2), c(cc, d, -2)}, "node " + idx(n - 1, d));
    return r.b;
}

BMF bmf_T11()
{
    auto r = start("T11", 1, 1, 6);
    r.add(2, 3, 2, {}, "node");
    r.add(2, 4, 2, {}, "node", A);
    r.add(5, 6, 1, {c(2, 5, -2)}, "branch");
    r.add(2, 5, 4, {}, "tangency");
    r.add(4, 6, 4, {}, "tangency");
    r.add(1, 3, 4, {}, "tangency");
    r.add(3, 4, 1, {c(1, 3, 2), c(4, 6, 2)}, "branch");
    r.add(1, 6, 2, {c(1, 3, 2)}, "node");
    r.add(1, 5, 2, {c(1, 2, 2)}, "node");
    r.add(3, 4, 1, {c(4, 5, 2)}, "branch");
    r.add(1, 2, 2, {}, "node");
    r.add(4, 5, 4, {}, "tangency");
    r.add(5, 6, 1, {}, "branch");
    return r.b;
}

BMF bmf_T21()
{
    auto r = start("T21", 2, 1, 7);
    r.add(2, 3, 1, {}, "branch");
    r.add(6, 7, 2, {}, "node");
    r.add(1, 3, 4, {}, "tangency");
    r.add(2, 4, 4, {}, "tangency");
    r.add(5, 7, 4, {}, "tangency");
    r.add(4, 5, 1, {c(2, 4, 2, A), c(5, 7, 2)}, "branch");
    r.add(2, 7, 2, {c(2, 4, 2), c(2, 3, 2)}, "node");
    r.add(3, 7, 2, {c(1, 3, 2)}, "node");
    r.add(3, 6, 4, {}, "tangency");
    r.add(1, 7, 2, {c(1, 3, 2)}, "node");
    r.add(4, 5, 1, {c(3, 4, -2), c(1, 3, 2)}, "branch");
    r.add(3, 4, 4, {c(1, 3, 2)}, "tangency");
    r.add(1, 5, 2, {c(1, 3, 2)}, "node");
    r.add(1, 5, 2, {c(1, 3, 2)}, "node (listed twice)");
    r.add(2, 3, 1, {c(3, 6, 2), c(1, 3, -2, A)}, "branch");
    r.add(4, 6, 2, {}, "node");
    r.add(5, 6, 2, {c(1, 5, 2), c(1, 3, 2)}, "node");
    r.add(1, 6, 2, {c(1, 5, 2), c(1, 3, 2)}, "node");
    return r.b;
}

BMF bmf_T22()
{
    auto r = start("T22", 2, 2, 8);
    r.add(2, 3, 1, {}, "branch");
    r.add(6, 7, 2, {}, "node");
    r.add(1, 3, 4, {}, "tangency");
    r.add(2, 4, 4, {}, "tangency");
    r.add(5, 7, 4, {}, "tangency");
    r.add(4, 5, 1, {c(2, 4, 2, A), c(5, 7, 2)}, "branch");
    r.add(2, 7, 2, {c(2, 4, 2), c(2, 3, 2)}, "node");
    r.add(3, 7, 2, {c(1, 3, 2)}, "node");
    r.add(6, 8, 2, {c(6, 7, 2)}, "node");
    r.add(2, 8, 2, {c(6, 8, 2, A)}, "node", A);
    r.add(3, 8, 2, {c(3, 7, 2), c(3, 5, 2), c(1, 3, 2)}, "node");
    r.add(2, 6, 4, {}, "tangency");
    r.add(1, 7, 2, {c(1, 3, 2)}, "node");
    r.add(4, 5, 1, {c(5, 8, -2), c(7, 8, -2), c(3, 4, -2), c(1, 3, 2)}, "branch");
    r.add(5, 8, 4, {c(5, 7, 2)}, "tangency");
    r.add(1, 8, 2, {c(1, 7, 2), c(1, 3, 2)}, "node");
    r.add(7, 8, 2, {}, "node");
    r.add(1, 5, 2, {c(1, 3, 2)}, "node");
    r.add(3, 4, 4, {c(1, 3, 2)}, "tangency");
    r.add(1, 5, 2, {c(1, 3, 2)}, "node (listed twice)");
    r.add(2, 3, 1, {c(1, 2, -2), c(2, 6, 2, A)}, "branch");
    r.add(4, 6, 2, {c(4, 5, 2)}, "node");
    r.add(5, 6, 2, {c(1, 5, 2), c(1, 3, 2)}, "node");
    r.add(1, 6, 2, {c(1, 5, 2), c(1, 3, 2)}, "node");
    return r.b;
}

BMF bmf_Tnm(int n, int m, const TildeTable &tt)
{
    if (n < 1 || m < 1)
        throw std::invalid_argument("T_{n,m} table needs n >= 1 and m >= 1");
    auto r = start("Tnm", n, m, n + m + 4);
    std::map<std::string, int> vars{{"n", n}, {"m", m}};
    const int top = n + m + 4, p = n + 5; // p: first line tangent to Q1

    r.add(2, 3, 1, {}, "row(1)");
    std::vector<Conjugator> cs{c(1, 2, -2)};
    for (int i = 6; i <= n + 4; ++i)
        cs.push_back(c(2, i, 2, A));
    r.add(2, 3, 1, cs, "row(2)");
    r.add(4, 5, 1, {c(2, 4, 2, A), c(5, p, 2)}, "row(3)");
    r.add(tt.build("Tnm:Z~(4,5)", vars), "row(4) Z~(4,5)", true);

    r.add(2, 4, 4, {}, "row(5)", A);
    r.add(3, 4, 4, {c(1, 3, 2)}, "row(5)");
    r.add(1, 3, 4, {}, "row(6)");
    for (int i = 6; i <= n + 4; ++i)
        r.add(2, i, 4, {}, "row(6)", A);
    for (int i = p; i <= top; ++i)
        r.add(5, i, 4, {c(5, p, 2)}, "row(7)");

    r.add(1, 5, 2, {c(1, 3, 2)}, "row(8)");
    // listed twice; the degree count needs both
    r.add(1, 5, 2, {c(1, 3, 2)}, "row(8) second");
    for (int i = 6; i <= n + 4; ++i) {
        r.add(4, i, 2, {c(4, 5, 2)}, "row(8)");
        r.add(5, i, 2, {c(1, 5, 2), c(1, 3, 2)}, "row(8)");
    }

    for (int i = 6; i <= n + 4; ++i)
        r.add(1, i, 2, {c(1, 5, 2), c(1, 3, 2)}, "row(9)");
    for (int i = 6; i <= n + 4; ++i)
        for (int j = i + 1; j <= n + 4; ++j)
            r.add(i, j, 2, {c(2, i, 2, A)}, "row(9)", A);

    r.add(2, p, 2, {c(2, 4, 2), c(2, 3, 2)}, "row(10)");
    r.add(3, p, 2, {c(1, 3, 2)}, "row(10)");
    for (int i = p + 1; i <= top; ++i) {
        std::vector<Conjugator> down;
        for (int j = n + 4; j >= 6; --j)
            down.push_back(c(2, j, -2, A));
        r.add(2, i, 2, down, "row(10)", A);
        vars["i"] = i;
        r.add(tt.build("Tnm:Z~(3,i)", vars), "row(10) Z~(3," + std::to_string(i) + ")", true);
    }

    for (int i = p + 1; i <= top; ++i)
        r.add(p, i, 2, {}, "row(11)");
    for (int i = p + 1; i <= top; ++i)
        for (int j = i + 1; j <= top; ++j)
            r.add(i, j, 2, {c(5, i, -2), c(5, p, 2)}, "row(11)");

    for (int i = p; i <= top; ++i)
        r.add(1, i, 2, {c(1, p, 2), c(1, 3, 2)}, "row(12)");
    for (int i = 6; i <= n + 4; ++i)
        for (int j = p; j <= top; ++j) {
            std::vector<Conjugator> ks;
            for (int k = p; k < j; ++k)
                ks.push_back(c(k, j, -2));
            r.add(i, j, 2, ks, "row(12)");
        }
    return r.b;
}

BMF bmf_T1m(int m, const TildeTable &tt) { return bmf_Tnm(1, m, tt); }

BMF bmf_T(int n, int m, const TildeTable &tt)
{
    if (n < 0 || m < 0)
        throw std::invalid_argument("T needs n, m >= 0");
    if (n == 0 && m > 0)
        throw std::invalid_argument("m >= 1 requires n >= 1; use n for the lines tangent to one conic");
    if (n == 0)
        return bmf_T00();
    if (m == 0)
        return n == 1 ? bmf_T10() : n == 2 ? bmf_T20() : bmf_Tn0(n, tt);
    if (n == 1 && m == 1)
        return bmf_T11();
    if (n == 2 && m == 1)
        return bmf_T21();
    if (n == 2 && m == 2)
        return bmf_T22();
    return bmf_Tnm(n, m, tt);
}

} // namespace conline
