#include "conline/fpgroup.hpp"

#include <stdexcept>

namespace conline {

namespace {

std::string x(int k) { return "x" + std::to_string(k); }

// (a b)^2 = (b a)^2
std::string tangency(const std::string &a, const std::string &b)
{
    return "(" + a + " " + b + ")^2 = (" + b + " " + a + ")^2";
}

std::string comm(const std::string &a, const std::string &b) { return "[" + a + ", " + b + "]"; }

void rel(Presentation &p, const std::string &text, const std::string &origin)
{
    p.add(parse_relation(text), origin);
}

Presentation with_gens(std::vector<std::string> g)
{
    Presentation p;
    p.generators = std::move(g);
    return p;
}

// Shared part of the affine and projective C_n presentations.
Presentation cn_common(int n)
{
    if (n < 1)
        throw std::invalid_argument("C_n needs n >= 1");
    std::vector<std::string> g;
    for (int k = 1; k <= n + 1; ++k)
        g.push_back(x(k));
    Presentation p = with_gens(g);
    for (int i = 2; i <= n + 1; ++i)
        rel(p, tangency(x(1), x(i)), "tangency");
    for (int i = 2; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j)
            rel(p, comm(x(j), x(1) + "^-1 " + x(i) + " " + x(1)), "node");
    return p;
}

std::string descending(int from, int to)
{
    std::string s;
    for (int k = from; k >= to; --k)
        s += x(k) + " ";
    return s;
}

} // namespace

Presentation presentation_Cn_affine(int n)
{
    Presentation p = cn_common(n);
    rel(p, comm(descending(n + 1, 2), x(1)), "branch");
    return p;
}

Presentation presentation_Cn_proj(int n)
{
    Presentation p = cn_common(n);
    rel(p, descending(n + 1, 2) + x(1) + "^2", "projective");
    return p;
}

Presentation presentation_C1_affine()
{
    Presentation p = with_gens({"x1", "x2"});
    rel(p, comm("x1", "x2"), "");
    return p;
}

Presentation presentation_C1_proj() { return with_gens({"x1"}); }

Presentation presentation_C2_affine()
{
    Presentation p = with_gens({"x1", "x2", "x3"});
    rel(p, tangency("x1", "x2"), "");
    rel(p, tangency("x1", "x3"), "");
    rel(p, comm("x3", "x1^-1 x2 x1"), "");
    rel(p, comm("x3 x2", "x1"), "");
    return p;
}

Presentation presentation_C2_proj()
{
    Presentation p = with_gens({"x1", "x2"});
    rel(p, tangency("x1", "x2"), "");
    return p;
}

Presentation presentation_T00()
{
    Presentation p = with_gens({"x1", "x2"});
    rel(p, "(x1 x2)^2", "");
    rel(p, "(x2 x1)^2", "");
    return p;
}

Presentation presentation_T10()
{
    Presentation p = with_gens({"x1", "x2"});
    rel(p, tangency("x1", "x2"), "");
    return p;
}

Presentation presentation_T20()
{
    Presentation p = with_gens({"x1", "x2", "x3"});
    rel(p, tangency("x2", "x3"), "");
    rel(p, tangency("x1", "x3"), "");
    rel(p, comm("x1", "x2"), "");
    rel(p, comm("x2", "x3 x1 x3^-1"), "");
    return p;
}

Presentation presentation_Tn0(int n)
{
    if (n < 1)
        throw std::invalid_argument("T_{n,0} needs n >= 1");
    std::vector<std::string> g;
    for (int k = 1; k <= n; ++k)
        g.push_back(x(k));
    std::string c = x(n + 2);
    g.push_back(c);
    Presentation p = with_gens(g);
    rel(p, tangency(x(n), c), "tangency");
    for (int i = 1; i <= n - 1; ++i)
        rel(p, tangency(x(i), c), "tangency");
    for (int i = 1; i <= n - 1; ++i) {
        rel(p, comm(x(i), x(n)), "node");
        rel(p, comm(x(i), c + " " + x(n) + " " + c + "^-1"), "node");
    }
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i + 1; j <= n - 1; ++j)
            rel(p, comm(x(i), c + " " + x(j) + " " + c + "^-1"), "node");
    return p;
}

Presentation presentation_T11()
{
    Presentation p = with_gens({"x1", "x2", "x3"});
    rel(p, comm("x1", "x2"), "direct sum");
    rel(p, comm("x1", "x3"), "direct sum");
    rel(p, tangency("x2", "x3"), "");
    return p;
}

Presentation presentation_Tnm(int n, int m)
{
    if (n < 1 || m < 0)
        throw std::invalid_argument("T_{n,m} presentation needs n >= 1 and m >= 0");
    std::vector<std::string> g{"x2", "x5"};
    for (int k = 6; k <= n + m + 4; ++k)
        g.push_back(x(k));
    Presentation p = with_gens(g);
    const int lo = n + 5, hi = n + m + 4; // second group of lines; empty when m = 0

    if (m >= 1) {
        // x_{n+5}^-1 x5 x_{n+5} = x_{n+6}^-1 ... x_{n+m+4}^-1 x5 x_{n+m+4} ... x_{n+6}
        std::string lhs = x(lo) + "^-1 x5 " + x(lo);
        std::string rhs;
        for (int k = lo + 1; k <= hi; ++k)
            rhs += x(k) + "^-1 ";
        rhs += "x5";
        for (int k = hi; k >= lo + 1; --k)
            rhs += " " + x(k);
        rel(p, lhs + " = " + rhs, "(1)");
    }
    for (int i = 5; i <= n + 4; ++i)
        rel(p, tangency("x2", x(i)), "(2)");
    for (int i = lo; i <= hi; ++i)
        rel(p, tangency("x5", x(i)), "(3)");
    for (int i = 6; i <= n + 4; ++i) {
        rel(p, comm(x(i), "x5"), "(4)");
        for (int j = lo; j <= hi; ++j)
            rel(p, comm(x(i), x(j)), "(4)");
    }
    for (int i = 6; i <= n + 4; ++i)
        rel(p, comm(x(i), "x2 x5 x2^-1"), "(5)");
    for (int i = 6; i <= n + 4; ++i)
        for (int j = i + 1; j <= n + 4; ++j)
            rel(p, comm("x2^-1 " + x(i) + " x2", x(j)), "(6)");
    for (int i = lo + 1; i <= hi; ++i)
        rel(p, comm("x2", x(i)), "(7)");
    for (int i = lo; i <= hi; ++i)
        rel(p, comm("x5 x2 x5^-1", x(i)), "(8)");
    if (m >= 1) {
        rel(p, comm(x(lo), "x2"), "(9)");
        for (int i = lo + 1; i <= hi; ++i)
            rel(p, comm(x(lo), x(i)), "(9)");
    }
    for (int i = lo + 1; i <= hi; ++i)
        for (int j = i + 1; j <= hi; ++j)
            rel(p, comm("x5^-1 " + x(i) + " x5", x(j)), "(10)");
    return p;
}

Presentation paper_presentation(const std::string &family, int n, int m, bool projective)
{
    if (family == "C") {
        if (n == 1)
            return projective ? presentation_C1_proj() : presentation_C1_affine();
        if (n == 2)
            return projective ? presentation_C2_proj() : presentation_C2_affine();
        return projective ? presentation_Cn_proj(n) : presentation_Cn_affine(n);
    }
    if (family == "T") {
        if (!projective)
            throw std::invalid_argument("only projective presentations are stated for the T families");
        if (n == 0 && m == 0)
            return presentation_T00();
        if (n == 0)
            throw std::invalid_argument("m >= 1 requires n >= 1");
        if (m == 0)
            return n == 1 ? presentation_T10() : n == 2 ? presentation_T20() : presentation_Tn0(n);
        return presentation_Tnm(n, m);
    }
    throw std::invalid_argument("unknown family " + family + " (expected C or T)");
}

} // namespace conline
