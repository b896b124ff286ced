#pragma once

#include "conline/van_kampen.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace conline {

// ---- Tietze ----

struct TietzeOptions {
    int budget = 50;         // passes
    double length_cap = 4.0; // total relator length may not exceed this multiple of the input's
    bool shorten = true;     // substring replacement using other relators
};

struct TietzeResult {
    Presentation p;
    bool budget_exhausted = false;
    int passes = 0;
    std::vector<std::string> eliminated; // in elimination order
};

TietzeResult tietze(const Presentation &p, const TietzeOptions &opt = {});
Presentation tietze_simplify(const Presentation &p, int budget = 50);

// ---- abelianization ----

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct SNFResult {
    std::vector<std::int64_t> diagonal; // nonzero invariant factors d1 | d2 | ...
    int rank_free = 0;

    std::vector<std::int64_t> torsion() const; // factors > 1
    std::string str() const;                   // e.g. "Z^2 + Z/2"
};

// U * A * V == D with U, V unimodular; filled when requested.
struct SNFTrace {
    IntMatrix U, V, D;
};

SNFResult smith_normal_form(const IntMatrix &a, int cols, SNFTrace *trace = nullptr);
IntMatrix relator_matrix(const Presentation &p);
SNFResult abelianization(const Presentation &p);
IntMatrix mat_mul(const IntMatrix &a, const IntMatrix &b);

// ---- finite targets ----

struct FiniteGroup {
    std::string name;
    int order = 0;
    int identity = 0;
    std::vector<std::vector<int>> mul; // mul[a][b] = ab
    std::vector<int> inv;
    std::vector<std::vector<int>> perms; // element k as a permutation of 0..d-1
};

FiniteGroup perm_group(const std::string &name); // S3, D4, A4, S4
const std::vector<std::string> &default_battery();
// Comma-separated list; empty string gives the default battery.
std::vector<std::string> parse_battery(const std::string &s);

// Relator words compiled to generator indices (sign in the low bit).
struct IndexedPresentation {
    int gens = 0;
    std::vector<std::vector<int>> relators; // letter = 2*g + (sign < 0)
};
IndexedPresentation index_presentation(const Presentation &p);
int eval_relator(const std::vector<int> &rel, const std::vector<int> &assign, const FiniteGroup &g);

std::uint64_t count_homs(const Presentation &p, const FiniteGroup &g);

struct Fingerprint {
    std::vector<std::pair<std::string, std::uint64_t>> counts;
    std::vector<std::string> skipped; // targets skipped for cost
    int generators = 0;               // after simplification
};

// Counts are taken on the Tietze-simplified presentation.
Fingerprint fingerprint(const Presentation &p, const std::vector<std::string> &battery);

struct CompareReport {
    struct Row {
        std::string target;
        std::uint64_t a = 0, b = 0;
        bool equal = false;
    };
    std::vector<Row> rows;
    std::vector<std::string> skipped;
    bool abelian_equal = true;
    std::string abelian_a, abelian_b;
    std::string verdict; // "consistent" or "distinguished"
    bool consistent() const { return verdict == "consistent"; }
};

CompareReport compare(const Presentation &a, const Presentation &b, const std::vector<std::string> &battery);

nlohmann::json fingerprint_json(const Fingerprint &f);
nlohmann::json compare_json(const CompareReport &r);

// ---- presentations as stated for each arrangement ----

Presentation presentation_Cn_affine(int n);
Presentation presentation_Cn_proj(int n);
Presentation presentation_C1_affine();
Presentation presentation_C1_proj();
Presentation presentation_C2_affine();
Presentation presentation_C2_proj();
Presentation presentation_T00();
Presentation presentation_T10();
Presentation presentation_T20();
Presentation presentation_Tn0(int n);
Presentation presentation_T11();
// m = 0 drops every family that mentions x_{n+5}, ..., x_{n+m+4}.
Presentation presentation_Tnm(int n, int m);

// Dispatch by family ("C" or "T"). T families only have projective presentations stated.
Presentation paper_presentation(const std::string &family, int n, int m, bool projective);

} // namespace conline
