// conline: braid monodromy factorizations of conic-line arrangements and the
// fundamental-group presentations derived from them.
//
// Exit status: 0 success or consistent, 1 a check failed, 2 usage error.

#include "conline/bigness.hpp"
#include "conline/bmf_catalog.hpp"
#include "conline/fpgroup.hpp"
#include "conline/van_kampen.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace conline;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string family;
    int n = -1, m = 0;
    bool json = false;
    bool affine = false;
    bool projective = false;
    bool raw = false, paper = false;
    std::string tilde_file;
    std::string file;
    std::string targets;
    bool simplify = false;
};

void add_family(CLI::App *c, RunConfig &cfg, bool required = true)
{
    auto *f = c->add_option("family", cfg.family, "arrangement family: C or T")->check(CLI::IsMember({"C", "T"}));
    if (required)
        f->required();
    c->add_option("--n", cfg.n, "number of lines (C: tangent lines; T: lines tangent to the first conic)");
    c->add_option("--m", cfg.m, "T only: lines tangent to the second conic");
    c->add_option("--tilde", cfg.tilde_file, "JSON file overriding the default tilde factors");
}

void add_kind(CLI::App *c, RunConfig &cfg)
{
    c->add_flag("--projective", cfg.projective, "complement in CP^2 (default)");
    c->add_flag("--affine", cfg.affine, "complement in C^2");
}

void add_source(CLI::App *c, RunConfig &cfg)
{
    add_family(c, cfg, false);
    add_kind(c, cfg);
    auto *raw = c->add_flag("--raw", cfg.raw, "presentation read off the factorization (default)");
    c->add_flag("--paper", cfg.paper, "presentation as stated for the family")->excludes(raw);
    c->add_option("--file", cfg.file, "presentation in text format ('-' for stdin) instead of a family");
}

TildeTable tilde_table(const RunConfig &cfg)
{
    if (cfg.tilde_file.empty())
        return TildeTable::defaults();
    std::ifstream in(cfg.tilde_file);
    if (!in)
        throw UsageError("cannot read " + cfg.tilde_file);
    return TildeTable::defaults().merged(TildeTable::from_json(nlohmann::json::parse(in)));
}

void check_bounds(const RunConfig &cfg)
{
    if (cfg.family == "C") {
        if (cfg.n < 1)
            throw UsageError("C needs --n >= 1");
        if (cfg.m != 0)
            throw UsageError("--m applies to T only");
    } else if (cfg.family == "T") {
        if (cfg.n < 0 || cfg.m < 0)
            throw UsageError("T needs --n >= 0 and --m >= 0");
        if (cfg.n == 0 && cfg.m > 0)
            throw UsageError("m >= 1 requires n >= 1 (use T --n " + std::to_string(cfg.m) + " --m 0 for T_{n,0})");
    } else {
        throw UsageError("a family (C or T) is required");
    }
}

BMF build_bmf(const RunConfig &cfg)
{
    check_bounds(cfg);
    return cfg.family == "C" ? bmf_Cn(cfg.n) : bmf_T(cfg.n, cfg.m, tilde_table(cfg));
}

bool projective(const RunConfig &cfg)
{
    if (cfg.affine && cfg.projective)
        throw UsageError("--affine and --projective are exclusive");
    return !cfg.affine;
}

Presentation source_presentation(const RunConfig &cfg)
{
    if (!cfg.file.empty()) {
        if (!cfg.family.empty())
            throw UsageError("give either a family or --file");
        std::stringstream buf;
        if (cfg.file == "-") {
            buf << std::cin.rdbuf();
        } else {
            std::ifstream in(cfg.file);
            if (!in)
                throw UsageError("cannot read " + cfg.file);
            buf << in.rdbuf();
        }
        return parse_presentation(buf.str());
    }
    check_bounds(cfg);
    if (cfg.paper)
        return paper_presentation(cfg.family, cfg.n, cfg.m, projective(cfg));
    return raw_presentation(build_bmf(cfg), projective(cfg));
}

std::vector<std::string> battery(const RunConfig &cfg) { return parse_battery(cfg.targets); }

int cmd_bmf(const RunConfig &cfg)
{
    BMF b = build_bmf(cfg);
    AuditReport r = audit(b);
    if (cfg.json) {
        nlohmann::json j = bmf_to_json(b);
        j["audit"] = audit_to_json(r);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << b.family << " n=" << b.n << " m=" << b.m << " N=" << b.N << ", " << b.factors.size() << " factors\n";
        for (std::size_t k = 0; k < b.factors.size(); ++k) {
            auto &f = b.factors[k];
            std::cout << "  " << k + 1 << "  " << twist_str(f.twist) << "  " << sing_name(f.sing_type) << "  " << f.origin
                      << (f.provisional ? "  [provisional]" : "") << "\n";
        }
        std::cout << "audit: " << (r.ok() ? "pass" : "FAIL") << "\n";
        for (auto &c : r.checks)
            std::cout << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
    }
    return r.ok() ? 0 : 1;
}

int cmd_present(const RunConfig &cfg)
{
    Presentation p = source_presentation(cfg);
    if (cfg.simplify)
        p = tietze_simplify(p);
    if (cfg.json)
        std::cout << presentation_json(p).dump(2) << "\n";
    else
        std::cout << presentation_text(p);
    return 0;
}

int cmd_abelianize(const RunConfig &cfg)
{
    SNFResult r = abelianization(source_presentation(cfg));
    if (cfg.json)
        std::cout << nlohmann::json{{"rank_free", r.rank_free}, {"torsion", r.torsion()}, {"diagonal", r.diagonal}, {"group", r.str()}}.dump(2)
                  << "\n";
    else
        std::cout << "rank " << r.rank_free << ", torsion " << nlohmann::json(r.torsion()).dump() << "  (" << r.str() << ")\n";
    return 0;
}

int cmd_fingerprint(const RunConfig &cfg)
{
    Fingerprint f = fingerprint(source_presentation(cfg), battery(cfg));
    if (cfg.json) {
        std::cout << fingerprint_json(f).dump(2) << "\n";
    } else {
        for (auto &[name, c] : f.counts)
            std::cout << name << " " << c << "\n";
        for (auto &s : f.skipped)
            std::cout << s << " skipped (" << f.generators << " generators)\n";
    }
    return 0;
}

int cmd_compare(const RunConfig &cfg)
{
    check_bounds(cfg);
    bool proj = projective(cfg);
    Presentation raw = raw_presentation(build_bmf(cfg), proj);
    Presentation stated = paper_presentation(cfg.family, cfg.n, cfg.m, proj);
    CompareReport r = compare(raw, stated, battery(cfg));
    if (cfg.json) {
        std::cout << compare_json(r).dump(2) << "\n";
    } else {
        for (auto &row : r.rows)
            std::cout << row.target << " raw " << row.a << " stated " << row.b << (row.equal ? "" : "  differ") << "\n";
        for (auto &s : r.skipped)
            std::cout << s << " skipped\n";
        std::cout << "abelianization raw " << r.abelian_a << " stated " << r.abelian_b << "\n";
        std::cout << r.verdict << "\n";
    }
    return r.consistent() ? 0 : 1;
}

int cmd_bigness(const RunConfig &cfg)
{
    check_bounds(cfg);
    std::string fam = cfg.family;
    if (fam == "T") {
        if (cfg.n == 0)
            fam = "T00";
        else if (cfg.m == 0)
            fam = cfg.n == 1 ? "T10" : cfg.n == 2 ? "T20" : "Tn0";
        else
            fam = "Tnm";
    }
    BignessCertificate c;
    try {
        c = standard_certificate(fam, cfg.n, cfg.m);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    CertReport r = certify(c);
    std::cout << certificate_json(c, r).dump(2) << "\n";
    return r.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Braid monodromy and fundamental groups of conic-line arrangements"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto *bmf = app.add_subcommand("bmf", "print the factorization and its degree audit");
    add_family(bmf, cfg);
    bmf->add_flag("--json", cfg.json, "JSON output");

    auto *present = app.add_subcommand("present", "print a presentation");
    add_source(present, cfg);
    present->add_flag("--simplify", cfg.simplify, "apply Tietze moves first");
    present->add_flag("--json", cfg.json, "JSON output");

    auto *abel = app.add_subcommand("abelianize", "abelianization via Smith normal form");
    add_source(abel, cfg);
    abel->add_flag("--json", cfg.json, "JSON output");

    auto *fp = app.add_subcommand("fingerprint", "homomorphism counts into small permutation groups");
    add_source(fp, cfg);
    fp->add_option("--targets", cfg.targets, "comma-separated subset of S3,D4,A4,S4 (default from CONLINE_BATTERY)");
    fp->add_flag("--json", cfg.json, "JSON output");

    auto *cmp = app.add_subcommand("compare", "compare raw and stated presentations by fingerprint");
    add_family(cmp, cfg);
    add_kind(cmp, cfg);
    cmp->add_option("--targets", cfg.targets, "comma-separated subset of S3,D4,A4,S4");
    cmp->add_flag("--json", cfg.json, "JSON output");

    auto *big = app.add_subcommand("bigness", "certificate of a surjection onto Z/2 * Z/3");
    add_family(big, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*bmf)
            return cmd_bmf(cfg);
        if (*present)
            return cmd_present(cfg);
        if (*abel)
            return cmd_abelianize(cfg);
        if (*fp)
            return cmd_fingerprint(cfg);
        if (*cmp)
            return cmd_compare(cfg);
        if (*big)
            return cmd_bigness(cfg);
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
