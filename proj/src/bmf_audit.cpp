#include "conline/bmf_catalog.hpp"

#include <stdexcept>

namespace conline {

SingCounts count_types(const BMF &b)
{
    SingCounts c;
    for (auto &f : b.factors) {
        switch (f.sing_type) {
        case SingType::Branch:
            ++c.branch;
            break;
        case SingType::Node:
            ++c.node;
            break;
        case SingType::Tangency:
            ++c.tangency;
            break;
        }
    }
    return c;
}

std::optional<SingCounts> expected_counts(const BMF &b)
{
    if (b.family == "C")
        return SingCounts{2, b.n, b.n * (b.n - 1) / 2};
    if (!b.family.empty() && b.family[0] == 'T') {
        int n = b.n, m = b.m;
        return SingCounts{4, n + m + 2, 2 * n + 2 * m + n * m + n * (n - 1) / 2 + m * (m - 1) / 2};
    }
    return std::nullopt;
}

static std::string counts_str(const SingCounts &c)
{
    return "(" + std::to_string(c.branch) + ", " + std::to_string(c.tangency) + ", " + std::to_string(c.node) + ")";
}

AuditReport audit(const BMF &b)
{
    AuditReport r;
    r.expected_exponent_sum = b.N * (b.N - 1);
    bool powers_ok = true, pure_ok = true, compiles = true;
    std::string bad;
    Permutation branch = Permutation::identity(b.N);
    for (std::size_t k = 0; k < b.factors.size(); ++k) {
        auto &f = b.factors[k];
        r.exponent_sum += f.twist.power;
        if (f.provisional)
            r.provisional.push_back(f.origin);
        if (f.twist.power != sing_exponent(f.sing_type)) {
            powers_ok = false;
            bad += " #" + std::to_string(k + 1);
        }
        ArtinWord w;
        try {
            w = compile_factor(f.twist, b.N);
        } catch (const std::exception &) {
            compiles = false;
            continue;
        }
        Permutation p = permutation(w);
        if (f.sing_type == SingType::Branch)
            branch = branch.then(p);
        else if (!p.is_identity())
            pure_ok = false;
    }
    r.counts = count_types(b);
    r.expected_counts = expected_counts(b);

    r.checks.push_back({"compiles", compiles, compiles ? "" : "a factor does not fit on " + std::to_string(b.N) + " strands"});
    r.checks.push_back({"exponent_sum", r.exponent_sum == r.expected_exponent_sum,
                        std::to_string(r.exponent_sum) + " vs N(N-1) = " + std::to_string(r.expected_exponent_sum)});
    if (r.expected_counts)
        r.checks.push_back({"type_counts", r.counts == *r.expected_counts,
                            counts_str(r.counts) + " vs " + counts_str(*r.expected_counts)});
    r.checks.push_back({"power_matches_type", powers_ok, powers_ok ? "" : "mismatch at" + bad});
    r.checks.push_back({"pure_even_factors", pure_ok, ""});
    r.checks.push_back({"branch_product_identity", branch.is_identity(), ""});
    return r;
}

nlohmann::json bmf_to_json(const BMF &b)
{
    nlohmann::json fs = nlohmann::json::array();
    for (auto &f : b.factors) {
        nlohmann::json cs = nlohmann::json::array();
        for (auto &c : f.twist.conjugators)
            cs.push_back({{"i", c.sk.i}, {"j", c.sk.j}, {"side", side_name(c.sk.side)}, {"power", c.power}});
        nlohmann::json e = {{"base", {{"i", f.twist.base.i}, {"j", f.twist.base.j}}},
                            {"side", side_name(f.twist.base.side)},
                            {"power", f.twist.power},
                            {"conjugators", cs},
                            {"sing_type", sing_name(f.sing_type)},
                            {"origin", f.origin}};
        if (f.provisional)
            e["provisional"] = true;
        fs.push_back(e);
    }
    return {{"family", b.family}, {"n", b.n}, {"m", b.m}, {"N", b.N}, {"labels", b.labels}, {"factors", fs}};
}

BMF bmf_from_json(const nlohmann::json &j)
{
    BMF b;
    b.family = j.at("family").get<std::string>();
    b.n = j.at("n").get<int>();
    b.m = j.at("m").get<int>();
    b.N = j.at("N").get<int>();
    b.labels = j.at("labels").get<std::vector<std::string>>();
    for (auto &e : j.at("factors")) {
        BMFactor f;
        nlohmann::json skel = e.at("base");
        skel["side"] = e.value("side", std::string("below"));
        f.twist.base = skel.get<Skeleton>();
        f.twist.power = e.at("power").get<int>();
        for (auto &c : e.value("conjugators", nlohmann::json::array()))
            f.twist.conjugators.push_back({c.get<Skeleton>(), c.at("power").get<int>()});
        auto t = e.at("sing_type").get<std::string>();
        if (t == "branch")
            f.sing_type = SingType::Branch;
        else if (t == "node")
            f.sing_type = SingType::Node;
        else if (t == "tangency")
            f.sing_type = SingType::Tangency;
        else
            throw std::invalid_argument("unknown sing_type " + t);
        f.origin = e.value("origin", std::string());
        f.provisional = e.value("provisional", false);
        b.factors.push_back(std::move(f));
    }
    return b;
}

nlohmann::json audit_to_json(const AuditReport &r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (auto &c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    nlohmann::json j = {{"ok", r.ok()},
                        {"exponent_sum", r.exponent_sum},
                        {"expected_exponent_sum", r.expected_exponent_sum},
                        {"counts", {{"branch", r.counts.branch}, {"tangency", r.counts.tangency}, {"node", r.counts.node}}},
                        {"checks", checks},
                        {"provisional", r.provisional}};
    if (r.expected_counts)
        j["expected_counts"] = {{"branch", r.expected_counts->branch},
                                {"tangency", r.expected_counts->tangency},
                                {"node", r.expected_counts->node}};
    return j;
}

std::vector<SingularityRow> singularity_table_C1()
{
    return {{"P_1", 1, "Delta^{1/2}_{R I_2}<1>"}, {"<2,3>", 4, "Delta^2<2,3>"}, {"<1,2>", 1, "Delta^{1/2}_{I_2 R}<1>"}};
}

std::vector<SingularityRow> singularity_table_C2()
{
    return {{"P_1", 1, "Delta^{1/2}_{R I_2}<1>"},
            {"<2,3>", 4, "Delta^2<2,3>"},
            {"<3,4>", 2, "Delta<3,4>"},
            {"<2,3>", 4, "Delta^2<2,3>"},
            {"<1,2>", 1, "Delta^{1/2}_{I_2 R}<1>"}};
}

nlohmann::json singularity_table_json(const std::vector<SingularityRow> &rows)
{
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t k = 0; k < rows.size(); ++k)
        a.push_back({{"row", k + 1}, {"pair", rows[k].pair}, {"exponent", rows[k].exponent}, {"local", rows[k].local}});
    return a;
}

} // namespace conline
