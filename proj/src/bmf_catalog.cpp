#include "conline/bmf_catalog.hpp"

#include <cctype>
#include <regex>
#include <stdexcept>

namespace conline {

extern const char *const kTildeDefaultsJson; // generated from data/tilde_defaults.json

int sing_exponent(SingType t)
{
    switch (t) {
    case SingType::Branch:
        return 1;
    case SingType::Node:
        return 2;
    case SingType::Tangency:
        return 4;
    }
    return 0;
}

std::string sing_name(SingType t)
{
    switch (t) {
    case SingType::Branch:
        return "branch";
    case SingType::Node:
        return "node";
    case SingType::Tangency:
        return "tangency";
    }
    return "?";
}

SingType sing_from_power(int power)
{
    switch (power) {
    case 1:
        return SingType::Branch;
    case 2:
        return SingType::Node;
    case 4:
        return SingType::Tangency;
    }
    throw std::invalid_argument("no singularity type has exponent " + std::to_string(power));
}

bool AuditReport::ok() const
{
    for (auto &c : checks)
        if (!c.pass)
            return false;
    return true;
}

// ---- index expressions: integers and variables joined by + and - ----

int eval_index(const std::string &expr, const std::map<std::string, int> &vars)
{
    int total = 0, sign = 1;
    bool expect_term = true;
    std::size_t p = 0;
    while (p < expr.size()) {
        char c = expr[p];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++p;
        } else if (c == '+' || c == '-') {
            if (expect_term && c == '+')
                throw std::invalid_argument("bad index expression: " + expr);
            sign = (c == '-') ? (expect_term ? -sign : -1) : 1;
            expect_term = true;
            ++p;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t q = p;
            while (q < expr.size() && std::isdigit(static_cast<unsigned char>(expr[q])))
                ++q;
            total += sign * std::stoi(expr.substr(p, q - p));
            sign = 1;
            expect_term = false;
            p = q;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t q = p;
            while (q < expr.size() && std::isalnum(static_cast<unsigned char>(expr[q])))
                ++q;
            auto name = expr.substr(p, q - p);
            auto it = vars.find(name);
            if (it == vars.end())
                throw std::invalid_argument("unbound variable '" + name + "' in " + expr);
            total += sign * it->second;
            sign = 1;
            expect_term = false;
            p = q;
        } else {
            throw std::invalid_argument("bad index expression: " + expr);
        }
    }
    if (expect_term)
        throw std::invalid_argument("bad index expression: " + expr);
    return total;
}

static int eval_field(const nlohmann::json &v, const std::map<std::string, int> &vars)
{
    if (v.is_number_integer())
        return v.get<int>();
    return eval_index(v.get<std::string>(), vars);
}

static Skeleton skeleton_of(const nlohmann::json &e, const std::map<std::string, int> &vars)
{
    Skeleton s;
    s.i = eval_field(e.at("i"), vars);
    s.j = eval_field(e.at("j"), vars);
    if (s.i > s.j)
        std::swap(s.i, s.j);
    auto side = e.value("side", std::string("below"));
    s.side = side == "above" ? Side::Above : Side::Below;
    if (side != "above" && side != "below")
        throw std::invalid_argument("side must be above or below");
    return s;
}

static void expand_conjugators(const nlohmann::json &list, std::map<std::string, int> vars,
                               std::vector<Conjugator> &out)
{
    for (auto &e : list) {
        if (e.contains("for")) {
            auto var = e.at("for").get<std::string>();
            int from = eval_field(e.at("from"), vars);
            int to = eval_field(e.at("to"), vars);
            int step = e.value("step", 1);
            if (step != 1 && step != -1)
                throw std::invalid_argument("step must be 1 or -1");
            for (int k = from; step > 0 ? k <= to : k >= to; k += step) {
                vars[var] = k;
                expand_conjugators(e.at("each"), vars, out);
            }
        } else {
            out.push_back({skeleton_of(e, vars), eval_field(e.at("power"), vars)});
        }
    }
}

const TildeTable &TildeTable::defaults()
{
    static const TildeTable t = from_json(nlohmann::json::parse(kTildeDefaultsJson));
    return t;
}

TildeTable TildeTable::from_json(const nlohmann::json &j)
{
    if (!j.is_object())
        throw std::invalid_argument("tilde table must be a JSON object");
    TildeTable t;
    t.entries_ = j;
    return t;
}

TildeTable TildeTable::merged(const TildeTable &over) const
{
    TildeTable t = *this;
    for (auto &[k, v] : over.entries_.items())
        t.entries_[k] = v;
    return t;
}

ConjugatedTwist TildeTable::build(const std::string &key, const std::map<std::string, int> &vars) const
{
    if (!has(key))
        throw std::invalid_argument("tilde table has no entry " + key);
    auto &e = entries_.at(key);
    ConjugatedTwist t;
    t.base = skeleton_of(e.at("base"), vars);
    t.power = e.at("power").get<int>();
    expand_conjugators(e.value("conjugators", nlohmann::json::array()), vars, t.conjugators);
    return t;
}

// ---- shorthand ----

// "22'" -> "2"; anything else is rejected.
static std::string paired_label(const std::string &s)
{
    if (s.size() < 3 || s.back() != '\'' || (s.size() - 1) % 2)
        return {};
    auto h = (s.size() - 1) / 2;
    if (s.substr(0, h) != s.substr(h, h))
        return {};
    for (char c : s.substr(0, h))
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return {};
    return s.substr(0, h);
}

std::vector<LabeledTwist> expand_shorthand(const std::string &token)
{
    static const std::regex form(R"(Z\^2_\{([0-9']+),([0-9']+)\})");
    std::smatch mt;
    if (!std::regex_match(token, mt, form))
        throw std::invalid_argument("not a shorthand token: " + token);
    std::string left = mt[1], right = mt[2];
    std::string j = paired_label(right);
    if (j.empty())
        throw std::invalid_argument("shorthand needs a paired right index: " + token);
    auto row = [&](const std::string &i) {
        return std::vector<LabeledTwist>{{i, j + "'", 2}, {i, j, 2}};
    };
    if (auto i = paired_label(left); !i.empty()) {
        auto a = row(i + "'"), b = row(i);
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }
    for (char c : left)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("malformed shorthand: " + token);
    return row(left);
}

ConjugatedTwist resolve(const LabeledTwist &t, const std::map<std::string, int> &positions)
{
    ConjugatedTwist c;
    c.base.i = positions.at(t.from);
    c.base.j = positions.at(t.to);
    if (c.base.i > c.base.j)
        std::swap(c.base.i, c.base.j);
    c.power = t.power;
    return c;
}

} // namespace conline
