#pragma once

#include "conline/braid.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace conline {

enum class SingType { Branch, Node, Tangency };

int sing_exponent(SingType t);
std::string sing_name(SingType t);
SingType sing_from_power(int power);

struct BMFactor {
    ConjugatedTwist twist;
    SingType sing_type = SingType::Branch;
    std::string origin;
    bool provisional = false; // built from an editable tilde-table entry
};

struct BMF {
    std::string family; // "C", "T00", "T10", "T20", "Tn0", "T11", "T21", "T22", "Tnm"
    int n = 0, m = 0;
    int N = 0;
    std::vector<std::string> labels; // fiber label at each position 1..N
    std::vector<BMFactor> factors;
};

struct SingCounts {
    int branch = 0, tangency = 0, node = 0;
    bool operator==(const SingCounts &) const = default;
};

struct AuditCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AuditReport {
    int exponent_sum = 0;
    int expected_exponent_sum = 0;
    SingCounts counts;
    std::optional<SingCounts> expected_counts;
    std::vector<AuditCheck> checks;
    std::vector<std::string> provisional; // origins of tilde factors

    bool ok() const;
};

// Conjugator lists for the tilde factors. Entries use small integer
// expressions over n, m and the loop index; see data/tilde_defaults.json.
class TildeTable {
public:
    static const TildeTable &defaults();
    static TildeTable from_json(const nlohmann::json &j);
    // Entries of `over` replace same-named entries here.
    TildeTable merged(const TildeTable &over) const;

    // Instantiate entry `key` with variable bindings.
    ConjugatedTwist build(const std::string &key, const std::map<std::string, int> &vars) const;
    bool has(const std::string &key) const { return entries_.contains(key); }
    const nlohmann::json &raw() const { return entries_; }

private:
    nlohmann::json entries_ = nlohmann::json::object();
};

int eval_index(const std::string &expr, const std::map<std::string, int> &vars);

// One term of an expanded shorthand, with endpoints given as fiber labels ("1", "2'").
struct LabeledTwist {
    std::string from, to;
    int power = 2;
    bool operator==(const LabeledTwist &) const = default;
};

// Z^2_{i,jj'} -> [Z^2_{ij'}, Z^2_{ij}];  Z^2_{ii',jj'} -> [Z^2_{i'j'}, Z^2_{i'j}, Z^2_{ij'}, Z^2_{ij}]
std::vector<LabeledTwist> expand_shorthand(const std::string &token);
ConjugatedTwist resolve(const LabeledTwist &t, const std::map<std::string, int> &positions);

BMF bmf_Cn(int n);
BMF bmf_T00();
BMF bmf_T10();
BMF bmf_T20();
BMF bmf_Tn0(int n, const TildeTable &tt = TildeTable::defaults());
BMF bmf_T11();
BMF bmf_T21();
BMF bmf_T22();
BMF bmf_T1m(int m, const TildeTable &tt = TildeTable::defaults());
BMF bmf_Tnm(int n, int m, const TildeTable &tt = TildeTable::defaults());
// Fixed lists where one is stated, parametric tables otherwise; m = 0 gives T_{n,0}.
BMF bmf_T(int n, int m, const TildeTable &tt = TildeTable::defaults());

// Closed-form singularity counts for the families; nullopt when none applies.
std::optional<SingCounts> expected_counts(const BMF &b);
SingCounts count_types(const BMF &b);
AuditReport audit(const BMF &b);

nlohmann::json bmf_to_json(const BMF &b);
BMF bmf_from_json(const nlohmann::json &j);
nlohmann::json audit_to_json(const AuditReport &r);

struct SingularityRow {
    std::string pair; // Lefschetz pair "<2,3>" or point name "P_1"
    int exponent = 1;
    std::string local; // local diffeomorphism tag
};

std::vector<SingularityRow> singularity_table_C1();
std::vector<SingularityRow> singularity_table_C2();
nlohmann::json singularity_table_json(const std::vector<SingularityRow> &rows);

} // namespace conline
