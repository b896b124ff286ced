#pragma once

#include "conline/van_kampen.hpp"
#include "conline/words.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace conline {

// Element of Z/2 * Z/3 = <s, t | s^2, t^3>.
struct Syllable {
    char factor = 's'; // 's' or 't'
    int exp = 1;       // s: 1; t: +1 or -1 once normalized

    bool operator==(const Syllable &) const = default;
};

class FPWord {
public:
    FPWord() = default;

    static FPWord s();
    static FPWord t(int e = 1);
    // "s t^-1 s t", "t t t", "e" or "" for the identity
    static FPWord parse(const std::string &text);

    const std::vector<Syllable> &syllables() const { return syl_; }
    bool is_identity() const { return syl_.empty(); }
    std::string str() const;

    bool operator==(const FPWord &) const = default;

    friend FPWord nf(const std::vector<Syllable> &raw);

private:
    std::vector<Syllable> syl_;
};

// Merges neighbouring syllables of the same factor (mod 2 / mod 3) until alternating.
FPWord nf(const std::vector<Syllable> &raw);
FPWord operator*(const FPWord &a, const FPWord &b);
FPWord inverse(const FPWord &a);

using FPImages = std::map<std::string, FPWord>;

FPWord evaluate(const Word &w, const FPImages &images);

struct BignessCertificate {
    std::string family;
    int n = 0, m = 0;
    Presentation source;
    FPImages images;
    Word witness_s, witness_t; // words in the source generators
    std::string note;
};

struct CertCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CertReport {
    std::vector<CertCheck> checks;
    bool relators_ok = true;
    bool witnesses_ok = true;
    bool ok() const { return relators_ok && witnesses_ok; }
};

CertReport certify(const Presentation &p, const FPImages &images, const Word &witness_s, const Word &witness_t);
CertReport certify(const BignessCertificate &c);

// family: "C" (projective, n >= 2), "T00", "T10", "T20", "T11", "Tn0" (n >= 1), "Tnm" (n >= 1, m >= 0).
// C with n <= 1 is rejected: those groups are abelian.
BignessCertificate standard_certificate(const std::string &family, int n, int m = 0);

nlohmann::json certificate_json(const BignessCertificate &c, const CertReport &r);

} // namespace conline
