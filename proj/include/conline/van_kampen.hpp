#pragma once

#include "conline/bmf_catalog.hpp"
#include "conline/words.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace conline {

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    std::vector<std::string> origins; // parallel to relators; may be empty

    void add(Word r, std::string origin = {});
    // Every relator letter is a listed generator.
    bool well_formed() const;
};

// A = phi_C(x_i), B = phi_C(x_{i+1}) where the factor compiles to C s_i^k C^-1.
std::pair<Word, Word> relation_pair(const BMFactor &f, const BMF &b);
Word relator_for(SingType t, const Word &a, const Word &b);
Word relator_for_power(int power, const Word &a, const Word &b);

Presentation raw_presentation(const BMF &b, bool projective);

// Equal after cyclic reduction, up to rotation and inversion.
bool relator_equal_up_to_cyc(const Word &a, const Word &b);

// gens: x1 x1p x2
// <relator>
// ...
std::string presentation_text(const Presentation &p);
Presentation parse_presentation(const std::string &text);
nlohmann::json presentation_json(const Presentation &p);
Presentation presentation_from_json(const nlohmann::json &j);

// Parses a relation in the notation used by the catalog tests:
// "a = b", "(u)^2 = (v)^2", "[u, v]" or a plain relator word.
Word parse_relation(const std::string &text);

} // namespace conline
