#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dsc/quadchar.hpp"

namespace dsc {

enum class SdType { orthogonal, symplectic, none };

const char *sd_type_name(SdType t);
SdType parse_sd_type(const std::string &s);

// Formal unitary supercuspidal of GL(dim). The label is its identity.
struct ScuspSymbol {
    std::string label;
    int dim = 1;
    bool self_dual = true;
    SdType sd_type = SdType::orthogonal;
    QuadChar central_char;
    int torsion = 1;
    // Label of the contragredient; empty means "no declared dual" for
    // non-self-dual symbols and is ignored for self-dual ones.
    std::string dual_label;
};

using Rho = std::shared_ptr<const ScuspSymbol>;

void validate_symbol(const ScuspSymbol &s);

// Label of rho^vee, or "" when rho is not self-dual and declares no dual.
const std::string &dual_label_of(const ScuspSymbol &s);

class Alphabet {
public:
    void add(ScuspSymbol s);
    // Declares rho (x) eta = target. Both labels must already be present.
    void add_twist(const std::string &label, const QuadChar &eta, const std::string &target);

    Rho find(const std::string &label) const;
    Rho get(const std::string &label) const;
    const std::vector<Rho> &symbols() const { return symbols_; }
    const std::map<std::pair<std::string, QuadChar>, std::string> &twists() const { return twists_; }

    // Label of rho (x) eta; throws AlphabetNotClosedUnderTwist.
    std::string twist_label(const std::string &label, const QuadChar &eta) const;

    // Cross-symbol checks: dual labels resolve, dim-1 self-dual symbols are
    // determined by their central character, the twist table is involutive.
    void validate() const;

    // chi (trivial), xi (the character u), rho2 (symplectic, dim 2, rho2 (x) u = rho2).
    static Alphabet test_alphabet();

private:
    std::string twist_one(const std::string &label, const QuadChar &eta) const;

    std::vector<Rho> symbols_;
    std::map<std::string, std::size_t> index_;
    std::map<std::pair<std::string, QuadChar>, std::string> twists_;
};

} // namespace dsc
