#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "dsc/parameter.hpp"

namespace dsc {

enum class Level { sigma0, bar };

const char *level_name(Level l);
Level parse_level(const std::string &s);

struct EpsilonChar {
    std::map<JordanBlock, int> values;

    int at(const JordanBlock &b) const;
    int product() const;
    EpsilonChar operator*(const EpsilonChar &o) const;
    // Signs in canonical block order, e.g. "+,-,-".
    std::string str() const;

    auto operator<=>(const EpsilonChar &) const = default;
    bool operator==(const EpsilonChar &) const = default;
};

struct ComponentGroupInfo {
    int rank_sigma0 = 0;
    int sigma_index = 1;
    bool eps0_trivial = true;
};

ComponentGroupInfo component_group(const Parameter &phi);

// -1 exactly on blocks whose single copy has odd dimension (SOeven only).
EpsilonChar eps0(const Parameter &phi);

// Signs given in canonical (distinct) block order.
EpsilonChar make_epsilon(const Parameter &phi, const std::vector<int> &signs);

// Canonical member of {eps, eps * eps0}: +1 on the first odd-dimensional block.
EpsilonChar canonical_bar(const Parameter &phi, const EpsilonChar &eps);

// Discrete phi only (NonDiscreteParameter otherwise).
std::vector<EpsilonChar> epsilon_characters(const Parameter &phi, Level level);
// Also accepts tempered shapes with doubled blocks, whose value is unconstrained.
std::vector<EpsilonChar> packet_characters(const Parameter &phi, Level level);

// Throws InvalidEpsilon.
void validate_epsilon(const Parameter &phi, const EpsilonChar &eps, Level level);

} // namespace dsc
