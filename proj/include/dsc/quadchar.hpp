#pragma once

#include <compare>
#include <set>
#include <string>

namespace dsc {

// Element of the elementary abelian 2-group on named generators.
struct QuadChar {
    std::set<std::string> gens;

    QuadChar() = default;
    explicit QuadChar(std::set<std::string> g) : gens(std::move(g)) {}

    bool trivial() const { return gens.empty(); }
    QuadChar operator*(const QuadChar &o) const;
    QuadChar &operator*=(const QuadChar &o);

    auto operator<=>(const QuadChar &) const = default;
    bool operator==(const QuadChar &) const = default;

    // "1" for the trivial character, otherwise generators joined by '*'.
    std::string str() const;
};

QuadChar parse_quadchar(const std::string &csv);

} // namespace dsc
