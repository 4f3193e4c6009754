#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dsc/errors.hpp"
#include "dsc/io.hpp"

namespace testing {

inline const dsc::Alphabet &alphabet()
{
    static const dsc::Alphabet a = dsc::Alphabet::test_alphabet();
    return a;
}

inline dsc::QuadChar chr(const std::string &csv) { return dsc::parse_quadchar(csv); }

inline dsc::JordanBlock blk(const std::string &label, int a) { return {alphabet().get(label), a}; }

// "chi:1 xi:5" -> blocks; a repeated key raises the multiplicity.
inline dsc::Parameter param(dsc::GroupType g, const std::string &blocks)
{
    std::map<dsc::JordanBlock, int> m;
    std::istringstream in(blocks);
    std::string tok;
    while (in >> tok) {
        auto c = tok.find(':');
        ++m[blk(tok.substr(0, c), std::stoi(tok.substr(c + 1)))];
    }
    return dsc::Parameter::make(g, std::move(m));
}

inline dsc::GroupType sp(int n) { return dsc::make_group(dsc::GroupKind::Sp, n); }
inline dsc::GroupType so_odd(int n) { return dsc::make_group(dsc::GroupKind::SOodd, n); }
inline dsc::GroupType so_even(int n, const std::string &eta = "") { return dsc::make_group(dsc::GroupKind::SOeven, n, chr(eta)); }

inline dsc::EpsilonChar eps(const dsc::Parameter &phi, const std::string &signs)
{
    return dsc::make_epsilon(phi, dsc::io::parse_signs(signs));
}

inline std::optional<dsc::Errc> error_of(const std::function<void()> &f)
{
    try {
        f();
    } catch (const dsc::Error &e) {
        return e.code();
    }
    return std::nullopt;
}

inline std::vector<dsc::GroupType> all_groups(int n)
{
    return {sp(n), so_odd(n), so_even(n), so_even(n, "u")};
}

} // namespace testing
