#include "dsc/quadchar.hpp"

#include <sstream>

namespace dsc {

QuadChar QuadChar::operator*(const QuadChar &o) const
{
    QuadChar r = *this;
    r *= o;
    return r;
}

QuadChar &QuadChar::operator*=(const QuadChar &o)
{
    for (const auto &g : o.gens) {
        auto it = gens.find(g);
        if (it == gens.end())
            gens.insert(g);
        else
            gens.erase(it);
    }
    return *this;
}

std::string QuadChar::str() const
{
    if (gens.empty())
        return "1";
    std::string out;
    for (const auto &g : gens) {
        if (!out.empty())
            out += '*';
        out += g;
    }
    return out;
}

QuadChar parse_quadchar(const std::string &csv)
{
    QuadChar q;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        if (b == std::string::npos)
            continue;
        auto e = item.find_last_not_of(" \t");
        std::string g = item.substr(b, e - b + 1);
        if (g == "1")
            continue;
        q *= QuadChar({g});
    }
    return q;
}

} // namespace dsc
