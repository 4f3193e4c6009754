#include "dsc/epsilon.hpp"

#include <algorithm>

#include "dsc/errors.hpp"

namespace dsc {

const char *level_name(Level l)
{
    return l == Level::sigma0 ? "sigma0" : "bar";
}

Level parse_level(const std::string &s)
{
    if (s == "sigma0")
        return Level::sigma0;
    if (s == "bar")
        return Level::bar;
    throw Error(Errc::Validation, "unknown level '" + s + "'");
}

int EpsilonChar::at(const JordanBlock &b) const
{
    auto it = values.find(b);
    if (it == values.end())
        throw Error(Errc::InvalidEpsilon, "no value on block " + b.key());
    return it->second;
}

int EpsilonChar::product() const
{
    int p = 1;
    for (const auto &[b, v] : values)
        p *= v;
    return p;
}

EpsilonChar EpsilonChar::operator*(const EpsilonChar &o) const
{
    if (values.size() != o.values.size())
        throw Error(Errc::BlockSetMismatch, "characters on different block sets");
    EpsilonChar r;
    for (const auto &[b, v] : values)
        r.values[b] = v * o.at(b);
    return r;
}

std::string EpsilonChar::str() const
{
    std::string out;
    for (const auto &[b, v] : values) {
        if (!out.empty())
            out += ',';
        out += v > 0 ? '+' : '-';
    }
    return out;
}

namespace {

bool odd_copy(const JordanBlock &b)
{
    return b.dim() % 2 != 0;
}

int constrained_product(const Parameter &phi, const EpsilonChar &eps)
{
    int p = 1;
    for (const auto &[b, m] : phi.blocks())
        if (m == 1)
            p *= eps.at(b);
    return p;
}

} // namespace

ComponentGroupInfo component_group(const Parameter &phi)
{
    phi.require_discrete();
    ComponentGroupInfo info;
    info.rank_sigma0 = static_cast<int>(phi.blocks().size());
    bool any_odd = false;
    for (const auto &[b, m] : phi.blocks())
        any_odd = any_odd || odd_copy(b);
    bool soeven = phi.group().kind == GroupKind::SOeven;
    info.sigma_index = soeven && any_odd ? 2 : 1;
    info.eps0_trivial = !(soeven && any_odd);
    return info;
}

EpsilonChar eps0(const Parameter &phi)
{
    EpsilonChar e;
    bool soeven = phi.group().kind == GroupKind::SOeven;
    for (const auto &[b, m] : phi.blocks())
        e.values[b] = soeven && odd_copy(b) ? -1 : 1;
    return e;
}

EpsilonChar make_epsilon(const Parameter &phi, const std::vector<int> &signs)
{
    if (signs.size() != phi.blocks().size())
        throw Error(Errc::InvalidEpsilon, "expected " + std::to_string(phi.blocks().size()) + " signs, got " +
                                              std::to_string(signs.size()));
    EpsilonChar e;
    std::size_t i = 0;
    for (const auto &[b, m] : phi.blocks()) {
        int s = signs[i++];
        if (s != 1 && s != -1)
            throw Error(Errc::InvalidEpsilon, "sign must be +1 or -1");
        e.values[b] = s;
    }
    return e;
}

EpsilonChar canonical_bar(const Parameter &phi, const EpsilonChar &eps)
{
    if (phi.group().kind != GroupKind::SOeven)
        return eps;
    for (const auto &[b, m] : phi.blocks()) {
        if (odd_copy(b))
            return eps.at(b) == 1 ? eps : eps * eps0(phi);
    }
    return eps;
}

std::vector<EpsilonChar> packet_characters(const Parameter &phi, Level level)
{
    if (!phi.is_tempered_shape())
        throw Error(Errc::NonDiscreteParameter, phi.str());
    std::vector<JordanBlock> blocks = phi.distinct();
    std::vector<EpsilonChar> out;
    std::size_t r = blocks.size();
    // Enumerate sign patterns in binary order, bit i = 1 meaning -1 on block i.
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        EpsilonChar e;
        for (std::size_t i = 0; i < r; ++i)
            e.values[blocks[i]] = (mask >> i) & 1 ? -1 : 1;
        if (constrained_product(phi, e) != 1)
            continue;
        if (level == Level::bar && canonical_bar(phi, e) != e)
            continue;
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EpsilonChar> epsilon_characters(const Parameter &phi, Level level)
{
    phi.require_discrete();
    return packet_characters(phi, level);
}

void validate_epsilon(const Parameter &phi, const EpsilonChar &eps, Level level)
{
    if (eps.values.size() != phi.blocks().size())
        throw Error(Errc::InvalidEpsilon, "character is not defined on exactly the blocks of " + phi.str());
    for (const auto &[b, v] : eps.values) {
        if (!phi.blocks().count(b))
            throw Error(Errc::InvalidEpsilon, "block " + b.key() + " is not in " + phi.str());
        if (v != 1 && v != -1)
            throw Error(Errc::InvalidEpsilon, "value on " + b.key() + " is not a sign");
    }
    if (constrained_product(phi, eps) != 1)
        throw Error(Errc::InvalidEpsilon, "product of " + eps.str() + " over " + phi.str() + " is not +1");
    if (level == Level::bar && canonical_bar(phi, eps) != eps)
        throw Error(Errc::InvalidEpsilon, eps.str() + " is not the canonical coset representative");
}

} // namespace dsc
