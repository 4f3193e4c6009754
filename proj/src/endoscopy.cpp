#include "dsc/endoscopy.hpp"

#include <algorithm>
#include <set>

#include "dsc/errors.hpp"

namespace dsc {

int SignVector::at(const JordanBlock &b) const
{
    auto lo = std::lower_bound(entries.begin(), entries.end(), std::make_pair(b, -1));
    if (lo == entries.end() || !(lo->first == b))
        throw Error(Errc::BlockSetMismatch, "no sign on " + b.key());
    if (lo + 1 != entries.end() && lo[1].first == b)
        throw Error(Errc::BlockSetMismatch, "block " + b.key() + " has two copies");
    return lo->second;
}

std::string SignVector::str() const
{
    std::string out;
    for (const auto &[b, v] : entries) {
        if (!out.empty())
            out += ',';
        out += v > 0 ? '+' : '-';
    }
    return out;
}

namespace {

std::vector<JordanBlock> copies(const Parameter &phi)
{
    std::vector<JordanBlock> out;
    for (const auto &[b, m] : phi.blocks())
        for (int i = 0; i < m; ++i)
            out.push_back(b);
    return out;
}

SignVector sorted(SignVector s)
{
    std::sort(s.entries.begin(), s.entries.end());
    return s;
}

void check_signs(const Parameter &phi, const SignVector &s)
{
    std::vector<JordanBlock> want = copies(phi);
    if (want.size() != s.entries.size())
        throw Error(Errc::SignVectorNotInComponentGroup,
                    "expected " + std::to_string(want.size()) + " signs, got " + std::to_string(s.entries.size()));
    for (std::size_t i = 0; i < want.size(); ++i) {
        if (!(want[i] == s.entries[i].first))
            throw Error(Errc::SignVectorNotInComponentGroup, "sign vector is not on the blocks of " + phi.str());
        if (s.entries[i].second != 1 && s.entries[i].second != -1)
            throw Error(Errc::SignVectorNotInComponentGroup, "sign on " + want[i].key() + " is not +1 or -1");
    }
    if (s.entries != sorted(s).entries)
        throw Error(Errc::SignVectorNotInComponentGroup, "sign vector is not canonically ordered");
}

int minus_dimension(const SignVector &s)
{
    int d = 0;
    for (const auto &[b, v] : s.entries)
        if (v < 0)
            d += b.dim();
    return d;
}

SignVector negated(SignVector s)
{
    for (auto &e : s.entries)
        e.second = -e.second;
    return sorted(std::move(s));
}

// Sp: s ~ -s; pick the representative whose -1 side has even dimension.
SignVector normalized(const Parameter &phi, const SignVector &s)
{
    if (phi.group().kind == GroupKind::Sp && minus_dimension(s) % 2)
        return negated(s);
    return s;
}

std::map<JordanBlock, int> side(const SignVector &s, int sign, const QuadChar &eta, const Alphabet &alphabet)
{
    std::map<JordanBlock, int> out;
    for (const auto &[b, v] : s.entries)
        if (v == sign)
            ++out[JordanBlock{alphabet.get(alphabet.twist_label(b.label(), eta)), b.a}];
    return out;
}

QuadChar side_char(const SignVector &s, int sign)
{
    QuadChar c;
    for (const auto &[b, v] : s.entries)
        if (v == sign)
            c *= block_central_char(b);
    return c;
}

} // namespace

SignVector make_signs(const Parameter &phi, const std::vector<int> &signs)
{
    std::vector<JordanBlock> cs = copies(phi);
    if (cs.size() != signs.size())
        throw Error(Errc::SignVectorNotInComponentGroup,
                    "expected " + std::to_string(cs.size()) + " signs, got " + std::to_string(signs.size()));
    SignVector s;
    for (std::size_t i = 0; i < cs.size(); ++i)
        s.entries.emplace_back(cs[i], signs[i]);
    s = sorted(std::move(s));
    check_signs(phi, s);
    return s;
}

std::vector<SignVector> all_sign_vectors(const Parameter &phi)
{
    std::vector<JordanBlock> cs = copies(phi);
    std::set<SignVector> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << cs.size()); ++mask) {
        SignVector s;
        for (std::size_t i = 0; i < cs.size(); ++i)
            s.entries.emplace_back(cs[i], (mask >> i) & 1 ? -1 : 1);
        out.insert(sorted(std::move(s)));
    }
    return {out.begin(), out.end()};
}

bool in_component_group(const Parameter &phi, const SignVector &s)
{
    check_signs(phi, s);
    // Only SO(2n) has a Sigma_0 group strictly larger than S_phi.
    return phi.group().kind != GroupKind::SOeven || minus_dimension(s) % 2 == 0;
}

std::string EndoDatum::str() const
{
    std::string out = g1.str() + " x " + g2.str();
    if (twisted)
        out += " (twisted)";
    return out + ": " + phi1.str() + " + " + phi2.str();
}

EndoDatum endo_datum(const Parameter &phi, const SignVector &s0, const Alphabet &alphabet)
{
    check_signs(phi, s0);
    if (!phi.is_tempered_shape())
        throw Error(Errc::NonDiscreteParameter, "endoscopy needs a tempered parameter: " + phi.str());
    const SignVector s = normalized(phi, s0);
    const GroupType &g = phi.group();
    int n_minus = minus_dimension(s);
    int n_plus = g.N() - n_minus;

    EndoDatum d;
    QuadChar trivial;
    switch (g.kind) {
    case GroupKind::Sp:
        d.eta2 = side_char(s, -1);
        d.eta1 = d.eta2;
        d.g1 = make_group(GroupKind::Sp, rank_for_dimension(GroupKind::Sp, n_plus));
        d.g2 = make_group(GroupKind::SOeven, n_minus / 2, d.eta2);
        d.phi1 = Parameter::make(d.g1, side(s, 1, d.eta1, alphabet));
        d.phi2 = Parameter::make(d.g2, side(s, -1, trivial, alphabet));
        break;
    case GroupKind::SOodd:
        d.g1 = make_group(GroupKind::SOodd, n_plus / 2);
        d.g2 = make_group(GroupKind::SOodd, n_minus / 2);
        d.phi1 = Parameter::make(d.g1, side(s, 1, trivial, alphabet));
        d.phi2 = Parameter::make(d.g2, side(s, -1, trivial, alphabet));
        break;
    case GroupKind::SOeven:
        d.eta2 = side_char(s, -1);
        if (n_minus % 2 == 0) {
            d.eta1 = d.eta2 * g.eta;
            d.g1 = make_group(GroupKind::SOeven, n_plus / 2, d.eta1);
            d.g2 = make_group(GroupKind::SOeven, n_minus / 2, d.eta2);
            d.phi1 = Parameter::make(d.g1, side(s, 1, trivial, alphabet));
            d.phi2 = Parameter::make(d.g2, side(s, -1, trivial, alphabet));
        } else {
            d.twisted = true;
            d.eta1 = side_char(s, 1);
            d.g1 = make_group(GroupKind::Sp, rank_for_dimension(GroupKind::Sp, n_plus));
            d.g2 = make_group(GroupKind::Sp, rank_for_dimension(GroupKind::Sp, n_minus));
            d.phi1 = Parameter::make(d.g1, side(s, 1, d.eta1, alphabet));
            d.phi2 = Parameter::make(d.g2, side(s, -1, d.eta2, alphabet));
        }
        break;
    }
    return d;
}

int pairing(const EpsilonChar &eps, const SignVector &s)
{
    if (eps.values.size() != s.entries.size())
        throw Error(Errc::BlockSetMismatch, "character and sign vector live on different blocks");
    int out = 1;
    for (const auto &[b, v] : s.entries) {
        auto it = eps.values.find(b);
        if (it == eps.values.end())
            throw Error(Errc::BlockSetMismatch, "no character value on " + b.key());
        if (v < 0)
            out *= it->second;
    }
    return out;
}

VirtualSum packet_transfer_sum(const Parameter &phi, const SignVector &s, const Alphabet &alphabet)
{
    phi.require_discrete();
    endo_datum(phi, s, alphabet);
    Level level = in_component_group(phi, s) ? Level::bar : Level::sigma0;
    VirtualSum out;
    for (const auto &e : epsilon_characters(phi, level))
        out.add(RepSymbol::packet(Packet{phi, e, level, false}), pairing(e, s));
    return out;
}

std::optional<SignVector> project_signs(const Parameter &phi, const SignVector &s, const Rho &rho, HalfInt x)
{
    phi.require_discrete();
    check_signs(phi, s);
    if (!x.is_positive() || jacquet_case(phi, rho, x) == 0)
        return std::nullopt;
    JordanBlock b{rho, static_cast<int>(x.doubled) + 1};
    SignVector out;
    for (const auto &[c, v] : s.entries) {
        if (!(c == b))
            out.entries.emplace_back(c, v);
        else if (b.a > 2)
            out.entries.emplace_back(JordanBlock{rho, b.a - 2}, v);
    }
    return sorted(std::move(out));
}

std::optional<EndoDatum> jacquet_rewrite(const Parameter &phi, const SignVector &s, const Rho &rho, HalfInt x,
                                         const Alphabet &alphabet)
{
    if (!project_signs(phi, s, rho, x))
        return std::nullopt;
    EndoDatum d = endo_datum(phi, s, alphabet);
    JordanBlock b{rho, static_cast<int>(x.doubled) + 1};
    bool first = normalized(phi, s).at(b) > 0;

    GroupType &g = first ? d.g1 : d.g2;
    Parameter &p = first ? d.phi1 : d.phi2;
    // Side I is twisted by eta_I for Sp and in the twisted case; side II only in the twisted case.
    bool side_twisted = d.twisted || (first && phi.group().kind == GroupKind::Sp);
    QuadChar eta = side_twisted ? (first ? d.eta1 : d.eta2) : QuadChar{};
    JordanBlock moved{alphabet.get(alphabet.twist_label(rho->label, eta)), b.a};

    std::map<JordanBlock, int> blocks = p.blocks();
    if (--blocks.at(moved) == 0)
        blocks.erase(moved);
    if (b.a > 2)
        ++blocks[JordanBlock{moved.rho, b.a - 2}];
    g = g.with_rank(g.n - rho->dim);
    p = Parameter::make(g, std::move(blocks));
    return d;
}

bool jacquet_endoscopy_compatible(const Parameter &phi, const SignVector &s, const Rho &rho, HalfInt x,
                                  const Alphabet &alphabet)
{
    auto lowered = project_signs(phi, s, rho, x);
    if (!lowered)
        return true;
    auto phi_minus = jacquet_parameter(phi, rho, x);
    if (!phi_minus)
        return false;
    return endo_datum(*phi_minus, *lowered, alphabet) == *jacquet_rewrite(phi, s, rho, x, alphabet);
}

} // namespace dsc
