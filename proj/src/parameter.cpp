#include "dsc/parameter.hpp"

#include "dsc/errors.hpp"

namespace dsc {

std::string JordanBlock::key() const
{
    return rho->label + ":" + std::to_string(a);
}

std::weak_ordering JordanBlock::operator<=>(const JordanBlock &o) const
{
    if (auto c = rho->label.compare(o.rho->label); c != 0)
        return c < 0 ? std::weak_ordering::less : std::weak_ordering::greater;
    return a <=> o.a;
}

SdType block_type(const JordanBlock &b)
{
    if (!b.rho->self_dual)
        throw Error(Errc::NotSelfDual, b.key());
    bool odd = b.a % 2 != 0;
    bool orth = b.rho->sd_type == SdType::orthogonal;
    return orth == odd ? SdType::orthogonal : SdType::symplectic;
}

QuadChar block_central_char(const JordanBlock &b)
{
    return b.a % 2 != 0 ? b.rho->central_char : QuadChar{};
}

const char *group_kind_name(GroupKind k)
{
    switch (k) {
    case GroupKind::Sp: return "Sp";
    case GroupKind::SOodd: return "SOodd";
    case GroupKind::SOeven: return "SOeven";
    }
    return "Sp";
}

GroupKind parse_group_kind(const std::string &s)
{
    if (s == "Sp")
        return GroupKind::Sp;
    if (s == "SOodd")
        return GroupKind::SOodd;
    if (s == "SOeven")
        return GroupKind::SOeven;
    throw Error(Errc::Validation, "unknown group kind '" + s + "'");
}

std::string GroupType::str() const
{
    switch (kind) {
    case GroupKind::Sp: return "Sp(" + std::to_string(2 * n) + ")";
    case GroupKind::SOodd: return "SO(" + std::to_string(2 * n + 1) + ")";
    case GroupKind::SOeven: return "SO(" + std::to_string(2 * n) + "," + eta.str() + ")";
    }
    return "";
}

GroupType make_group(GroupKind kind, int n, QuadChar eta)
{
    if (n < 0)
        throw Error(Errc::Validation, "negative rank");
    if (kind != GroupKind::SOeven)
        eta = QuadChar{};
    return GroupType{kind, n, std::move(eta)};
}

int rank_for_dimension(GroupKind kind, int N)
{
    bool odd = N % 2 != 0;
    if (N < 0 || odd != (kind == GroupKind::Sp))
        throw Error(Errc::Validation, "dimension " + std::to_string(N) + " does not fit " + group_kind_name(kind));
    return kind == GroupKind::Sp ? (N - 1) / 2 : N / 2;
}

Parameter Parameter::unchecked(const GroupType &g, std::map<JordanBlock, int> blocks)
{
    Parameter p;
    p.group_ = g;
    p.blocks_ = std::move(blocks);
    return p;
}

Parameter Parameter::make(const GroupType &g, std::map<JordanBlock, int> blocks)
{
    Parameter p = unchecked(g, std::move(blocks));
    bool all_self_dual = true;
    for (const auto &[b, m] : p.blocks_) {
        if (!b.rho)
            throw Error(Errc::Validation, "block without symbol");
        if (b.a < 1 || m < 1)
            throw Error(Errc::Validation, "block " + b.key() + " needs a >= 1 and multiplicity >= 1");
        all_self_dual = all_self_dual && b.rho->self_dual;
    }
    if (p.total_dim() != g.N())
        throw Error(Errc::Validation, "blocks of " + p.str() + " have total dimension " +
                                          std::to_string(p.total_dim()) + ", expected " + std::to_string(g.N()));
    if (g.kind == GroupKind::SOeven && all_self_dual) {
        QuadChar det;
        for (const auto &[b, m] : p.blocks_)
            if (m % 2 != 0)
                det *= block_central_char(b);
        if (det != g.eta)
            throw Error(Errc::Validation, "determinant " + det.str() + " of " + p.str() + " differs from eta " + g.eta.str());
    }
    return p;
}

Parameter Parameter::make(const GroupType &g, const std::vector<JordanBlock> &blocks)
{
    std::map<JordanBlock, int> m;
    for (const auto &b : blocks)
        ++m[b];
    return make(g, std::move(m));
}

std::vector<JordanBlock> Parameter::distinct() const
{
    std::vector<JordanBlock> out;
    out.reserve(blocks_.size());
    for (const auto &[b, m] : blocks_)
        out.push_back(b);
    return out;
}

std::vector<JordanBlock> Parameter::doubled() const
{
    std::vector<JordanBlock> out;
    for (const auto &[b, m] : blocks_)
        if (m > 1)
            out.push_back(b);
    return out;
}

std::vector<int> Parameter::jord_rho(const std::string &label) const
{
    std::vector<int> out;
    for (const auto &[b, m] : blocks_)
        if (b.label() == label)
            out.push_back(b.a);
    return out;
}

int Parameter::multiplicity(const std::string &label, int a) const
{
    for (const auto &[b, m] : blocks_)
        if (b.a == a && b.label() == label)
            return m;
    return 0;
}

int Parameter::total_dim() const
{
    int d = 0;
    for (const auto &[b, m] : blocks_)
        d += m * b.dim();
    return d;
}

bool Parameter::is_tempered_shape() const
{
    for (const auto &[b, m] : blocks_) {
        if (m > 2 || !b.rho->self_dual)
            return false;
        if (block_type(b) != group_.dual_type())
            return false;
    }
    return true;
}

bool Parameter::is_discrete() const
{
    if (!is_tempered_shape())
        return false;
    for (const auto &[b, m] : blocks_)
        if (m != 1)
            return false;
    return true;
}

void Parameter::require_discrete() const
{
    if (!is_discrete())
        throw Error(Errc::NonDiscreteParameter, str());
}

std::string Parameter::str() const
{
    std::string out = group_.str() + " {";
    bool first = true;
    for (const auto &[b, m] : blocks_) {
        if (!first)
            out += ", ";
        first = false;
        if (m > 1)
            out += std::to_string(m) + "x";
        out += "(" + b.label() + "," + std::to_string(b.a) + ")";
    }
    return out + "}";
}

} // namespace dsc
