#include "dsc/lfactors.hpp"

#include <algorithm>

#include "dsc/errors.hpp"

namespace dsc {

LFactor &LFactor::operator*=(const LFactor &o)
{
    for (const auto &[k, m] : o.factors)
        factors[k] += m;
    return *this;
}

LFactor LFactor::operator*(const LFactor &o) const
{
    LFactor r = *this;
    r *= o;
    return r;
}

LFactor LFactor::shifted(HalfInt t) const
{
    LFactor r;
    for (const auto &[k, m] : factors)
        r.factors[{k.first, k.second + t}] += m;
    return r;
}

int LFactor::pole_order(HalfInt s0) const
{
    int order = 0;
    for (const auto &[k, m] : factors)
        if (k.second == -s0)
            order += m;
    return order;
}

std::vector<HalfInt> LFactor::poles() const
{
    std::vector<HalfInt> out;
    for (const auto &[k, m] : factors)
        out.push_back(-k.second);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string LFactor::str() const
{
    if (factors.empty())
        return "1";
    std::vector<std::pair<std::pair<int, HalfInt>, int>> items(factors.begin(), factors.end());
    std::stable_sort(items.begin(), items.end(), [](const auto &x, const auto &y) {
        if (x.first.first != y.first.first)
            return x.first.first < y.first.first;
        return x.first.second > y.first.second;
    });
    std::string out;
    for (const auto &[k, m] : items) {
        auto [r, t] = k;
        std::string arg;
        if (t == HalfInt{})
            arg = "s";
        else if (t > HalfInt{})
            arg = "(s+" + t.str() + ")";
        else
            arg = "(s-" + (-t).str() + ")";
        std::string exp = r == 1 ? arg : std::to_string(r) + (arg == "s" ? "s" : arg);
        out += "(1-q^{-" + exp + "})^{-" + std::to_string(m) + "}";
    }
    return out;
}

GLRep GLRep::cuspidal(Rho rho, HalfInt shift)
{
    GLRep g;
    g.kind = GLKind::cuspidal;
    g.pieces.push_back({{{std::move(rho), 1}}, shift});
    return g;
}

GLRep GLRep::steinberg(Rho rho, int a, HalfInt shift)
{
    if (a < 1)
        throw Error(Errc::Validation, "Steinberg length must be positive");
    GLRep g;
    g.kind = GLKind::steinberg;
    g.pieces.push_back({{{std::move(rho), a}}, shift});
    return g;
}

GLRep GLRep::tempered(std::vector<StBlock> blocks)
{
    for (const auto &b : blocks)
        if (b.a < 1)
            throw Error(Errc::Validation, "Steinberg length must be positive");
    GLRep g;
    g.kind = GLKind::tempered;
    g.pieces.push_back({std::move(blocks), HalfInt{}});
    return g;
}

GLRep GLRep::langlands(std::vector<GLPiece> pieces)
{
    for (std::size_t i = 1; i < pieces.size(); ++i)
        if (!(pieces[i - 1].shift > pieces[i].shift))
            throw Error(Errc::Validation, "Langlands exponents must be strictly decreasing");
    GLRep g;
    g.kind = GLKind::langlands;
    g.pieces = std::move(pieces);
    return g;
}

int GLRep::degree() const
{
    int d = 0;
    for (const auto &p : pieces)
        for (const auto &b : p.tempered)
            d += b.a * b.rho->dim;
    return d;
}

std::string GLRep::str() const
{
    std::string out;
    for (const auto &p : pieces) {
        if (!out.empty())
            out += ", ";
        std::string t;
        for (const auto &b : p.tempered) {
            if (!t.empty())
                t += '+';
            t += b.rho->label;
            if (b.a != 1)
                t += ":" + std::to_string(b.a);
        }
        out += t.empty() ? "0" : t;
        if (p.shift != HalfInt{})
            out += "@" + p.shift.str();
    }
    return out.empty() ? "0" : out;
}

namespace {

// L(s, rho x rho') for cuspidal data: one factor when rho' is the contragredient.
LFactor rs_cusp(const ScuspSymbol &r1, const ScuspSymbol &r2)
{
    LFactor f;
    if (r1.dim == r2.dim && !dual_label_of(r1).empty() && dual_label_of(r1) == r2.label)
        f.factors[{r1.torsion, HalfInt{}}] = 1;
    return f;
}

LFactor rs_st(const StBlock &x, const StBlock &y)
{
    // The longer block plays the role of St(rho, a), a*d >= b*d'.
    const StBlock &big = x.a * x.rho->dim >= y.a * y.rho->dim ? x : y;
    const StBlock &small = &big == &x ? y : x;
    LFactor base = rs_cusp(*big.rho, *small.rho);
    LFactor out;
    if (base.is_one())
        return out;
    int a = big.a, b = small.a;
    for (int i = 1; i <= b; ++i)
        out *= base.shifted(HalfInt::from_doubled(a + b - 2 * i));
    return out;
}

LFactor rs_tempered(const std::vector<StBlock> &p, const std::vector<StBlock> &q)
{
    LFactor out;
    for (const auto &x : p)
        for (const auto &y : q)
            out *= rs_st(x, y);
    return out;
}

enum class Square { sym, alt };

LFactor square_cusp(const ScuspSymbol &r, Square which)
{
    LFactor f;
    if (!r.self_dual)
        return f;
    bool hit = which == Square::sym ? r.sd_type == SdType::orthogonal : r.sd_type == SdType::symplectic;
    if (hit)
        f.factors[{r.torsion, HalfInt{}}] = 1;
    return f;
}

LFactor square_st(const StBlock &b, Square which)
{
    Square other = which == Square::sym ? Square::alt : Square::sym;
    LFactor main = square_cusp(*b.rho, which);
    LFactor cross = square_cusp(*b.rho, other);
    LFactor out;
    int a = b.a;
    // pi_i = rho |.|^{(a+1)/2 - i}; the twist rule doubles the exponent.
    int main_terms = (a + 1) / 2;
    int cross_terms = a / 2;
    for (int i = 1; i <= main_terms; ++i)
        out *= main.shifted(HalfInt::whole(a + 1 - 2 * i));
    for (int i = 1; i <= cross_terms; ++i)
        out *= cross.shifted(HalfInt::whole(a - 2 * i));
    return out;
}

LFactor square_tempered(const std::vector<StBlock> &p, Square which)
{
    LFactor out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        out *= square_st(p[i], which);
        for (std::size_t j = i + 1; j < p.size(); ++j)
            out *= rs_st(p[i], p[j]);
    }
    return out;
}

LFactor square(const GLRep &pi, Square which)
{
    LFactor out;
    const auto &ps = pi.pieces;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        out *= square_tempered(ps[i].tempered, which).shifted(ps[i].shift * 2);
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            out *= rs_tempered(ps[i].tempered, ps[j].tempered).shifted(ps[i].shift + ps[j].shift);
    }
    return out;
}

} // namespace

LFactor rs(const GLRep &pi, const GLRep &sigma)
{
    LFactor out;
    for (const auto &p : pi.pieces)
        for (const auto &q : sigma.pieces)
            out *= rs_tempered(p.tempered, q.tempered).shifted(p.shift + q.shift);
    return out;
}

LFactor sym2(const GLRep &pi)
{
    return square(pi, Square::sym);
}

LFactor wedge2(const GLRep &pi)
{
    return square(pi, Square::alt);
}

bool factorization_identity_check(const GLRep &pi)
{
    return rs(pi, pi) == sym2(pi) * wedge2(pi);
}

GLRep parameter_glrep(const Parameter &phi)
{
    std::vector<StBlock> blocks;
    for (const auto &[b, m] : phi.blocks())
        for (int k = 0; k < m; ++k)
            blocks.push_back({b.rho, b.a});
    return GLRep::tempered(std::move(blocks));
}

LFactor rho_cross_parameter(const Rho &rho, const Parameter &phi)
{
    return rs(GLRep::cuspidal(rho), parameter_glrep(phi));
}

ReducibilityPoint reducibility_point(const Parameter &phi, const Rho &rho, bool full_orthogonal)
{
    phi.require_discrete();
    ReducibilityPoint p;
    std::vector<int> jord = rho->self_dual ? phi.jord_rho(rho->label) : std::vector<int>{};
    if (!jord.empty()) {
        p.a_rho = *std::max_element(jord.begin(), jord.end());
        p.which = ReducibilityCase::max_jord;
    } else if (rho->self_dual && rho->sd_type != phi.group().dual_type()) {
        p.a_rho = 0;
        p.which = ReducibilityCase::opposite_type;
    } else {
        p.a_rho = -1;
        p.which = ReducibilityCase::none;
        p.proviso = !full_orthogonal;
    }
    p.exponent = HalfInt::from_doubled(p.a_rho + 1);
    return p;
}

} // namespace dsc
