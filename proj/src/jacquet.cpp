#include "dsc/jacquet.hpp"

#include <algorithm>

#include "dsc/errors.hpp"

namespace dsc {

GLProduct normalize_product(GLProduct p)
{
    p.erase(std::remove_if(p.begin(), p.end(), [](const Segment &s) { return s.is_empty(); }), p.end());
    std::sort(p.begin(), p.end());
    return p;
}

GLSum jac_gl(HalfInt x, const Rho &rho, const GLProduct &p)
{
    GLSum out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Segment &s = p[i];
        if (s.is_empty() || s.rho->label != rho->label || s.from != x)
            continue;
        GLProduct q = p;
        q[i] = s.drop_first();
        ++out[normalize_product(std::move(q))];
    }
    return out;
}

GLSum jac_op_gl(HalfInt x, const Rho &rho, const GLProduct &p)
{
    const std::string &dual = dual_label_of(*rho);
    GLSum out;
    if (dual.empty())
        return out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Segment &s = p[i];
        if (s.is_empty() || s.rho->label != dual || s.to() != x)
            continue;
        GLProduct q = p;
        q[i] = s.drop_last();
        ++out[normalize_product(std::move(q))];
    }
    return out;
}

GLSum jac_theta(HalfInt x, const Rho &rho, const GLProduct &p)
{
    GLSum out;
    for (const auto &[q, c] : jac_op_gl(-x, rho, p))
        for (const auto &[r, d] : jac_gl(x, rho, q))
            out[r] += c * d;
    return out;
}

GLProduct parameter_gl_product(const Parameter &phi)
{
    GLProduct p;
    for (const auto &[b, m] : phi.blocks())
        for (int k = 0; k < m; ++k)
            p.push_back(Segment::steinberg(b.rho, b.a));
    return normalize_product(std::move(p));
}

std::string Packet::str() const
{
    std::string out = "pkt(" + phi.str() + "; " + eps.str() + "; " + level_name(level);
    if (theta)
        out += "; theta0";
    return out + ")";
}

Packet make_packet(Parameter phi, EpsilonChar eps, Level level)
{
    validate_epsilon(phi, eps, level);
    return Packet{std::move(phi), std::move(eps), level, false};
}

RepSymbol RepSymbol::packet(Packet p)
{
    RepSymbol s;
    s.kind = SymKind::packet;
    s.inner = std::move(p);
    return s;
}

RepSymbol RepSymbol::induced(GLProduct gl, Packet p)
{
    RepSymbol s;
    s.kind = gl.empty() ? SymKind::packet : SymKind::induced;
    s.gl = std::move(gl);
    s.inner = std::move(p);
    return s;
}

int RepSymbol::gl_degree() const
{
    int d = 0;
    for (const auto &s : gl)
        d += s.len * s.rho->dim;
    return d;
}

GroupType RepSymbol::group() const
{
    const GroupType &g = inner.phi.group();
    return g.with_rank(g.n + gl_degree());
}

std::string RepSymbol::str() const
{
    if (kind == SymKind::zero)
        return "0";
    std::string out;
    for (const auto &s : gl) {
        if (!out.empty())
            out += " x ";
        out += s.str();
    }
    if (!out.empty())
        out += " |x ";
    return out + inner.str();
}

RepSymbol normalize_symbol(RepSymbol s)
{
    if (s.kind == SymKind::zero)
        return s;
    s.gl = normalize_product(std::move(s.gl));
    s.kind = s.gl.empty() ? SymKind::packet : SymKind::induced;
    return s;
}

void VirtualSum::add(const RepSymbol &s, long long coeff)
{
    if (s.kind == SymKind::zero || coeff == 0)
        return;
    RepSymbol key = normalize_symbol(s);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0)
        terms_.erase(it);
}

VirtualSum &VirtualSum::operator+=(const VirtualSum &o)
{
    for (const auto &[s, c] : o.terms_)
        add(s, c);
    return *this;
}

VirtualSum VirtualSum::scaled(long long k) const
{
    VirtualSum r;
    for (const auto &[s, c] : terms_)
        r.add(s, c * k);
    return r;
}

long long VirtualSum::coefficient(const RepSymbol &s) const
{
    auto it = terms_.find(normalize_symbol(s));
    return it == terms_.end() ? 0 : it->second;
}

std::string VirtualSum::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto &[s, c] : terms_) {
        if (!out.empty())
            out += " + ";
        if (c != 1)
            out += std::to_string(c) + "*";
        out += s.str();
    }
    return out;
}

namespace {

// 2x + 1 as a block length, or 0 when x is not a positive half-integer.
int block_length(HalfInt x)
{
    return x.is_positive() ? static_cast<int>(x.doubled + 1) : 0;
}

JordanBlock block_of(const Parameter &phi, const std::string &label, int a)
{
    for (const auto &[b, m] : phi.blocks())
        if (b.a == a && b.label() == label)
            return b;
    throw Error(Errc::Validation, "missing block " + label + ":" + std::to_string(a));
}

} // namespace

int jacquet_case(const Parameter &phi, const Rho &rho, HalfInt x)
{
    int a = block_length(x);
    if (a == 0 || !rho->self_dual || !phi.contains(rho->label, a))
        return 0;
    if (a == 2)
        return 3;
    return phi.contains(rho->label, a - 2) ? 2 : 1;
}

std::optional<Parameter> jacquet_parameter(const Parameter &phi, const Rho &rho, HalfInt x)
{
    int c = jacquet_case(phi, rho, x);
    if (c == 0)
        return std::nullopt;
    int a = block_length(x);
    std::map<JordanBlock, int> blocks = phi.blocks();
    JordanBlock top = block_of(phi, rho->label, a);
    if (--blocks[top] == 0)
        blocks.erase(top);
    if (c != 3)
        ++blocks[JordanBlock{top.rho, a - 2}];
    GroupType g = phi.group().with_rank(phi.group().n - rho->dim);
    return Parameter::make(g, std::move(blocks));
}

std::optional<Packet> packet_jac(HalfInt x, const Rho &rho, const Packet &p)
{
    const Parameter &phi = p.phi;
    int c = jacquet_case(phi, rho, x);
    if (c == 0)
        return std::nullopt;
    int a = block_length(x);
    if (phi.multiplicity(rho->label, a) > 1 || (a > 2 && phi.multiplicity(rho->label, a - 2) > 1))
        throw Error(Errc::UnsupportedSymbol, "Jacquet step at " + x.str() + " touches a doubled block of " + phi.str());
    JordanBlock top = block_of(phi, rho->label, a);
    int top_sign = p.eps.at(top);
    if (c == 3 && top_sign != 1)
        return std::nullopt;
    if (c == 2 && top_sign * p.eps.at(block_of(phi, rho->label, a - 2)) != 1)
        return std::nullopt;

    Packet out;
    out.phi = *jacquet_parameter(phi, rho, x);
    out.level = p.level;
    out.theta = p.theta;
    out.eps = p.eps;
    out.eps.values.erase(top);
    if (c == 1)
        out.eps.values[JordanBlock{top.rho, a - 2}] = top_sign;
    if (p.level == Level::bar)
        out.eps = canonical_bar(out.phi, out.eps);
    return out;
}

RepSymbol jac_packet(HalfInt x, const Rho &rho, const RepSymbol &pi)
{
    if (pi.kind != SymKind::packet)
        throw Error(Errc::Validation, "jac_packet expects a packet symbol");
    if (!x.is_positive())
        throw Error(Errc::NonPositiveX, x.str());
    pi.inner.phi.require_discrete();
    auto r = packet_jac(x, rho, pi.inner);
    return r ? RepSymbol::packet(std::move(*r)) : RepSymbol::zero();
}

namespace {

// Weight of the inner term: bar-Jac = Jac + Jac o theta_0 on SO(2 d_rho).
long long inner_weight(const Packet &p, const Rho &rho)
{
    const GroupType &g = p.phi.group();
    return g.kind == GroupKind::SOeven && g.n == rho->dim ? 2 : 1;
}

void add_gl_terms(VirtualSum &out, const GLSum &gl, const Packet &inner)
{
    for (const auto &[q, c] : gl)
        out.add(RepSymbol::induced(q, inner), c);
}

} // namespace

VirtualSum jac_induced(HalfInt x, const Rho &rho, const RepSymbol &sym)
{
    VirtualSum out;
    if (sym.kind == SymKind::zero)
        return out;
    if (!sym.gl.empty()) {
        add_gl_terms(out, jac_gl(x, rho, sym.gl), sym.inner);
        add_gl_terms(out, jac_op_gl(-x, rho, sym.gl), sym.inner);
    }
    if (auto p = packet_jac(x, rho, sym.inner))
        out.add(RepSymbol::induced(sym.gl, std::move(*p)), inner_weight(sym.inner, rho));
    return out;
}

VirtualSum jac(HalfInt x, const Rho &rho, const VirtualSum &v)
{
    VirtualSum out;
    for (const auto &[s, c] : v.terms())
        out += jac_induced(x, rho, s).scaled(c);
    return out;
}

VirtualSum jac_sequence(const std::vector<HalfInt> &xs, const Rho &rho, const RepSymbol &sym)
{
    std::map<std::pair<RepSymbol, HalfInt>, VirtualSum> memo;
    VirtualSum cur;
    cur.add(sym);
    for (HalfInt x : xs) {
        VirtualSum next;
        for (const auto &[s, c] : cur.terms()) {
            auto key = std::make_pair(s, x);
            auto it = memo.find(key);
            if (it == memo.end())
                it = memo.emplace(key, jac_induced(x, rho, s)).first;
            next += it->second.scaled(c);
        }
        cur = std::move(next);
    }
    return cur;
}

namespace {

Packet flipped(Packet p)
{
    p.theta = !p.theta;
    return p;
}

} // namespace

VirtualSum jac_soeven_table(HalfInt x, const Rho &rho, const RepSymbol &sym)
{
    if (sym.kind != SymKind::induced || sym.inner.phi.group().kind != GroupKind::SOeven)
        throw Error(Errc::UnsupportedSymbol, "even orthogonal table needs tau |x pi on SO(2n)");
    const Packet &pi = sym.inner;
    int n = pi.phi.group().n;
    int d_rho = rho->dim;
    bool odd = d_rho % 2 != 0;
    GLSum lead = jac_gl(x, rho, sym.gl);
    GLSum trail = jac_op_gl(-x, rho, sym.gl);

    VirtualSum out;
    add_gl_terms(out, lead, pi);
    if (n != 0) {
        add_gl_terms(out, trail, odd ? flipped(pi) : pi);
        if (auto p = packet_jac(x, rho, pi))
            out.add(RepSymbol::induced(sym.gl, *p));
        if (n == d_rho) {
            // (tau |x Jac_x pi^theta0)^theta0
            if (auto p = packet_jac(x, rho, flipped(pi)))
                out.add(RepSymbol::induced(sym.gl, flipped(*p)));
        }
        return out;
    }
    if (!odd)
        add_gl_terms(out, trail, pi);
    else if (sym.gl_degree() != d_rho)
        add_gl_terms(out, trail, flipped(pi));
    return out;
}

VirtualSum bar_jac_from_table(HalfInt x, const Rho &rho, const RepSymbol &sym, const Alphabet &alphabet)
{
    VirtualSum out = jac_soeven_table(x, rho, sym);
    int total = sym.group().n;
    if (total != rho->dim || rho->dim % 2 == 0)
        return out;
    GLProduct dual;
    for (const auto &s : sym.gl) {
        const std::string &dl = dual_label_of(*s.rho);
        if (dl.empty())
            throw Error(Errc::UnsupportedSymbol, "no dual declared for " + s.rho->label);
        dual.push_back(s.dual(alphabet.get(dl)));
    }
    out += jac_soeven_table(x, rho, RepSymbol::induced(std::move(dual), flipped(sym.inner)));
    return out;
}

VirtualSum forget_theta(const VirtualSum &v)
{
    VirtualSum out;
    for (const auto &[s, c] : v.terms()) {
        RepSymbol t = s;
        t.inner.theta = false;
        out.add(t, c);
    }
    return out;
}

} // namespace dsc
