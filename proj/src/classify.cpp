#include "dsc/classify.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "dsc/errors.hpp"

namespace dsc {

namespace {

void require_valid(const Parameter &phi, const EpsilonChar &eps)
{
    phi.require_discrete();
    validate_epsilon(phi, eps, Level::sigma0);
}

} // namespace

bool is_supercuspidal(const Parameter &phi, const EpsilonChar &eps)
{
    require_valid(phi, eps);
    for (const auto &[b, m] : phi.blocks()) {
        if (b.a > 2) {
            JordanBlock below{b.rho, b.a - 2};
            if (!phi.blocks().count(below))
                return false;
            if (eps.at(b) * eps.at(below) != -1)
                return false;
        }
        if (b.a == 2 && eps.at(b) != -1)
            return false;
    }
    return true;
}

namespace {

// Nonzero reduction at the block (label, a) of the current discrete pair.
std::optional<ReduceStep> step_at(const Parameter &phi, const EpsilonChar &eps, const JordanBlock &b)
{
    HalfInt x = HalfInt::top_of(b.a);
    if (!x.is_positive())
        return std::nullopt;
    Packet p{phi, eps, Level::sigma0, false};
    auto next = packet_jac(x, b.rho, p);
    if (!next)
        return std::nullopt;

    ReduceStep r;
    r.block = b;
    r.step_case = jacquet_case(phi, b.rho, x);
    r.emitted.push_back({b.rho, x});
    if (r.step_case != 2) {
        r.phi = std::move(next->phi);
        r.eps = std::move(next->eps);
        return r;
    }
    // The tempered image St(rho, a-2) |x pi(phi', eps') is peeled down to pi(phi', eps').
    int lower = b.a - 2;
    for (HalfInt y = HalfInt::top_of(lower); y >= -HalfInt::top_of(lower); y -= HalfInt::whole(1))
        r.emitted.push_back({b.rho, y});
    std::map<JordanBlock, int> rest = phi.blocks();
    JordanBlock low{b.rho, lower};
    rest.erase(b);
    rest.erase(low);
    r.phi = Parameter::make(phi.group().with_rank(phi.group().n - b.rho->dim * (b.a - 1)), std::move(rest));
    r.eps = eps;
    r.eps.values.erase(b);
    r.eps.values.erase(low);
    return r;
}

std::optional<ReduceStep> select_step(const Parameter &phi, const EpsilonChar &eps)
{
    std::vector<JordanBlock> blocks = phi.distinct();
    std::stable_sort(blocks.begin(), blocks.end(), [](const JordanBlock &x, const JordanBlock &y) {
        if (x.a != y.a)
            return x.a > y.a;
        return x.label() < y.label();
    });
    for (const auto &b : blocks)
        if (auto r = step_at(phi, eps, b))
            return r;
    return std::nullopt;
}

Segment run_segment(const std::vector<Emission> &run)
{
    return Segment::between(run.front().rho, run.front().x, run.back().x);
}

} // namespace

std::optional<ReduceStep> reduce_once(const Parameter &phi, const EpsilonChar &eps)
{
    require_valid(phi, eps);
    return select_step(phi, eps);
}

SupportResult cuspidal_support(const Parameter &phi, const EpsilonChar &eps)
{
    require_valid(phi, eps);
    SupportResult out;
    Parameter cur = phi;
    EpsilonChar ce = eps;
    while (auto first = select_step(cur, ce)) {
        std::vector<Emission> run;
        std::optional<ReduceStep> step = std::move(first);
        while (step) {
            run.insert(run.end(), step->emitted.begin(), step->emitted.end());
            cur = std::move(step->phi);
            ce = std::move(step->eps);
            if (step->step_case != 1)
                break;
            step = step_at(cur, ce, JordanBlock{step->block.rho, step->block.a - 2});
        }
        out.segments.push_back(run_segment(run));
        out.emissions.insert(out.emissions.end(), run.begin(), run.end());
    }
    out.cusp_phi = std::move(cur);
    out.cusp_eps = std::move(ce);
    return out;
}

SupportResult cuspidal_support_stepwise(const Parameter &phi, const EpsilonChar &eps)
{
    require_valid(phi, eps);
    SupportResult out;
    Parameter cur = phi;
    EpsilonChar ce = eps;
    while (auto step = select_step(cur, ce)) {
        out.emissions.insert(out.emissions.end(), step->emitted.begin(), step->emitted.end());
        cur = std::move(step->phi);
        ce = std::move(step->eps);
    }
    std::vector<Emission> run;
    for (const auto &e : out.emissions) {
        if (!run.empty() && (e.rho->label != run.back().rho->label || e.x != run.back().x - HalfInt::whole(1))) {
            out.segments.push_back(run_segment(run));
            run.clear();
        }
        run.push_back(e);
    }
    if (!run.empty())
        out.segments.push_back(run_segment(run));
    out.cusp_phi = std::move(cur);
    out.cusp_eps = std::move(ce);
    return out;
}

bool replay_support(const Parameter &phi, const EpsilonChar &eps, const SupportResult &r)
{
    try {
        RepSymbol cur = RepSymbol::packet(Packet{phi, eps, Level::sigma0, false});
        for (const auto &e : r.emissions) {
            VirtualSum v = jac_induced(e.x, e.rho, cur);
            if (cur.kind == SymKind::induced) {
                // Peeling a segment left by a collapse: the leading entry must go.
                RepSymbol next = cur;
                auto it = std::find_if(next.gl.begin(), next.gl.end(), [&](const Segment &s) {
                    return !s.is_empty() && s.rho->label == e.rho->label && s.from == e.x;
                });
                if (it == next.gl.end())
                    return false;
                *it = it->drop_first();
                next = normalize_symbol(std::move(next));
                if (v.coefficient(next) <= 0)
                    return false;
                cur = std::move(next);
                continue;
            }
            auto it = std::find_if(v.terms().begin(), v.terms().end(),
                                   [](const auto &t) { return t.first.kind == SymKind::packet && t.second > 0; });
            if (it == v.terms().end())
                return false;
            const Packet &p = it->first.inner;
            std::vector<JordanBlock> dbl = p.phi.doubled();
            if (dbl.empty()) {
                cur = it->first;
                continue;
            }
            // Tempered image: St(rho, b) |x pi(phi', eps') for the doubled block (rho, b).
            const JordanBlock &d = dbl.front();
            std::map<JordanBlock, int> rest = p.phi.blocks();
            rest.erase(d);
            Packet inner;
            inner.phi = Parameter::make(p.phi.group().with_rank(p.phi.group().n - d.dim()), std::move(rest));
            inner.eps = p.eps;
            inner.eps.values.erase(d);
            inner.level = Level::sigma0;
            cur = RepSymbol::induced({Segment::steinberg(d.rho, d.a)}, std::move(inner));
        }
        return cur == RepSymbol::packet(Packet{r.cusp_phi, r.cusp_eps, Level::sigma0, false});
    } catch (const Error &) {
        return false;
    }
}

GroupType AdmissibleTriple::group() const
{
    int N = 0;
    for (const auto &b : jord)
        N += b.dim();
    GroupKind kind = cusp_phi.group().kind;
    return make_group(kind, rank_for_dimension(kind, N), cusp_phi.group().eta);
}

AdmissibleTriple triple_of(const Parameter &phi, const EpsilonChar &eps)
{
    SupportResult sr = cuspidal_support(phi, eps);
    AdmissibleTriple t;
    t.jord = phi.distinct();
    t.cusp_phi = sr.cusp_phi;
    t.cusp_eps = sr.cusp_eps;
    for (const auto &b : t.jord) {
        if (b.a % 2 == 0 || t.cusp_phi.jord_rho(b.label()).empty())
            t.delta_single[b] = eps.at(b);
        for (const auto &c : t.jord)
            if (b < c && b.label() == c.label())
                t.delta_pair[{b, c}] = eps.at(b) * eps.at(c);
    }
    return t;
}

namespace {

using Mask = std::uint32_t;

// Working view of a triple with the Jord blocks indexed for bitmask subsets.
struct TripleView {
    const AdmissibleTriple &t;
    std::vector<std::string> labels; // Jord and cusp labels

    explicit TripleView(const AdmissibleTriple &tr) : t(tr)
    {
        if (t.jord.size() > 30)
            throw Error(Errc::Validation, "too many Jordan blocks");
        std::set<std::string> ls;
        for (const auto &b : t.jord)
            ls.insert(b.label());
        for (const auto &[b, m] : t.cusp_phi.blocks())
            ls.insert(b.label());
        labels.assign(ls.begin(), ls.end());
    }

    Mask full() const { return t.jord.empty() ? 0 : (Mask{1} << t.jord.size()) - 1; }

    // Indices of the remaining blocks of one label, ascending in a.
    std::vector<std::size_t> chain(Mask m, const std::string &label) const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < t.jord.size(); ++i)
            if ((m >> i) & 1 && t.jord[i].label() == label)
                out.push_back(i);
        std::sort(out.begin(), out.end(), [&](std::size_t x, std::size_t y) { return t.jord[x].a < t.jord[y].a; });
        return out;
    }

    int pair(std::size_t i, std::size_t j) const
    {
        const JordanBlock &x = t.jord[i], &y = t.jord[j];
        auto it = x < y ? t.delta_pair.find({x, y}) : t.delta_pair.find({y, x});
        if (it == t.delta_pair.end())
            throw Error(Errc::InconsistentDelta, "no pair value on " + x.key() + ", " + y.key());
        return it->second;
    }

    std::optional<int> single(std::size_t i) const
    {
        auto it = t.delta_single.find(t.jord[i]);
        if (it == t.delta_single.end())
            return std::nullopt;
        return it->second;
    }

    // Jord_rho of the cusp, with 0 prepended when the smallest remaining a is even with Delta = +1.
    std::vector<int> jord_plus(const std::string &label, const std::vector<std::size_t> &ch) const
    {
        std::vector<int> c = t.cusp_phi.jord_rho(label);
        std::sort(c.begin(), c.end());
        if (!ch.empty() && t.jord[ch.front()].a % 2 == 0 && single(ch.front()) == 1)
            c.insert(c.begin(), 0);
        return c;
    }

    bool alternated(Mask m) const
    {
        for (const auto &l : labels) {
            auto ch = chain(m, l);
            for (std::size_t k = 1; k < ch.size(); ++k)
                if (pair(ch[k - 1], ch[k]) != -1)
                    return false;
            if (jord_plus(l, ch).size() != ch.size())
                return false;
        }
        return true;
    }

    // Adjacent same-label pairs with Delta = +1, in label then a order.
    std::vector<std::pair<std::size_t, std::size_t>> removable(Mask m) const
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const auto &l : labels) {
            auto ch = chain(m, l);
            for (std::size_t k = 1; k < ch.size(); ++k)
                if (pair(ch[k - 1], ch[k]) == 1)
                    out.push_back({ch[k - 1], ch[k]});
        }
        return out;
    }

    // Removal sequence reaching an alternated remnant, if any.
    std::optional<std::vector<std::pair<std::size_t, std::size_t>>> chain_to_alternated(Mask m, std::map<Mask, bool> &dead) const
    {
        if (alternated(m))
            return std::vector<std::pair<std::size_t, std::size_t>>{};
        if (dead.count(m))
            return std::nullopt;
        for (auto [i, j] : removable(m)) {
            Mask rest = m & ~(Mask{1} << i) & ~(Mask{1} << j);
            if (auto sub = chain_to_alternated(rest, dead)) {
                sub->insert(sub->begin(), {i, j});
                return sub;
            }
        }
        dead[m] = true;
        return std::nullopt;
    }
};

std::optional<std::vector<std::pair<std::size_t, std::size_t>>> find_chain(const TripleView &v)
{
    std::map<Mask, bool> dead;
    return v.chain_to_alternated(v.full(), dead);
}

} // namespace

void check_delta(const AdmissibleTriple &t)
{
    auto fail = [](const std::string &why) { throw Error(Errc::InconsistentDelta, why); };
    for (std::size_t i = 0; i < t.jord.size(); ++i) {
        if (!t.jord[i].rho->self_dual)
            throw Error(Errc::NotSelfDual, t.jord[i].key());
        if (i && !(t.jord[i - 1] < t.jord[i]))
            fail("Jord must be sorted and multiplicity free");
    }
    std::set<JordanBlock> jord(t.jord.begin(), t.jord.end());
    for (const auto &[b, v] : t.delta_single) {
        if (!jord.count(b))
            fail("single value on " + b.key() + " outside Jord");
        if (v != 1 && v != -1)
            fail("single value on " + b.key() + " is not a sign");
    }
    for (const auto &b : t.jord) {
        bool legal = b.a % 2 == 0 || t.cusp_phi.jord_rho(b.label()).empty();
        if (legal != (t.delta_single.count(b) > 0))
            fail(std::string(legal ? "missing" : "illegal") + " single value on " + b.key());
    }
    std::size_t expected_pairs = 0;
    for (const auto &b : t.jord)
        for (const auto &c : t.jord)
            if (b < c && b.label() == c.label()) {
                ++expected_pairs;
                auto it = t.delta_pair.find({b, c});
                if (it == t.delta_pair.end())
                    fail("missing pair value on " + b.key() + ", " + c.key());
                if (it->second != 1 && it->second != -1)
                    fail("pair value on " + b.key() + ", " + c.key() + " is not a sign");
                auto sb = t.delta_single.find(b), sc = t.delta_single.find(c);
                if (sb != t.delta_single.end() && sc != t.delta_single.end() && sb->second * sc->second != it->second)
                    fail("single and pair values disagree on " + b.key() + ", " + c.key());
            }
    if (expected_pairs != t.delta_pair.size())
        fail("pair values outside same-label pairs of Jord");
    for (const auto &[p, v] : t.delta_pair)
        for (const auto &[q, w] : t.delta_pair)
            if (p.second == q.first) {
                auto r = t.delta_pair.find({p.first, q.second});
                if (r == t.delta_pair.end() || r->second != v * w)
                    fail("pair values violate the cocycle law at " + p.first.key() + ", " + p.second.key() + ", " + q.second.key());
            }
}

bool is_alternated(const AdmissibleTriple &t)
{
    check_delta(t);
    TripleView v(t);
    return v.alternated(v.full());
}

bool is_admissible(const AdmissibleTriple &t)
{
    check_delta(t);
    return find_chain(TripleView(t)).has_value();
}

bool admissibility_order_independent(const AdmissibleTriple &t)
{
    check_delta(t);
    TripleView v(t);
    std::map<Mask, std::set<bool>> memo;
    std::function<const std::set<bool> &(Mask)> outcomes = [&](Mask m) -> const std::set<bool> & {
        if (auto it = memo.find(m); it != memo.end())
            return it->second;
        std::set<bool> res;
        if (v.alternated(m)) {
            res.insert(true);
        } else {
            auto moves = v.removable(m);
            if (moves.empty())
                res.insert(false);
            for (auto [i, j] : moves) {
                const auto &sub = outcomes(m & ~(Mask{1} << i) & ~(Mask{1} << j));
                res.insert(sub.begin(), sub.end());
            }
        }
        return memo[m] = std::move(res);
    };
    return outcomes(v.full()).size() == 1;
}

std::pair<Parameter, EpsilonChar> parameter_of(const AdmissibleTriple &t)
{
    check_delta(t);
    TripleView v(t);
    auto removals = find_chain(v);
    if (!removals)
        throw Error(Errc::NotAdmissible, "no subordination chain ends in an alternated triple");
    Mask core = v.full();
    for (auto [i, j] : *removals)
        core &= ~(Mask{1} << i) & ~(Mask{1} << j);

    std::map<std::size_t, int> sign;
    for (const auto &l : v.labels) {
        auto ch = v.chain(core, l);
        std::vector<int> plus = v.jord_plus(l, ch);
        for (std::size_t k = 0; k < ch.size(); ++k) {
            int target = plus[k];
            if (target == 0) {
                sign[ch[k]] = 1;
                continue;
            }
            const JordanBlock &b = t.jord[ch[k]];
            sign[ch[k]] = t.cusp_eps.at(JordanBlock{b.rho, target});
        }
    }
    for (auto [i, j] : *removals) {
        for (std::size_t idx : {i, j}) {
            if (auto s = v.single(idx)) {
                sign[idx] = *s;
                continue;
            }
            auto anchor = std::find_if(sign.begin(), sign.end(),
                                       [&](const auto &kv) { return t.jord[kv.first].label() == t.jord[idx].label(); });
            if (anchor == sign.end())
                throw Error(Errc::InconsistentDelta, "no anchor to extend the character to " + t.jord[idx].key());
            sign[idx] = v.pair(idx, anchor->first) * anchor->second;
        }
    }

    Parameter phi = Parameter::make(t.group(), t.jord);
    phi.require_discrete();
    EpsilonChar eps;
    for (auto [i, s] : sign)
        eps.values[t.jord[i]] = s;
    if (eps.values.size() != t.jord.size() || eps.product() != 1)
        throw Error(Errc::InconsistentDelta, "reconstructed character is not a character of the component group");
    if (triple_of(phi, eps) != t)
        throw Error(Errc::InconsistentDelta, "reconstruction does not reproduce the triple");
    return {std::move(phi), std::move(eps)};
}

StandardModule construct_standard_module(const AdmissibleTriple &t)
{
    auto [phi, eps] = parameter_of(t);
    TripleView v(t);
    auto removals = *find_chain(v);
    GLProduct gl;
    Mask core = v.full();
    // Outer segments first: each removed pair wraps the module of its subordinate.
    for (auto [i, j] : removals) {
        const JordanBlock &lo = t.jord[i], &hi = t.jord[j];
        gl.push_back(Segment::between(hi.rho, HalfInt::top_of(hi.a), -HalfInt::top_of(lo.a)));
        core &= ~(Mask{1} << i) & ~(Mask{1} << j);
    }
    for (const auto &l : v.labels) {
        auto ch = v.chain(core, l);
        std::vector<int> plus = v.jord_plus(l, ch);
        for (std::size_t k = 0; k < ch.size(); ++k) {
            const JordanBlock &b = t.jord[ch[k]];
            if (b.a > plus[k])
                gl.push_back(Segment::between(b.rho, HalfInt::top_of(b.a), HalfInt::from_doubled(plus[k] + 1)));
        }
    }
    Packet cusp{t.cusp_phi, t.cusp_eps, Level::sigma0, false};
    return {RepSymbol::induced(std::move(gl), std::move(cusp)), std::move(phi), std::move(eps)};
}

std::vector<Parameter> enumerate_parameters(const GroupType &g, const Alphabet &alphabet)
{
    int N = g.N();
    std::vector<JordanBlock> cands;
    for (const auto &rho : alphabet.symbols()) {
        if (!rho->self_dual)
            continue;
        for (int a = 1; a * rho->dim <= N; ++a) {
            JordanBlock b{rho, a};
            if (block_type(b) == g.dual_type())
                cands.push_back(b);
        }
    }
    std::sort(cands.begin(), cands.end());
    std::vector<Parameter> out;
    std::vector<JordanBlock> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
        if (rem == 0) {
            if (g.kind == GroupKind::SOeven) {
                QuadChar det;
                for (const auto &b : cur)
                    det *= block_central_char(b);
                if (det != g.eta)
                    return;
            }
            out.push_back(Parameter::make(g, cur));
            return;
        }
        if (i == cands.size())
            return;
        if (cands[i].dim() <= rem) {
            cur.push_back(cands[i]);
            rec(i + 1, rem - cands[i].dim());
            cur.pop_back();
        }
        rec(i + 1, rem);
    };
    rec(0, N);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Parameter, EpsilonChar>> enumerate(const GroupType &g, const Alphabet &alphabet)
{
    std::vector<std::pair<Parameter, EpsilonChar>> out;
    for (auto &phi : enumerate_parameters(g, alphabet))
        for (auto &e : epsilon_characters(phi, Level::sigma0))
            out.emplace_back(phi, std::move(e));
    return out;
}

bool jord_from_st_reducibility(const Parameter &phi, const EpsilonChar &eps, const Rho &rho, int a)
{
    require_valid(phi, eps);
    if (!rho->self_dual || a < 1)
        return false;
    if (block_type(JordanBlock{rho, a}) != phi.group().dual_type())
        return false;
    return phi.contains(rho->label, a);
}

bool dimension_identity(const Parameter &phi)
{
    int total = 0;
    for (const auto &[b, m] : phi.blocks())
        total += m * b.a * b.rho->dim;
    return total == phi.group().N();
}

std::vector<AdmissibleTriple> brute_force_triples(const GroupType &g, const Alphabet &alphabet)
{
    std::vector<std::pair<Parameter, EpsilonChar>> cusps;
    for (int nc = 0; nc <= g.n; ++nc)
        for (const auto &cp : enumerate_parameters(g.with_rank(nc), alphabet))
            for (const auto &ce : epsilon_characters(cp, Level::sigma0))
                if (is_supercuspidal(cp, ce))
                    cusps.emplace_back(cp, ce);

    std::vector<AdmissibleTriple> out;
    for (const auto &J : enumerate_parameters(g, alphabet)) {
        std::vector<JordanBlock> jord = J.distinct();
        for (const auto &[cp, ce] : cusps) {
            // A sign function sigma on Jord gives Delta(a) = sigma(a), Delta(a; a') = sigma(a) sigma(a').
            // Labels without any single value only see sigma up to a global sign.
            std::vector<std::vector<std::size_t>> groups;
            std::vector<bool> free_sign;
            std::map<std::string, std::size_t> gi;
            for (std::size_t i = 0; i < jord.size(); ++i) {
                auto [it, fresh] = gi.emplace(jord[i].label(), groups.size());
                if (fresh) {
                    groups.emplace_back();
                    free_sign.push_back(false);
                }
                groups[it->second].push_back(i);
            }
            auto single_defined = [&](const JordanBlock &b) { return b.a % 2 == 0 || cp.jord_rho(b.label()).empty(); };
            for (std::size_t k = 0; k < groups.size(); ++k)
                for (std::size_t i : groups[k])
                    free_sign[k] = free_sign[k] || single_defined(jord[i]);

            std::vector<int> sigma(jord.size(), 1);
            std::function<void(std::size_t)> rec = [&](std::size_t k) {
                if (k == groups.size()) {
                    AdmissibleTriple t;
                    t.jord = jord;
                    t.cusp_phi = cp;
                    t.cusp_eps = ce;
                    for (std::size_t i = 0; i < jord.size(); ++i) {
                        if (single_defined(jord[i]))
                            t.delta_single[jord[i]] = sigma[i];
                        for (std::size_t j = i + 1; j < jord.size(); ++j)
                            if (jord[i].label() == jord[j].label())
                                t.delta_pair[{jord[i], jord[j]}] = sigma[i] * sigma[j];
                    }
                    if (is_admissible(t))
                        out.push_back(std::move(t));
                    return;
                }
                const auto &idx = groups[k];
                std::size_t start = free_sign[k] ? 0 : 1; // fix the first sign when only ratios matter
                for (std::size_t mask = 0; mask < (std::size_t{1} << idx.size()); ++mask) {
                    if (start == 1 && (mask & 1))
                        continue;
                    for (std::size_t q = 0; q < idx.size(); ++q)
                        sigma[idx[q]] = (mask >> q) & 1 ? -1 : 1;
                    rec(k + 1);
                }
            };
            rec(0);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace dsc
