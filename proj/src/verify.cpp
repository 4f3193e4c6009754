#include "dsc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "dsc/errors.hpp"

namespace dsc {

namespace {

// Results land at their index, so the merge order never depends on scheduling.
template <class T> std::vector<T> parallel_map(std::size_t count, int threads, const std::function<T(std::size_t)> &fn)
{
    std::vector<T> out(count);
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(count);
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::max(1, threads); ++t)
        pool.emplace_back(worker);
    worker();
    for (auto &th : pool)
        th.join();
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

struct Tally {
    long long checked = 0;
    long long failed = 0;
    std::string first_failure;

    void check(bool ok, const std::function<std::string()> &what)
    {
        ++checked;
        if (!ok && failed++ == 0)
            first_failure = what();
    }
    Tally &operator+=(const Tally &o)
    {
        if (failed == 0 && o.failed)
            first_failure = o.first_failure;
        checked += o.checked;
        failed += o.failed;
        return *this;
    }
};

std::string failure_note(const Tally &t)
{
    if (!t.failed)
        return "";
    return "; " + std::to_string(t.failed) + " failed, first: " + t.first_failure;
}

CriterionResult result(int id, const char *name, const Tally &t, std::string detail)
{
    return {id, name, t.failed == 0 && t.checked > 0, std::move(detail) + failure_note(t)};
}

std::vector<GroupType> groups_up_to(const Alphabet &alphabet, int max_n)
{
    std::vector<GroupType> out;
    for (int n = 0; n <= max_n; ++n)
        for (const auto &g : group_matrix(alphabet, n))
            out.push_back(g);
    return out;
}

Alphabet with_nonself_dual_pair(const Alphabet &alphabet)
{
    Alphabet a = alphabet;
    if (!a.find("tau3") && !a.find("tau3v")) {
        a.add({"tau3", 3, false, SdType::none, QuadChar{}, 1, "tau3v"});
        a.add({"tau3v", 3, false, SdType::none, QuadChar{}, 1, "tau3"});
    }
    return a;
}

std::vector<HalfInt> positive_steps(int N)
{
    std::vector<HalfInt> xs;
    for (int d = 1; d <= N + 1; ++d)
        xs.push_back(HalfInt::from_doubled(d));
    return xs;
}

} // namespace

bool VerifyReport::all_passed() const
{
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult &c) { return c.passed; });
}

std::string VerifyReport::text() const
{
    std::ostringstream out;
    for (const auto &c : criteria)
        out << (c.passed ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << ": " << c.detail << "\n";
    return out.str();
}

std::vector<GroupType> group_matrix(const Alphabet &alphabet, int n)
{
    std::set<std::string> gens;
    for (const auto &s : alphabet.symbols())
        if (s->self_dual)
            gens.insert(s->central_char.gens.begin(), s->central_char.gens.end());
    std::vector<std::string> g(gens.begin(), gens.end());
    std::vector<GroupType> out{make_group(GroupKind::Sp, n), make_group(GroupKind::SOodd, n)};
    std::set<QuadChar> etas;
    for (std::size_t mask = 0; mask < (std::size_t{1} << std::min<std::size_t>(g.size(), 4)); ++mask) {
        QuadChar eta;
        for (std::size_t i = 0; i < g.size(); ++i)
            if ((mask >> i) & 1)
                eta.gens.insert(g[i]);
        etas.insert(eta);
    }
    for (const auto &eta : etas)
        out.push_back(make_group(GroupKind::SOeven, n, eta));
    return out;
}

Alphabet extended_alphabet() { return with_nonself_dual_pair(Alphabet::test_alphabet()); }

CriterionResult check_bijection(const Alphabet &alphabet, const VerifyOptions &opt)
{
    auto groups = groups_up_to(alphabet, opt.max_n);
    struct Out {
        Tally t;
        long long pairs = 0;
    };
    auto parts = parallel_map<Out>(groups.size(), opt.threads, [&](std::size_t i) {
        const GroupType &g = groups[i];
        Out o;
        auto packet = enumerate(g, alphabet);
        auto brute = brute_force_triples(g, alphabet);
        o.pairs = static_cast<long long>(packet.size());
        std::vector<AdmissibleTriple> images;
        for (const auto &[phi, eps] : packet) {
            AdmissibleTriple t = triple_of(phi, eps);
            auto back = parameter_of(t);
            o.t.check(back.first == phi && back.second == eps,
                      [&] { return "parameter_of(triple_of) differs at " + phi.str() + " " + eps.str(); });
            images.push_back(std::move(t));
        }
        std::sort(images.begin(), images.end());
        o.t.check(std::adjacent_find(images.begin(), images.end()) == images.end(),
                  [&] { return "triple_of is not injective on " + g.str(); });
        o.t.check(images == brute, [&] {
            return g.str() + ": " + std::to_string(packet.size()) + " parameters vs " + std::to_string(brute.size()) +
                   " brute-force triples";
        });
        for (const auto &t : brute) {
            auto [phi, eps] = parameter_of(t);
            o.t.check(triple_of(phi, eps) == t, [&] { return "triple_of(parameter_of) differs at " + phi.str(); });
        }
        return o;
    });
    Tally total;
    long long pairs = 0;
    for (const auto &p : parts) {
        total += p.t;
        pairs += p.pairs;
    }
    return result(1, "bijection", total,
                  std::to_string(pairs) + " (phi, eps) pairs over " + std::to_string(groups.size()) +
                      " groups match the brute-force triples; " + std::to_string(total.checked) + " checks");
}

CriterionResult check_dimension_identity(const Alphabet &alphabet, const VerifyOptions &opt)
{
    auto groups = groups_up_to(alphabet, opt.max_n);
    struct Out {
        Tally good, fuzz;
    };
    auto parts = parallel_map<Out>(groups.size(), opt.threads, [&](std::size_t i) {
        Out o;
        std::mt19937_64 rng(0x5eed0000 + i);
        for (const auto &phi : enumerate_parameters(groups[i], alphabet)) {
            o.good.check(dimension_identity(phi), [&] { return phi.str(); });
            std::map<JordanBlock, int> blocks = phi.blocks();
            GroupType g = phi.group();
            std::vector<JordanBlock> keys = phi.distinct();
            int op = keys.empty() ? 3 : static_cast<int>(rng() % 4);
            if (op == 0) {
                JordanBlock b = keys[rng() % keys.size()];
                int delta = (b.a == 1 || rng() % 2) ? 1 : -1;
                if (--blocks[b] == 0)
                    blocks.erase(b);
                ++blocks[JordanBlock{b.rho, b.a + delta}];
            } else if (op == 1) {
                ++blocks[keys[rng() % keys.size()]];
            } else if (op == 2) {
                blocks.erase(keys[rng() % keys.size()]);
            } else {
                g = g.with_rank(g.n + 1);
            }
            Parameter bad = Parameter::unchecked(g, std::move(blocks));
            o.fuzz.check(!dimension_identity(bad), [&] { return "corruption accepted: " + bad.str(); });
        }
        return o;
    });
    Tally good, fuzz;
    for (const auto &p : parts) {
        good += p.good;
        fuzz += p.fuzz;
    }
    Tally all = good;
    all += fuzz;
    return result(2, "dimension identity", all,
                  std::to_string(good.checked) + " parameters satisfy it, " + std::to_string(fuzz.checked) +
                      " corrupted copies rejected");
}

CriterionResult check_supercuspidal_support(const Alphabet &alphabet, const VerifyOptions &opt)
{
    auto groups = groups_up_to(alphabet, opt.max_n);
    struct Out {
        Tally t;
        long long cusp = 0;
    };
    auto parts = parallel_map<Out>(groups.size(), opt.threads, [&](std::size_t i) {
        Out o;
        for (const auto &[phi, eps] : enumerate(groups[i], alphabet)) {
            bool sc = is_supercuspidal(phi, eps);
            o.cusp += sc;
            bool empty = cuspidal_support(phi, eps).emissions.empty();
            o.t.check(sc == empty, [&] { return phi.str() + " " + eps.str(); });
        }
        return o;
    });
    Tally total;
    long long cusp = 0;
    for (const auto &p : parts) {
        total += p.t;
        cusp += p.cusp;
    }
    return result(3, "supercuspidal iff empty support", total,
                  std::to_string(total.checked) + " pairs agree, " + std::to_string(cusp) + " supercuspidal");
}

CriterionResult check_jacquet_commutation(const Alphabet &base, const VerifyOptions &opt)
{
    const Alphabet alphabet = with_nonself_dual_pair(base);
    // Inner packets: every discrete pair of small rank over the group matrix.
    std::vector<Packet> inners;
    for (const auto &g : groups_up_to(base, std::min(opt.max_n, 3)))
        for (auto &[phi, eps] : enumerate(g, base))
            inners.push_back(Packet{phi, eps, Level::sigma0, false});
    const std::vector<Rho> &symbols = alphabet.symbols();

    constexpr std::size_t chunks = 16;
    constexpr long long per_chunk = 640; // 16 * 640 = 10240 instances
    struct Out {
        Tally t;
        long long nonzero = 0, skipped = 0;
    };
    auto parts = parallel_map<Out>(chunks, opt.threads, [&](std::size_t c) {
        Out o;
        std::mt19937_64 rng(0xc0ffee00 + c);
        auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
        while (o.t.checked < per_chunk) {
            const Packet &inner = inners[pick(inners.size())];
            GLProduct gl;
            std::vector<std::pair<Rho, HalfInt>> hooks; // exponents likely to be hit
            std::size_t k = 1 + pick(2);
            for (std::size_t s = 0; s < k; ++s) {
                Rho r = symbols[pick(symbols.size())];
                HalfInt from = HalfInt::from_doubled(static_cast<std::int64_t>(pick(11)) - 5);
                int len = 1 + static_cast<int>(pick(3));
                HalfInt to = rng() % 2 ? from - HalfInt::whole(len - 1) : from + HalfInt::whole(len - 1);
                Segment seg = Segment::between(r, from, to);
                gl.push_back(seg);
                for (auto e : seg.entries())
                    hooks.push_back({r, e});
                hooks.push_back({r, -seg.to()});
            }
            for (const auto &[b, m] : inner.phi.blocks())
                hooks.push_back({b.rho, HalfInt::top_of(b.a)});
            auto [rho, x] = hooks[pick(hooks.size())];
            std::vector<HalfInt> same;
            for (const auto &[r, e] : hooks)
                if (r->label == rho->label && abs(e - x) != HalfInt::whole(1))
                    same.push_back(e);
            HalfInt y = same.empty() ? x : same[pick(same.size())];
            if (rng() % 4 == 0)
                y = HalfInt::from_doubled(static_cast<std::int64_t>(pick(11)) - 5);
            if (abs(x - y) == HalfInt::whole(1))
                continue;
            RepSymbol sym = RepSymbol::induced(gl, inner);
            try {
                VirtualSum xy = jac_sequence({x, y}, rho, sym);
                VirtualSum yx = jac_sequence({y, x}, rho, sym);
                o.nonzero += !xy.is_zero();
                o.t.check(xy == yx, [&] {
                    return "Jac_" + x.str() + "," + y.str() + " on " + sym.str() + " via " + rho->label;
                });
            } catch (const Error &e) {
                if (e.code() != Errc::UnsupportedSymbol)
                    throw;
                ++o.skipped;
            }
        }
        return o;
    });
    Tally total;
    long long nonzero = 0, skipped = 0;
    for (const auto &p : parts) {
        total += p.t;
        nonzero += p.nonzero;
        skipped += p.skipped;
    }
    Tally all = total;
    all.check(total.checked >= 10000, [] { return "fewer than 10000 instances"; });
    return result(4, "Jacquet commutation", all,
                  std::to_string(total.checked) + " random induced symbols, " + std::to_string(nonzero) +
                      " with nonzero Jac_{x,y}; " + std::to_string(skipped) +
                      " drawn symbols stepped into a doubled block and were redrawn");
}

CriterionResult check_packet_jacquet(const Alphabet &alphabet, const VerifyOptions &opt)
{
    auto groups = groups_up_to(alphabet, opt.max_n);
    struct Out {
        Tally t;
        long long nonzero = 0;
    };
    auto parts = parallel_map<Out>(groups.size(), opt.threads, [&](std::size_t i) {
        Out o;
        for (const auto &phi : enumerate_parameters(groups[i], alphabet))
            for (const auto &rho : alphabet.symbols())
                for (HalfInt x : positive_steps(phi.group().N()))
                    for (Level level : {Level::sigma0, Level::bar}) {
                        std::vector<RepSymbol> got;
                        for (const auto &e : epsilon_characters(phi, level)) {
                            RepSymbol img = jac_packet(x, rho, RepSymbol::packet(Packet{phi, e, level, false}));
                            if (img.kind != SymKind::zero)
                                got.push_back(img);
                        }
                        std::vector<RepSymbol> want;
                        if (auto lower = jacquet_parameter(phi, rho, x))
                            for (const auto &e : packet_characters(*lower, level))
                                want.push_back(RepSymbol::packet(Packet{*lower, e, level, false}));
                        bool in_jord = phi.contains(rho->label, static_cast<int>(x.doubled) + 1) && rho->self_dual;
                        std::sort(got.begin(), got.end());
                        std::sort(want.begin(), want.end());
                        o.nonzero += !got.empty();
                        o.t.check(got == want && (in_jord || got.empty()), [&] {
                            return phi.str() + " at " + rho->label + "|.|^" + x.str() + " (" + level_name(level) + ")";
                        });
                    }
        return o;
    });
    Tally total;
    long long nonzero = 0;
    for (const auto &p : parts) {
        total += p.t;
        nonzero += p.nonzero;
    }
    return result(5, "packet-Jacquet coherence", total,
                  std::to_string(total.checked) + " (phi, rho, x, level) cases, " + std::to_string(nonzero) +
                      " with a nonzero image packet");
}

namespace {

// Prop 3.3 read off the L-factors alone: a pole of L(s, rho^vee x phi) at 1 - lambda and none
// at -lambda for lambda > 1/2; else a pole of L(0, rho, R) and none at -1/2 for lambda = 1/2; else 0.
int reducibility_from_lfactors(const Parameter &phi, const Rho &rho, const Alphabet &alphabet)
{
    LFactor cross;
    const std::string &dual = dual_label_of(*rho);
    if (!dual.empty())
        cross = rho_cross_parameter(alphabet.get(dual), phi);
    int best = -1;
    for (int a = 1; a <= phi.group().N() + 2; ++a) {
        HalfInt lambda = HalfInt::from_doubled(a + 1);
        if (cross.has_pole(HalfInt::whole(1) - lambda) && !cross.has_pole(-lambda))
            best = a;
    }
    if (best > 0)
        return best;
    LFactor square = phi.group().dual_type() == SdType::orthogonal ? wedge2(GLRep::cuspidal(rho))
                                                                   : sym2(GLRep::cuspidal(rho));
    if (square.has_pole(HalfInt{}) && !cross.has_pole(HalfInt::from_doubled(-1)))
        return 0;
    return -1;
}

std::vector<GLRep> glreps_up_to(const Alphabet &alphabet)
{
    std::vector<GLRep> out;
    const auto &syms = alphabet.symbols();
    for (const auto &r : syms)
        for (int a = 1; a <= 4; ++a) {
            out.push_back(GLRep::steinberg(r, a));
            out.push_back(GLRep::steinberg(r, a, HalfInt::from_doubled(1)));
            for (const auto &r2 : syms)
                for (int b = 1; b <= 3; ++b) {
                    out.push_back(GLRep::tempered({{r, a}, {r2, b}}));
                    out.push_back(GLRep::langlands({GLPiece{{{r, a}}, HalfInt::whole(1)}, GLPiece{{{r2, b}}, HalfInt{}}}));
                    out.push_back(GLRep::langlands(
                        {GLPiece{{{r, a}, {r2, b}}, HalfInt::from_doubled(1)}, GLPiece{{{r2, b}}, HalfInt::from_doubled(-1)}}));
                }
        }
    return out;
}

} // namespace

CriterionResult check_lfactor_laws(const Alphabet &base, const VerifyOptions &opt)
{
    const Alphabet alphabet = with_nonself_dual_pair(base);
    Tally fact;
    for (const auto &pi : glreps_up_to(alphabet))
        fact.check(factorization_identity_check(pi), [&] { return "factorization fails for " + pi.str(); });

    auto pole_groups = groups_up_to(base, opt.max_n + 2);
    auto pole_parts = parallel_map<Tally>(pole_groups.size(), opt.threads, [&](std::size_t i) {
        Tally t;
        for (const auto &phi : enumerate_parameters(pole_groups[i], base))
            for (const auto &rho : base.symbols()) {
                if (!rho->self_dual)
                    continue;
                LFactor l = rho_cross_parameter(rho, phi);
                for (int a = 1; a <= phi.group().N() + 1; ++a)
                    t.check(l.has_pole(-HalfInt::top_of(a)) == phi.contains(rho->label, a), [&] {
                        return "pole criterion at " + rho->label + ":" + std::to_string(a) + " for " + phi.str();
                    });
            }
        return t;
    });
    Tally poles;
    for (const auto &p : pole_parts)
        poles += p;

    auto groups = groups_up_to(base, opt.max_n);
    struct Out {
        Tally t;
        std::set<ReducibilityCase> seen;
    };
    auto red_parts = parallel_map<Out>(groups.size(), opt.threads, [&](std::size_t i) {
        Out o;
        for (const auto &[phi, eps] : enumerate(groups[i], base)) {
            if (!is_supercuspidal(phi, eps))
                continue;
            for (const auto &rho : alphabet.symbols()) {
                ReducibilityPoint p = reducibility_point(phi, rho, true);
                o.seen.insert(p.which);
                int oracle = reducibility_from_lfactors(phi, rho, alphabet);
                o.t.check(p.a_rho == oracle && p.exponent == HalfInt::from_doubled(oracle + 1), [&] {
                    return "reducibility of " + rho->label + " over " + phi.str() + ": " + std::to_string(p.a_rho) +
                           " vs L-factors " + std::to_string(oracle);
                });
            }
        }
        return o;
    });
    Tally red;
    std::set<ReducibilityCase> seen;
    for (const auto &p : red_parts) {
        red += p.t;
        seen.insert(p.seen.begin(), p.seen.end());
    }
    red.check(seen.size() == 3, [] { return "not all three reducibility cases occurred"; });

    Tally all = fact;
    all += poles;
    all += red;
    return result(6, "L-factor laws", all,
                  std::to_string(fact.checked) + " factorizations, " + std::to_string(poles.checked) +
                      " pole tests up to rank " + std::to_string(opt.max_n + 2) + ", " + std::to_string(red.checked) +
                      " reducibility points");
}

CriterionResult check_segment_calculus(const Alphabet &alphabet, const VerifyOptions &)
{
    Tally t;
    std::vector<Rho> rhos;
    for (const auto &r : alphabet.symbols())
        if (rhos.size() < 2 && r->dim == 1)
            rhos.push_back(r);
    if (rhos.empty())
        rhos.push_back(alphabet.symbols().front());
    const Rho &rho = rhos.front();
    for (const auto &rho2 : rhos)
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b)
                for (int a2 = 1; a2 <= 4; ++a2)
                    for (int b2 = 1; b2 <= 4; ++b2)
                        for (int s = -12; s <= 12; ++s) {
                            HalfInt shift = HalfInt::from_doubled(s);
                            GenSegment g1 = speh_matrix(rho, a, b);
                            GenSegment g2 = speh_matrix(rho2, a2, b2).shifted(shift);
                            bool linked = gen_is_linked(g1, g2);
                            auto where = [&] {
                                return "Sp(St(" + std::to_string(a) + ")," + std::to_string(b) + ") vs Sp(St(" +
                                       std::to_string(a2) + ")," + std::to_string(b2) + ")|.|^" + shift.str() +
                                       " on " + rho2->label;
                            };
                            t.check(linked == speh_pair_reducible(*rho, a, b, *rho2, a2, b2, shift), where);
                            t.check(linked == gen_is_linked(g2, g1), where);
                            t.check(linked == gen_is_linked(g1.transposed(), g2.transposed()), where);
                        }
    // Ordinary segments of one monotone kind: symmetry of linking.
    for (int f1 = -4; f1 <= 4; ++f1)
        for (int l1 = 0; l1 <= 3; ++l1)
            for (int f2 = -4; f2 <= 4; ++f2)
                for (int l2 = 0; l2 <= 3; ++l2) {
                    Segment s1 = l1 ? Segment::between(rho, HalfInt::whole(f1), HalfInt::whole(f1 - l1 + 1)) : Segment::empty(rho);
                    Segment s2 = l2 ? Segment::between(rho, HalfInt::whole(f2), HalfInt::whole(f2 - l2 + 1)) : Segment::empty(rho);
                    t.check(is_linked(s1, s2) == is_linked(s2, s1), [&] { return s1.str() + " vs " + s2.str(); });
                }
    return result(7, "segment calculus", t, std::to_string(t.checked) + " linking checks");
}

CriterionResult check_endoscopy(const Alphabet &alphabet, const VerifyOptions &opt)
{
    auto groups = groups_up_to(alphabet, opt.max_n);
    struct Out {
        Tally dims, pair, compat;
    };
    auto parts = parallel_map<Out>(groups.size(), opt.threads, [&](std::size_t i) {
        Out o;
        for (const auto &phi : enumerate_parameters(groups[i], alphabet)) {
            auto signs = all_sign_vectors(phi);
            auto chars = epsilon_characters(phi, Level::sigma0);
            EpsilonChar e0 = eps0(phi);
            for (const auto &s : signs) {
                EndoDatum d = endo_datum(phi, s, alphabet);
                o.dims.check(d.phi1.total_dim() + d.phi2.total_dim() == phi.group().N() &&
                                 d.g1.N() + d.g2.N() == phi.group().N(),
                             [&] { return phi.str() + " s=" + s.str(); });
                for (const auto &rho : alphabet.symbols())
                    for (HalfInt x : positive_steps(phi.group().N()))
                        if (project_signs(phi, s, rho, x))
                            o.compat.check(jacquet_endoscopy_compatible(phi, s, rho, x, alphabet), [&] {
                                return phi.str() + " s=" + s.str() + " at " + rho->label + "|.|^" + x.str();
                            });
                bool trivial_class = std::all_of(s.entries.begin(), s.entries.end(),
                                                 [&](const auto &e) { return e.second == s.entries.front().second; });
                bool detected = trivial_class;
                for (const auto &e : chars) {
                    detected = detected || pairing(e, s) == -1;
                    for (const auto &e2 : chars)
                        o.pair.check(pairing(e * e2, s) == pairing(e, s) * pairing(e2, s),
                                     [&] { return "pairing not multiplicative in eps on " + phi.str(); });
                    for (const auto &s2 : signs) {
                        SignVector prod = s;
                        for (std::size_t k = 0; k < prod.entries.size(); ++k)
                            prod.entries[k].second *= s2.entries[k].second;
                        o.pair.check(pairing(e, prod) == pairing(e, s) * pairing(e, s2),
                                     [&] { return "pairing not multiplicative in s on " + phi.str(); });
                    }
                    bool in_s = in_component_group(phi, s);
                    o.pair.check((pairing(e * e0, s) == -pairing(e, s)) == !in_s,
                                 [&] { return "eps0 twist law fails on " + phi.str() + " s=" + s.str(); });
                }
                o.pair.check(detected, [&] { return "s=" + s.str() + " pairs trivially with every eps on " + phi.str(); });
            }
            for (const auto &e : chars) {
                bool trivial = std::all_of(e.values.begin(), e.values.end(), [](const auto &kv) { return kv.second == 1; });
                bool detected = trivial || std::any_of(signs.begin(), signs.end(), [&](const SignVector &s) { return pairing(e, s) == -1; });
                o.pair.check(detected, [&] { return "eps=" + e.str() + " pairs trivially with every s on " + phi.str(); });
            }
        }
        return o;
    });
    Tally dims, pair, compat;
    for (const auto &p : parts) {
        dims += p.dims;
        pair += p.pair;
        compat += p.compat;
    }
    Tally all = dims;
    all += pair;
    all += compat;
    return result(8, "endoscopy combinatorics", all,
                  std::to_string(dims.checked) + " sign vectors split additively, " + std::to_string(pair.checked) +
                      " pairing checks, " + std::to_string(compat.checked) + " Jacquet compatibility cases");
}

namespace {

std::vector<CriterionResult> sweep(const Alphabet &alphabet, const VerifyOptions &opt)
{
    using Check = CriterionResult (*)(const Alphabet &, const VerifyOptions &);
    const Check checks[] = {check_bijection,       check_dimension_identity, check_supercuspidal_support,
                            check_jacquet_commutation, check_packet_jacquet, check_lfactor_laws,
                            check_segment_calculus, check_endoscopy};
    std::vector<CriterionResult> out;
    for (std::size_t i = 0; i < std::size(checks); ++i) {
        try {
            out.push_back(checks[i](alphabet, opt));
        } catch (const std::exception &e) {
            out.push_back({static_cast<int>(i + 1), "criterion", false, std::string("threw: ") + e.what()});
        }
    }
    return out;
}

} // namespace

VerifyReport run_verify(const Alphabet &alphabet, const VerifyOptions &opt)
{
    VerifyReport report;
    report.criteria = sweep(alphabet, opt);
    VerifyOptions other = opt;
    other.threads = opt.threads == 1 ? 4 : 1;
    bool same = sweep(alphabet, other) == report.criteria;
    report.criteria.push_back({9, "determinism", same,
                               same ? "criteria 1-8 identical across two thread counts"
                                    : "criteria 1-8 differ between thread counts"});
    return report;
}

} // namespace dsc
