#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "dsc/segments.hpp"
#include "helpers.hpp"

using namespace dsc;
using namespace testing;

namespace {

Segment seg(const std::string &label, int from, int to)
{
    return Segment::between(alphabet().get(label), HalfInt::whole(from), HalfInt::whole(to));
}

// Linking straight from the definition on explicit integer sets.
bool linked_by_sets(const std::vector<int> &a, const std::vector<int> &b)
{
    std::set<int> sa(a.begin(), a.end()), sb(b.begin(), b.end()), u = sa;
    u.insert(sb.begin(), sb.end());
    bool a_in_b = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
    bool b_in_a = std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
    if (sa.empty() || sb.empty() || a_in_b || b_in_a)
        return false;
    for (int x = *u.begin(); x <= *u.rbegin(); ++x)
        if (!u.count(x))
            return false;
    return true;
}

std::vector<int> ints(const Segment &s)
{
    std::vector<int> out;
    for (HalfInt h : s.entries())
        out.push_back(static_cast<int>(h.doubled / 2));
    return out;
}

} // namespace

TEST_CASE("segment construction and printing")
{
    Segment s = seg("chi", 2, -1);
    CHECK(s.str() == "<chi:2..-1>");
    CHECK(s.len == 4);
    CHECK(s.to() == HalfInt::whole(-1));
    CHECK(s.drop_first().str() == "<chi:1..-1>");
    CHECK(s.drop_last().str() == "<chi:2..0>");
    CHECK(seg("chi", 1, 1).str() == "<chi:1>");
    CHECK(seg("chi", 1, 1).drop_first().str() == "<chi:>");
    CHECK(Segment::steinberg(alphabet().get("xi"), 4).str() == "<xi:3/2..-3/2>");
    CHECK(Segment::steinberg(alphabet().get("xi"), 2, HalfInt::whole(1)).str() == "<xi:3/2..1/2>");
    CHECK(seg("chi", 0, 2).dual(alphabet().get("chi")).str() == "<chi:0..-2>");
    CHECK(error_of([] { Segment::between(alphabet().get("chi"), HalfInt::whole(1), HalfInt::from_doubled(1)); }) ==
          Errc::Validation);
}

TEST_CASE("linking examples")
{
    CHECK(is_linked(seg("chi", 2, 1), seg("chi", 1, 0)));
    CHECK(!is_linked(seg("chi", 1, 0), seg("chi", 2, -1)));
    CHECK(!is_linked(seg("chi", 3, 2), seg("chi", 0, -1)));
    CHECK(error_of([] { is_linked(seg("chi", 2, 1), seg("chi", 0, 1)); }) == Errc::MixedMonotonicity);

    CHECK(product_reducible(seg("chi", 2, 1), seg("chi", 1, 0)));
    CHECK(!product_reducible(seg("chi", 2, 1), seg("xi", 1, 0)));
    CHECK(!product_reducible(seg("chi", 1, 0), seg("chi", 1, 0)));
}

TEST_CASE("linking agrees with the set definition on random segments")
{
    std::mt19937_64 rng(21);
    auto draw = [&](bool increasing) {
        int from = static_cast<int>(rng() % 9) - 4;
        int len = 1 + static_cast<int>(rng() % 4);
        return seg("chi", from, increasing ? from + len - 1 : from - len + 1);
    };
    for (int i = 0; i < 2000; ++i) {
        bool inc = rng() % 2;
        Segment a = draw(inc), b = draw(inc);
        bool l = is_linked(a, b);
        CHECK(l == linked_by_sets(ints(a), ints(b)));
        CHECK(l == is_linked(b, a));
        CHECK(l == is_linked(a.shifted(HalfInt::whole(3)), b.shifted(HalfInt::whole(3))));
    }
}

TEST_CASE("generalized segments")
{
    Rho chi = alphabet().get("chi");
    GenSegment g1 = GenSegment::from_segment(seg("chi", 2, 1));
    GenSegment g2 = GenSegment::from_segment(seg("chi", 1, 0));
    CHECK(gen_is_linked(g1, g2));
    CHECK(!gen_is_linked(g1, g1));
    CHECK(gen_is_linked(speh_matrix(chi, 2, 2).shifted(HalfInt::whole(1)), speh_matrix(chi, 2, 2)));

    CHECK(speh_matrix(chi, 2, 2).str() == "<chi:[0,-1|1,0]>");
    CHECK(speh_matrix(chi, 3, 1).str() == "<chi:[1,0,-1]>");
    CHECK(speh_matrix(chi, 1, 3).str() == "<chi:[-1|0|1]>");
    CHECK(speh_matrix(chi, 2, 3).transposed().str() == "<chi:[-1/2,1/2,3/2|-3/2,-1/2,1/2]>");
    CHECK(speh_matrix(chi, 2, 2).kind() == GenKind::rows_decreasing);
    CHECK(speh_matrix(chi, 2, 2).transposed().kind() == GenKind::rows_increasing);
    CHECK(speh_matrix(chi, 1, 1).kind() == GenKind::point);
    CHECK(error_of([&] { GenSegment::make(chi, {{HalfInt::whole(0), HalfInt::whole(2)}}); }) == Errc::Validation);

    GenSegment other = GenSegment::from_segment(seg("xi", 1, 0));
    CHECK(!gen_is_linked(g1, other));
    CHECK(gen_product_irreducible(g1, other));
    CHECK(gen_product_irreducible(g1, g1));
    GenSegment p = speh_matrix(chi, 1, 1);
    CHECK(!gen_product_irreducible(p.shifted(HalfInt::whole(1)), p));
}

TEST_CASE("Speh pair reducibility inequality")
{
    const ScuspSymbol &chi = *alphabet().get("chi");
    const ScuspSymbol &xi = *alphabet().get("xi");
    CHECK(speh_pair_reducible(chi, 1, 1, chi, 1, 1, HalfInt::whole(1)));
    CHECK(!speh_pair_reducible(chi, 1, 1, chi, 1, 1, HalfInt::from_doubled(1)));
    CHECK(!speh_pair_reducible(chi, 1, 1, xi, 1, 1, HalfInt::whole(1)));
    CHECK(!speh_pair_reducible(chi, 1, 1, chi, 1, 1, HalfInt::whole(2)));
    CHECK(speh_pair_reducible(chi, 2, 2, chi, 2, 2, HalfInt::whole(3)));
    CHECK(!speh_pair_reducible(chi, 2, 2, chi, 2, 2, HalfInt::whole(4)));
    CHECK(!speh_pair_reducible(chi, 3, 1, chi, 1, 1, HalfInt::whole(1))); // |1| + 0 < 1 fails
    CHECK(speh_pair_reducible(chi, 3, 1, chi, 1, 1, HalfInt::whole(2)));
}

TEST_CASE("generalized linking is symmetric and transpose-stable on random grids")
{
    std::mt19937_64 rng(22);
    Rho chi = alphabet().get("chi");
    for (int i = 0; i < 3000; ++i) {
        GenSegment g1 = speh_matrix(chi, 1 + rng() % 4, 1 + rng() % 4)
                            .shifted(HalfInt::from_doubled(static_cast<std::int64_t>(rng() % 13) - 6));
        GenSegment g2 = speh_matrix(chi, 1 + rng() % 4, 1 + rng() % 4)
                            .shifted(HalfInt::from_doubled(static_cast<std::int64_t>(rng() % 13) - 6));
        if (rng() % 2) {
            g1 = g1.transposed();
            g2 = g2.transposed();
        }
        bool l = gen_is_linked(g1, g2);
        CHECK(l == gen_is_linked(g2, g1));
        CHECK(l == gen_is_linked(g1.transposed(), g2.transposed()));
        CHECK(gen_product_irreducible(g1, g2) == !l);
    }
}
