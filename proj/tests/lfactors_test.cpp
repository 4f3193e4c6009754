#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dsc/classify.hpp"
#include "dsc/lfactors.hpp"
#include "dsc/verify.hpp"
#include "helpers.hpp"

using namespace dsc;
using namespace testing;

namespace {

const Alphabet &ext()
{
    static const Alphabet a = extended_alphabet();
    return a;
}

Rho R(const std::string &l) { return ext().get(l); }

} // namespace

TEST_CASE("Rankin-Selberg factors")
{
    CHECK(rs(GLRep::cuspidal(R("chi")), GLRep::cuspidal(R("chi"))).str() == "(1-q^{-s})^{-1}");
    CHECK(rs(GLRep::cuspidal(R("tau3")), GLRep::cuspidal(R("chi"))).is_one());
    CHECK(rs(GLRep::cuspidal(R("tau3")), GLRep::cuspidal(R("tau3v"))).str() == "(1-q^{-s})^{-1}");
    CHECK(rs(GLRep::cuspidal(R("tau3")), GLRep::cuspidal(R("tau3"))).is_one());
    // Single factor: L(s, chi x St(chi,3)) = L(s + 1, chi x chi).
    CHECK(rs(GLRep::cuspidal(R("chi")), GLRep::steinberg(R("chi"), 3)).str() == "(1-q^{-(s+1)})^{-1}");
    CHECK(rs(GLRep::steinberg(R("chi"), 3), GLRep::cuspidal(R("chi"))).str() == "(1-q^{-(s+1)})^{-1}");
    CHECK(rs(GLRep::steinberg(R("chi"), 2), GLRep::steinberg(R("chi"), 2)).str() ==
          "(1-q^{-(s+1)})^{-1}(1-q^{-s})^{-1}");
    CHECK(rs(GLRep::cuspidal(R("chi"), HalfInt::from_doubled(1)), GLRep::cuspidal(R("chi"))).str() ==
          "(1-q^{-(s+1/2)})^{-1}");
}

TEST_CASE("symmetric and exterior squares")
{
    CHECK(wedge2(GLRep::cuspidal(R("chi"))).is_one());
    CHECK(sym2(GLRep::cuspidal(R("chi"))).str() == "(1-q^{-s})^{-1}");
    CHECK(wedge2(GLRep::steinberg(R("chi"), 2)).str() == "(1-q^{-s})^{-1}");
    CHECK(sym2(GLRep::steinberg(R("chi"), 2)).str() == "(1-q^{-(s+1)})^{-1}");
    CHECK(wedge2(GLRep::cuspidal(R("rho2"))).str() == "(1-q^{-s})^{-1}");
    CHECK(sym2(GLRep::cuspidal(R("rho2"))).is_one());
    CHECK(sym2(GLRep::cuspidal(R("tau3"))).is_one());
    CHECK(wedge2(GLRep::cuspidal(R("tau3"))).is_one());
}

TEST_CASE("factorization of L(s, pi x pi) on random representations")
{
    CHECK(factorization_identity_check(GLRep::cuspidal(R("chi"))));
    CHECK(factorization_identity_check(GLRep::steinberg(R("chi"), 2)));
    CHECK(factorization_identity_check(GLRep::cuspidal(R("tau3"))));

    std::mt19937_64 rng(31);
    const auto &syms = ext().symbols();
    for (int i = 0; i < 400; ++i) {
        std::vector<GLPiece> pieces;
        int k = 1 + static_cast<int>(rng() % 3);
        std::int64_t shift = 6;
        for (int p = 0; p < k; ++p) {
            GLPiece piece;
            int blocks = 1 + static_cast<int>(rng() % 2);
            for (int b = 0; b < blocks; ++b)
                piece.tempered.push_back({syms[rng() % syms.size()], 1 + static_cast<int>(rng() % 4)});
            shift -= 1 + static_cast<std::int64_t>(rng() % 3);
            piece.shift = HalfInt::from_doubled(shift);
            pieces.push_back(piece);
        }
        GLRep pi = GLRep::langlands(pieces);
        CHECK_MESSAGE(factorization_identity_check(pi), pi.str());
    }
}

TEST_CASE("poles of L(s, rho x phi) sit at the Jordan blocks")
{
    Parameter p = param(sp(1), "chi:3");
    CHECK(rho_cross_parameter(alphabet().get("chi"), p).has_pole(HalfInt::whole(-1)));
    Parameter q = param(sp(2), "chi:3 xi:1 chi:1");
    LFactor l = rho_cross_parameter(alphabet().get("chi"), q);
    CHECK(l.has_pole(HalfInt::whole(-1)));
    CHECK(l.has_pole(HalfInt{}));
    CHECK(!rho_cross_parameter(alphabet().get("rho2"), q).has_pole(HalfInt{}));
    CHECK(rho_cross_parameter(R("tau3"), q).is_one());
}

TEST_CASE("reducibility points in the three cases")
{
    Parameter q = param(sp(2), "chi:1 chi:3 xi:1");
    auto p = reducibility_point(q, alphabet().get("chi"), true);
    CHECK(p.a_rho == 3);
    CHECK(p.exponent == HalfInt::whole(2));
    CHECK(p.which == ReducibilityCase::max_jord);

    p = reducibility_point(q, alphabet().get("rho2"), true);
    CHECK(p.a_rho == 0);
    CHECK(p.exponent == HalfInt::from_doubled(1));
    CHECK(p.which == ReducibilityCase::opposite_type);

    p = reducibility_point(q, R("tau3"), true);
    CHECK(p.a_rho == -1);
    CHECK(p.exponent == HalfInt{});

    Parameter so = param(so_even(2), "chi:1 chi:3");
    p = reducibility_point(so, alphabet().get("xi"), false);
    CHECK(p.which == ReducibilityCase::none);
    CHECK(p.proviso);
}
