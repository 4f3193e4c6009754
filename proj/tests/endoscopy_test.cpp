#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsc/classify.hpp"
#include "dsc/endoscopy.hpp"
#include "helpers.hpp"

using namespace dsc;
using namespace testing;

TEST_CASE("endoscopic data")
{
    Parameter phi = param(sp(3), "chi:1 chi:5 xi:1");
    SignVector s = make_signs(phi, {-1, 1, -1});
    CHECK(s.str() == "-,+,-");
    CHECK(in_component_group(phi, s));
    EndoDatum d = endo_datum(phi, s, alphabet());
    CHECK(d.g1 == sp(2));
    CHECK(d.phi1 == param(sp(2), "xi:5"));
    CHECK(d.g2 == so_even(1, "u"));
    CHECK(d.phi2 == param(so_even(1, "u"), "chi:1 xi:1"));
    CHECK(!d.twisted);
    CHECK(d.str() == "Sp(4) x SO(2,u): Sp(4) {(xi,5)} + SO(2,u) {(chi,1), (xi,1)}");

    // s and -s give the same datum for Sp.
    CHECK(endo_datum(phi, make_signs(phi, {1, -1, 1}), alphabet()) == d);

    d = endo_datum(phi, make_signs(phi, {1, 1, 1}), alphabet());
    CHECK(d.phi1 == phi);
    CHECK(d.g2 == so_even(0));
    CHECK(d.phi2.blocks().empty());
}

TEST_CASE("odd -1 part on an even orthogonal group is twisted")
{
    Parameter so = param(so_even(3, "u"), "chi:1 xi:5");
    SignVector t = make_signs(so, {-1, 1});
    CHECK(!in_component_group(so, t));
    EndoDatum d = endo_datum(so, t, alphabet());
    CHECK(d.twisted);
    CHECK(d.g1.kind == GroupKind::Sp);
    CHECK(d.g2.kind == GroupKind::Sp);
    CHECK(d.str() == "Sp(4) x Sp(0) (twisted): Sp(4) {(chi,5)} + Sp(0) {(chi,1)}");
    CHECK(in_component_group(so, make_signs(so, {-1, -1})));
}

TEST_CASE("pairing and transfer sums")
{
    Parameter phi = param(sp(3), "chi:1 chi:5 xi:1");
    SignVector s = make_signs(phi, {-1, 1, -1});
    CHECK(pairing(eps(phi, "-,+,-"), s) == 1);
    CHECK(pairing(eps(phi, "-,-,+"), s) == -1);
    CHECK(pairing(eps(phi, "+,+,+"), s) == 1);
    CHECK(packet_transfer_sum(phi, s, alphabet()).str() ==
          "-1*pkt(Sp(6) {(chi,1), (chi,5), (xi,1)}; -,-,+; bar) + pkt(Sp(6) {(chi,1), (chi,5), (xi,1)}; -,+,-; bar) + "
          "-1*pkt(Sp(6) {(chi,1), (chi,5), (xi,1)}; +,-,-; bar) + pkt(Sp(6) {(chi,1), (chi,5), (xi,1)}; +,+,+; bar)");

    Parameter other = param(sp(3), "chi:3 xi:1 xi:3");
    CHECK(error_of([&] { pairing(eps(other, "+,+,+"), s); }) == Errc::BlockSetMismatch);
    CHECK(error_of([&] { make_signs(phi, {1, 1}); }) == Errc::SignVectorNotInComponentGroup);
    CHECK(error_of([&] { endo_datum(phi, make_signs(other, {1, 1, 1}), alphabet()); }) ==
          Errc::SignVectorNotInComponentGroup);
}

TEST_CASE("doubled blocks carry one sign per copy")
{
    Parameter d = param(sp(2), "chi:1 chi:1 xi:3");
    auto all = all_sign_vectors(d);
    CHECK(all.size() == 6); // three sign multisets on the doubled block, two on xi:3
    CHECK(all[1].str() == "-,-,+");
    CHECK(error_of([&] { (void)all[0].at(blk("chi", 1)); }) == Errc::BlockSetMismatch);
    CHECK(all[0].at(blk("xi", 3)) == -1);
}

TEST_CASE("endoscopy laws over enumerated parameters")
{
    int compared = 0;
    for (int n = 0; n <= 3; ++n)
        for (const auto &g : all_groups(n))
            for (const Parameter &phi : enumerate_parameters(g, alphabet())) {
                for (const SignVector &s : all_sign_vectors(phi)) {
                    CAPTURE(phi.str());
                    CAPTURE(s.str());
                    EndoDatum d = endo_datum(phi, s, alphabet());
                    CHECK(d.phi1.total_dim() + d.phi2.total_dim() == phi.total_dim());
                    VirtualSum sum = packet_transfer_sum(phi, s, alphabet());
                    for (const auto &[sym, c] : sum.terms())
                        CHECK((c == 1 || c == -1));
                    for (const auto &rho : alphabet().symbols())
                        for (int a = 3; a <= g.N(); ++a) {
                            HalfInt x = HalfInt::from_doubled(a - 1);
                            CHECK(jacquet_endoscopy_compatible(phi, s, rho, x, alphabet()));
                            compared += jacquet_rewrite(phi, s, rho, x, alphabet()).has_value();
                        }
                }
            }
    CHECK(compared > 50);
}
