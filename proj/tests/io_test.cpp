#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsc/io.hpp"
#include "helpers.hpp"

using namespace dsc;
using namespace testing;
using nlohmann::json;

TEST_CASE("alphabets round-trip through json and toml")
{
    json j = io::to_json(alphabet());
    Alphabet back = io::alphabet_from_json(j);
    CHECK(io::to_json(back) == j);
    CHECK(back.get("xi")->central_char.gens.count("u") == 1);

    Alphabet t = io::alphabet_from_toml(R"(
[[symbols]]
label = "chi"

[[symbols]]
label = "rho2"
dim = 2
sd_type = "symplectic"
)");
    CHECK(t.symbols().size() == 2);
    CHECK(t.get("rho2")->dim == 2);
    CHECK(t.get("rho2")->sd_type == SdType::symplectic);
    CHECK(t.get("chi")->sd_type == SdType::orthogonal);

    CHECK(error_of([] { io::alphabet_from_toml("[[symbols]\nlabel="); }) == Errc::Validation);
    CHECK(error_of([] { io::alphabet_from_json(json::object({{"symbols", 3}})); }) == Errc::Validation);
}

TEST_CASE("parameters, characters and triples round-trip")
{
    for (int n = 0; n <= 3; ++n)
        for (const auto &g : all_groups(n))
            for (const auto &[phi, e] : enumerate(g, alphabet())) {
                json pj = io::to_json(phi, e);
                Parameter phi2 = io::parameter_from_json(pj, alphabet());
                CHECK(phi2 == phi);
                CHECK(io::epsilon_from_json(pj.at("epsilon"), phi2) == e);

                AdmissibleTriple t = triple_of(phi, e);
                json tj = io::to_json(t);
                CHECK(io::triple_from_json(json::parse(tj.dump()), alphabet()) == t);
            }
}

TEST_CASE("frozen triple document")
{
    Parameter so6 = param(so_even(3), "chi:1 chi:5");
    json expected = json::parse(R"({"cusp": {"blocks": [], "epsilon": {}, "group": {"eta": [], "kind": "SOeven", "n": 0}},
        "delta_pair": [{"hi": "chi:5", "lo": "chi:1", "value": 1}], "delta_single": {"chi:1": -1, "chi:5": -1},
        "group": {"eta": [], "kind": "SOeven", "n": 3}, "jord": [{"a": 1, "rho": "chi"}, {"a": 5, "rho": "chi"}]})");
    CHECK(io::to_json(triple_of(so6, eps(so6, "-,-"))) == expected);
}

TEST_CASE("text parsers")
{
    CHECK(io::parse_segment("<chi:2..-1>", alphabet()).str() == "<chi:2..-1>");
    CHECK(io::parse_segment("<xi:1/2>", alphabet()).len == 1);
    CHECK(io::parse_segment("<chi:>", alphabet()).is_empty());
    CHECK(io::parse_gl_product("<chi:1>, <xi:3/2..1/2>", alphabet()).size() == 2);
    CHECK(io::parse_signs("+,-, +") == std::vector<int>{1, -1, 1});

    GLRep r = io::parse_glrep("chi:3+xi@1/2, rho2:2", alphabet());
    CHECK(io::parse_glrep(r.str(), alphabet()).str() == r.str());

    CHECK(error_of([] { io::parse_segment("chi:2..1", alphabet()); }) == Errc::Validation);
    CHECK(error_of([] { io::parse_segment("<chi:2..1/2>", alphabet()); }) == Errc::Validation);
    CHECK(error_of([] { io::parse_signs("+,0"); }) == Errc::Validation);
    CHECK(error_of([] { io::parse_segment("<zeta:1>", alphabet()); }).has_value());
}

TEST_CASE("malformed documents")
{
    Parameter phi = param(sp(1), "chi:3");
    json pj = io::to_json(phi);
    pj["blocks"][0]["a"] = 0;
    CHECK(error_of([&] { io::parameter_from_json(pj, alphabet()); }).has_value());
    CHECK(error_of([&] { io::epsilon_from_json(json::object({{"chi:5", 1}}), phi); }).has_value());
    CHECK(error_of([&] { io::group_from_json(json::object({{"kind", "GL"}, {"n", 1}})); }) == Errc::Validation);
}
