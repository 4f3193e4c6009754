// dsc: command-line front end over the classification library.
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dsc/errors.hpp"
#include "dsc/io.hpp"
#include "dsc/verify.hpp"

using namespace dsc;
using io::json;

namespace {

enum Exit { ok = 0, usage = 1, validation = 2, not_admissible = 3, verify_failed = 4 };

struct Common {
    std::string alphabet_path;
    bool text = false;

    Alphabet alphabet() const
    {
        return alphabet_path.empty() ? Alphabet::test_alphabet() : io::load_alphabet(alphabet_path);
    }
};

struct PacketArgs {
    std::string param_path;
    std::string eps;
    std::string level = "sigma0";
};

void add_common(CLI::App *cmd, Common &c)
{
    cmd->add_option("--alphabet", c.alphabet_path, "Alphabet file (JSON, or TOML by extension)");
    auto *t = cmd->add_flag("--text", c.text, "Human-readable output");
    cmd->add_flag("--json", [&c](std::int64_t) { c.text = false; }, "JSON output (default)")->excludes(t);
}

void add_packet(CLI::App *cmd, PacketArgs &p, bool needs_eps = true)
{
    cmd->add_option("--param", p.param_path, "Parameter JSON")->required();
    cmd->add_option("--eps", p.eps, needs_eps ? "Signs in canonical block order; overrides the file"
                                              : "Signs per block copy in canonical order");
}

Parameter load_parameter(const PacketArgs &p, const Alphabet &a, json *raw = nullptr)
{
    json j = io::read_json_file(p.param_path);
    if (raw)
        *raw = j;
    return io::parameter_from_json(j, a);
}

EpsilonChar load_epsilon(const PacketArgs &p, const Parameter &phi, const json &raw, Level level)
{
    EpsilonChar eps;
    if (!p.eps.empty())
        eps = make_epsilon(phi, io::parse_signs(p.eps));
    else if (raw.contains("epsilon"))
        eps = io::epsilon_from_json(raw.at("epsilon"), phi);
    else
        throw Error(Errc::InvalidEpsilon, "no epsilon given (use --eps or an \"epsilon\" field)");
    validate_epsilon(phi, eps, level);
    return eps;
}

json envelope(json body)
{
    body["schema_version"] = io::schema_version;
    return body;
}

void emit(const Common &c, const json &j, const std::string &text)
{
    if (c.text)
        std::cout << text << "\n";
    else
        std::cout << envelope(j).dump(2) << "\n";
}

GroupType group_from_flags(const std::string &kind, int n, const std::string &eta)
{
    if (n < 0)
        throw Error(Errc::Validation, "--n must be nonnegative");
    return make_group(parse_group_kind(kind), n, parse_quadchar(eta));
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Discrete series combinatorics for classical p-adic groups"};
    app.require_subcommand(1);

    Common common;
    PacketArgs packet;
    std::string group_kind, eta, triple_path, rho_label, xs, gl_text, rep, rep2, signs;
    int n = 0;
    VerifyOptions vopt;

    auto *enumerate_cmd = app.add_subcommand("enumerate", "List every discrete (phi, eps) of a group, one JSON per line");
    add_common(enumerate_cmd, common);
    enumerate_cmd->add_option("--group", group_kind, "Sp, SOodd or SOeven")->required();
    enumerate_cmd->add_option("--n", n, "Rank")->required();
    enumerate_cmd->add_option("--eta", eta, "Comma separated generators of eta (SOeven)");

    auto *classify_cmd = app.add_subcommand("classify", "Admissible triple of (phi, eps)");
    add_common(classify_cmd, common);
    add_packet(classify_cmd, packet);

    auto *support_cmd = app.add_subcommand("support", "Cuspidal support of (phi, eps)");
    add_common(support_cmd, common);
    add_packet(support_cmd, packet);

    auto *build_cmd = app.add_subcommand("build", "Standard module of an admissible triple");
    add_common(build_cmd, common);
    build_cmd->add_option("--triple", triple_path, "Triple JSON as printed by classify")->required();

    auto *jacquet_cmd = app.add_subcommand("jacquet", "Jac_{x_k} ... Jac_{x_1} of GL |x pi(phi, eps)");
    add_common(jacquet_cmd, common);
    add_packet(jacquet_cmd, packet);
    jacquet_cmd->add_option("--level", packet.level, "sigma0 or bar");
    jacquet_cmd->add_option("--rho", rho_label, "Supercuspidal label")->required();
    jacquet_cmd->add_option("--x", xs, "Exponent, or comma separated exponents applied left to right")->required();
    jacquet_cmd->add_option("--gl", gl_text, "GL part, e.g. \"<chi:2..1>,<xi:0>\"");

    auto *lfactor_cmd = app.add_subcommand("lfactor", "Formal L-factors");
    add_common(lfactor_cmd, common);
    lfactor_cmd->add_option("--rep", rep, "GL representation, e.g. \"chi:3+xi@1/2\"");
    lfactor_cmd->add_option("--with", rep2, "Second representation for the Rankin-Selberg factor");
    lfactor_cmd->add_option("--param", packet.param_path, "Parameter JSON for L(s, rho x phi)");
    lfactor_cmd->add_option("--rho", rho_label, "Supercuspidal label for L(s, rho x phi)");

    auto *endo_cmd = app.add_subcommand("endo", "Endoscopic datum of a sign vector");
    add_common(endo_cmd, common);
    endo_cmd->add_option("--param", packet.param_path, "Parameter JSON")->required();
    endo_cmd->add_option("--s", signs, "Signs per block copy, canonical order")->required();

    auto *verify_cmd = app.add_subcommand("verify", "Run the acceptance sweeps");
    add_common(verify_cmd, common);
    verify_cmd->add_option("--max-n", vopt.max_n, "Largest rank swept")->check(CLI::Range(0, 8));
    verify_cmd->add_option("--threads", vopt.threads, "Worker threads")->check(CLI::Range(1, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return usage;
    }

    try {
        const Alphabet alphabet = common.alphabet();

        if (*enumerate_cmd) {
            GroupType g = group_from_flags(group_kind, n, eta);
            for (const auto &[phi, eps] : enumerate(g, alphabet)) {
                if (common.text)
                    std::cout << phi.str() << " " << eps.str() << "\n";
                else
                    std::cout << envelope(io::to_json(phi, eps)).dump() << "\n";
            }
            return ok;
        }

        if (*classify_cmd || *support_cmd || *jacquet_cmd) {
            json raw;
            Parameter phi = load_parameter(packet, alphabet, &raw);
            Level level = parse_level(packet.level);
            EpsilonChar eps = load_epsilon(packet, phi, raw, level);
            if (*classify_cmd) {
                AdmissibleTriple t = triple_of(phi, eps);
                json j{{"triple", io::to_json(t)},
                       {"alternated", is_alternated(t)},
                       {"supercuspidal", is_supercuspidal(phi, eps)}};
                emit(common, j, phi.str() + " " + eps.str() + (is_alternated(t) ? ": alternated" : ": mixed"));
                return ok;
            }
            if (*support_cmd) {
                SupportResult r = cuspidal_support(phi, eps);
                std::string text;
                for (const auto &s : r.segments)
                    text += s.str() + " ";
                emit(common, io::to_json(r), text + "|x " + r.cusp_phi.str() + " " + r.cusp_eps.str());
                return ok;
            }
            Rho rho = alphabet.get(rho_label);
            std::vector<HalfInt> steps;
            for (const auto &x : CLI::detail::split(xs, ','))
                steps.push_back(parse_halfint(CLI::detail::trim_copy(x)));
            Packet p = make_packet(phi, eps, level);
            RepSymbol sym = RepSymbol::induced(io::parse_gl_product(gl_text, alphabet), p);
            VirtualSum v = jac_sequence(steps, rho, sym);
            emit(common, json{{"input", sym.str()}, {"terms", io::to_json(v)}}, v.is_zero() ? "0" : v.str());
            return ok;
        }

        if (*build_cmd) {
            json doc = io::read_json_file(triple_path);
            // Accept classify output as well as a bare triple.
            if (doc.contains("triple"))
                doc = doc.at("triple");
            AdmissibleTriple t = io::triple_from_json(doc, alphabet);
            StandardModule m = construct_standard_module(t);
            json j{{"module", io::to_json(m.module)}, {"text", m.module.str()}, {"subobject", io::to_json(m.phi, m.eps)}};
            emit(common, j, m.module.str() + "  contains pi(" + m.phi.str() + ", " + m.eps.str() + ")");
            return ok;
        }

        if (*lfactor_cmd) {
            json j = json::object();
            std::string text;
            if (!rep.empty()) {
                GLRep pi = io::parse_glrep(rep, alphabet);
                if (!rep2.empty()) {
                    LFactor f = rs(pi, io::parse_glrep(rep2, alphabet));
                    j["rs"] = io::to_json(f);
                    text = "L(s, pi x sigma) = " + f.str();
                } else {
                    LFactor f = rs(pi, pi), s2 = sym2(pi), w2 = wedge2(pi);
                    j["rs"] = io::to_json(f);
                    j["sym2"] = io::to_json(s2);
                    j["wedge2"] = io::to_json(w2);
                    j["factorization_holds"] = factorization_identity_check(pi);
                    text = "L(s, pi x pi) = " + f.str() + "\nL(s, Sym2) = " + s2.str() + "\nL(s, Wedge2) = " + w2.str();
                }
            } else if (!packet.param_path.empty() && !rho_label.empty()) {
                Parameter phi = load_parameter(packet, alphabet);
                Rho rho = alphabet.get(rho_label);
                LFactor f = rho_cross_parameter(rho, phi);
                j["rho_x_phi"] = io::to_json(f);
                text = "L(s, " + rho_label + " x phi) = " + f.str();
                if (phi.is_discrete()) {
                    ReducibilityPoint p = reducibility_point(phi, rho, true);
                    j["reducibility"] = {{"a_rho", p.a_rho}, {"exponent", p.exponent.str()}};
                    text += "\nreducibility at " + p.exponent.str();
                }
            } else {
                std::cerr << "lfactor needs --rep, or --param with --rho\n";
                return usage;
            }
            emit(common, j, text);
            return ok;
        }

        if (*endo_cmd) {
            Parameter phi = load_parameter(packet, alphabet);
            SignVector s = make_signs(phi, io::parse_signs(signs));
            EndoDatum d = endo_datum(phi, s, alphabet);
            json j{{"datum", io::to_json(d)}, {"in_component_group", in_component_group(phi, s)}};
            if (phi.is_discrete())
                j["transfer"] = io::to_json(packet_transfer_sum(phi, s, alphabet));
            emit(common, j, d.str());
            return ok;
        }

        if (*verify_cmd) {
            VerifyReport r = run_verify(alphabet, vopt);
            if (common.text) {
                std::cout << r.text();
            } else {
                json rows = json::array();
                for (const auto &c : r.criteria)
                    rows.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
                std::cout << envelope({{"criteria", rows}, {"max_n", vopt.max_n}, {"passed", r.all_passed()}}).dump(2) << "\n";
            }
            return r.all_passed() ? ok : verify_failed;
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::NotAdmissible ? not_admissible : validation;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return validation;
    }
    return usage;
}
