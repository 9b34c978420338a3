/* Command-line front end: exact Mac Lane valuation computations, regular
 * resolutions of models of P^1, divisor profiles, and the full
 * conductor-discriminant verdict. */

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "maclane/cd.hpp"
#include "maclane/divisor.hpp"
#include "maclane/parse.hpp"
#include "maclane/resolution.hpp"
#include "maclane/valuation.hpp"

using namespace maclane;

namespace {

struct Options {
    std::uint64_t p = 0;
    std::uint64_t seed = 0;
    unsigned precision = 4096;
    std::string format = "text"; // text | json | dot
    std::string config;
};

void load_config(Options& opt) {
    if (opt.config.empty()) return;
    std::ifstream in(opt.config);
    if (!in) throw engine_error("cannot open config file " + opt.config);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
            return s;
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "p") opt.p = std::stoull(value);
        else if (key == "seed") opt.seed = std::stoull(value);
        else if (key == "precision") opt.precision = static_cast<unsigned>(std::stoul(value));
        else if (key == "format") opt.format = value;
    }
}

BaseField make_base(const Options& opt) {
    if (opt.p == 0) throw engine_error("a prime must be given with -p or in the config file");
    return BaseField(opt.p, opt.seed, opt.precision);
}

nlohmann::json model_report(const Model& m, const DivisorProfile* prof) {
    nlohmann::json j = nlohmann::json::parse(model_json(m));
    if (prof) {
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& c : prof->components) {
            nlohmann::json e;
            e["valuation"] = c.valuation.str();
            e["multiplicity"] = c.multiplicity.get_str();
            e["ord"] = c.ord.get_str();
            e["parity"] = c.even ? "even" : "odd";
            comps.push_back(e);
        }
        j["divisor"] = comps;
        j["n_even"] = prof->n_even;
        j["n_odd"] = prof->n_odd;
    }
    return j;
}

void print_model_text(const Model& m, const DivisorProfile* prof) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::cout << m.valuations()[i].str() << "  mult=" << m.multiplicity(i).get_str();
        if (prof) {
            std::cout << "  ord=" << prof->components[i].ord.get_str() << " ("
                      << (prof->components[i].even ? "even" : "odd") << ")";
        }
        std::cout << "\n";
    }
}

FactoredInput parse_factors_json(const std::string& text, const BaseField& base) {
    nlohmann::json j = nlohmann::json::parse(text);
    FactoredInput input;
    input.b = j.value("b", 0);
    for (const auto& e : j.at("factors")) {
        FactorSpec fs;
        fs.poly = parse_poly(e.at("poly").get<std::string>(), base.p);
        std::string strat = e.value("strategy", "automatic");
        if (strat == "automatic") fs.strategy = DeltaStrategy::automatic;
        else if (strat == "tame") fs.strategy = DeltaStrategy::tame;
        else if (strat == "eisenstein") fs.strategy = DeltaStrategy::eisenstein;
        else if (strat == "radical") fs.strategy = DeltaStrategy::radical;
        else if (strat == "generator") {
            fs.strategy = DeltaStrategy::generator;
            fs.generator = parse_poly(e.at("generator").get<std::string>(), base.p);
        } else {
            throw engine_error("unknown strategy '" + strat + "'");
        }
        input.factors.push_back(std::move(fs));
    }
    return input;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Mac Lane valuation engine for models of P^1 and the "
                 "conductor-discriminant inequality"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand name

    Options opt;
    app.add_option("-p,--prime", opt.p, "odd base prime");
    app.add_option("--seed", opt.seed, "seed for the probabilistic residue factorization");
    app.add_option("--precision", opt.precision, "modular precision exponent cap");
    app.add_option("--format", opt.format, "output format: text, json or dot");
    app.add_option("--config", opt.config, "key=value config file (p, seed, precision, format)");

    std::string expr, val_json, against, factors_json, model_arg;
    bool with_v0 = false;
    int b_flag = -1;

    auto* vf = app.add_subcommand("vf", "the Mac Lane valuation attached to a polynomial");
    vf->add_option("expr", expr)->required();

    auto* ev = app.add_subcommand("eval", "evaluate a valuation at a polynomial");
    ev->add_option("valuation", val_json, "valuation JSON")->required();
    ev->add_option("expr", against)->required();

    auto* np = app.add_subcommand("npath", "shortest N-path between two rationals");
    std::string np_a, np_b;
    long np_n = 1;
    np->add_option("a", np_a)->required();
    np->add_option("a_prime", np_b)->required();
    np->add_option("N", np_n)->required();

    auto* rs = app.add_subcommand("resolve", "minimal regular resolution of a valuation's model");
    rs->add_option("valuation", val_json, "valuation JSON")->required();
    rs->add_flag("--with-v0", with_v0, "resolve the {v0, v}-model instead");

    auto* dv = app.add_subcommand("divisor", "divisor profile of f on its Y_f model");
    dv->add_option("expr", expr);
    dv->add_option("--factors", factors_json, "factored input JSON");
    dv->add_option("--model", model_arg, "profile on an explicit model instead");

    auto* cd = app.add_subcommand("cd-check", "conductor-discriminant verdict");
    cd->add_option("expr", expr);
    cd->add_option("--factors", factors_json, "factored input JSON");
    cd->add_option("-b", b_flag, "power of p on the leading coefficient (with --factors)");

    auto* bd = app.add_subcommand("bounds", "count bounds and classification for irreducible f");
    bd->add_option("expr", expr)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        load_config(opt);
        BaseField base = make_base(opt);

        if (vf->parsed()) {
            InductiveValuation v = compute_vf(parse_poly(expr, base.p), base);
            if (opt.format == "json") {
                nlohmann::json j;
                j["schema"] = 1;
                j["printed"] = v.str();
                j["stages"] = nlohmann::json::parse(valuation_json(v));
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << v.str() << "\n";
            }
            return 0;
        }
        if (ev->parsed()) {
            InductiveValuation v = valuation_from_json(val_json, base);
            Value res = v.evaluate(parse_poly(against, base.p));
            std::cout << res.str() << "\n";
            return 0;
        }
        if (np->parsed()) {
            NPath path = shortest_npath(parse_rational(np_a), parse_rational(np_b), np_n);
            nlohmann::json j = nlohmann::json::array();
            for (const auto& e : path.entries) j.push_back(e.get_str());
            std::cout << j.dump() << "\n";
            return 0;
        }
        if (rs->parsed()) {
            InductiveValuation v = valuation_from_json(val_json, base);
            Model m = with_v0 ? resolve_with_v0(v) : resolve(v);
            if (opt.format == "dot") std::cout << model_dot(m);
            else if (opt.format == "json") std::cout << model_json(m) << "\n";
            else print_model_text(m, nullptr);
            return 0;
        }
        if (dv->parsed()) {
            FactoredPoly fp;
            DivisorProfile prof;
            Model m(base);
            if (!factors_json.empty()) {
                FactoredInput input = parse_factors_json(factors_json, base);
                fp.b = input.b;
                for (const auto& f : input.factors) fp.factors.push_back(f.poly);
                PipelineResult pr = run_pipeline(fp, base);
                m = pr.model;
                prof = pr.profile;
            } else if (!model_arg.empty()) {
                m = model_from_json(model_arg, base);
                Poly f = parse_poly(expr, base.p);
                prof = divisor_profile(f, m);
            } else {
                Poly f = parse_poly(expr, base.p);
                NormalizedInput norm = normalize_input(f, base);
                fp.b = norm.b;
                fp.factors.push_back(norm.monic);
                PipelineResult pr = run_pipeline(fp, base);
                m = pr.model;
                prof = pr.profile;
            }
            if (opt.format == "dot") std::cout << model_dot(m, &prof);
            else if (opt.format == "json") std::cout << model_report(m, &prof).dump(2) << "\n";
            else print_model_text(m, &prof);
            return 0;
        }
        if (cd->parsed()) {
            CDReport rep;
            if (!factors_json.empty()) {
                FactoredInput input = parse_factors_json(factors_json, base);
                if (b_flag >= 0) input.b = b_flag;
                rep = cd_verify(input, base);
            } else {
                rep = cd_verify(parse_poly(expr, base.p), base);
            }
            if (opt.format == "json") {
                std::cout << rep.json() << "\n";
            } else {
                std::cout << "status: " << rep.status << " (" << rep.status_detail << ")\n";
                if (rep.status != 2) {
                    std::cout << "db = " << rep.db.get_str() << ", N_even = " << rep.n_even
                              << ", -Art = " << rep.artin_neg.get_str() << ", disc' = "
                              << (rep.delta_prime ? rep.delta_prime->get_str() : "0") << "\n";
                    std::cout << (rep.inequality_ok
                                      ? (rep.strict ? "inequality holds strictly"
                                                    : "inequality holds with equality")
                                      : "inequality VIOLATED")
                              << "\n";
                }
            }
            return rep.status;
        }
        if (bd->parsed()) {
            Poly f = parse_poly(expr, base.p);
            InductiveValuation v = compute_vf(f, base);
            CountBounds cb = count_bounds(v);
            FactorSpec fs{f, DeltaStrategy::automatic, std::nullopt};
            nlohmann::json j;
            j["schema"] = 1;
            j["vf"] = v.str();
            j["B"] = cb.B.get_str();
            j["B0"] = cb.B0.get_str();
            j["resolve_size"] = cb.actual_resolve;
            j["resolve_with_v0_size"] = cb.actual_resolve_v0;
            j["operative_bound"] = cb.operative.get_str();
            j["easier_B0_bound"] = cb.easier_B0.get_str();
            nlohmann::json stages = nlohmann::json::array();
            for (const auto& sc : cb.stages) {
                nlohmann::json js;
                js["v_path"] = sc.v_path;
                js["w_path"] = sc.w_path;
                js["bound"] = sc.bound.get_str();
                js["holds"] = sc.holds;
                stages.push_back(js);
            }
            j["stages"] = stages;
            j["all_bounds_hold"] = cb.all_hold;
            try {
                DbClassification cls = db_bound_classify(fs, base);
                j["classification"] = cls.name;
                j["db"] = cls.db.get_str();
                j["classification_bound"] = cls.bound.get_str();
                j["classification_holds"] = cls.holds;
            } catch (const strategy_inapplicable& e) {
                j["classification"] = std::string("unavailable: ") + e.what();
            }
            std::cout << j.dump(2) << "\n";
            return cb.all_hold ? 0 : 3;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const engine_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
