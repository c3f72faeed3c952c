#include <tatek/json_io.hpp>
#include <tatek/verify.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace tatek;

i64 default_order() {
    if (const char* env = std::getenv("TATE_KAPPA_ORDER")) {
        try {
            return std::stoll(env);
        } catch (...) {
            // fall through to the built-in default on a malformed value
        }
    }
    return 10;
}

std::string csv(const IntVec& v) {
    std::ostringstream os;
    for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::string qs_tsv(const QSeries& s) {
    // min_exp:coeffs joined by commas
    std::ostringstream os;
    os << s.min_exp() << ":";
    for (std::size_t i = 0; i < s.coeffs().size(); ++i)
        os << (i ? "," : "") << s.coeffs()[i].str();
    return os.str();
}

struct Options {
    std::string group;
    std::string torus_form;  // JSON rows
    std::string weight;      // JSON array
    i64 level = 0;
    i64 order = 10;
    i64 window = 8;
    bool shifted = false;
    std::string format = "json";
    std::uint64_t seed = 1;
    int jobs = 1;
};

Twisting build_twisting(const Options& opt) {
    if (!opt.torus_form.empty())
        return torus_twisting(mat_from_json(Json::parse(opt.torus_form)));
    return level_twisting(load_root_datum(opt.group), opt.level);
}

std::string group_name(const Options& opt) {
    return opt.torus_form.empty() ? opt.group : "torus" + opt.torus_form;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_orbits(const Options& opt) {
    Twisting tw = build_twisting(opt);
    std::vector<AffineOrbitRep> orbits = affine_orbit_reps(tw);
    if (opt.format == "tsv") {
        std::cout << "rep\tstabilizer_order\tregular\n";
        for (const AffineOrbitRep& r : orbits)
            std::cout << csv(r.rep) << "\t" << r.stabilizer_order << "\t"
                      << (r.regular ? "true" : "false") << "\n";
        if (opt.shifted && tw.is_root_datum()) {
            std::cout << "# negative basis\n";
            for (const AffineOrbitRep& r : negative_level_basis(tw.root_datum(), opt.level))
                std::cout << csv(r.rep) << "\t" << r.stabilizer_order << "\t"
                          << (r.regular ? "true" : "false") << "\n";
        }
        return 0;
    }
    Json out = orbits_to_json(group_name(opt), opt.level, orbits);
    if (opt.shifted && tw.is_root_datum()) {
        Json neg = Json::array();
        for (const AffineOrbitRep& r : negative_level_basis(tw.root_datum(), opt.level)) {
            Json o;
            o["rep"] = vec_to_json(r.rep);
            o["stabilizer_order"] = r.stabilizer_order;
            o["regular"] = r.regular;
            neg.push_back(o);
        }
        out["negative_basis"] = neg;
    }
    emit(out);
    return 0;
}

int cmd_theta(const Options& opt) {
    Twisting tw = build_twisting(opt);
    std::vector<WeightedQSeries> basis = theta_basis(tw, opt.order, opt.jobs);
    std::vector<bool> verdicts;
    for (const WeightedQSeries& f : basis) {
        bool ok = true;
        for (Eigen::Index i = 0; i < tw.rank(); ++i) {
            Coweight p = IntVec::Zero(tw.rank());
            p[i] = 1;
            ok = ok && check_theta_invariance(tw, f, p);
        }
        verdicts.push_back(ok);
    }
    if (opt.format == "tsv") {
        std::cout << "series\tq\tweight\tcoeff\n";
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (const auto& [n, layer] : basis[i].layers())
                for (const auto& [w, c] : layer)
                    std::cout << i << "\t" << n << "\t" << csv(w) << "\t" << c.str() << "\n";
        return 0;
    }
    Json out;
    out["group"] = group_name(opt);
    out["order"] = opt.order;
    Json arr = Json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Json s = weighted_to_json(basis[i]);
        s["invariant"] = static_cast<bool>(verdicts[i]);
        arr.push_back(s);
    }
    out["series"] = arr;
    emit(out);
    return 0;
}

int cmd_character(const Options& opt) {
    RootDatum rd = load_root_datum(opt.group);
    Json wj = Json::parse(opt.weight);
    Weight lam(static_cast<Eigen::Index>(wj.size()));
    for (Eigen::Index i = 0; i < lam.size(); ++i) lam[i] = wj[i].get<i64>();
    KacCharacter ch = kac_character(rd, lam, opt.level, opt.order);
    if (opt.format == "tsv") {
        std::cout << "q\tweight\tmult\n";
        for (const auto& [n, layer] : ch.ch.layers())
            for (const auto& [w, c] : layer)
                std::cout << n << "\t" << csv(w) << "\t" << c.str() << "\n";
        return 0;
    }
    emit(character_to_json(opt.group, ch, opt.order));
    return 0;
}

int cmd_pair(const Options& opt) {
    RootDatum rd = load_root_datum(opt.group);
    DualityPairing dp = duality_pairing(rd, opt.level, opt.order);
    if (opt.format == "tsv") {
        std::cout << "positive\tnegative\n";
        for (const auto& [a, b] : dp.pairs)
            std::cout << csv(a.rep) << "\t" << csv(b.rep) << "\n";
        std::cout << "# det\t" << qs_tsv(dp.det) << "\n";
        return 0;
    }
    Json out;
    out["group"] = opt.group;
    out["level"] = opt.level;
    Json pairs = Json::array();
    for (const auto& [a, b] : dp.pairs) {
        Json p;
        p["positive"] = vec_to_json(a.rep);
        p["negative"] = vec_to_json(b.rep);
        pairs.push_back(p);
    }
    out["pairs"] = pairs;
    Json rows = Json::array();
    for (const auto& row : dp.matrix) {
        Json r = Json::array();
        for (const QSeries& e : row) r.push_back(qseries_to_json(e));
        rows.push_back(r);
    }
    out["matrix"] = rows;
    out["det"] = qseries_to_json(dp.det);
    emit(out);
    return 0;
}

int cmd_verify(const Options& opt) {
    VerifyOptions vo;
    vo.order = opt.order;
    vo.seed = opt.seed;
    vo.jobs = opt.jobs;
    std::vector<CheckResult> results = run_verify(vo);
    bool all = true;
    for (const CheckResult& r : results) {
        all = all && r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name;
        if (!r.pass && !r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
    }
    std::cout << (all ? "all checks passed" : "FAILURES present") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice/character computations for the Tate-curve torus model"};
    app.require_subcommand(1);

    Options opt;
    opt.order = default_order();

    auto add_common = [&](CLI::App* sub, bool needs_order = true) {
        if (needs_order) sub->add_option("--order", opt.order, "truncation order");
        sub->add_option("--format", opt.format, "json or tsv")
            ->check(CLI::IsMember({"json", "tsv"}));
        sub->add_option("--jobs", opt.jobs, "worker count")->check(CLI::PositiveNumber);
    };

    CLI::App* orbits = app.add_subcommand("orbits", "affine orbit representatives");
    orbits->add_option("--group", opt.group, "type label (A1..A4, C2, G2)");
    orbits->add_option("--level", opt.level, "positive level");
    orbits->add_option("--torus", opt.torus_form, "torus form as JSON rows");
    orbits->add_flag("--shifted", opt.shifted, "also emit the negative-level basis");
    add_common(orbits, false);

    CLI::App* theta = app.add_subcommand("theta", "theta-function basis");
    theta->add_option("--torus", opt.torus_form, "torus form as JSON rows");
    theta->add_option("--group", opt.group, "type label");
    theta->add_option("--level", opt.level, "positive level");
    add_common(theta);

    CLI::App* character = app.add_subcommand("character", "graded character");
    character->add_option("--group", opt.group, "type label")->required();
    character->add_option("--level", opt.level, "positive level")->required();
    character->add_option("--weight", opt.weight, "highest weight as JSON array")->required();
    add_common(character);

    CLI::App* pair = app.add_subcommand("pair", "level-shift duality pairing");
    pair->add_option("--group", opt.group, "type label")->required();
    pair->add_option("--level", opt.level, "positive level")->required();
    add_common(pair);

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_option("--seed", opt.seed, "random seed");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(orbits)) return cmd_orbits(opt);
        if (app.got_subcommand(theta)) return cmd_theta(opt);
        if (app.got_subcommand(character)) return cmd_character(opt);
        if (app.got_subcommand(pair)) return cmd_pair(opt);
        return cmd_verify(opt);
    } catch (const tatek::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
