// hermrank: batch CLI over the exact orthogonal-pair toolkit.
//
// Exit codes: 0 = positive verdict / artifact produced, 1 = negative domain
// verdict (not orthogonal, not rank one, ...), 2 = usage or parse error.

#include <CLI11.hpp>
#include <hermrank/hermrank.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace hermrank;
using nlohmann::json;

struct Options {
    std::string emit = "json";
    std::string out;
};

void deliver(const Options& opt, const json& j, const std::string& text) {
    if (!opt.out.empty()) io::save_file(opt.out, j);
    if (opt.emit == "text") {
        std::cout << text << "\n";
    } else if (opt.out.empty()) {
        std::cout << j.dump(2) << "\n";
    }
}

PolyMapPair load_pair(const std::string& path) { return io::pair_from_json(io::load_file(path)); }

BiForm load_biform(const std::string& path) {
    const json j = io::load_file(path);
    if (!j.is_object() || !j.contains("nvars"))
        throw parse_error("biform file needs an object with 'nvars' and 'terms'");
    return io::biform_from_json(j.at("terms"), j.at("nvars").get<std::size_t>());
}

std::string kind_text(PairKind k) { return to_string(k); }

int cmd_verify(const std::string& path, const Options& opt) {
    const bool ok = verify_pair(load_pair(path));
    deliver(opt, json{{"orthogonal", ok}}, ok ? "orthogonal" : "not orthogonal");
    return ok ? 0 : 1;
}

int cmd_multiplier(const std::string& path, const Options& opt) {
    const BiForm h = multiplier(load_pair(path));
    deliver(opt, io::biform_file(h), h.str());
    return 0;
}

int cmd_rank(const std::string& path, const Options& opt) {
    const std::size_t r = hermitian_rank(load_biform(path));
    deliver(opt, json{{"rank", r}}, "rank " + std::to_string(r));
    return 0;
}

int cmd_signature(const std::string& path, bool witnesses, const Options& opt) {
    const HermitianSignature hs = hermitian_signature(load_biform(path));
    json j{{"p", hs.pos}, {"q", hs.neg}};
    if (witnesses) {
        json w = json::array();
        for (const auto& [d, f] : hs.witnesses)
            w.push_back(json{{"weight", d.str()}, {"f", io::to_json(f)}});
        j["witnesses"] = std::move(w);
    }
    deliver(opt, j, "(" + std::to_string(hs.pos) + "," + std::to_string(hs.neg) + ")");
    return 0;
}

int cmd_classify(const std::string& path, bool full, const Options& opt) {
    const Classification cls = classify(load_pair(path));
    json j{{"kind", kind_text(cls.kind)}, {"rank", cls.rank}};
    if (full) j["multiplier"] = io::to_json(cls.mult);
    deliver(opt, j, kind_text(cls.kind) + " (rank " + std::to_string(cls.rank) + ")");
    return 0;
}

int cmd_decompose(const std::string& path, const Options& opt) {
    const PolyMapPair pair = load_pair(path);
    const Decomposition dec = decompose(pair);
    deliver(opt, io::to_json(dec),
            "quasi-standard: h1 = " + dec.h1.str() + ", h2 = " + dec.h2.str() + ", q = " +
                std::to_string(dec.phi_extra.size()));
    return 0;
}

int cmd_decompose_map(const std::string& path, const Options& opt) {
    json j = io::load_file(path);
    if (j.is_object() && !j.contains("psi") && j.contains("phi")) j["psi"] = j["phi"];
    const PolyMapPair pair = io::pair_from_json(j);
    const MapDecomposition dec = decompose_map(pair);
    deliver(opt, io::to_json(dec),
            "map normal form: h = " + dec.h.str() + ", lambda = " + dec.lambda.str());
    return 0;
}

int cmd_homogenize(const std::string& path, const Options& opt) {
    const json j = io::load_file(path);
    if (!j.is_object() || !j.contains("nvars") || !j.contains("polys"))
        throw parse_error("tuple file needs an object with 'nvars' and 'polys'");
    const std::size_t nvars = j.at("nvars").get<std::size_t>();
    auto [hs, d] = homogenize(io::tuple_from_json(j.at("polys"), nvars));
    json outj = io::tuple_file(nvars + 1, hs);
    outj["degree"] = d;
    deliver(opt, outj, "degree " + std::to_string(d));
    return 0;
}

int cmd_restrict(const std::string& path, const std::string& subspace, const Options& opt) {
    const BiForm b = load_biform(path);
    const GQMatrix s = io::matrix_from_json(io::load_file(subspace));
    const BiForm r = restrict_biform(b, s);
    deliver(opt, io::biform_file(r), r.str());
    return 0;
}

int cmd_whitney(int r, int s, const Options& opt) {
    const PolyMapPair pair = whitney(r, s);
    deliver(opt, io::to_json(pair), "whitney pair (" + std::to_string(r) + "," + std::to_string(s) + ")");
    return 0;
}

int cmd_gen(const std::string& kind, const GenConfig& cfg, int q, const std::string& witness_path,
            const Options& opt) {
    if (kind == "quasi-standard") {
        auto [pair, wit] = quasi_standard(cfg, q);
        if (!witness_path.empty()) io::save_file(witness_path, io::to_json(wit));
        deliver(opt, io::to_json(pair), "quasi-standard pair generated");
        return 0;
    }
    if (kind == "null") {
        const PolyMapPair pair = null_pair(cfg);
        deliver(opt, io::to_json(pair), "null pair generated");
        return 0;
    }
    throw parse_error("unknown --kind '" + kind + "' (expected quasi-standard or null)");
}

int cmd_numcheck(const std::string& path, int trials, double tol, std::uint64_t seed,
                 const Options& opt) {
    const SampleReport rep = numeric_verify(load_pair(path), trials, tol, seed);
    deliver(opt, io::to_json(rep),
            std::to_string(rep.failures) + " failures in " + std::to_string(rep.trials) +
                " trials (max residual " + std::to_string(rep.max_residual) + ")");
    return rep.failures == 0 ? 0 : 1;
}

int cmd_restriction(const std::string& path, int trials, std::uint64_t seed, const Options& opt) {
    const RestrictionReport rep = restriction_classify(load_pair(path), trials, seed);
    deliver(opt, io::to_json(rep),
            "direct " + kind_text(rep.direct) + "; " + std::to_string(rep.qs_count) + " qs / " +
                std::to_string(rep.null_count) + " null / " + std::to_string(rep.other_count) +
                " other");
    return 0;
}

int cmd_fuzz(int r, int s, int t, int nprime, int count, std::uint64_t seed, const Options& opt) {
    const int rs = r + s;
    if (nprime < rs) throw invalid_signature("nprime must be at least r+s");
    const int q = nprime - rs;
    const bool in_window = nprime <= 2 * rs - 3;
    const bool boundary = nprime == 2 * rs - 2;
    int failures = 0, other_in_window = 0, other_at_boundary = 0, decomposed = 0;
    json first_failure;

    auto note_failure = [&](const char* what, const PolyMapPair& pair) {
        ++failures;
        if (first_failure.is_null())
            first_failure = json{{"what", what}, {"pair", io::to_json(pair)}};
    };

    for (int i = 0; i < count; ++i) {
        GenConfig cfg;
        cfg.seed = derive_stream(seed, std::uint64_t(i)).next();
        cfg.source = Signature(r, s, t);
        cfg.max_degree = 3;
        const bool make_null = (i % 2 == 1);
        try {
            if (make_null) {
                cfg.target = Signature(nprime, 0, 0);
                const PolyMapPair pair = null_pair(cfg);
                if (classify(pair).kind != PairKind::Null) note_failure("null pair misclassified", pair);
            } else {
                auto [pair, wit] = quasi_standard(cfg, q);
                const Classification cls = classify(pair);
                if (cls.kind == PairKind::Other) {
                    if (in_window) { note_failure("Other inside the window", pair); ++other_in_window; }
                } else if (cls.kind == PairKind::QuasiStandard) {
                    const Decomposition dec = decompose(pair);
                    if (!check_decomposition(pair, dec)) note_failure("certificate failed", pair);
                    else ++decomposed;
                }
                if (!check_decomposition(pair, wit)) note_failure("witness failed", pair);
            }
        } catch (const error& e) {
            ++failures;
            if (first_failure.is_null()) first_failure = json{{"what", e.what()}};
        }
    }
    // At the sharp boundary n' = 2(r+s)-2 the Whitney pair is a genuine
    // orthogonal pair of rank two: observing Other there is expected.
    if (boundary && r >= 1 && s >= 1) {
        const PolyMapPair w = whitney(r, s);
        if (classify(extend_with_null_vars(w, t)).kind == PairKind::Other) ++other_at_boundary;
    }

    json j{{"count", count},
           {"failures", failures},
           {"decomposed", decomposed},
           {"other_in_window", other_in_window},
           {"other_at_boundary_expected", other_at_boundary},
           {"seed", seed}};
    if (!first_failure.is_null()) j["first_failure"] = first_failure;
    deliver(Options{opt.emit, opt.out}, j,
            std::to_string(failures) + " failures / " + std::to_string(count) + " pairs" +
                (other_at_boundary ? " (boundary Other observed, expected)" : ""));
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verdicts and certificates for orthogonal pairs of polynomial maps"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--emit", opt.emit, "output mode: json (default) or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", opt.out, "write the JSON result to this file");

    std::string in_path, aux_path, kind = "quasi-standard", witness_path;
    int r = 2, s = 1, t = 0, q = 0, nprime = 3, count = 100, trials = 200;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    int degree = 2, height = 4;
    bool witnesses = false, full = false;

    auto* verify = app.add_subcommand("verify", "orthogonality verdict for a pair file");
    verify->add_option("pair", in_path)->required();

    auto* mult = app.add_subcommand("multiplier", "extract the multiplier biform");
    mult->add_option("pair", in_path)->required();

    auto* rank = app.add_subcommand("rank", "hermitian rank of a biform file");
    rank->add_option("biform", in_path)->required();

    auto* sig = app.add_subcommand("signature", "hermitian signature of a biform file");
    sig->add_option("biform", in_path)->required();
    sig->add_flag("--witnesses", witnesses, "emit diagonalizing witnesses");

    auto* cls = app.add_subcommand("classify", "Null / QuasiStandard / Other verdict");
    cls->add_option("pair", in_path)->required();
    cls->add_flag("--full", full, "include the multiplier in the output");

    auto* dec = app.add_subcommand("decompose", "quasi-standard decomposition with certificate");
    dec->add_option("pair", in_path)->required();

    auto* dmap = app.add_subcommand("decompose-map", "normal form of an orthogonal map");
    dmap->add_option("map", in_path)->required();

    auto* homog = app.add_subcommand("homogenize", "homogenize a polynomial tuple file");
    homog->add_option("tuple", in_path)->required();

    auto* restr = app.add_subcommand("restrict", "restrict a biform to a subspace");
    restr->add_option("biform", in_path)->required();
    restr->add_option("--subspace", aux_path, "matrix file with the subspace columns")->required();

    auto* gen = app.add_subcommand("gen", "seeded pair generators");
    gen->add_option("--kind", kind, "quasi-standard (default) or null");
    gen->add_option("--r", r)->required();
    gen->add_option("--s", s)->required();
    gen->add_option("--t", t);
    gen->add_option("--q", q, "null block size (quasi-standard)");
    gen->add_option("--target-r", nprime, "target r (null pairs)");
    int target_s = 0, target_t = 0;
    gen->add_option("--target-s", target_s, "target s (null pairs)");
    gen->add_option("--target-t", target_t, "target t (null pairs)");
    gen->add_option("--seed", seed);
    gen->add_option("--degree", degree, "max component degree");
    gen->add_option("--height", height, "coefficient height bound");
    gen->add_option("--witness", witness_path, "write the witness decomposition here");

    auto* whit = app.add_subcommand("whitney", "the generalized Whitney pair");
    whit->add_option("--r", r)->required();
    whit->add_option("--s", s)->required();

    auto* fuzz = app.add_subcommand("fuzz", "randomized window harness");
    fuzz->add_option("--r", r)->required();
    fuzz->add_option("--s", s)->required();
    fuzz->add_option("--t", t);
    fuzz->add_option("--nprime", nprime)->required();
    fuzz->add_option("--count", count);
    fuzz->add_option("--seed", seed);

    auto* num = app.add_subcommand("numcheck", "floating-point orthogonality cross-check");
    num->add_option("pair", in_path)->required();
    num->add_option("--trials", trials);
    num->add_option("--tol", tol);
    num->add_option("--seed", seed);

    auto* rcls = app.add_subcommand("restriction-classify", "per-subspace verdicts on a degenerate source");
    rcls->add_option("pair", in_path)->required();
    rcls->add_option("--trials", trials);
    rcls->add_option("--seed", seed);

    // Let the global --emit/--out options appear after the subcommand too.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*verify) return cmd_verify(in_path, opt);
        if (*mult) return cmd_multiplier(in_path, opt);
        if (*rank) return cmd_rank(in_path, opt);
        if (*sig) return cmd_signature(in_path, witnesses, opt);
        if (*cls) return cmd_classify(in_path, full, opt);
        if (*dec) return cmd_decompose(in_path, opt);
        if (*dmap) return cmd_decompose_map(in_path, opt);
        if (*homog) return cmd_homogenize(in_path, opt);
        if (*restr) return cmd_restrict(in_path, aux_path, opt);
        if (*whit) return cmd_whitney(r, s, opt);
        if (*gen) {
            GenConfig cfg;
            cfg.seed = seed;
            cfg.source = Signature(r, s, t);
            if (kind == "null") cfg.target = Signature(nprime, target_s, target_t);
            cfg.max_degree = degree;
            cfg.coeff_height = height;
            return cmd_gen(kind, cfg, q, witness_path, opt);
        }
        if (*fuzz) return cmd_fuzz(r, s, t, nprime, count, seed, opt);
        if (*num) return cmd_numcheck(in_path, trials, tol, seed, opt);
        if (*rcls) return cmd_restriction(in_path, trials, seed, opt);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        return 1;
    }
}
