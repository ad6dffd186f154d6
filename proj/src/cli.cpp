#include "trimult/cli.hpp"

#include <chrono>
#include <cstdint>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "trimult/bfile.hpp"
#include "trimult/closedform.hpp"
#include "trimult/oracle.hpp"
#include "trimult/params.hpp"
#include "trimult/recurrence.hpp"

namespace trimult::cli {

namespace {

using nlohmann::json;

std::int64_t now_ns() {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

struct GlobalOpts {
    mpfr_prec_t precision = BigFloat::kDefaultPrecision;
    long t_cap = 10000000;
};

SequenceKind require_kind(const std::string& name) {
    auto k = parse_kind(name);
    if (!k) throw CLI::ValidationError("kind", "must be one of t, xi, Tt, Txi");
    return *k;
}

json square_report(const BigInt& k, const SquareSearchResult& res) {
    json j;
    j["k"] = k.get_si();
    j["square"] = true;
    j["claim_at_most_one_held"] = res.at_most_one;
    j["t_cap"] = to_decimal(res.t_cap);
    j["solutions"] = json::array();
    for (const SolutionPair& s : res.solutions) {
        json e;
        e["t"] = to_decimal(s.t);
        e["xi"] = to_decimal(s.xi);
        e["T_t"] = to_decimal(s.t_value);
        e["T_xi"] = to_decimal(s.xi_value);
        j["solutions"].push_back(std::move(e));
    }
    return j;
}

int cmd_params(const BigInt& k, const GlobalOpts& g, std::ostream& out, std::ostream& err) {
    if (is_perfect_square(k)) {
        SquareSearchResult res = square_k_search(k, BigInt(g.t_cap));
        out << square_report(k, res).dump(2) << "\n";
        return exit_code::square_k;
    }
    try {
        DetectOptions opts;
        opts.t_cap = g.t_cap;
        MultiplierParams p = detect_params(k, opts);
        out << params_to_json(p).dump(2) << "\n";
        return exit_code::success;
    } catch (const CapExhausted& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::detection_failure;
    } catch (const DetectionFailure& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::detection_failure;
    }
}

MultiplierParams detect_for(const BigInt& k, const GlobalOpts& g) {
    DetectOptions opts;
    opts.t_cap = g.t_cap;
    return detect_params(k, opts);
}

int cmd_eval(const BigInt& k, SequenceKind kind, std::uint64_t n, const std::string& engine,
             const GlobalOpts& g, std::ostream& out, std::ostream& err) {
    BigInt value;
    const std::int64_t t0 = now_ns();
    if (engine == "oracle") {
        EnumerationResult res = enumerate_solutions(k, n + 1, BigInt(g.t_cap));
        if (!res.complete) {
            err << "error: oracle cap " << g.t_cap << " reached with only "
                << res.solutions.size() << " solutions; need " << (n + 1)
                << " (raise --t-cap)\n";
            return exit_code::detection_failure;
        }
        const SolutionPair& s = res.solutions[static_cast<std::size_t>(n)];
        switch (kind) {
            case SequenceKind::TIndex: value = s.t; break;
            case SequenceKind::XiIndex: value = s.xi; break;
            case SequenceKind::TValue: value = s.t_value; break;
            case SequenceKind::XiValue: value = s.xi_value; break;
        }
    } else {
        MultiplierParams p = detect_for(k, g);
        if (engine == "recurrence") {
            value = term_at(build_spec(p, kind), n);
        } else {
            value = eval_at(build_residue_forms(p, kind), n);
        }
    }
    const std::int64_t elapsed = now_ns() - t0;
    json rec;
    rec["k"] = k.get_si();
    rec["kind"] = std::string(kind_name(kind));
    rec["n"] = n;
    rec["value"] = to_decimal(value);
    rec["engine"] = engine;
    rec["elapsed_ns"] = elapsed;
    out << rec.dump() << "\n";
    return exit_code::success;
}

int cmd_closed_form(const BigInt& k, SequenceKind kind, const GlobalOpts& g, std::ostream& out,
                    std::ostream& err) {
    try {
        MultiplierParams p = detect_for(k, g);
        out << residue_forms_to_json(build_residue_forms(p, kind)).dump(2) << "\n";
        return exit_code::success;
    } catch (const CapExhausted& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::detection_failure;
    } catch (const DetectionFailure& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::detection_failure;
    }
}

int cmd_verify(const BigInt& k, int depth, const GlobalOpts& g, std::ostream& out,
               std::ostream& err) {
    MultiplierParams p;
    try {
        p = detect_for(k, g);
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::detection_failure;
    }

    bool all_ok = true;
    auto report = [&](const std::string& name, bool ok, const std::string& detail = "") {
        out << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) out << ": " << detail;
        out << "\n";
        if (!ok) all_ok = false;
    };

    ValidationReport vr = validate_params(p, depth, BigInt(g.t_cap));
    for (const CheckResult& c : vr.checks) report("params/" + c.name, c.passed, c.detail);

    // engines against each other and against the brute-force prefix
    EnumerationResult oracle =
        enumerate_solutions(k, static_cast<std::size_t>(depth) + p.seeds.size(), BigInt(g.t_cap));
    for (SequenceKind kind : kAllSequenceKinds) {
        RecurrenceSpec spec = build_spec(p, kind);
        std::vector<ResidueForm> forms = build_residue_forms(p, kind);
        std::vector<BigInt> rec = generate(spec, static_cast<std::size_t>(depth) + 1);

        bool closed_ok = true;
        for (std::size_t n = 0; n < rec.size(); ++n)
            if (eval_at(forms, n) != rec[n]) closed_ok = false;
        report(std::string("closed_equals_recurrence/") + std::string(kind_name(kind)),
               closed_ok, "n <= " + std::to_string(depth));

        bool oracle_ok = true;
        for (std::size_t i = 0; i < oracle.solutions.size() && i < rec.size(); ++i) {
            const SolutionPair& s = oracle.solutions[i];
            const BigInt& expect = kind == SequenceKind::TIndex    ? s.t
                                   : kind == SequenceKind::XiIndex ? s.xi
                                   : kind == SequenceKind::TValue  ? s.t_value
                                                                   : s.xi_value;
            if (rec[i] != expect) oracle_ok = false;
        }
        report(std::string("recurrence_equals_oracle/") + std::string(kind_name(kind)),
               oracle_ok,
               std::to_string(std::min(oracle.solutions.size(), rec.size())) + " oracle terms");
    }

    {
        std::vector<ResidueForm> tt = build_residue_forms(p, SequenceKind::TValue);
        std::vector<ResidueForm> txi = build_residue_forms(p, SequenceKind::XiValue);
        bool ok = true;
        for (std::uint64_t n = 0; n <= static_cast<std::uint64_t>(depth); ++n)
            if (eval_at(txi, n) != p.k * eval_at(tt, n)) ok = false;
        report("multiple_identity", ok,
               "T_xi == k * T_t for n <= " + std::to_string(depth));
    }

    {
        bool ok = true;
        for (SequenceKind kind : kAllSequenceKinds)
            if (!particular_identity_holds(p, kind)) ok = false;
        report("particular_constants", ok);
    }

    {
        RootCheckReport rc = char_poly_root_check(p, g.precision);
        BigFloat bound = BigFloat::pow2(-150, g.precision);
        report("char_poly_roots", rc.max_residual < bound && rc.product_error < bound,
               "max residual " + rc.max_residual.to_string(6));
    }

    if (p.rank <= 4) {
        TrigFormConstants pc = trig_form_constants(p, g.precision);
        std::vector<ResidueForm> forms = build_residue_forms(p, SequenceKind::TIndex);
        bool ok = true;
        const int limit = std::min(depth, 50);
        for (int n = 0; n <= limit; ++n) {
            auto rounded = round_with_guard(reconstruct_via_trig(pc, static_cast<std::uint64_t>(n)));
            if (!rounded || *rounded != eval_at(forms, static_cast<std::uint64_t>(n))) ok = false;
        }
        report("trig_round_trip", ok, "n <= " + std::to_string(limit));
    } else {
        out << "SKIP trig_round_trip: rank " << p.rank << " beyond the tabled constants\n";
    }

    out << (all_ok ? "verify: all checks passed\n" : "verify: FAILURES detected\n");
    return all_ok ? exit_code::success : exit_code::mismatch;
}

int cmd_oeis_check(const BigInt& k, SequenceKind kind, const std::string& path,
                   const GlobalOpts& g, std::ostream& out, std::ostream& err) {
    BFile bf;
    try {
        bf = load_bfile(path);
    } catch (const BFileParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }
    long long max_n = bf.entries.back().n;
    if (max_n > 100000) {
        err << "error: b-file runs to n = " << max_n << ", beyond the supported range\n";
        return exit_code::usage;
    }
    MultiplierParams p;
    try {
        p = detect_for(k, g);
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::detection_failure;
    }
    std::vector<BigInt> terms = generate(build_spec(p, kind), static_cast<std::size_t>(max_n) + 3);
    OeisCheckReport rep = check_bfile_against_terms(bf, terms);
    if (rep.matched) {
        out << "match: " << bf.id << " vs k=" << to_decimal(k) << " " << kind_name(kind)
            << ", overlap " << rep.overlap << " terms, offset shift " << rep.shift << "\n";
        return exit_code::success;
    }
    out << "mismatch: " << bf.id << " vs k=" << to_decimal(k) << " " << kind_name(kind);
    if (rep.first_mismatch) {
        out << " at file n=" << rep.first_mismatch->file_n << ": file has "
            << to_decimal(rep.first_mismatch->file_value) << ", engine gives "
            << to_decimal(rep.first_mismatch->engine_value) << " (best shift " << rep.shift
            << ")";
    } else {
        out << ": no overlapping indices under shifts -2..2";
    }
    out << "\n";
    return exit_code::mismatch;
}

int cmd_bench(const BigInt& k, const std::vector<std::uint64_t>& ns, const std::string& kind_sel,
              const GlobalOpts& g, std::ostream& out, std::ostream& err) {
    MultiplierParams p;
    try {
        p = detect_for(k, g);
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::detection_failure;
    }
    std::vector<SequenceKind> kinds;
    if (kind_sel == "all")
        kinds.assign(kAllSequenceKinds.begin(), kAllSequenceKinds.end());
    else
        kinds.push_back(require_kind(kind_sel));

    out << "k,kind,n,closed_ns,recur_ns,equal\n";
    for (SequenceKind kind : kinds) {
        RecurrenceSpec spec = build_spec(p, kind);
        std::vector<ResidueForm> forms = build_residue_forms(p, kind);
        for (std::uint64_t n : ns) {
            std::int64_t t0 = now_ns();
            BigInt closed = eval_at(forms, n);
            std::int64_t t1 = now_ns();
            BigInt rec = term_at(spec, n);
            std::int64_t t2 = now_ns();
            out << to_decimal(k) << "," << kind_name(kind) << "," << n << "," << (t1 - t0) << ","
                << (t2 - t1) << "," << (closed == rec ? "true" : "false") << "\n";
        }
    }
    return exit_code::success;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solutions of T_xi = k * T_t: parameters, sequences, closed forms"};
    app.name("trimult");
    GlobalOpts g;
    app.add_option("--precision", g.precision, "BigFloat precision in bits")
        ->check(CLI::Range(64, 1 << 20))
        ->capture_default_str();
    app.add_option("--t-cap", g.t_cap, "brute-force scan bound on t")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.require_subcommand(1);
    app.fallthrough();

    long k_in = 0;
    std::string kind_in = "t", engine_in = "closed", path_in;
    std::uint64_t n_in = 0;
    int depth_in = 50;
    std::vector<std::uint64_t> ns_in;
    std::string bench_kind = "t";

    CLI::App* c_params = app.add_subcommand("params", "detect the parameter bundle for k");
    c_params->add_option("k", k_in, "multiplier")->required();

    CLI::App* c_eval = app.add_subcommand("eval", "evaluate one term of one sequence");
    c_eval->add_option("k", k_in, "multiplier")->required();
    c_eval->add_option("kind", kind_in, "t | xi | Tt | Txi")->required();
    c_eval->add_option("n", n_in, "term index")->required();
    c_eval->add_option("--engine", engine_in, "oracle | recurrence | closed")
        ->check(CLI::IsMember({"oracle", "recurrence", "closed"}))
        ->capture_default_str();

    CLI::App* c_verify = app.add_subcommand("verify", "cross-check every engine and invariant");
    c_verify->add_option("k", k_in, "multiplier")->required();
    c_verify->add_option("--depth", depth_in, "terms per engine comparison")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* c_closed = app.add_subcommand("closed-form", "emit the exact residue forms as JSON");
    c_closed->add_option("k", k_in, "multiplier")->required();
    c_closed->add_option("kind", kind_in, "t | xi | Tt | Txi")->required();

    CLI::App* c_oeis = app.add_subcommand("oeis-check", "compare a sequence against a b-file");
    c_oeis->add_option("k", k_in, "multiplier")->required();
    c_oeis->add_option("kind", kind_in, "t | xi | Tt | Txi")->required();
    c_oeis->add_option("bfile", path_in, "path to the b-file")->required();

    CLI::App* c_bench = app.add_subcommand("bench", "closed form vs recurrence timings (CSV)");
    c_bench->add_option("k", k_in, "multiplier")->required();
    c_bench->add_option("n", ns_in, "term indices")->required();
    c_bench->add_option("--kind", bench_kind, "t | xi | Tt | Txi | all")
        ->check(CLI::IsMember({"t", "xi", "Tt", "Txi", "all"}))
        ->capture_default_str();

    std::vector<std::string> argv_storage = args;
    std::vector<const char*> argv;
    argv.push_back("trimult");
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_code::success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    }

    try {
        if (k_in <= 1) {
            err << "error: k must be an integer > 1\n";
            return exit_code::usage;
        }
        BigInt k(k_in);

        if (c_params->parsed()) return cmd_params(k, g, out, err);
        if (c_eval->parsed()) {
            if (!is_perfect_square(k))
                return cmd_eval(k, require_kind(kind_in), n_in, engine_in, g, out, err);
            err << "error: k is a perfect square; sequences are defined for non-square k\n";
            return exit_code::square_k;
        }
        if (c_verify->parsed()) {
            if (is_perfect_square(k)) {
                out << square_report(k, square_k_search(k, BigInt(g.t_cap))).dump(2) << "\n";
                return exit_code::square_k;
            }
            return cmd_verify(k, depth_in, g, out, err);
        }
        if (c_closed->parsed()) return cmd_closed_form(k, require_kind(kind_in), g, out, err);
        if (c_oeis->parsed())
            return cmd_oeis_check(k, require_kind(kind_in), path_in, g, out, err);
        if (c_bench->parsed()) return cmd_bench(k, ns_in, bench_kind, g, out, err);
        err << "error: no subcommand\n";
        return exit_code::usage;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::detection_failure;
    }
}

}  // namespace trimult::cli
