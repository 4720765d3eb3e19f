#include "minorkit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "minorkit/detkit.hpp"
#include "minorkit/errors.hpp"
#include "minorkit/identity.hpp"
#include "minorkit/matrix_io.hpp"
#include "minorkit/numaccretive.hpp"

namespace minorkit {

namespace {

using nlohmann::json;

// FNV-1a over the determinant's text form, so timings can be compared across algorithms.
std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

template <RingScalar R>
R timed_det(const Matrix<R>& a, DetAlgo algo, std::int64_t& nanos) {
    const auto t0 = std::chrono::steady_clock::now();
    R d = determinant(a, algo);
    const auto t1 = std::chrono::steady_clock::now();
    nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    return d;
}

json bench_det(const RunConfig& c) {
    const DetAlgo algo = parse_det_algo(c.algo);
    if (c.scalar != "int" && c.scalar != "poly") throw UsageError("bench det: --scalar must be int or poly");
    if (c.order == 0) throw UsageError("bench det: --order must be positive");
    if (algo == DetAlgo::cofactor && c.order > kCofactorMaxOrder)
        throw UsageError("bench det: cofactor expansion is capped at order " + std::to_string(kCofactorMaxOrder));
    json rows = json::array();
    for (std::size_t t = 0; t < c.trials; ++t) {
        Rng rng = Rng::stream(c.seed, t);
        const Matrix<Integer> base = random_integer_matrix(c.order, c.order, -9, 9, rng);
        std::int64_t nanos = 0;
        std::string text;
        if (c.scalar == "int") {
            text = timed_det(base, algo, nanos).get_str();
        } else {
            // Integer matrix plus the generic skew Toeplitz part in b1..b_{order-1}.
            const std::size_t nvars = std::max<std::size_t>(c.order, 2) - 1;
            Matrix<MultiPoly> a = base.map([&](const Integer& v) { return MultiPoly(nvars, v); }, MultiPoly(nvars));
            if (c.order >= 2) a += generic_skew_toeplitz(c.order);
            text = timed_det(a, algo, nanos).to_string();
        }
        rows.push_back({{"algo", to_string(algo)},
                        {"order", c.order},
                        {"trial", t},
                        {"nanos", nanos},
                        {"det_hash", fnv1a_hex(text)}});
    }
    return rows;
}

std::vector<CertificateReport> verify_command(const RunConfig& c) {
    std::vector<CertificateReport> reports;
    const std::string& sub = c.subcommand;
    if (sub == "johnson") {
        if (c.mode == "symbolic") {
            reports.push_back(verify_johnson_symbolic(c.n, c.max_n));
        } else if (c.mode == "numeric") {
            reports.push_back(verify_johnson_numeric(c.n, c.trials, c.seed, c.tol.value_or(kNumericJohnsonTol)));
        } else {
            throw UsageError("verify johnson: --mode must be symbolic or numeric");
        }
    } else if (sub == "lemmas") {
        reports = verify_lemmas(c.n, c.seed, c.max_n);
    } else if (sub == "bt") {
        if (c.scalar == "rat") {
            reports = verify_bt_batch(c.dim, c.trials, c.seed);
        } else if (c.scalar == "real") {
            reports = verify_bt_float_batch(c.dim, c.trials, c.seed, c.tol.value_or(kRankOneMarginTol));
        } else {
            throw UsageError("verify bt: --scalar must be rat or real");
        }
    } else if (sub == "specialization") {
        reports.push_back(specialization_certificate(c.m));
    } else if (sub == "accretive") {
        reports = accretive_suite(c.dim, c.trials, c.seed, c.tol.value_or(kInequalityTol));
    } else {
        throw UsageError("verify: unknown subcommand '" + sub + "'");
    }
    return reports;
}

std::vector<CertificateReport> search_command(const RunConfig& c) {
    std::optional<Matrix<Complex>> init;
    if (c.init_path) {
        const AnyMatrix any = load_matrix(*c.init_path);
        std::visit(
            [&](const auto& m) {
                using M = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<M, Matrix<Complex>>) {
                    init = m;
                } else if constexpr (std::is_same_v<M, Matrix<Real>>) {
                    init = m.map([](double v) { return Complex(v, 0.0); }, Complex{});
                } else {
                    throw InputError("search complex: field \"scalar\" of --init must be real or complex");
                }
            },
            any);
    }
    const auto found = search_complex_violation(c.dim, c.iters, c.seed, init);
    std::vector<CertificateReport> reports;
    for (const auto& w : found) {
        reports.push_back(witness_report(w, "complex_violation_dim" + std::to_string(c.dim) + "_r" +
                                                std::to_string(w.restart) + "_i" + std::to_string(w.iter)));
        reports.back().tolerance = kViolationTol;
    }
    return reports;
}

std::string text_table(const std::vector<CertificateReport>& reports) {
    constexpr std::size_t kResidualWidth = 40;
    std::size_t claim_w = 5;
    for (const auto& r : reports) claim_w = std::max(claim_w, r.claim.size());
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(claim_w)) << "claim" << "  " << std::setw(8) << "status" << "  "
       << std::setw(static_cast<int>(kResidualWidth)) << "residual" << "  " << "seed" << "\n";
    for (const auto& r : reports) {
        std::string res = r.residual;
        if (res.size() > kResidualWidth) res = res.substr(0, kResidualWidth - 3) + "...";
        os << std::setw(static_cast<int>(claim_w)) << r.claim << "  " << std::setw(8) << to_string(r.status) << "  "
           << std::setw(static_cast<int>(kResidualWidth)) << res << "  "
           << (r.seed ? std::to_string(*r.seed) : std::string("-")) << "\n";
    }
    return os.str();
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
    if (c.out_path) {
        std::ofstream f(*c.out_path, std::ios::binary);
        if (!f) throw InputError("cannot write " + *c.out_path);
        f << text;
    } else {
        out << text;
    }
}

} // namespace

int run(const RunConfig& c, std::ostream& out) {
    if (c.command == "bench") {
        if (c.subcommand != "det") throw UsageError("bench: unknown subcommand '" + c.subcommand + "'");
        emit(c, bench_det(c).dump(2) + "\n", out);
        return kExitOk;
    }

    std::vector<CertificateReport> reports;
    bool completion_only = false;
    if (c.command == "verify") {
        reports = verify_command(c);
    } else if (c.command == "repro") {
        if (c.subcommand != "remark45") throw UsageError("repro: unknown subcommand '" + c.subcommand + "'");
        CertificateReport r = witness_report(reproduce_counterexample(), "complex_counterexample_n4");
        r.tolerance = kCounterexamplePsdTol;
        reports.push_back(std::move(r));
    } else if (c.command == "search") {
        if (c.subcommand != "complex") throw UsageError("search: unknown subcommand '" + c.subcommand + "'");
        reports = search_command(c);
        completion_only = true;
    } else {
        throw UsageError("unknown command '" + c.command + "'");
    }

    // Every report carries the resolved seed; exact claims record tolerance 0.
    for (auto& r : reports) {
        if (!r.seed) r.seed = c.seed;
        if (!r.tolerance) r.tolerance = 0.0;
    }

    emit(c, c.format == OutputFormat::json ? reports_to_string(reports) : text_table(reports), out);
    if (completion_only) return kExitOk;
    return all_verified(reports) ? kExitOk : kExitRefuted;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Exact and numeric certificates for contiguous minors of Toeplitz and accretive matrices",
                 "minorkit"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    app.add_option("--seed", c.seed, "Master seed (64-bit)")->capture_default_str();
    app.add_option("--out", out_path, "Write output to this file instead of stdout");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    double tol = 0.0;
    std::string init_path;

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1);
    auto* johnson = verify->add_subcommand("johnson", "Johnson identity for A + A^T = 2J");
    johnson->add_option("--n", c.n, "Matrix order (>= 2)")->capture_default_str();
    johnson->add_option("--mode", c.mode, "symbolic or numeric")
        ->check(CLI::IsMember({"symbolic", "numeric"}))
        ->capture_default_str();
    johnson->add_option("--trials", c.trials, "Numeric trials")->default_str("100");
    johnson->add_option("--max-n", c.max_n, "Cap on symbolic order")->capture_default_str();
    johnson->add_option("--tol", tol, "Relative tolerance (numeric mode)")->default_str("1e-09");

    auto* lemmas = verify->add_subcommand("lemmas", "Skew facts, rank-one expansions and reduced cases up to order n");
    lemmas->add_option("--n", c.n, "Largest order (>= 3)")->default_str("6");
    lemmas->add_option("--max-n", c.max_n, "Cap on symbolic order")->capture_default_str();

    auto* bt = verify->add_subcommand("bt", "Rank-one symmetric part equality");
    bt->add_option("--dim", c.dim, "Order (rat) or largest order (real)")->capture_default_str();
    bt->add_option("--trials", c.trials, "Number of instances")->capture_default_str();
    bt->add_option("--scalar", c.scalar, "rat or real")->check(CLI::IsMember({"rat", "real"}))->capture_default_str();
    bt->add_option("--tol", tol, "Margin tolerance (real)")->default_str("1e-08");

    auto* spec = verify->add_subcommand("specialization", "Values at b1 = 1, other b = 0");
    spec->add_option("--m", c.m, "Block order (>= 2)")->capture_default_str();

    auto* acc = verify->add_subcommand("accretive", "Accretive determinant, adjugate and minor inequality");
    acc->add_option("--dim", c.dim, "Largest order")->default_str("6");
    acc->add_option("--trials", c.trials, "Number of instances")->default_str("200");
    acc->add_option("--tol", tol, "Inequality tolerance")->default_str("1e-08");

    auto* repro = app.add_subcommand("repro", "Reproduce a published example");
    repro->require_subcommand(1);
    repro->add_subcommand("remark45", "Complex 4x4 counterexample");

    auto* search = app.add_subcommand("search", "Randomized searches");
    search->require_subcommand(1);
    auto* complex = search->add_subcommand("complex", "Complex violations of the minor inequality");
    complex->add_option("--dim", c.dim, "Order (>= 2)")->default_str("4");
    complex->add_option("--iters", c.iters, "Total iterations")->capture_default_str();
    complex->add_option("--init", init_path, "Starting matrix (JSON)");

    auto* bench = app.add_subcommand("bench", "Benchmarks");
    bench->require_subcommand(1);
    auto* det = bench->add_subcommand("det", "Determinant algorithms");
    det->add_option("--algo", c.algo, "cofactor, bareiss or condensation")
        ->check(CLI::IsMember({"cofactor", "bareiss", "condensation"}))
        ->capture_default_str();
    det->add_option("--order", c.order, "Matrix order")->capture_default_str();
    det->add_option("--trials", c.trials, "Number of matrices")->default_str("10");
    det->add_option("--scalar", c.scalar, "int or poly")->check(CLI::IsMember({"int", "poly"}))->default_str("int");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    for (auto* top : app.get_subcommands()) {
        c.command = top->get_name();
        for (auto* leaf : top->get_subcommands()) c.subcommand = leaf->get_name();
    }
    // Per-command defaults that differ from RunConfig.
    if (det->parsed() && det->count("--scalar") == 0) c.scalar = "int";
    if (lemmas->parsed() && lemmas->count("--n") == 0) c.n = 6;
    if (acc->parsed()) {
        if (acc->count("--dim") == 0) c.dim = 6;
        if (acc->count("--trials") == 0) c.trials = 200;
    }
    if (complex->parsed() && complex->count("--dim") == 0) c.dim = 4;
    if (johnson->parsed() && johnson->count("--trials") == 0) c.trials = 100;
    if (det->parsed() && det->count("--trials") == 0) c.trials = 10;
    for (auto* opt_owner : {johnson, bt, acc})
        if (opt_owner->parsed() && opt_owner->count("--tol") > 0) c.tol = tol;
    if (!init_path.empty()) c.init_path = init_path;
    if (!out_path.empty()) c.out_path = out_path;
    c.format = format == "text" ? OutputFormat::text : OutputFormat::json;

    try {
        return run(c, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

} // namespace minorkit
