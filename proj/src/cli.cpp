#include "brauerk3/cli.hpp"

#include "brauerk3/classify.hpp"
#include "brauerk3/error.hpp"
#include "brauerk3/nslattice.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace brauerk3::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) parts.push_back(item);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

Int parse_int(const std::string& text) {
    std::string t = trim(text);
    Int n;
    if (t.empty() || n.set_str(t[0] == '+' ? t.substr(1) : t, 10) != 0) throw UsageError("not an integer: '" + text + "'");
    return n;
}

std::vector<Int> parse_ints(const std::string& text, std::size_t count) {
    auto parts = split(text, ',');
    if (parts.size() != count) {
        throw UsageError("expected " + std::to_string(count) + " comma-separated integers, got '" + text + "'");
    }
    std::vector<Int> out;
    for (const auto& p : parts) out.push_back(parse_int(p));
    return out;
}

PrimitiveTriple parse_triple(const std::string& text) {
    auto v = parse_ints(text, 3);
    return normalize_triple(v[0], v[1], v[2]);
}

Rational parse_lambda(const std::string& text) {
    try {
        return arith::parse_rational(trim(text));
    } catch (const std::invalid_argument&) {
        throw UsageError("not a rational number: '" + text + "'");
    }
}

std::uint64_t parse_prime_arg(const std::string& text) {
    Int p = parse_int(text);
    if (p < 2 || !arith::fits_u64(p)) throw UsageError("prime out of range: " + text);
    return arith::to_u64(p);
}

unsigned default_jobs() {
    if (const char* env = std::getenv("BRAUERK3_JOBS")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

ordered_json certificate_json(const M3Certificate& cert, const Int& D, const Rational& lambda) {
    ordered_json j;
    j["D"] = D.get_str();
    j["lambda"] = arith::str(lambda);
    j["p"] = cert.p;
    j["pi"] = cert.pi.pi.to_string();
    j["norm"] = cert.pi.residue_norm.get_str();
    j["lambda_cubic"] = cert.lambda_cubic.to_string();
    j["four_d_cubic"] = cert.four_d_cubic.to_string();
    j["four_d_sextic"] = cert.four_d_sextic.to_string();
    j["hecke_value"] = cert.hecke.value.to_string();
    j["inertia_degree"] = cert.hecke.inertia_degree;
    j["in_O3"] = cert.in_o3;
    j["verified"] = verify_certificate(cert, CurveModel{D}, lambda);
    return j;
}

int cmd_classify(const std::string& curve, bool json, const ReportOptions& options, std::ostream& out,
                 std::ostream& err) {
    auto report = full_report(parse_triple(curve), options);
    if (json) {
        ordered_json j = report;
        out << j.dump(2) << "\n";
    } else {
        out << render_text(report);
    }
    if (report.obstruction == Verdict::CubeCaseDescent) {
        err << "CubeCase: abc = " << report.triple.product()
            << " is a cube; the Brauer group classification does not apply\n";
        return kExitDomain;
    }
    return kExitOk;
}

int cmd_hecke_scan(const std::string& d_text, const std::string& lambda_text, std::uint64_t bound, unsigned threads,
                   bool json, std::ostream& out) {
    CurveModel curve{parse_int(d_text)};
    Rational lambda = parse_lambda(lambda_text);
    if (lambda <= 0) throw UsageError("lambda must be positive");
    auto cert = find_m3_witness(curve, lambda, ScanOptions{bound, threads});
    auto j = certificate_json(cert, curve.D, lambda);
    if (json) {
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "witness p = " << cert.p << "\n";
    out << "pi = " << j["pi"].get<std::string>() << ", N(pi) = " << j["norm"].get<std::string>() << "\n";
    out << "(lambda/pi)_3 = " << cert.lambda_cubic.to_string() << "  (p splits in KL/K, f = 1)\n";
    out << "(4D/pi)_3 = " << cert.four_d_cubic.to_string() << "\n";
    out << "(4D/pi)_6 = " << cert.four_d_sextic.to_string() << "\n";
    out << "psi = " << cert.hecke.value.to_string() << (cert.in_o3 ? "  in " : "  not in ") << "Z + 3Z[w]\n";
    out << "certificate " << (j["verified"].get<bool>() ? "verified" : "FAILED verification") << "\n";
    return kExitOk;
}

int cmd_lattice_h1(const std::string& cm, bool non_cm, std::ostream& out) {
    EndomorphismRing ring = EndomorphismRing::imaginary(1, 1);
    if (non_cm) {
        ring = EndomorphismRing::non_cm();
    } else if (!cm.empty()) {
        auto v = parse_ints(cm, 2);
        ring = EndomorphismRing::imaginary(v[0], v[1]);
    }
    auto action = rho_action(ring);
    auto h1 = cyclic_h1(action);
    out << h1.to_string() << "\n";
    out << "End = " << ring.to_string() << "\n";
    out << "rho = " << action.matrix.to_string() << "\n";
    out << "invariant factors:";
    for (const auto& d : h1.invariant_factors) out << " " << d;
    out << "\n";
    return kExitOk;
}

int cmd_verify_a2(std::ostream& out) {
    auto inv = a2_invariants();
    bool ok = verify_a2_invariants();
    out << "a = " << inv.a.to_string() << "\n";
    out << "b = " << inv.b.to_string() << "\n";
    out << "c = " << inv.c.to_string() << "\n";
    out << "invariant under (r, s) -> (s, -r - s) and a^3 = b^2 + bc + c^2: " << (ok ? "true" : "false") << "\n";
    return ok ? kExitOk : kExitDomain;
}

int cmd_local_solubility(const std::string& curve, const std::string& p_text, std::ostream& out) {
    auto t = parse_triple(curve);
    std::vector<Place> places;
    if (p_text == "all") {
        places = relevant_places(t);
    } else if (p_text == "inf") {
        places = {Place::infinity()};
    } else {
        places = {Place::prime(parse_prime_arg(p_text))};
    }
    bool all = true;
    for (const auto& v : places) {
        bool ok = diagonal_cubic_soluble(t, v);
        all = all && ok;
        out << v.to_string() << ": " << (ok ? "soluble" : "not soluble") << "\n";
    }
    if (p_text == "all") out << (all ? "everywhere locally soluble" : "not everywhere locally soluble") << "\n";
    return kExitOk;
}

int cmd_residue_symbol(const std::string& alpha_text, const std::string& p_text, unsigned degree, std::ostream& out) {
    auto v = parse_ints(alpha_text, 2);
    EisensteinInt alpha(v[0], v[1]);
    PrimaryPrime pi = residue_prime(parse_prime_arg(p_text));
    SexticUnit s = power_residue_symbol(alpha, pi, degree);
    out << s.exponent() << "\n";
    out << "(" << alpha.to_string() << " / " << pi.pi.to_string() << ")_" << degree << " = (-w)^" << s.exponent()
        << " = " << s.to_string() << "\n";
    return kExitOk;
}

int cmd_evaluate_beta(unsigned precision, std::ostream& out) {
    auto points = enumerate_E_points(-27, 2, precision);
    auto image = evaluation_image(points);
    out << "points of y^2 = x^3 - 27 over Z_2 mod 2^" << precision << ": " << points.size() << "\n";
    out << "image " << image.to_string() << "\n";
    auto show = [&](const char* label, const std::optional<std::pair<std::size_t, std::size_t>>& w) {
        if (!w) return;
        out << label << " at (" << points[w->first].to_string() << ", " << points[w->second].to_string() << ")\n";
    };
    show("0  ", image.zero_witness);
    show("1/2", image.half_witness);
    out << (image.surjective() ? "surjective" : "not surjective") << "\n";
    return kExitOk;
}

int cmd_batch(const std::string& path, unsigned jobs, const ReportOptions& options, std::ostream& out,
              std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "cannot read " << path << "\n";
        return kExitDomain;
    }
    struct Line {
        std::size_t number;
        std::string text;
    };
    std::vector<Line> lines;
    std::string text;
    for (std::size_t n = 1; std::getline(in, text); ++n) {
        std::string t = trim(text);
        if (t.empty() || t[0] == '#') continue;
        lines.push_back({n, t});
    }

    std::vector<std::string> records(lines.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < lines.size(); i = next++) {
            ordered_json j;
            try {
                j = full_report(parse_triple(lines[i].text), options);
            } catch (const std::exception& e) {
                j = ordered_json::object();
                j["line"] = lines[i].number;
                j["input"] = lines[i].text;
                j["error"] = e.what();
            }
            records[i] = j.dump();
        }
    };
    unsigned n = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, lines.size()))));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < n; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const auto& r : records) out << r << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Brauer groups of generalized Kummer surfaces of diagonal cubics", "brauerk3"};
    app.require_subcommand(1);

    std::string curve, d_text, lambda_text, cm, alpha, prime_text, input, p_choice = "all";
    bool json = false, non_cm = false, assume = false;
    std::uint64_t bound = 100000;
    unsigned precision = 8, threads = 1, degree = 3, jobs = default_jobs();

    auto* classify = app.add_subcommand("classify", "full classification report for a x^3 + b y^3 + c z^3 = 0");
    classify->add_option("--curve", curve, "coefficients a,b,c")->required();
    classify->add_flag("--json", json, "emit the JSON report");
    classify->add_flag("--assume-y-soluble", assume, "proceed when C is not everywhere locally soluble");
    classify->add_option("--prec", precision, "2-adic precision for the evaluation map")->check(CLI::Range(3U, 24U));
    classify->add_option("--bound", bound, "prime bound for the m(3) scan");
    classify->add_option("--threads", threads, "workers for the m(3) scan")->check(CLI::PositiveNumber);

    auto* hecke = app.add_subcommand("hecke", "Hecke character computations");
    hecke->require_subcommand(1);
    auto* scan = hecke->add_subcommand("scan", "smallest prime certifying m(3) = 0");
    scan->add_option("--D", d_text, "the curve y^2 = x^3 + D")->required();
    scan->add_option("--lambda", lambda_text, "lambda as n/d")->required();
    scan->add_option("--bound", bound, "largest prime scanned");
    scan->add_option("--threads", threads, "scan workers")->check(CLI::PositiveNumber);
    scan->add_flag("--json", json, "emit JSON");

    auto* lattice = app.add_subcommand("lattice", "Neron-Severi lattice of E x E");
    lattice->require_subcommand(1);
    auto* h1 = lattice->add_subcommand("h1", "H^1 of the rho-action");
    auto* cm_opt = h1->add_option("--cm", cm, "c,d with alpha^2 + c alpha + d = 0 (default 1,1)");
    auto* noncm_opt = h1->add_flag("--non-cm", non_cm, "curve without CM");
    cm_opt->excludes(noncm_opt);
    auto* a2 = lattice->add_subcommand("verify-a2", "invariant ring of the A2 singularity");

    auto* local = app.add_subcommand("local", "local arithmetic");
    local->require_subcommand(1);
    auto* sol = local->add_subcommand("solubility", "C(Q_p) != {} for a x^3 + b y^3 + c z^3 = 0");
    sol->add_option("--curve", curve, "coefficients a,b,c")->required();
    sol->add_option("--p", p_choice, "a prime, inf, or all");

    auto* residue = app.add_subcommand("residue-symbol", "power residue symbol in Z[w]");
    residue->add_option("--alpha", alpha, "x,y for x + y w")->required();
    residue->add_option("--prime", prime_text, "rational prime below pi")->required();
    residue->add_option("--degree", degree, "3 or 6")->check(CLI::IsMember({2U, 3U, 6U}));

    auto* beta = app.add_subcommand("evaluate-beta", "image of the evaluation map of (x - 3, u - 3) at 2");
    beta->add_option("--prec", precision, "2-adic precision")->check(CLI::Range(3U, 16U));

    auto* batch = app.add_subcommand("batch", "classify every a,b,c line of a CSV file");
    batch->add_option("--input", input, "CSV file, one triple per line")->required();
    batch->add_option("--jobs", jobs, "worker threads (default BRAUERK3_JOBS or all cores)")->check(CLI::PositiveNumber);
    batch->add_option("--bound", bound, "prime bound for the m(3) scan");
    batch->add_option("--prec", precision, "2-adic precision")->check(CLI::Range(3U, 24U));
    batch->add_flag("--assume-y-soluble", assume, "proceed when C is not everywhere locally soluble");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    const ReportOptions report_options{bound, precision, assume, threads};
    try {
        if (*classify) return cmd_classify(curve, json, report_options, out, err);
        if (*scan) return cmd_hecke_scan(d_text, lambda_text, bound, threads, json, out);
        if (*h1) return cmd_lattice_h1(cm, non_cm, out);
        if (*a2) return cmd_verify_a2(out);
        if (*sol) return cmd_local_solubility(curve, p_choice, out);
        if (*residue) return cmd_residue_symbol(alpha, prime_text, degree, out);
        if (*beta) return cmd_evaluate_beta(precision, out);
        if (*batch) return cmd_batch(input, jobs, report_options, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return kExitDomain;
    }
    err << app.help();
    return kExitUsage;
}

}  // namespace brauerk3::cli
