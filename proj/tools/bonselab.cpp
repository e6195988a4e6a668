// bonselab: certified Bonse-inequality threshold computations.
//
// Subcommands: psi, scan-alpha, tail-sup, plateau, bound, rh-bound,
// verify-conjecture, verify-lemmas, plot-data.
// Exit status: 0 = certified results, 2 = uncertified/indeterminate, 1 = error.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <map>
#include <random>
#include <sstream>

#include "bonselab/bounds.hpp"
#include "bonselab/scan.hpp"

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;
using namespace bonselab;

namespace {

enum class Format { human, json_fmt, csv };

struct GlobalOpts {
    std::string format = "human";
    std::string out_path;
    std::string checkpoint_path;
    bool resume = false;
    uint64_t checkpoint_every = 1'000'000;
    uint64_t mem_budget = uint64_t(512) << 20;
    uint64_t report_every = 0;
    uint64_t n_max = 0;  // 0 = no ceiling

    Format fmt() const {
        if (format == "json") return Format::json_fmt;
        if (format == "csv") return Format::csv;
        return Format::human;
    }
    ScanOptions scan_options() const {
        ScanOptions o;
        if (n_max) o.n_ceiling = n_max;
        o.checkpoint_path = checkpoint_path;
        if (o.checkpoint_path.empty()) {
            if (const char* dir = std::getenv("BONSELAB_CHECKPOINT_DIR"); dir && *dir)
                o.checkpoint_path = (fs::path(dir) / "scan.ckpt").string();
        }
        o.resume = resume;
        o.checkpoint_every = checkpoint_every;
        o.report_every = report_every;
        o.sieve.memory_budget_bytes = mem_budget;
        return o;
    }
};

std::ostream& output_stream(const GlobalOpts& g, std::ofstream& file) {
    if (g.out_path.empty()) return std::cout;
    file.open(g.out_path);
    if (!file) throw std::runtime_error("cannot open output file '" + g.out_path + "'");
    return file;
}

json integer_field(uint64_t v) {
    if (v >= (uint64_t(1) << 53)) return std::to_string(v);
    return v;
}

std::vector<Rational> parse_x_list(const std::vector<std::string>& strings) {
    std::vector<Rational> xs;
    xs.reserve(strings.size());
    for (const auto& s : strings) xs.push_back(Rational::parse(s));
    return xs;
}

json psi_record(const PsiResult& r) {
    json j;
    j["x"] = r.x.str();
    j["psi"] = integer_field(r.psi);
    j["last_nonpositive"] =
        r.last_nonpositive ? json(integer_field(*r.last_nonpositive)) : json(nullptr);
    j["n_upper"] = integer_field(r.n_upper_used);
    j["certified"] = r.certified;
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

void emit_psi(const std::vector<PsiResult>& results, const GlobalOpts& g) {
    std::ofstream file;
    std::ostream& os = output_stream(g, file);
    switch (g.fmt()) {
        case Format::json_fmt: {
            json arr = json::array();
            for (const auto& r : results) arr.push_back(psi_record(r));
            os << arr.dump(2) << "\n";
            break;
        }
        case Format::csv: {
            os << "x,psi,last_nonpositive,n_upper,certified,runtime_ms\n";
            for (const auto& r : results) {
                os << r.x.str() << ',' << r.psi << ',';
                if (r.last_nonpositive) os << *r.last_nonpositive;
                os << ',' << r.n_upper_used << ',' << (r.certified ? "true" : "false") << ','
                   << r.runtime_ms << "\n";
            }
            break;
        }
        case Format::human:
            for (const auto& r : results) {
                os << "x = " << r.x.str() << ": Psi = " << r.psi;
                if (r.last_nonpositive)
                    os << "  (last E_n <= 0 at n = " << *r.last_nonpositive << ")";
                else
                    os << "  (E_n > 0 for every scanned n)";
                os << "  n_upper = " << r.n_upper_used
                   << "  certified = " << (r.certified ? "yes" : "no") << "  ["
                   << static_cast<uint64_t>(r.runtime_ms) << " ms]\n";
                if (!r.indeterminate_ns.empty()) {
                    os << "  unresolved signs at n =";
                    for (uint64_t n : r.indeterminate_ns) os << ' ' << n;
                    os << "\n";
                }
            }
            break;
    }
}

int run_psi(const GlobalOpts& g, const std::vector<std::string>& x_strings, bool parallel_x) {
    std::vector<Rational> xs = parse_x_list(x_strings);

    std::vector<PsiResult> results;
    std::vector<Rational> to_scan;
    for (const auto& x : xs) {
        if (x >= Rational{2, 1}) {
            // no scan needed: the inequality holds from the start of the domain
            PsiResult r;
            r.x = x;
            r.psi = 8;
            r.n_upper_used = 8;
            r.certified = true;
            results.push_back(std::move(r));
        } else {
            to_scan.push_back(x);
        }
    }

    if (!to_scan.empty()) {
        for (const auto& x : to_scan)
            if (x < Rational{0, 1})
                std::fprintf(stderr,
                             "warning: for x < 0 the effective tail inequality is not reliable "
                             "at reachable n; treat the certificate for x = %s as heuristic\n",
                             x.str().c_str());
        ScanOptions opts = g.scan_options();
        if (parallel_x || to_scan.size() == 1) {
            auto rs = scan_psi(to_scan, opts);
            results.insert(results.end(), rs.begin(), rs.end());
        } else {
            for (const auto& x : to_scan) {
                auto rs = scan_psi({x}, opts);
                results.insert(results.end(), rs.begin(), rs.end());
            }
        }
    }

    emit_psi(results, g);
    for (const auto& r : results)
        if (!r.certified) return 2;
    return 0;
}

int run_scan_alpha(const GlobalOpts& g, uint64_t n_from, uint64_t n_to) {
    std::ofstream file;
    std::ostream& os = output_stream(g, file);
    Format f = g.fmt();
    SieveConfig cfg;
    cfg.memory_budget_bytes = g.mem_budget;

    json arr = json::array();
    if (f == Format::csv) os << "n,alpha_lo,alpha_hi\n";
    auto summary = scan_alpha_envelope(n_from, n_to, [&](const AlphaRecord& rec) {
        switch (f) {
            case Format::csv:
                os << rec.n << ',';
                os << std::setprecision(17) << rec.alpha_lo << ',' << rec.alpha_hi << "\n";
                break;
            case Format::json_fmt: {
                json j;
                j["n"] = integer_field(rec.n);
                j["alpha_lo"] = rec.alpha_lo;
                j["alpha_hi"] = rec.alpha_hi;
                arr.push_back(std::move(j));
                break;
            }
            case Format::human:
                os << "n = " << rec.n << ":  alpha in [" << std::setprecision(17) << rec.alpha_lo
                   << ", " << rec.alpha_hi << "]\n";
                break;
        }
    }, cfg);

    if (f == Format::json_fmt) {
        json out;
        out["records"] = std::move(arr);
        out["argmax_n"] = integer_field(summary.argmax_n);
        out["max_alpha_hi"] = summary.max_alpha_hi;
        os << out.dump(2) << "\n";
    } else if (f == Format::human) {
        os << "envelope max alpha_hi = " << std::setprecision(17) << summary.max_alpha_hi
           << " attained at n = " << summary.argmax_n << "\n";
    }
    return 0;
}

int run_tail_sup(const GlobalOpts& g, const std::vector<uint64_t>& ms, bool hp,
                 uint64_t scan_to, uint64_t n_cap) {
    TailOptions opts;
    opts.hp_refine = hp;
    if (scan_to) opts.scan_to = scan_to;
    if (n_cap) opts.n_cap = n_cap;
    opts.sieve.memory_budget_bytes = g.mem_budget;
    auto sups = tail_sups(ms, opts);

    std::ofstream file;
    std::ostream& os = output_stream(g, file);
    switch (g.fmt()) {
        case Format::json_fmt: {
            json arr = json::array();
            for (const auto& s : sups) {
                json j;
                j["m"] = integer_field(s.m);
                j["lo"] = s.lo;
                j["hi"] = s.hi;
                j["argmax_n"] = integer_field(s.argmax_n);
                j["certified"] = s.certified;
                j["scanned_to"] = integer_field(s.scanned_to);
                if (s.hp_digits) j["hp"] = *s.hp_digits;
                arr.push_back(std::move(j));
            }
            os << arr.dump(2) << "\n";
            break;
        }
        case Format::csv:
            os << "m,lo,hi,argmax_n,certified,scanned_to\n";
            for (const auto& s : sups)
                os << s.m << ',' << std::setprecision(17) << s.lo << ',' << s.hi << ','
                   << s.argmax_n << ',' << (s.certified ? "true" : "false") << ',' << s.scanned_to
                   << "\n";
            break;
        case Format::human:
            for (const auto& s : sups) {
                os << "A_" << s.m << " in [" << std::setprecision(17) << s.lo << ", " << s.hi
                   << "]  attained at n = " << s.argmax_n
                   << "  certified = " << (s.certified ? "yes" : "no") << "  (scanned to "
                   << s.scanned_to << ")\n";
                if (s.hp_digits) os << "  192-bit value: " << *s.hp_digits << "\n";
            }
            break;
    }
    for (const auto& s : sups)
        if (!s.certified) return 2;
    return 0;
}

int run_plateau(const GlobalOpts& g, const std::vector<uint64_t>& ms, uint64_t n_cap) {
    TailOptions opts;
    if (n_cap) opts.n_cap = n_cap;
    opts.sieve.memory_budget_bytes = g.mem_budget;
    auto rows = plateau_scale_report(ms, opts);

    std::ofstream file;
    std::ostream& os = output_stream(g, file);
    switch (g.fmt()) {
        case Format::json_fmt: {
            json arr = json::array();
            for (const auto& r : rows) {
                json j;
                j["m"] = integer_field(r.m);
                j["delta"] = r.gap;
                j["normalized"] = r.normalized;
                arr.push_back(std::move(j));
            }
            os << arr.dump(2) << "\n";
            break;
        }
        case Format::csv:
            os << "m,delta,normalized\n";
            for (const auto& r : rows)
                os << r.m << ',' << std::setprecision(17) << r.gap << ',' << r.normalized << "\n";
            break;
        case Format::human:
            for (const auto& r : rows)
                os << "m = " << r.m << ":  Delta = " << std::setprecision(12) << r.gap
                   << "   Delta * m log^2 m = " << r.normalized << "\n";
            break;
    }
    return 0;
}

int run_bound(const GlobalOpts& g, const std::string& x_str) {
    Rational x = Rational::parse(x_str);
    NUpperInfo info = n_upper_info(x);
    double cf = closed_form_bound(x);
    double as = asymptotic_psi(x);

    std::ofstream file;
    std::ostream& os = output_stream(g, file);
    switch (g.fmt()) {
        case Format::json_fmt: {
            json j;
            j["x"] = x.str();
            j["y_star"] = info.y_star;
            j["n_upper"] = info.fits ? json(integer_field(info.value)) : json(nullptr);
            j["closed_form_bound"] = cf;
            j["asymptotic"] = as;
            os << j.dump(2) << "\n";
            break;
        }
        case Format::csv:
            os << "x,y_star,n_upper,closed_form_bound,asymptotic\n";
            os << x.str() << ',' << std::setprecision(17) << info.y_star << ',';
            if (info.fits) os << info.value;
            os << ',' << cf << ',' << as << "\n";
            break;
        case Format::human:
            os << "x = " << x.str() << "\n";
            os << "  y* = " << std::setprecision(15) << info.y_star << "\n";
            if (info.fits)
                os << "  N_upper = " << info.value << "\n";
            else
                os << "  N_upper = exp(" << info.y_star << ") (beyond 64-bit range)\n";
            os << "  closed-form bound  = " << std::setprecision(6) << cf << "\n";
            os << "  asymptotic formula = " << as << "\n";
            break;
    }
    return 0;
}

int run_rh_bound(const GlobalOpts& g, const std::string& x_str,
                 const std::vector<double>& table_ns) {
    std::ofstream file;
    std::ostream& os = output_stream(g, file);

    json j;
    if (!x_str.empty()) {
        Rational x = Rational::parse(x_str);
        RhResult r = rh_n_upper(x);
        switch (g.fmt()) {
            case Format::json_fmt:
                j["x"] = x.str();
                j["solved"] = r.solved;
                j["y_star"] = r.y_star;
                j["n_rh"] = r.fits ? json(integer_field(r.n_rh)) : json(nullptr);
                break;
            case Format::csv:
                os << "x,solved,y_star,n_rh\n"
                   << x.str() << ',' << (r.solved ? "true" : "false") << ','
                   << std::setprecision(17) << r.y_star << ',';
                if (r.fits) os << r.n_rh;
                os << "\n";
                break;
            case Format::human:
                os << "x = " << x.str() << ": ";
                if (r.solved) {
                    os << "y* = " << std::setprecision(15) << r.y_star;
                    if (r.fits)
                        os << ", conditional ceiling " << r.n_rh << "\n";
                    else
                        os << ", conditional ceiling exp(" << r.y_star
                           << ") (beyond 64-bit range)\n";
                } else {
                    os << "no fixed point above y = 5; conditional bound not applicable "
                          "(floor "
                       << r.n_rh << ")\n";
                }
                break;
        }
    }

    if (!table_ns.empty()) {
        auto rows = rh_error_report(table_ns);
        switch (g.fmt()) {
            case Format::json_fmt: {
                json arr = json::array();
                for (const auto& r : rows) {
                    json row;
                    row["n"] = r.n;
                    row["uncond"] = r.e_uncond;
                    row["rh"] = r.e_rh;
                    row["ratio"] = r.ratio;
                    arr.push_back(std::move(row));
                }
                j["error_terms"] = std::move(arr);
                break;
            }
            case Format::csv:
                os << "n,uncond,rh,ratio\n";
                for (const auto& r : rows)
                    os << std::setprecision(10) << r.n << ',' << r.e_uncond << ',' << r.e_rh
                       << ',' << r.ratio << "\n";
                break;
            case Format::human:
                os << "      n        n loglog n/log^2 n   sqrt(n) log^(3/2) n      ratio\n";
                for (const auto& r : rows)
                    os << std::scientific << std::setprecision(3) << std::setw(11) << r.n
                       << "   " << std::setw(18) << r.e_uncond << "   " << std::setw(19)
                       << r.e_rh << "   " << std::setw(10) << r.ratio << "\n";
                break;
        }
    }
    if (g.fmt() == Format::json_fmt) os << j.dump(2) << "\n";
    return 0;
}

int run_verify_conjecture(const GlobalOpts& g, const std::string& which) {
    struct Case {
        std::string name;
        std::vector<std::string> xs;
        uint64_t expected;
        bool interval;
    };
    const std::vector<Case> cases = {
        {"i", {"0.9", "1.3"}, 21, true},    {"ii", {"0.5", "0.8"}, 149, true},
        {"iii", {"0.3", "0.4"}, 59875, true}, {"iv", {"0.2"}, 442414, false},
        {"v", {"0.1"}, 24154953, false},
    };

    std::vector<const Case*> selected;
    for (const auto& c : cases)
        if (which == "all" || which == c.name) selected.push_back(&c);
    if (selected.empty()) throw std::invalid_argument("unknown case '" + which + "'");

    // one pass serves every selected case
    std::vector<Rational> xs;
    for (const Case* c : selected)
        for (const auto& s : c->xs) xs.push_back(Rational::parse(s));
    ScanOptions opts = g.scan_options();
    auto results = scan_psi(xs, opts);

    auto find = [&](const std::string& s) -> const PsiResult& {
        Rational x = Rational::parse(s);
        for (const auto& r : results)
            if (r.x == x) return r;
        throw std::logic_error("missing scan result");
    };

    bool all_pass = true, any_indeterminate = false;
    for (const Case* c : selected) {
        bool certified = true, pass = true;
        std::ostringstream detail;
        for (const auto& s : c->xs) {
            const PsiResult& r = find(s);
            certified = certified && r.certified;
            pass = pass && (r.psi == c->expected);
            detail << " Psi(" << s << ") = " << r.psi;
        }
        const char* verdict = !certified ? "INDETERMINATE" : (pass ? "PASS" : "FAIL");
        std::printf("case %-3s %-13s expected %llu;%s\n", c->name.c_str(), verdict,
                    (unsigned long long)c->expected, detail.str().c_str());
        all_pass = all_pass && pass && certified;
        any_indeterminate = any_indeterminate || !certified;
    }
    if (any_indeterminate) return 2;
    return all_pass ? 0 : 1;
}

int run_verify_lemmas(const GlobalOpts& g, uint64_t samples, uint64_t limit) {
    std::mt19937_64 rng(20240811);
    SieveConfig cfg;
    cfg.memory_budget_bytes = g.mem_budget;

    uint64_t violations1 = 0, checked1 = 0;
    {
        // Lemma 1 sandwich on every integer t in [2, limit], exact pi by streaming
        PrimeCursor cursor(limit + 1000, cfg);
        uint64_t next_p = cursor.next_prime();
        uint64_t pi = 0;
        for (uint64_t t = 2; t <= limit; ++t) {
            if (t == next_p) {
                ++pi;
                next_p = cursor.next_prime();
            }
            PiBounds b = dusart_pi_bounds(static_cast<double>(t));
            ++checked1;
            double pid = static_cast<double>(pi);
            if (pid > b.upper || (b.lower && pid < *b.lower)) {
                ++violations1;
                if (violations1 == 1)
                    std::printf("lemma 1 violation at t = %llu (pi = %llu)\n",
                                (unsigned long long)t, (unsigned long long)pi);
            }
        }
    }
    std::printf("lemma 1: %llu points checked, %llu violations\n", (unsigned long long)checked1,
                (unsigned long long)violations1);

    // Lemmas 2 and 3 on random n, exact p_n / theta(p_n) along one stream
    std::vector<uint64_t> ns2, ns3;
    std::uniform_int_distribution<uint64_t> d2(3468, limit), d3(2, limit);
    for (uint64_t i = 0; i < samples; ++i) {
        ns2.push_back(d2(rng));
        ns3.push_back(d3(rng));
    }
    std::vector<uint64_t> all = ns2;
    all.insert(all.end(), ns3.begin(), ns3.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    std::map<uint64_t, std::pair<uint64_t, CertifiedReal>> at;  // n -> (p_n, theta cert)
    {
        PrimeCursor cursor(sieve_limit_for(limit), cfg);
        ThetaAccumulator theta;
        uint64_t n = 0;
        size_t idx = 0;
        while (idx < all.size()) {
            uint64_t p = cursor.next_prime();
            theta.add(cert_log(p));
            ++n;
            if (n == all[idx]) {
                at[n] = {p, theta.to_certified()};
                ++idx;
            }
        }
    }

    uint64_t violations2 = 0;
    for (uint64_t n : ns2) {
        auto [pn, th] = at[n];
        if (!(axler_pn_upper(n) >= static_cast<double>(pn))) {
            ++violations2;
            if (violations2 == 1)
                std::printf("lemma 2 violation at n = %llu (p_n = %llu)\n",
                            (unsigned long long)n, (unsigned long long)pn);
        }
    }
    std::printf("lemma 2: %llu points checked, %llu violations\n", (unsigned long long)ns2.size(),
                (unsigned long long)violations2);

    uint64_t violations3 = 0;
    for (uint64_t n : ns3) {
        auto [pn, th] = at[n];
        if (!(axler_theta_lower(n) < th.value - th.radius)) {
            ++violations3;
            if (violations3 == 1)
                std::printf("lemma 3 violation at n = %llu\n", (unsigned long long)n);
        }
    }
    std::printf("lemma 3: %llu points checked, %llu violations\n", (unsigned long long)ns3.size(),
                (unsigned long long)violations3);

    return (violations1 + violations2 + violations3) ? 1 : 0;
}

int run_plot_data(const GlobalOpts& g, const std::vector<std::string>& x_strings,
                  uint64_t n_from, uint64_t n_to, const std::vector<uint64_t>& ms) {
    fs::path dir = g.out_path.empty() ? fs::path(".") : fs::path(g.out_path);
    fs::create_directories(dir);

    int status = 0;
    {
        std::vector<Rational> xs = parse_x_list(x_strings);
        ScanOptions opts = g.scan_options();
        auto results = scan_psi(xs, opts);
        std::ofstream f(dir / "staircase.csv");
        f << "x,psi\n";
        for (const auto& r : results) {
            f << r.x.str() << ',' << r.psi << "\n";
            if (!r.certified) status = 2;
        }
    }
    {
        std::ofstream f(dir / "envelope.csv");
        f << "n,alpha_lo,alpha_hi\n";
        SieveConfig cfg;
        cfg.memory_budget_bytes = g.mem_budget;
        scan_alpha_envelope(n_from, n_to, [&](const AlphaRecord& rec) {
            f << rec.n << ',' << std::setprecision(17) << rec.alpha_lo << ',' << rec.alpha_hi
              << "\n";
        }, cfg);
    }
    {
        TailOptions topts;
        topts.sieve.memory_budget_bytes = g.mem_budget;
        auto rows = plateau_scale_report(ms, topts);
        std::ofstream f(dir / "gaps.csv");
        f << "m,delta\n";
        for (const auto& r : rows) f << r.m << ',' << std::setprecision(17) << r.gap << "\n";
    }
    std::fprintf(stderr, "wrote %s, %s, %s\n", (dir / "staircase.csv").c_str(),
                 (dir / "envelope.csv").c_str(), (dir / "gaps.csv").c_str());
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified Bonse-inequality threshold computations"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", g.out_path, "write output to this path (plot-data: directory)");
    app.add_option("--checkpoint", g.checkpoint_path, "checkpoint file for long scans");
    app.add_flag("--resume", g.resume, "resume from the checkpoint file");
    app.add_option("--checkpoint-every", g.checkpoint_every, "checkpoint cadence in scan steps")
        ->capture_default_str();
    app.add_option("--mem-budget", g.mem_budget, "sieve memory budget in bytes")
        ->capture_default_str();
    app.add_option("--report-every", g.report_every, "progress line every N scan steps");
    app.add_option("--n-max", g.n_max, "cap the scan at this n (results become uncertified)");

    auto* psi = app.add_subcommand("psi", "compute Psi(x)");
    std::vector<std::string> psi_xs;
    bool parallel_x = false;
    psi->add_option("--x", psi_xs, "x values (exact decimals or fractions)")->required();
    psi->add_flag("--parallel-x", parallel_x, "share one scan pass across all x");

    auto* scana = app.add_subcommand("scan-alpha", "alpha_n enclosures over an n range");
    uint64_t n_from = 8, n_to = 100;
    scana->add_option("--n-from", n_from, "first n")->capture_default_str();
    scana->add_option("--n-to", n_to, "last n")->capture_default_str();

    auto* tails = app.add_subcommand("tail-sup", "tail suprema A_m with certified tails");
    std::vector<uint64_t> tail_ms{8};
    bool tail_hp = false;
    uint64_t tail_scan_to = 0, tail_cap = 0;
    tails->add_option("--m", tail_ms, "m values")->capture_default_str();
    tails->add_flag("--hp", tail_hp, "refine the attained supremum at 192-bit precision");
    tails->add_option("--scan-to", tail_scan_to, "scan at least this far");
    tails->add_option("--n-cap", tail_cap, "give up (uncertified) beyond this n");

    auto* plat = app.add_subcommand("plateau", "certified plateau gaps Delta_m");
    std::vector<uint64_t> plat_ms{8, 9, 10};
    uint64_t plat_cap = 0;
    plat->add_option("--m", plat_ms, "m values")->capture_default_str();
    plat->add_option("--n-cap", plat_cap, "give up (uncertified) beyond this n");

    auto* bound = app.add_subcommand("bound", "unconditional ceilings and closed-form bounds");
    std::string bound_x;
    bound->add_option("--x", bound_x, "x value")->required();

    auto* rh = app.add_subcommand("rh-bound", "conditional (RH) ceiling and error-term table");
    std::string rh_x;
    std::vector<double> rh_ns;
    rh->add_option("--x", rh_x, "x value");
    rh->add_option("--table", rh_ns, "emit the error-term comparison at these n");

    auto* vc = app.add_subcommand("verify-conjecture", "verify the five threshold cases");
    std::string vc_case = "all";
    vc->add_option("--case", vc_case, "i, ii, iii, iv, v or all")->capture_default_str();

    auto* vl = app.add_subcommand("verify-lemmas", "sandwich checks against exact sieve data");
    uint64_t vl_samples = 100, vl_limit = 1'000'000;
    vl->add_option("--samples", vl_samples, "random n per lemma")->capture_default_str();
    vl->add_option("--limit", vl_limit, "upper end of the checked range")->capture_default_str();

    auto* pd = app.add_subcommand("plot-data", "emit staircase/envelope/gap CSV files");
    std::vector<std::string> pd_xs{"0.5", "0.8", "0.9", "1.3"};
    uint64_t pd_from = 8, pd_to = 200;
    std::vector<uint64_t> pd_ms{8, 9, 10};
    pd->add_option("--xs", pd_xs, "staircase x values")->capture_default_str();
    pd->add_option("--n-from", pd_from, "envelope range start")->capture_default_str();
    pd->add_option("--n-to", pd_to, "envelope range end")->capture_default_str();
    pd->add_option("--ms", pd_ms, "gap levels")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (psi->parsed()) return run_psi(g, psi_xs, parallel_x);
        if (scana->parsed()) return run_scan_alpha(g, n_from, n_to);
        if (tails->parsed()) return run_tail_sup(g, tail_ms, tail_hp, tail_scan_to, tail_cap);
        if (plat->parsed()) return run_plateau(g, plat_ms, plat_cap);
        if (bound->parsed()) return run_bound(g, bound_x);
        if (rh->parsed()) return run_rh_bound(g, rh_x, rh_ns);
        if (vc->parsed()) return run_verify_conjecture(g, vc_case);
        if (vl->parsed()) return run_verify_lemmas(g, vl_samples, vl_limit);
        if (pd->parsed()) return run_plot_data(g, pd_xs, pd_from, pd_to, pd_ms);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
