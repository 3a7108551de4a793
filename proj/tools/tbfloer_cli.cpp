// Command-line calculator for Heegaard Floer homologies of integer
// surgeries on two-bridge knots, plus the classical invariants.

#include "tbfloer/tbfloer.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace tbfloer;

std::string describe(const UModule& module) {
    UModule m = module.canonical();
    if (m.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " (+) ";
        first = false;
    };
    for (const auto& f : m.free_parts) {
        sep();
        os << "Z";
        if (f.rank != 1) os << "^" << f.rank;
        if (f.grading) os << " at grading " << *f.grading;
    }
    for (const auto& t : m.torsion_parts) {
        sep();
        os << "Z[u^-1]/u^-" << t.length;
        if (t.bottom) os << " with bottom " << *t.bottom;
    }
    for (const auto& t : m.towers) {
        sep();
        os << (t.downward ? "Z[u]" : "Z[u^-1]");
        if (t.grading) os << (t.downward ? " with top " : " with bottom ") << *t.grading;
    }
    if (m.twisted) os << "  [finite part tensored with Z[T,T^-1]]";
    return os.str();
}

int run_invariants(long long p, long long q, bool as_json) {
    TwoBridgeKnot k = normalize(p, q);
    if (as_json) {
        std::cout << invariants_record(k).dump() << "\n";
        return 0;
    }
    AlexanderData d = alexander_data(k);
    LaurentPoly delta = alexander_polynomial(d);
    long long det = delta.evaluate_at_minus_one();
    if (det < 0) det = -det;
    DInvariants di = d_invariants(k);
    std::cout << k.name() << "\n";
    std::cout << "  alexander    = " << delta.to_string() << "\n";
    std::cout << "  coefficients = ";
    auto cs = delta.dense_coefficients(-d.genus, d.genus);
    for (std::size_t i = 0; i < cs.size(); ++i) std::cout << (i ? ";" : "") << cs[i];
    std::cout << "  (t^" << -d.genus << " .. t^" << d.genus << ")\n";
    std::cout << "  signature    = " << d.signature << "\n";
    std::cout << "  genus        = " << d.genus << "\n";
    std::cout << "  determinant  = " << det << "\n";
    std::cout << "  amphichiral  = " << (is_amphichiral(k) ? "yes" : "no") << "\n";
    std::cout << "  d(K^1)       = " << di.d_plus1 << "\n";
    std::cout << "  d(K^-1)      = " << di.d_minus1 << "\n";
    return 0;
}

UModule hf_for(const TwoBridgeKnot& k, const std::string& surgery, long long spinc) {
    if (surgery == "large") return hf_plus_large_surgery(k, spinc);
    long long n = std::stoll(surgery);
    if (n == 0) return hf_plus_zero_surgery(k, spinc);
    if (n > 0) return hf_plus_n_surgery(k, n, spinc);
    return hf_plus_negative_surgery(k, -n, spinc);
}

int run_hf(long long p, long long q, const std::string& surgery, const std::string& spinc,
           bool as_json) {
    TwoBridgeKnot k = normalize(p, q);
    std::vector<long long> labels;
    if (spinc == "all") {
        long long hi;
        if (surgery == "large" || surgery == "0") {
            hi = genus(k);
        } else {
            long long n = std::stoll(surgery);
            hi = (n < 0 ? -n : n) - 1;
        }
        for (long long s = 0; s <= hi; ++s) labels.push_back(s);
    } else {
        labels.push_back(std::stoll(spinc));
    }

    if (as_json) {
        if (labels.size() == 1) {
            std::cout << to_json(hf_for(k, surgery, labels[0])).dump() << "\n";
        } else {
            json arr = json::array();
            for (long long s : labels)
                arr.push_back(json{{"spinc", s}, {"module", to_json(hf_for(k, surgery, s))}});
            std::cout << arr.dump() << "\n";
        }
        return 0;
    }
    for (long long s : labels)
        std::cout << "HF^+(" << k.name() << "; surgery=" << surgery << ", spinc=" << s
                  << ") = " << describe(hf_for(k, surgery, s)) << "\n";
    return 0;
}

int run_stable(long long p, long long q, std::optional<long long> reflect_level,
               const std::string& svg_path) {
    TwoBridgeKnot k = normalize(p, q);
    ModelComplex m = stable_complex(k);
    if (reflect_level) m = reflect(m, *reflect_level);
    std::cout << (reflect_level ? "reflected complex of " : "stable complex of ") << k.name();
    if (reflect_level) std::cout << " at level " << *reflect_level;
    std::cout << "\n  gradings:";
    for (long long g : m.grading_vector()) std::cout << " " << g;
    std::cout << "\n  arrows:";
    bool anyArrow = false;
    for (const auto& a : m.arrows) {
        if (!a.active) continue;
        anyArrow = true;
        std::cout << " " << m.generators[a.source].label << "->" << m.generators[a.target].label
                  << "(" << (a.kind == ArrowKind::interior ? "interior" : "exterior") << ")";
    }
    if (!anyArrow) std::cout << " none";
    std::cout << "\n";
    if (!svg_path.empty()) {
        write_svg(m, svg_path);
        std::cout << "  wrote " << svg_path << "\n";
    }
    return 0;
}

int run_census(long long max_p, const std::string& out_path) {
    auto rows = census_rows(max_p);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("census: cannot open '" + out_path + "' for writing");
        os = &file;
    }
    *os << census_csv_header() << "\n";
    for (const auto& r : rows) *os << census_csv_row(r) << "\n";
    if (!out_path.empty() && !file)
        throw std::runtime_error("census: failed while writing '" + out_path + "'");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Floer homologies of integer surgeries on two-bridge knots"};
    app.require_subcommand(1);

    long long p = 0, q = 0, max_p = 0;
    std::string surgery, spinc, svg_path, out_path;
    long long reflect_level = 0;
    bool as_json = false;

    auto* inv = app.add_subcommand("invariants", "classical invariants of K(p,q)");
    inv->add_option("--p", p)->required();
    inv->add_option("--q", q)->required();
    inv->add_flag("--json", as_json);

    auto* hf = app.add_subcommand("hf", "HF^+ of a surgery on K(p,q)");
    hf->add_option("--p", p)->required();
    hf->add_option("--q", q)->required();
    hf->add_option("--surgery", surgery, "large, 0, or a nonzero integer n")->required();
    hf->add_option("--spinc", spinc, "Spin^c label k, or 'all'")->required();
    hf->add_flag("--json", as_json);

    auto* stable = app.add_subcommand("stable", "stable / reflected model complex of K(p,q)");
    stable->add_option("--p", p)->required();
    stable->add_option("--q", q)->required();
    auto* refl_opt = stable->add_option("--reflect", reflect_level, "reflection level k");
    stable->add_option("--svg", svg_path, "write an SVG diagram to this path");

    auto* census = app.add_subcommand("census", "CSV census of knots with p <= N");
    census->add_option("--max-p", max_p)->required();
    census->add_option("--out", out_path, "output file (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (inv->parsed()) return run_invariants(p, q, as_json);
        if (hf->parsed()) return run_hf(p, q, surgery, spinc, as_json);
        if (stable->parsed())
            return run_stable(p, q,
                              refl_opt->count() ? std::optional<long long>(reflect_level)
                                                : std::nullopt,
                              svg_path);
        if (census->parsed()) return run_census(max_p, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
