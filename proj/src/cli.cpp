#include "milnor/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "milnor/errors.hpp"
#include "milnor/grading.hpp"
#include "milnor/json_io.hpp"
#include "milnor/koszul.hpp"
#include "milnor/milnor.hpp"
#include "milnor/polynomial.hpp"
#include "milnor/series.hpp"

namespace milnor::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // mathematical negative verdict
constexpr int kExitUsage = 2;

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string::npos
                                          ? std::string::npos
                                          : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

Polynomial read_polynomial(const std::string& text, const std::string& vars_csv) {
    std::vector<std::string> vars;
    if (vars_csv.empty()) {
        vars = scan_variables(text);
    } else {
        for (const std::string& v : split(vars_csv, ',')) {
            const std::string name = trim(v);
            if (name.empty()) throw Error("empty variable name in --vars");
            vars.push_back(name);
        }
    }
    if (vars.empty())
        throw Error("polynomial has no variables; pass --vars explicitly");
    return parse_polynomial(text, vars);
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string series_to_string(const TruncatedSeries& s) {
    std::ostringstream os;
    for (std::int64_t i = 0; i <= s.order(); ++i) {
        if (i) os << " ";
        os << s.at(i).get_str();
    }
    return os.str();
}

std::string dims_to_string(const std::vector<std::int64_t>& dims) {
    std::ostringstream os;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) os << " ";
        os << dims[i];
    }
    return os.str();
}

void print_report_plain(std::ostream& out, const MilnorReport& r) {
    out << "type: " << r.weight_system.to_string() << "\n";
    out << "mu_formula: " << r.mu_formula.get_str() << "\n";
    out << "mu_series: "
        << (r.mu_series ? r.mu_series->get_str() : std::string("not a polynomial"))
        << "\n";
    out << "mu_oracle: "
        << (r.mu_oracle ? r.mu_oracle->get_str() : std::string("not isolated"))
        << "\n";
    out << "isolated: " << (r.isolated ? "true" : "false") << "\n";
    out << "consistent: " << (r.consistent ? "true" : "false") << "\n";
    out << "dims: " << dims_to_string(r.per_degree_dims) << "\n";
}

// ---- subcommand option bundles -------------------------------------------

struct InferOpts {
    std::string poly, vars, format = "plain";
};

struct MuOpts {
    std::string poly, vars, weights, type, format = "plain";
};

struct HilbertOpts {
    std::string type, format = "plain";
    std::int64_t order = -1;  // default rd
};

struct LemmaOpts {
    std::string type, format = "plain";
};

struct KoszulOpts {
    std::string poly, vars, weights, format = "plain";
    std::int64_t max_degree = -1;  // default B + W
};

struct CorpusOpts {
    std::string file, format = "plain";
};

int run_infer(const InferOpts& o, std::ostream& out) {
    Polynomial p = read_polynomial(o.poly, o.vars);
    WeightSystem ws = infer_weight_system(p);
    if (o.format == "json")
        emit(out, to_json(ws));
    else
        out << "type: " << ws.to_string() << "\n";
    return kExitOk;
}

int run_mu(const MuOpts& o, std::ostream& out) {
    if (!o.type.empty()) {
        // No polynomial: formula and series routes only.
        WeightSystem ws = parse_weight_system(o.type);
        mpq_class formula = mu_formula(ws);
        std::optional<mpz_class> mu_series;
        try {
            mu_series = evaluate_at_one(milnor_poincare_polynomial(ws));
        } catch (const NotPolynomial&) {
        }
        if (o.format == "json") {
            json j;
            j["weights"] = ws.weights;
            j["degree"] = ws.degree;
            j["mu_formula"] = formula.get_str();
            j["mu_series"] = mu_series && mu_series->fits_slong_p()
                                 ? json(mu_series->get_si())
                                 : (mu_series ? json(mu_series->get_str())
                                              : json(nullptr));
            emit(out, j);
        } else {
            out << "type: " << ws.to_string() << "\n";
            out << "mu_formula: " << formula.get_str() << "\n";
            out << "mu_series: "
                << (mu_series ? mu_series->get_str()
                              : std::string("not a polynomial"))
                << "\n";
        }
        return mu_series ? kExitOk : kExitNegative;
    }

    Polynomial p = read_polynomial(o.poly, o.vars);
    std::optional<WeightSystem> ws;
    if (!o.weights.empty()) ws = parse_weight_system(o.weights);
    MilnorReport report = full_report(p, ws);
    if (o.format == "json")
        emit(out, to_json(report));
    else
        print_report_plain(out, report);
    return report.isolated && report.consistent ? kExitOk : kExitNegative;
}

int run_hilbert(const HilbertOpts& o, std::ostream& out) {
    WeightSystem ws = parse_weight_system(o.type);
    const std::int64_t order =
        o.order >= 0 ? o.order
                     : static_cast<std::int64_t>(ws.variable_count()) * ws.degree;
    TruncatedSeries series = ring_hilbert_series(ws.weights, order);
    std::optional<IntegerPolynomial> poincare;
    try {
        poincare = milnor_poincare_polynomial(ws);
    } catch (const NotPolynomial&) {
    }
    if (o.format == "json") {
        json j;
        j["type"] = to_json(ws);
        j["order"] = order;
        j["ring_series"] = to_json(series);
        j["poincare"] = poincare ? to_json(*poincare) : json(nullptr);
        if (poincare) {
            mpz_class mu = evaluate_at_one(*poincare);
            j["mu_series"] = mu.fits_slong_p() ? json(mu.get_si()) : json(mu.get_str());
        } else {
            j["mu_series"] = json(nullptr);
        }
        emit(out, j);
    } else {
        out << "type: " << ws.to_string() << "\n";
        out << "order: " << order << "\n";
        out << "ring_series: " << series_to_string(series) << "\n";
        out << "poincare: "
            << (poincare ? poincare->to_string() : std::string("not a polynomial"))
            << "\n";
        if (poincare)
            out << "mu_series: " << evaluate_at_one(*poincare).get_str() << "\n";
    }
    return poincare ? kExitOk : kExitNegative;
}

int run_lemma(const LemmaOpts& o, std::ostream& out) {
    WeightSystem ws = parse_weight_system(o.type);
    IntegerPolynomial product = product_numerator(ws);
    IntegerPolynomial expansion = lemma_expansion(ws);
    const bool equal = product == expansion;
    if (o.format == "json") {
        json j;
        j["type"] = to_json(ws);
        j["product"] = to_json(product);
        j["expansion"] = to_json(expansion);
        j["equal"] = equal;
        emit(out, j);
    } else {
        out << "type: " << ws.to_string() << "\n";
        out << "product:   " << product.to_string() << "\n";
        out << "expansion: " << expansion.to_string() << "\n";
        out << "equal: " << (equal ? "yes" : "no") << "\n";
    }
    return equal ? kExitOk : kExitNegative;
}

int run_koszul(const KoszulOpts& o, std::ostream& out) {
    Polynomial p = read_polynomial(o.poly, o.vars);
    WeightSystem ws = o.weights.empty() ? infer_weight_system(p)
                                        : parse_weight_system(o.weights);
    const std::int64_t alpha_max =
        o.max_degree >= 0 ? o.max_degree : socle_bound(ws) + ws.max_weight();
    GradedFreeResolution res = koszul_shifts(ws);
    ExactnessReport report = verify_exactness(p, ws, alpha_max);
    const bool ok =
        report.all_exact && report.compositions_zero && report.coker_matches;

    if (o.format == "json") {
        json shifts = json::array();
        for (const auto& term : res.terms) {
            json row = json::array();
            for (const KoszulGenerator& gen : term) row.push_back(gen.shift);
            shifts.push_back(std::move(row));
        }
        json j;
        j["type"] = to_json(ws);
        j["alpha_max"] = alpha_max;
        j["shifts"] = std::move(shifts);
        j["report"] = to_json(report);
        emit(out, j);
    } else {
        out << "type: " << ws.to_string() << "\n";
        for (std::size_t k = 0; k < res.terms.size(); ++k) {
            out << "shifts k=" << k << ":";
            for (const KoszulGenerator& gen : res.terms[k]) out << " " << gen.shift;
            out << "\n";
        }
        for (const SliceResult& s : report.slices) {
            out << "alpha=" << s.alpha << " k=" << s.k << " rank=" << s.rank
                << " ker=" << s.kernel_dim << " exact=" << (s.exact ? "yes" : "no")
                << " dd_zero=" << (s.composition_zero ? "yes" : "no") << "\n";
        }
        out << "coker_dims: " << dims_to_string(report.coker_dims) << "\n";
        if (report.expected_coker) {
            out << "expected:   ";
            for (std::size_t i = 0; i < report.expected_coker->size(); ++i)
                out << (i ? " " : "") << (*report.expected_coker)[i].get_str();
            out << "\n";
        } else {
            out << "expected:   not a polynomial\n";
        }
        out << "all_exact: " << (report.all_exact ? "true" : "false") << "\n";
        out << "compositions_zero: "
            << (report.compositions_zero ? "true" : "false") << "\n";
        out << "coker_matches: " << (report.coker_matches ? "true" : "false")
            << "\n";
    }
    return ok ? kExitOk : kExitNegative;
}

struct CorpusCase {
    std::string name;
    std::string poly;
    std::optional<mpz_class> expected_mu;  // absent means NONISOLATED
};

std::vector<CorpusCase> read_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open corpus file '" + path + "'");
    std::vector<CorpusCase> cases;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const auto fields = split(stripped, ';');
        if (fields.size() != 3)
            throw Error("corpus line " + std::to_string(lineno) +
                        ": expected \"name ; polynomial ; expected\"");
        CorpusCase c;
        c.name = trim(fields[0]);
        c.poly = trim(fields[1]);
        const std::string expected = trim(fields[2]);
        if (c.name.empty() || c.poly.empty() || expected.empty())
            throw Error("corpus line " + std::to_string(lineno) +
                        ": empty field");
        if (expected != "NONISOLATED") {
            for (char ch : expected)
                if (ch < '0' || ch > '9')
                    throw Error("corpus line " + std::to_string(lineno) +
                                ": expected an integer or NONISOLATED, got '" +
                                expected + "'");
            c.expected_mu = mpz_class(expected, 10);
        }
        cases.push_back(std::move(c));
    }
    return cases;
}

int run_corpus(const CorpusOpts& o, std::ostream& out) {
    const std::vector<CorpusCase> cases = read_corpus(o.file);
    bool all_ok = true;
    json results = json::array();

    for (const CorpusCase& c : cases) {
        bool ok = false;
        std::string detail;
        std::optional<MilnorReport> report;
        try {
            Polynomial p = read_polynomial(c.poly, "");
            report = full_report(p);
            if (c.expected_mu) {
                ok = report->isolated && report->consistent &&
                     report->mu_oracle && *report->mu_oracle == *c.expected_mu;
                detail = report->mu_oracle
                             ? "mu=" + report->mu_oracle->get_str()
                             : "not isolated";
                if (!ok && report->mu_oracle &&
                    *report->mu_oracle != *c.expected_mu)
                    detail += " (expected " + c.expected_mu->get_str() + ")";
            } else {
                ok = !report->isolated;
                detail = report->isolated ? "unexpectedly isolated"
                                          : "not isolated, as annotated";
            }
        } catch (const Error& e) {
            detail = e.what();
        }
        all_ok = all_ok && ok;

        if (o.format == "json") {
            json r;
            r["name"] = c.name;
            r["expected"] =
                c.expected_mu ? json(c.expected_mu->get_str()) : json("NONISOLATED");
            r["ok"] = ok;
            r["detail"] = detail;
            if (report) r["report"] = to_json(*report);
            results.push_back(std::move(r));
        } else {
            out << (ok ? "ok   " : "FAIL ") << c.name << ": " << detail << "\n";
        }
    }

    if (o.format == "json") {
        json j;
        j["cases"] = std::move(results);
        j["all_ok"] = all_ok;
        emit(out, j);
    } else {
        out << (all_ok ? "all cases consistent" : "corpus has failures") << "\n";
    }
    return all_ok ? kExitOk : kExitNegative;
}

void add_format_option(CLI::App* cmd, std::string& fmt) {
    cmd->add_option("--format", fmt, "output format (plain|json)")
        ->check(CLI::IsMember({"plain", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{
        "Milnor numbers of weighted-homogeneous isolated singularities,\n"
        "computed three independent ways and cross-checked."};
    app.require_subcommand(1);

    InferOpts infer_opts;
    auto* infer = app.add_subcommand(
        "infer", "infer the weight system of a polynomial");
    infer->add_option("--poly", infer_opts.poly, "polynomial text")->required();
    infer->add_option("--vars", infer_opts.vars,
                      "comma-separated variable order (default: order of "
                      "first occurrence)");
    add_format_option(infer, infer_opts.format);

    MuOpts mu_opts;
    auto* mu = app.add_subcommand(
        "mu", "Milnor number by formula, series division and rank oracle");
    auto* mu_poly = mu->add_option("--poly", mu_opts.poly, "polynomial text");
    auto* mu_type = mu->add_option(
        "--type", mu_opts.type,
        "weight system \"w1,...,wr;d\"; formula and series routes only");
    auto* mu_vars = mu->add_option("--vars", mu_opts.vars,
                                   "comma-separated variable order");
    auto* mu_weights = mu->add_option("--weights", mu_opts.weights,
                                       "weight system \"w1,...,wr;d\" "
                                       "(default: inferred)");
    mu_poly->excludes(mu_type);
    mu_type->excludes(mu_poly, mu_vars, mu_weights);
    add_format_option(mu, mu_opts.format);

    HilbertOpts hilbert_opts;
    auto* hilbert = app.add_subcommand(
        "hilbert", "ring Hilbert series and Milnor Poincare polynomial");
    hilbert->add_option("--type", hilbert_opts.type, "weight system")->required();
    hilbert->add_option("--order", hilbert_opts.order,
                        "truncation order (default: r*d)");
    add_format_option(hilbert, hilbert_opts.format);

    LemmaOpts lemma_opts;
    auto* lemma = app.add_subcommand(
        "lemma",
        "check the subset expansion of prod (1 - t^(d-w_i)) literally");
    lemma->add_option("--type", lemma_opts.type, "weight system")->required();
    add_format_option(lemma, lemma_opts.format);

    KoszulOpts koszul_opts;
    auto* koszul = app.add_subcommand(
        "koszul", "Koszul shifts and degreewise exactness verification");
    koszul->add_option("--poly", koszul_opts.poly, "polynomial text")->required();
    koszul->add_option("--vars", koszul_opts.vars,
                       "comma-separated variable order");
    koszul->add_option("--weights", koszul_opts.weights,
                       "weight system (default: inferred)");
    koszul->add_option("--max-degree", koszul_opts.max_degree,
                       "check degrees 0..A (default: socle bound + max weight)");
    add_format_option(koszul, koszul_opts.format);

    CorpusOpts corpus_opts;
    auto* corpus = app.add_subcommand(
        "corpus", "run a file of cases: name ; polynomial ; mu|NONISOLATED");
    corpus->add_option("--file", corpus_opts.file, "corpus file")->required();
    add_format_option(corpus, corpus_opts.format);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("milnor");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (infer->parsed()) return run_infer(infer_opts, out);
        if (mu->parsed()) {
            if (mu_opts.poly.empty() && mu_opts.type.empty())
                throw Error("mu needs --poly or --type");
            return run_mu(mu_opts, out);
        }
        if (hilbert->parsed()) return run_hilbert(hilbert_opts, out);
        if (lemma->parsed()) return run_lemma(lemma_opts, out);
        if (koszul->parsed()) return run_koszul(koszul_opts, out);
        if (corpus->parsed()) return run_corpus(corpus_opts, out);
    } catch (const NotIsolated& e) {
        err << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const NotPolynomial& e) {
        err << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const NotWeightedHomogeneous& e) {
        err << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const AmbiguousWeights& e) {
        err << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const NotHomogeneous& e) {
        err << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const DegreeUnderflow& e) {
        err << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace milnor::cli
