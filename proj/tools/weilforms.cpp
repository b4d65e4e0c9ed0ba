// Command-line front end: parses options, owns the worker pool and the density cache, and
// prints results as JSON (default) or as an aligned table.

#include "weilforms/classnum.hpp"
#include "weilforms/cuspgen.hpp"
#include "weilforms/dimensions.hpp"
#include "weilforms/eisenstein.hpp"
#include "weilforms/error.hpp"
#include "weilforms/parallel.hpp"
#include "weilforms/quadmod.hpp"
#include "weilforms/serialize.hpp"
#include "weilforms/thetalift.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::ordered_json;
using namespace weilforms;

namespace {

struct Settings {
    std::string output = "json";
    unsigned jobs = 1;
    std::string cache_dir;
    bool no_cache = false;
};

struct GramArgs {
    std::string path;
    bool negate = false;
};

class Table {
public:
    explicit Table(std::vector<std::string> header) : rows_{std::move(header)} {}
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void print(std::ostream& os) const {
        std::vector<std::size_t> width;
        for (const auto& row : rows_)
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (width.size() <= i) width.push_back(0);
                width[i] = std::max(width[i], row[i].size());
            }
        for (const auto& row : rows_) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                os << row[i];
                if (i + 1 < row.size()) os << std::string(width[i] - row[i].size() + 2, ' ');
            }
            os << '\n';
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::shared_ptr<const DensityCache> open_cache(const Settings& s) {
    if (s.no_cache) return nullptr;
    std::string dir = s.cache_dir;
    if (dir.empty()) {
        const char* env = std::getenv("WEILFORMS_CACHE");
        dir = env && *env ? env : "./.weilforms-cache";
    }
    return std::make_shared<const DensityCache>(dir);
}

ParallelFor pool(const Settings& s) { return threaded_for(s.jobs); }

EvenLattice load_lattice(const GramArgs& g) { return EvenLattice(read_gram_file(g.path, g.negate).gram); }

HalfInteger parse_weight(const std::string& text) { return HalfInteger::from_rational(parse_rational(text)); }

RationalVector parse_vector(const std::string& text) {
    RationalVector v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(parse_rational(item));
    return v;
}

void add_gram(CLI::App* sub, GramArgs& g) {
    sub->add_option("--gram", g.path, "JSON file {\"gram\": [[...]]}")->required()->check(CLI::ExistingFile);
    sub->add_flag("--negate", g.negate, "use the negated Gram matrix");
}

json vector_json(const RationalVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

void emit_qexpansion(const Settings& s, const QExpansion& f) {
    if (s.output == "json") {
        std::cout << qexpansion_to_json(f) << '\n';
        return;
    }
    Table t({"gamma", "n", "c"});
    for (const auto& [key, c] : f.coeffs())
        t.add({f.module().element_label(key.first), to_string(key.second), to_string(c)});
    t.print(std::cout);
}

void emit_json_or_table(const Settings& s, const json& doc, const Table& table) {
    if (s.output == "json")
        std::cout << doc.dump(2) << '\n';
    else
        table.print(std::cout);
}

// Subcommands.

void run_fqm_info(const Settings& s, const GramArgs& g) {
    const FiniteQuadraticModule A(load_lattice(g));
    json doc;
    doc["orders"] = A.orders();
    doc["size"] = A.size();
    doc["signature"] = A.signature();
    json elements = json::array();
    Table t({"element", "coords", "Q", "order-2"});
    for (const auto& e : A.elements()) {
        elements.push_back({{"coords", e},
                            {"dual", vector_json(A.dual_vector(e))},
                            {"q", to_string(A.qvalue(e))},
                            {"two_torsion", A.is_two_torsion(e)}});
        std::string coords;
        for (std::size_t i = 0; i < e.size(); ++i) coords += (i ? "," : "") + std::to_string(e[i]);
        t.add({A.element_label(e), "[" + coords + "]", to_string(A.qvalue(e)), A.is_two_torsion(e) ? "yes" : "no"});
    }
    doc["elements"] = std::move(elements);
    if (s.output == "table")
        std::cout << "|A| = " << A.size() << ", signature " << A.signature() << "\n";
    emit_json_or_table(s, doc, t);
}

void run_dim(const Settings& s, const GramArgs& g, const std::string& weight) {
    const FiniteQuadraticModule A(load_lattice(g));
    const DimensionReport rep = dim_antisymmetric(A, parse_weight(weight));
    if (s.output == "json") {
        std::cout << dimension_report_to_json(rep) << '\n';
        return;
    }
    Table t({"field", "value"});
    t.add({"weight", rep.weight.str()});
    t.add({"dim_m", std::to_string(rep.dim_m)});
    t.add({"dim_s", std::to_string(rep.dim_s)});
    t.add({"alpha4_tilde", std::to_string(rep.alpha4_tilde)});
    t.add({"b1", to_string(rep.b1)});
    t.add({"b2", to_string(rep.b2)});
    t.add({"d_pairs", std::to_string(rep.d_pairs)});
    t.add({"numeric_residual", std::to_string(rep.numeric_residual)});
    t.print(std::cout);
}

void run_eisenstein(const Settings& s, const GramArgs& g, const std::string& weight, const std::string& prec) {
    emit_qexpansion(s, eisenstein_qexp(load_lattice(g), parse_weight(weight), parse_rational(prec), pool(s),
                                       open_cache(s)));
}

void run_r_series(const Settings& s, const GramArgs& g, const std::string& weight, const std::string& m,
                  const std::string& beta, const std::string& prec) {
    const EvenLattice L = load_lattice(g);
    const FiniteQuadraticModule A(L);
    const CuspIndex idx{parse_rational(m), A.from_dual(parse_vector(beta))};
    emit_qexpansion(s, r_series(L, parse_weight(weight), idx, parse_rational(prec), pool(s), open_cache(s)));
}

void run_cusp_basis(const Settings& s, const GramArgs& g, const std::string& weight, const std::string& prec) {
    const EvenLattice L = load_lattice(g);
    CuspBasisOptions opts;
    if (!prec.empty()) opts.output_prec = parse_rational(prec);
    opts.pfor = pool(s);
    opts.disk = open_cache(s);
    const auto basis = cusp_basis(L, parse_weight(weight), opts);
    const FiniteQuadraticModule A(L);
    json doc;
    doc["weight"] = weight;
    doc["size"] = basis.size();
    json entries = json::array();
    Table t({"m", "beta", "nonzero coefficients"});
    for (const auto& entry : basis) {
        entries.push_back({{"m", to_string(entry.index.m)},
                           {"beta", entry.index.beta},
                           {"beta_dual", vector_json(A.dual_vector(entry.index.beta))},
                           {"series", json::parse(qexpansion_to_json(entry.series))}});
        t.add({to_string(entry.index.m), A.element_label(entry.index.beta),
               std::to_string(entry.series.coeffs().size())});
    }
    doc["basis"] = std::move(entries);
    emit_json_or_table(s, doc, t);
}

void run_weight3(const Settings& s, long N, const std::string& prec, bool parts) {
    if (!parts) {
        emit_qexpansion(s, weight3_cyclic(N, parse_rational(prec)));
        return;
    }
    const Weight3Parts w = weight3_parts(N, parse_rational(prec));
    const auto& A = w.total.module();
    json doc;
    doc["N"] = N;
    json rows = json::array();
    Table t({"gamma", "n", "holomorphic", "correction", "total"});
    for (const auto& g : A.elements())
        for (const auto& n : w.total.exponents(g)) {
            if (n == 0) continue;
            const Rational h = w.holomorphic.coeff(g, n), c = w.correction.coeff(g, n), b = w.total.coeff(g, n);
            rows.push_back({{"gamma", g},
                            {"n", to_string(n)},
                            {"holomorphic", to_string(h)},
                            {"correction", to_string(c)},
                            {"total", to_string(b)}});
            t.add({A.element_label(g), to_string(n), to_string(h), to_string(c), to_string(b)});
        }
    doc["rows"] = std::move(rows);
    emit_json_or_table(s, doc, t);
}

void emit_orthogonal(const Settings& s, const OrthogonalExpansion& f, OrthogonalView view) {
    if (s.output == "json") {
        std::cout << orthogonal_to_json(f, view) << '\n';
        return;
    }
    if (view == OrthogonalView::Scalar) {
        Table t({"height", "c"});
        for (const auto& [h, c] : scalar_series(f)) t.add({to_string(h), to_string(c)});
        t.print(std::cout);
        return;
    }
    Table t({view == OrthogonalView::Hilbert ? "nu" : "r", "height", "c"});
    std::vector<std::pair<Rational, RationalVector>> order;
    for (const auto& [r, c] : f.coeffs) order.emplace_back(f.height(r), r);
    std::sort(order.begin(), order.end());
    for (const auto& [h, r] : order) {
        std::string label;
        if (view == OrthogonalView::Hilbert) {
            label = hilbert_label(r);
        } else {
            for (std::size_t i = 0; i < r.size(); ++i) label += (i ? "," : "(") + to_string(r[i]);
            label += ")";
        }
        t.add({label, to_string(h), to_string(f.coeff(r))});
    }
    t.print(std::cout);
}

void run_theta_lift(const Settings& s, const std::string& gram_path, const std::string& input, long k,
                    const std::string& bound, const std::string& format) {
    const GramFile gf = read_gram_file(gram_path);
    LorentzianGram g{gf.gram, {}};
    if (gf.seed) {
        g.seed = *gf.seed;
    } else {
        g.seed.assign(g.s.size(), Rational(0));
        if (!g.seed.empty()) g.seed[0] = 1;
    }
    const QExpansion F = qexpansion_from_json(read_text_file(input));
    emit_orthogonal(s, theta_lift(F, g, k, parse_rational(bound)), parse_orthogonal_view(format));
}

void run_doi_naganuma(const Settings& s, long D, const std::string& input, const std::string& bound,
                      const std::string& format) {
    const QExpansion F = qexpansion_from_json(read_text_file(input));
    emit_orthogonal(s, doi_naganuma(D, F, parse_rational(bound)), parse_orthogonal_view(format));
}

void run_class_identity(const Settings& s, const std::string& prop10, bool remark12, long n_max) {
    if (prop10.empty() == !remark12) fail_input("bad-arguments", "choose exactly one of --prop10 and --remark12");
    if (n_max < 0) fail_input("bad-arguments", "--n-max must be nonnegative");
    json rows = json::array();
    bool all_equal = true;
    if (remark12) {
        Table t({"n", "lhs1", "lhs2", "rhs", "equal"});
        for (long n = 1; n <= n_max; ++n) {
            const Remark12Result r = remark12_check(n);
            all_equal = all_equal && r.equal;
            rows.push_back({{"n", n},
                            {"lhs1", to_string(r.lhs1)},
                            {"lhs2", to_string(r.lhs2)},
                            {"rhs", to_string(r.rhs)},
                            {"equal", r.equal}});
            t.add({std::to_string(n), to_string(r.lhs1), to_string(r.lhs2), to_string(r.rhs), r.equal ? "true" : "false"});
        }
        emit_json_or_table(s, json{{"identity", "remark12"}, {"all_equal", all_equal}, {"rows", rows}}, t);
        return;
    }
    int variant = 0;
    if (prop10 == "i" || prop10 == "1") variant = 1;
    if (prop10 == "ii" || prop10 == "2") variant = 2;
    if (variant == 0) fail_input("bad-variant", "--prop10 takes i or ii");
    Table t({"n", "lhs", "rhs", "equal"});
    for (long n = 0; n <= n_max; ++n) {
        const Prop10Result r = prop10_check(variant, n);
        all_equal = all_equal && r.equal;
        rows.push_back({{"n", n}, {"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}, {"equal", r.equal}});
        t.add({std::to_string(n), to_string(r.lhs), to_string(r.rhs), r.equal ? "true" : "false"});
    }
    emit_json_or_table(s, json{{"identity", "prop10-" + prop10}, {"all_equal", all_equal}, {"rows", rows}}, t);
}

void run_hurwitz(const Settings& s, long d) {
    if (d < 0) fail_input("bad-arguments", "--d must be nonnegative");
    const Rational h = hurwitz(d);
    if (s.output == "json")
        std::cout << json(to_string(h)).dump() << '\n';
    else
        std::cout << to_string(h) << '\n';
}

int report(const Error& e) {
    std::cerr << error_to_json(e) << '\n';
    return e.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Antisymmetric vector-valued cusp forms, theta lifts and class-number identities"};
    app.require_subcommand(1);
    Settings s;
    app.add_option("--output", s.output, "json or table")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--jobs", s.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", s.cache_dir, "density cache directory (default $WEILFORMS_CACHE or ./.weilforms-cache)");
    app.add_flag("--no-cache", s.no_cache, "disable the on-disk density cache");

    GramArgs gram;
    std::string weight, prec, m, beta, bound, input, format = "lattice", prop10;
    long N = 0, D = 0, d = 0, k = 0, n_max = 10;
    bool parts = false, remark12 = false;

    auto* fqm = app.add_subcommand("fqm-info", "discriminant module of a Gram matrix");
    add_gram(fqm, gram);

    auto* dim = app.add_subcommand("dim", "dimensions of M_k and S_k for an antisymmetric weight");
    add_gram(dim, gram);
    dim->add_option("--weight", weight)->required();

    auto* eis = app.add_subcommand("eisenstein", "Eisenstein series coefficients");
    add_gram(eis, gram);
    eis->add_option("--weight", weight)->required();
    eis->add_option("--prec", prec)->required();

    auto* rs = app.add_subcommand("r-series", "cusp form R_{k,m,beta}");
    add_gram(rs, gram);
    rs->add_option("--weight", weight)->required();
    rs->add_option("--m", m)->required();
    rs->add_option("--beta", beta, "dual vector, comma separated rationals")->required();
    rs->add_option("--prec", prec)->required();

    auto* cb = app.add_subcommand("cusp-basis", "R-series spanning S_k");
    add_gram(cb, gram);
    cb->add_option("--weight", weight)->required();
    cb->add_option("--prec", prec, "precision of the returned expansions");

    auto* w3 = app.add_subcommand("weight3", "weight-three form for the cyclic module of order N");
    w3->add_option("--n", N)->required();
    w3->add_option("--prec", prec)->required();
    w3->add_flag("--parts", parts, "list holomorphic and correction parts separately");

    auto* tl = app.add_subcommand("theta-lift", "orthogonal lift of a cusp form for the module of -S");
    tl->add_option("--gram", gram.path, "JSON file with the Lorentzian S and optional seed")
        ->required()
        ->check(CLI::ExistingFile);
    tl->add_option("--input", input, "QExpansion JSON")->required()->check(CLI::ExistingFile);
    tl->add_option("--weight", k, "integral lift weight")->required();
    tl->add_option("--bound", bound, "height bound")->required();
    tl->add_option("--format", format, "lattice, scalar or hilbert");

    auto* dn = app.add_subcommand("doi-naganuma", "Hilbert modular lift for Q(sqrt D)");
    dn->add_option("--d", D)->required();
    dn->add_option("--input", input, "QExpansion JSON")->required()->check(CLI::ExistingFile);
    dn->add_option("--bound", bound, "height bound")->required();
    dn->add_option("--format", format, "lattice, scalar or hilbert")->default_val("hilbert");

    auto* ci = app.add_subcommand("class-identity", "Hurwitz class number identities");
    ci->add_option("--prop10", prop10, "i or ii");
    ci->add_flag("--remark12", remark12);
    ci->add_option("--n-max", n_max);

    auto* hw = app.add_subcommand("hurwitz", "Hurwitz class number H(d)");
    hw->add_option("--d", d)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report(Error(ErrorKind::Input, "bad-arguments", e.what()));
    }

    try {
        if (*fqm) run_fqm_info(s, gram);
        else if (*dim) run_dim(s, gram, weight);
        else if (*eis) run_eisenstein(s, gram, weight, prec);
        else if (*rs) run_r_series(s, gram, weight, m, beta, prec);
        else if (*cb) run_cusp_basis(s, gram, weight, prec);
        else if (*w3) run_weight3(s, N, prec, parts);
        else if (*tl) run_theta_lift(s, gram.path, input, k, bound, format);
        else if (*dn) run_doi_naganuma(s, D, input, bound, format);
        else if (*ci) run_class_identity(s, prop10, remark12, n_max);
        else if (*hw) run_hurwitz(s, d);
    } catch (const Error& e) {
        return report(e);
    } catch (const std::exception& e) {
        return report(Error(ErrorKind::Math, "internal", e.what()));
    }
    return 0;
}
