#include "weilforms/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace weilforms {

using json = nlohmann::ordered_json;

namespace {

std::string location(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail_input("parse-error", "malformed JSON at " + location(text, e.byte > 0 ? e.byte - 1 : 0));
    }
}

Rational rational_field(const json& j, const char* what) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    fail_input("bad-field", std::string("field '") + what + "' must be a rational string or integer");
}

IntMatrix int_matrix(const json& j) {
    if (!j.is_array()) fail_input("bad-gram", "'gram' must be an array of rows");
    IntMatrix m;
    for (const auto& row : j) {
        if (!row.is_array()) fail_input("bad-gram", "each Gram row must be an array");
        std::vector<Integer> r;
        for (const auto& x : row) {
            if (x.is_number_integer()) {
                r.emplace_back(x.get<long>());
            } else if (x.is_string()) {
                const Rational q = parse_rational(x.get<std::string>());
                if (!is_integer(q)) fail_input("bad-gram", "Gram entries must be integers");
                r.push_back(to_integer(q));
            } else {
                fail_input("bad-gram", "Gram entries must be integers");
            }
        }
        m.push_back(std::move(r));
    }
    for (const auto& row : m)
        if (row.size() != m.size()) fail_input("bad-gram", "Gram matrix must be square");
    return m;
}

json gram_json(const IntMatrix& g) {
    json out = json::array();
    for (const auto& row : g) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.get_si());
        out.push_back(std::move(r));
    }
    return out;
}

json rational_array(const RationalVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

RationalVector rational_vector(const json& j, const char* what) {
    if (!j.is_array()) fail_input("bad-field", std::string("field '") + what + "' must be an array");
    RationalVector v;
    for (const auto& x : j) v.push_back(rational_field(x, what));
    return v;
}

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail_input("missing-field", std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail_input("file-not-found", "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GramFile parse_gram_json(const std::string& text, bool negate) {
    const json doc = parse_document(text);
    GramFile out;
    out.gram = int_matrix(require(doc, "gram"));
    if (doc.contains("negate")) {
        if (!doc["negate"].is_boolean()) fail_input("bad-field", "'negate' must be a boolean");
        negate = negate != doc["negate"].get<bool>();
    }
    if (negate)
        for (auto& row : out.gram)
            for (auto& x : row) x = -x;
    if (doc.contains("seed")) out.seed = rational_vector(doc["seed"], "seed");
    return out;
}

GramFile read_gram_file(const std::filesystem::path& path, bool negate) {
    return parse_gram_json(read_text_file(path), negate);
}

std::string qexpansion_to_json(const QExpansion& f, int indent) {
    json doc;
    doc["gram"] = gram_json(f.lattice().gram());
    doc["weight"] = f.weight().str();
    doc["prec"] = to_string(f.prec());
    json coeffs = json::array();
    for (const auto& [key, c] : f.coeffs()) {
        json entry;
        entry["gamma"] = key.first;
        entry["n"] = to_string(key.second);
        entry["c"] = to_string(c);
        coeffs.push_back(std::move(entry));
    }
    doc["coeffs"] = std::move(coeffs);
    return doc.dump(indent);
}

QExpansion qexpansion_from_json(const std::string& text) {
    const json doc = parse_document(text);
    const EvenLattice L(int_matrix(require(doc, "gram")));
    const HalfInteger k = HalfInteger::from_rational(rational_field(require(doc, "weight"), "weight"));
    QExpansion f(L, k, rational_field(require(doc, "prec"), "prec"));
    const json& coeffs = require(doc, "coeffs");
    if (!coeffs.is_array()) fail_input("bad-field", "'coeffs' must be an array");
    for (const auto& entry : coeffs) {
        const json& g = require(entry, "gamma");
        if (!g.is_array()) fail_input("bad-field", "'gamma' must be an array of integers");
        Element gamma;
        for (const auto& x : g) {
            if (!x.is_number_integer()) fail_input("bad-field", "'gamma' must be an array of integers");
            gamma.push_back(x.get<long>());
        }
        if (!f.module().contains(gamma)) fail_input("bad-field", "'gamma' is not an element of the module");
        f.set(gamma, rational_field(require(entry, "n"), "n"), rational_field(require(entry, "c"), "c"));
    }
    return f;
}

OrthogonalView parse_orthogonal_view(const std::string& name) {
    if (name == "lattice") return OrthogonalView::Lattice;
    if (name == "scalar") return OrthogonalView::Scalar;
    if (name == "hilbert") return OrthogonalView::Hilbert;
    fail_input("bad-format", "unknown lift view '" + name + "' (lattice, scalar or hilbert)");
}

std::string orthogonal_to_json(const OrthogonalExpansion& f, OrthogonalView view, int indent) {
    json doc;
    doc["gram"] = gram_json(f.gram.s);
    doc["seed"] = rational_array(f.gram.seed);
    doc["weight"] = f.weight;
    doc["height_bound"] = to_string(f.height_bound);
    if (view == OrthogonalView::Scalar) {
        json series = json::array();
        for (const auto& [h, c] : scalar_series(f)) series.push_back({{"h", to_string(h)}, {"c", to_string(c)}});
        doc["series"] = std::move(series);
        return doc.dump(indent);
    }
    std::vector<std::pair<Rational, RationalVector>> order;
    for (const auto& [r, c] : f.coeffs) order.emplace_back(f.height(r), r);
    std::sort(order.begin(), order.end());
    json coeffs = json::array();
    for (const auto& [h, r] : order) {
        json entry;
        entry["r"] = rational_array(r);
        entry["height"] = to_string(h);
        if (view == OrthogonalView::Hilbert) entry["nu"] = hilbert_label(r);
        entry["c"] = to_string(f.coeff(r));
        coeffs.push_back(std::move(entry));
    }
    doc["coeffs"] = std::move(coeffs);
    return doc.dump(indent);
}

OrthogonalExpansion orthogonal_from_json(const std::string& text) {
    const json doc = parse_document(text);
    OrthogonalExpansion f;
    f.gram.s = int_matrix(require(doc, "gram"));
    f.gram.seed = rational_vector(require(doc, "seed"), "seed");
    f.gram.validate();
    const json& w = require(doc, "weight");
    if (!w.is_number_integer()) fail_input("bad-field", "'weight' must be an integer");
    f.weight = w.get<long>();
    f.height_bound = rational_field(require(doc, "height_bound"), "height_bound");
    const json& coeffs = require(doc, "coeffs");
    if (!coeffs.is_array()) fail_input("bad-field", "'coeffs' must be an array");
    for (const auto& entry : coeffs) {
        RationalVector r = rational_vector(require(entry, "r"), "r");
        if (r.size() != f.gram.rank()) fail_input("bad-field", "index has the wrong length");
        f.coeffs[std::move(r)] = rational_field(require(entry, "c"), "c");
    }
    return f;
}

std::string dimension_report_to_json(const DimensionReport& rep, int indent) {
    json doc;
    doc["weight"] = rep.weight.str();
    doc["dim_m"] = rep.dim_m;
    doc["dim_s"] = rep.dim_s;
    doc["alpha4_tilde"] = rep.alpha4_tilde;
    doc["b1"] = to_string(rep.b1);
    doc["b2"] = to_string(rep.b2);
    doc["d_pairs"] = rep.d_pairs;
    doc["numeric_residual"] = rep.numeric_residual;
    return doc.dump(indent);
}

std::string error_to_json(const Error& err) {
    const char* kind = err.kind() == ErrorKind::Input ? "input" : err.kind() == ErrorKind::Math ? "math" : "precision";
    json doc;
    doc["error"] = {{"kind", kind}, {"code", err.code()}, {"message", err.what()}, {"exit_code", err.exit_code()}};
    return doc.dump();
}

}  // namespace weilforms
