#pragma once

#include "weilforms/dimensions.hpp"
#include "weilforms/error.hpp"
#include "weilforms/linalg.hpp"
#include "weilforms/qexpansion.hpp"
#include "weilforms/thetalift.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace weilforms {

/// Contents of a Gram file: {"gram": [[...]], "negate": bool?, "seed": ["p/q", ...]?}.
struct GramFile {
    IntMatrix gram;
    std::optional<RationalVector> seed;
};

/// Parses a Gram document; syntax errors report line and column. The matrix is negated when
/// `negate` is true or the document sets "negate": true (both together cancel).
GramFile parse_gram_json(const std::string& text, bool negate = false);
GramFile read_gram_file(const std::filesystem::path& path, bool negate = false);

/// {"gram", "weight", "prec", "coeffs": [{"gamma": [coords], "n", "c"}]}, rationals as "p/q" strings.
std::string qexpansion_to_json(const QExpansion& f, int indent = 2);
QExpansion qexpansion_from_json(const std::string& text);

enum class OrthogonalView { Lattice, Scalar, Hilbert };
OrthogonalView parse_orthogonal_view(const std::string& name);

/// Lattice view lists every index r with its height and coefficient; the Hilbert view adds the
/// label nu = r1 + r2 w; the scalar view groups coefficients by height.
std::string orthogonal_to_json(const OrthogonalExpansion& f, OrthogonalView view = OrthogonalView::Lattice,
                               int indent = 2);
OrthogonalExpansion orthogonal_from_json(const std::string& text);

std::string dimension_report_to_json(const DimensionReport& rep, int indent = 2);

/// {"error": {"kind": "input|math|precision", "code", "message", "exit_code"}}.
std::string error_to_json(const Error& err);

/// Reads a whole file or raises an input error naming it.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace weilforms
