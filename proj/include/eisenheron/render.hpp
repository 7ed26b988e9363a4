#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "lattice.hpp"

namespace eisenheron {

using Rational = boost::rational<std::int64_t>;

inline constexpr long double sqrt3_constant = 1.732050807568877293527446341505872367L;

/// Formats with 12 significant digits; the only place an irrational constant
/// turns into decimals.
inline std::string format_decimal(long double value)
{
    if (value == 0.0L) {
        return "0";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12Lg", value);
    return buf;
}

inline long double to_long_double(const Rational& r)
{
    return static_cast<long double>(r.numerator()) / static_cast<long double>(r.denominator());
}

/// Cartesian position of a lattice point; y is stored as its exact coefficient of sqrt3.
struct CartesianPoint {
    Rational x;
    Rational y_over_sqrt3;

    long double y() const { return to_long_double(y_over_sqrt3) * sqrt3_constant; }
    std::string x_text() const { return format_decimal(to_long_double(x)); }
    std::string y_text() const { return format_decimal(y()); }
};

inline CartesianPoint to_cartesian(EisensteinPoint p, Rational scale)
{
    return {scale * Rational(2 * p.m - p.n, 2), scale * Rational(p.n, 2)};
}

struct LatticeExtent {
    std::int64_t m_min = 0;
    std::int64_t m_max = 0;
    std::int64_t n_min = 0;
    std::int64_t n_max = 0;

    bool contains(EisensteinPoint p) const { return p.m >= m_min && p.m <= m_max && p.n >= n_min && p.n <= n_max; }
    std::int64_t point_count() const { return (m_max - m_min + 1) * (n_max - n_min + 1); }
};

struct StyledTriangle {
    LatticeTriangle triangle;
    std::string fill;
    std::string stroke;
};

/// Hex triplets, named colors and rgb(...) forms; nothing that could break out of an attribute.
inline bool is_color(const std::string& s)
{
    if (s.empty() || s.size() > 32) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char ch) {
        return (ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch == '#' ||
               ch == '(' || ch == ')' || ch == ',' || ch == '.' || ch == '%' || ch == ' ';
    });
}

struct FigureSpec {
    std::vector<StyledTriangle> triangles;
    LatticeExtent extent;
    Rational dot_radius{6, 5};
    Rational scale{20};

    void validate() const
    {
        if (extent.m_min > extent.m_max || extent.n_min > extent.n_max) {
            throw ValidationError("extent: empty lattice extent");
        }
        if (scale <= 0) {
            throw ValidationError("scale: must be positive");
        }
        if (dot_radius <= 0) {
            throw ValidationError("dot_radius: must be positive");
        }
        for (std::size_t i = 0; i < triangles.size(); ++i) {
            const auto& tri = triangles[i].triangle;
            if (!is_color(triangles[i].fill)) {
                throw ValidationError("triangles[" + std::to_string(i) + "].fill: not a color");
            }
            if (!is_color(triangles[i].stroke)) {
                throw ValidationError("triangles[" + std::to_string(i) + "].stroke: not a color");
            }
            for (std::size_t j = 0; j < 3; ++j) {
                if (!extent.contains(tri.vertices[j])) {
                    throw ValidationError("triangles[" + std::to_string(i) + "].vertices[" + std::to_string(j) +
                                          "]: " + tri.vertices[j].str() + " lies outside the extent");
                }
            }
            if (area_quantum_of(tri) == 0) {
                throw ValidationError("triangles[" + std::to_string(i) + "].vertices: degenerate triangle");
            }
        }
    }
};

/// Standalone SVG 1.1: filled triangles over one dot per lattice point, y axis
/// pointing up. Byte-identical output for identical input.
inline std::string render_svg(const FigureSpec& fig)
{
    fig.validate();

    const auto& e = fig.extent;
    // Cartesian bounding box of the extent parallelogram: x = m - n/2 is
    // extremal at the corners, y depends on n only.
    auto corner_x = [&](std::int64_t m, std::int64_t n) { return to_long_double(to_cartesian({m, n}, fig.scale).x); };
    long double x_lo = std::min({corner_x(e.m_min, e.n_min), corner_x(e.m_min, e.n_max), corner_x(e.m_max, e.n_min),
                                 corner_x(e.m_max, e.n_max)});
    long double x_hi = std::max({corner_x(e.m_min, e.n_min), corner_x(e.m_min, e.n_max), corner_x(e.m_max, e.n_min),
                                 corner_x(e.m_max, e.n_max)});
    long double y_lo = to_cartesian({0, e.n_min}, fig.scale).y();
    long double y_hi = to_cartesian({0, e.n_max}, fig.scale).y();
    const long double pad = to_long_double(fig.scale);
    x_lo -= pad;
    x_hi += pad;
    y_lo -= pad;
    y_hi += pad;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << format_decimal(x_hi - x_lo)
        << "\" height=\"" << format_decimal(y_hi - y_lo) << "\" viewBox=\"" << format_decimal(x_lo) << " "
        << format_decimal(-y_hi) << " " << format_decimal(x_hi - x_lo) << " " << format_decimal(y_hi - y_lo)
        << "\">\n";

    // SVG y grows downward; negate to keep mathematical orientation.
    auto point_text = [&](EisensteinPoint p) {
        const CartesianPoint c = to_cartesian(p, fig.scale);
        return c.x_text() + "," + format_decimal(-c.y());
    };

    out << "  <g id=\"triangles\" stroke-linejoin=\"round\">\n";
    for (const auto& st : fig.triangles) {
        out << "    <polygon points=\"" << point_text(st.triangle.vertices[0]) << " "
            << point_text(st.triangle.vertices[1]) << " " << point_text(st.triangle.vertices[2]) << "\" fill=\""
            << st.fill << "\" stroke=\"" << st.stroke << "\" stroke-width=\""
            << format_decimal(to_long_double(fig.scale) / 10) << "\"/>\n";
    }
    out << "  </g>\n";

    out << "  <g id=\"lattice\" fill=\"black\">\n";
    const std::string r = format_decimal(to_long_double(fig.dot_radius));
    for (std::int64_t n = e.n_min; n <= e.n_max; ++n) {
        for (std::int64_t m = e.m_min; m <= e.m_max; ++m) {
            const CartesianPoint c = to_cartesian({m, n}, fig.scale);
            out << "    <circle cx=\"" << c.x_text() << "\" cy=\"" << format_decimal(-c.y()) << "\" r=\"" << r
                << "\"/>\n";
        }
    }
    out << "  </g>\n";
    out << "</svg>\n";
    return out.str();
}

/// The five triangles of the classic figure: equilateral sides 3, 1 and 2,
/// the family (b) triangle (7,7,2) and the family (c) triangle (7,5,3).
inline FigureSpec figure1_preset()
{
    FigureSpec fig;
    fig.extent = {0, 17, 0, 13};
    fig.triangles = {
        {{{{{0, 0}, {13, 11}, {11, 13}}}}, "#b3ffb3", "#00ff00"},
        {{{{{0, 0}, {13, 11}, {10, 5}}}}, "#ffb3b3", "#ff0000"},
        {{{{{11, 6}, {17, 9}, {14, 12}}}}, "#ccccff", "#0000ff"},
        {{{{{10, 2}, {14, 4}, {12, 6}}}}, "#b3b3ff", "#0000ff"},
        {{{{{8, 0}, {10, 1}, {9, 2}}}}, "#9999ff", "#0000ff"},
    };
    return fig;
}

namespace detail {

inline Rational rational_from_json(const nlohmann::json& j, const std::string& field)
{
    if (j.is_number_integer()) {
        return Rational(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                return Rational(std::stoll(s));
            }
            const auto den = std::stoll(s.substr(slash + 1));
            if (den == 0) {
                throw ValidationError(field + ": zero denominator");
            }
            return Rational(std::stoll(s.substr(0, slash)), den);
        } catch (const std::logic_error&) {
            throw ValidationError(field + ": expected an integer or \"p/q\" rational");
        }
    }
    throw ValidationError(field + ": expected an integer or \"p/q\" rational");
}

inline std::int64_t int_field(const nlohmann::json& j, const std::string& key, const std::string& path)
{
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw ValidationError(path + key + ": expected an integer");
    }
    return j.at(key).get<std::int64_t>();
}

} // namespace detail

/// Parses a figure description:
/// {"extent": {"m_min":..,"m_max":..,"n_min":..,"n_max":..},
///  "scale": 20, "dot_radius": "6/5",
///  "triangles": [{"vertices": [[m,n],[m,n],[m,n]], "fill": "#..", "stroke": "#.."}]}
inline FigureSpec figure_spec_from_json(const nlohmann::json& j)
{
    if (!j.is_object()) {
        throw ValidationError("figure spec: expected a JSON object");
    }
    FigureSpec fig;
    if (!j.contains("extent") || !j.at("extent").is_object()) {
        throw ValidationError("extent: missing");
    }
    const auto& ext = j.at("extent");
    fig.extent = {detail::int_field(ext, "m_min", "extent."), detail::int_field(ext, "m_max", "extent."),
                  detail::int_field(ext, "n_min", "extent."), detail::int_field(ext, "n_max", "extent.")};
    if (j.contains("scale")) {
        fig.scale = detail::rational_from_json(j.at("scale"), "scale");
    }
    if (j.contains("dot_radius")) {
        fig.dot_radius = detail::rational_from_json(j.at("dot_radius"), "dot_radius");
    }
    if (!j.contains("triangles") || !j.at("triangles").is_array()) {
        throw ValidationError("triangles: expected an array");
    }
    const auto& tris = j.at("triangles");
    for (std::size_t i = 0; i < tris.size(); ++i) {
        const std::string path = "triangles[" + std::to_string(i) + "]";
        const auto& t = tris[i];
        if (!t.is_object() || !t.contains("vertices") || !t.at("vertices").is_array() ||
            t.at("vertices").size() != 3) {
            throw ValidationError(path + ".vertices: expected three [m,n] pairs");
        }
        StyledTriangle st;
        for (std::size_t k = 0; k < 3; ++k) {
            const auto& v = t.at("vertices")[k];
            if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
                throw ValidationError(path + ".vertices[" + std::to_string(k) + "]: expected [m,n] integers");
            }
            st.triangle.vertices[k] = {v[0].get<std::int64_t>(), v[1].get<std::int64_t>()};
        }
        st.fill = t.value("fill", std::string("#cccccc"));
        st.stroke = t.value("stroke", std::string("#000000"));
        fig.triangles.push_back(std::move(st));
    }
    fig.validate();
    return fig;
}

} // namespace eisenheron
