#include "marcwt/region_io.hpp"

#include <array>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace marcwt {

namespace {

void appendf(std::string& out, const char* fmt, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, ap);
    va_end(ap);
    out += buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

constexpr const char* kCsvHeader = "R1_bits,R2_bits";

}  // namespace

std::string format_g9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string region_to_csv(const RateRegion& r) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& v : r.vertices()) {
        out += format_g9(v.x);
        out += ',';
        out += format_g9(v.y);
        out += '\n';
    }
    return out;
}

RateRegion region_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    const auto strip_cr = [](std::string& s) {
        if (!s.empty() && s.back() == '\r') s.pop_back();
    };
    if (!std::getline(in, line)) throw std::domain_error("region csv is empty");
    strip_cr(line);
    if (line != kCsvHeader)
        throw std::domain_error(std::string("region csv must start with the header ") + kCsvHeader);
    std::vector<RatePoint> pts;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::domain_error("region csv line " + std::to_string(lineno) + " needs two fields");
        const auto parse_num = [lineno](const std::string& s) {
            const char* c = s.c_str();
            char* end = nullptr;
            const double v = std::strtod(c, &end);
            if (end == c || *end != '\0' || !std::isfinite(v))
                throw std::domain_error("region csv line " + std::to_string(lineno) +
                                        " has a malformed number");
            return v;
        };
        const double x = parse_num(line.substr(0, comma));
        const double y = parse_num(line.substr(comma + 1));
        pts.push_back({x, y});
    }
    const RateRegion canon = RateRegion::from_points(pts);
    const auto& cv = canon.vertices();
    bool same = cv.size() == pts.size();
    for (std::size_t i = 0; same && i < cv.size(); ++i)
        same = cv[i].x == pts[i].x && cv[i].y == pts[i].y;
    if (!same)
        throw std::domain_error(
            "region csv vertices are not a canonical convex polygon "
            "(counterclockwise from the origin, no redundant vertices)");
    return canon;
}

void atomic_write_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("cannot write " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ec2;
        fs::remove(tmp, ec2);
        throw std::runtime_error("cannot move " + tmp.string() + " to " + target.string() + ": " +
                                 ec.message());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw std::runtime_error("cannot read " + path);
    return buf.str();
}

std::string render_regions_svg(const std::vector<std::pair<std::string, RateRegion>>& named,
                               const std::string& title) {
    static const std::array<const char*, 6> palette{"#1f77b4", "#d62728", "#2ca02c",
                                                    "#9467bd", "#ff7f0e", "#8c564b"};
    double xtop = 0, ytop = 0;
    for (const auto& [name, r] : named)
        for (const auto& v : r.vertices()) {
            xtop = std::max(xtop, v.x);
            ytop = std::max(ytop, v.y);
        }
    if (xtop <= 0) xtop = 1;
    if (ytop <= 0) ytop = 1;
    const double xmax = xtop * 1.05, ymax = ytop * 1.05;
    const double left = 70, bottom = 550, plotw = 500, ploth = 490;
    const auto sx = [&](double x) { return left + x / xmax * plotw; };
    const auto sy = [&](double y) { return bottom - y / ymax * ploth; };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
           "viewBox=\"0 0 600 600\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n";
    appendf(svg, "<text x=\"300\" y=\"26\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                 "font-size=\"15\">%s</text>\n",
            xml_escape(title).c_str());

    // axes with six ticks each
    appendf(svg, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
            left, bottom, left + plotw, bottom);
    appendf(svg, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
            left, bottom, left, bottom - ploth);
    for (int i = 0; i <= 5; ++i) {
        const double fx = xmax * i / 5, fy = ymax * i / 5;
        appendf(svg, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
                sx(fx), bottom, sx(fx), bottom + 5);
        appendf(svg, "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                     "font-size=\"11\">%.4g</text>\n",
                sx(fx), bottom + 18, fx);
        appendf(svg, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
                left - 5, sy(fy), left, sy(fy));
        appendf(svg, "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\" font-family=\"sans-serif\" "
                     "font-size=\"11\">%.4g</text>\n",
                left - 8, sy(fy) + 4, fy);
    }
    appendf(svg, "<text x=\"%.2f\" y=\"585\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                 "font-size=\"13\">R1 (bits)</text>\n",
            left + plotw / 2);
    appendf(svg, "<text x=\"16\" y=\"%.2f\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                 "font-size=\"13\" transform=\"rotate(-90 16 %.2f)\">R2 (bits)</text>\n",
            bottom - ploth / 2, bottom - ploth / 2);

    std::size_t color = 0;
    for (const auto& [name, r] : named) {
        const char* stroke = palette[color % palette.size()];
        ++color;
        if (!r.is_empty()) {
            std::string points;
            for (const auto& v : r.vertices()) appendf(points, "%.2f,%.2f ", sx(v.x), sy(v.y));
            appendf(points, "%.2f,%.2f", sx(r.vertices().front().x), sy(r.vertices().front().y));
            appendf(svg, "<polyline points=\"%s\" fill=\"%s\" fill-opacity=\"0.06\" stroke=\"%s\" "
                         "stroke-width=\"1.5\"/>\n",
                    points.c_str(), stroke, stroke);
        }
        const double ly = 46.0 + 18.0 * static_cast<double>(color);
        appendf(svg, "<line x1=\"470\" y1=\"%.2f\" x2=\"495\" y2=\"%.2f\" stroke=\"%s\" "
                     "stroke-width=\"2\"/>\n",
                ly - 4, ly - 4, stroke);
        appendf(svg, "<text x=\"500\" y=\"%.2f\" font-family=\"sans-serif\" font-size=\"12\">%s%s</text>\n",
                ly, xml_escape(name).c_str(), r.is_empty() ? " (empty)" : "");
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace marcwt
