#include "qwom/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qwom/error.hpp"

namespace qwom {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string channel_label(const std::string& name) {
    if (name == "A") return "A(t)";
    if (name == "B") return "B(t)";
    if (name == "q") return "⟨q⟩";
    if (name == "p") return "⟨p⟩";
    return name;
}

}  // namespace

void write_svg_plot(const TimeSeries& series,
                    const std::vector<std::string>& channels,
                    const std::string& x_label,
                    const std::filesystem::path& svg_path) {
    if (series.size() < 2) throw AnalysisError("plot needs >= 2 samples");

    const int panel_w = 640, panel_h = 200;
    const int margin_l = 70, margin_r = 20, margin_t = 24, margin_b = 40;
    const int width = margin_l + panel_w + margin_r;
    const int height =
        static_cast<int>(channels.size()) * (panel_h + margin_t) + margin_b;

    const double t0 = series.t[0], t1 = series.t[series.size() - 1];

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" font-family=\"sans-serif\" "
        << "font-size=\"12\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    int top = margin_t;
    for (const auto& name : channels) {
        const Eigen::ArrayXd& x = series.channel(name);
        double lo = x.minCoeff(), hi = x.maxCoeff();
        if (!(hi > lo)) {
            hi = lo + 1.0;
            lo -= 1.0;
        }
        const double pad = 0.05 * (hi - lo);
        lo -= pad;
        hi += pad;

        const auto px = [&](double t) {
            return margin_l + (t - t0) / (t1 - t0) * panel_w;
        };
        const auto py = [&](double v) {
            return top + panel_h - (v - lo) / (hi - lo) * panel_h;
        };

        svg << "<rect x=\"" << margin_l << "\" y=\"" << top << "\" width=\""
            << panel_w << "\" height=\"" << panel_h
            << "\" fill=\"none\" stroke=\"#444\"/>\n";

        for (int k = 0; k <= 4; ++k) {
            const double tv = t0 + (t1 - t0) * k / 4.0;
            svg << "<line x1=\"" << px(tv) << "\" y1=\"" << top + panel_h
                << "\" x2=\"" << px(tv) << "\" y2=\"" << top + panel_h + 5
                << "\" stroke=\"#444\"/>\n"
                << "<text x=\"" << px(tv) << "\" y=\"" << top + panel_h + 18
                << "\" text-anchor=\"middle\">" << num(tv) << "</text>\n";
            const double yv = lo + (hi - lo) * k / 4.0;
            svg << "<line x1=\"" << margin_l - 5 << "\" y1=\"" << py(yv)
                << "\" x2=\"" << margin_l << "\" y2=\"" << py(yv)
                << "\" stroke=\"#444\"/>\n"
                << "<text x=\"" << margin_l - 8 << "\" y=\"" << py(yv) + 4
                << "\" text-anchor=\"end\">" << num(yv) << "</text>\n";
        }

        svg << "<polyline fill=\"none\" stroke=\"#1f77b4\" "
               "stroke-width=\"1\" points=\"";
        for (Eigen::Index i = 0; i < series.size(); ++i) {
            if (!std::isfinite(x[i])) continue;
            svg << num(px(series.t[i])) << ',' << num(py(x[i])) << ' ';
        }
        svg << "\"/>\n";

        svg << "<text x=\"" << margin_l + 6 << "\" y=\"" << top - 7 << "\">"
            << channel_label(name) << "</text>\n";
        top += panel_h + margin_t;
    }

    svg << "<text x=\"" << margin_l + panel_w / 2 << "\" y=\"" << height - 10
        << "\" text-anchor=\"middle\">" << x_label << "</text>\n</svg>\n";

    const std::filesystem::path tmp = svg_path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + tmp.string() + "'");
        out << svg.str();
    }
    std::error_code ec;
    std::filesystem::rename(tmp, svg_path, ec);
    if (ec) {
        throw IoError("rename to '" + svg_path.string() +
                      "' failed: " + ec.message());
    }
}

}  // namespace qwom
