#include "zigzag/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace zigzag {

namespace {

struct DiagramGraph {
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> arrows;
    std::vector<std::pair<std::size_t, std::size_t>> dashed;
};

std::string degree_label(const Interval& iv, int degree) {
    return to_string(iv) + "[-" + std::to_string(degree) + "]";
}

DiagramGraph plain_graph(const ARQuiver& g) {
    DiagramGraph d;
    std::map<Interval, std::size_t> index;
    for (const auto& v : g.vertices) {
        index[v] = d.labels.size();
        d.labels.push_back(to_string(v));
    }
    for (const auto& [a, b] : g.arrows) d.arrows.push_back({index[a], index[b]});
    for (const auto& [x, tx] : g.tau) d.dashed.push_back({index[x], index[tx]});
    std::sort(d.arrows.begin(), d.arrows.end());
    std::sort(d.dashed.begin(), d.dashed.end());
    return d;
}

DiagramGraph derived_graph(const ARQuiver& g, int window) {
    DiagramGraph d;
    std::map<std::pair<int, Interval>, std::size_t> index;
    for (int i = 0; i <= window; ++i)
        for (const auto& v : g.vertices) {
            index[{i, v}] = d.labels.size();
            d.labels.push_back(degree_label(v, i));
        }
    for (int i = 0; i <= window; ++i) {
        for (const auto& [a, b] : g.arrows) d.arrows.push_back({index[{i, a}], index[{i, b}]});
        // Gluing arrows: an injective I_j feeds the next copy's projectives
        // P_l whenever the quiver has an arrow I_l -> I_j.
        if (i + 1 <= window)
            for (std::size_t l = 1; l <= g.quiver.n; ++l)
                for (const auto& succ : g.successors(g.injectives[l - 1]))
                    if (g.is_injective(succ))
                        d.arrows.push_back({index[{i, succ}], index[{i + 1, g.projectives[l - 1]}]});
        for (const auto& [x, tx] : g.tau) d.dashed.push_back({index[{i, x}], index[{i, tx}]});
        if (i + 1 <= window)
            for (std::size_t j = 1; j <= g.quiver.n; ++j)
                d.dashed.push_back(
                    {index[{i, g.projectives[j - 1]}], index[{i + 1, g.injectives[j - 1]}]});
    }
    std::sort(d.arrows.begin(), d.arrows.end());
    d.arrows.erase(std::unique(d.arrows.begin(), d.arrows.end()), d.arrows.end());
    std::sort(d.dashed.begin(), d.dashed.end());
    return d;
}

std::string emit_dot(const DiagramGraph& d, const std::string& name) {
    std::ostringstream os;
    os << "digraph \"" << name << "\" {\n  rankdir=LR;\n  node [shape=plaintext];\n";
    for (const auto& l : d.labels) os << "  \"" << l << "\";\n";
    for (const auto& [a, b] : d.arrows)
        os << "  \"" << d.labels[a] << "\" -> \"" << d.labels[b] << "\";\n";
    for (const auto& [a, b] : d.dashed)
        os << "  \"" << d.labels[a] << "\" -> \"" << d.labels[b] << "\" [style=dashed];\n";
    os << "}\n";
    return os.str();
}

// Longest-path layering; the solid arrows form a DAG.
std::vector<int> layers(const DiagramGraph& d) {
    std::vector<int> layer(d.labels.size(), 0);
    bool changed = true;
    int guard = 0;
    while (changed && guard++ < int(d.labels.size()) + 2) {
        changed = false;
        for (const auto& [a, b] : d.arrows)
            if (layer[b] < layer[a] + 1) {
                layer[b] = layer[a] + 1;
                changed = true;
            }
    }
    return layer;
}

std::string emit_svg(const DiagramGraph& d) {
    std::vector<int> layer = layers(d);
    int maxlayer = 0;
    for (auto l : layer) maxlayer = std::max(maxlayer, l);
    std::map<int, std::vector<std::size_t>> columns;
    for (std::size_t i = 0; i < d.labels.size(); ++i) columns[layer[i]].push_back(i);
    std::vector<std::pair<int, int>> pos(d.labels.size());
    int maxrow = 0;
    for (auto& [col, nodes] : columns) {
        std::sort(nodes.begin(), nodes.end(),
                  [&](std::size_t a, std::size_t b) { return d.labels[a] < d.labels[b]; });
        for (std::size_t r = 0; r < nodes.size(); ++r) {
            pos[nodes[r]] = {col, int(r)};
            maxrow = std::max(maxrow, int(r));
        }
    }
    const int dx = 130, dy = 48, x0 = 70, y0 = 30;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << x0 * 2 + maxlayer * dx
       << "\" height=\"" << y0 * 2 + maxrow * dy << "\">\n";
    auto cx = [&](std::size_t i) { return x0 + pos[i].first * dx; };
    auto cy = [&](std::size_t i) { return y0 + pos[i].second * dy; };
    for (const auto& [a, b] : d.arrows)
        os << "  <line x1=\"" << cx(a) << "\" y1=\"" << cy(a) << "\" x2=\"" << cx(b) << "\" y2=\""
           << cy(b) << "\" stroke=\"black\"/>\n";
    for (const auto& [a, b] : d.dashed)
        os << "  <line x1=\"" << cx(a) << "\" y1=\"" << cy(a) << "\" x2=\"" << cx(b) << "\" y2=\""
           << cy(b) << "\" stroke=\"gray\" stroke-dasharray=\"4\"/>\n";
    for (std::size_t i = 0; i < d.labels.size(); ++i)
        os << "  <text x=\"" << cx(i) << "\" y=\"" << cy(i)
           << "\" text-anchor=\"middle\" font-size=\"11\">" << d.labels[i] << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string ar_quiver_dot(const ARQuiver& g) {
    return emit_dot(plain_graph(g), "AR_A" + std::to_string(g.quiver.n));
}

std::string ar_quiver_svg(const ARQuiver& g) { return emit_svg(plain_graph(g)); }

std::string derived_ar_quiver_dot(const ARQuiver& g, int window) {
    return emit_dot(derived_graph(g, window), "DAR_A" + std::to_string(g.quiver.n));
}

std::string derived_ar_quiver_svg(const ARQuiver& g, int window) {
    return emit_svg(derived_graph(g, window));
}

std::string barcode_svg(const Barcode& b, std::size_t n) {
    const int dx = 40, dy = 18, x0 = 30, y0 = 20;
    auto bars = b.expand();
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << x0 * 2 + int(n - 1) * dx
       << "\" height=\"" << y0 * 2 + int(bars.size()) * dy << "\">\n";
    for (std::size_t k = 0; k < bars.size(); ++k) {
        int y = y0 + int(k) * dy;
        os << "  <line x1=\"" << x0 + (bars[k].b - 1) * dx << "\" y1=\"" << y << "\" x2=\""
           << x0 + (bars[k].d - 1) * dx << "\" y2=\"" << y
           << "\" stroke=\"black\" stroke-width=\"4\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace zigzag
