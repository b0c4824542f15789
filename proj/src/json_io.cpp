#include "zigzag/json_io.hpp"

#include <stdexcept>

namespace zigzag {

namespace {

// Desk-scale guards; malformed files must error out, not exhaust memory.
constexpr long long kMaxVertices = 256;
constexpr long long kMaxDim = 4096;
constexpr long long kMaxEndpoint = 1000000;

std::size_t bounded_size(const json& j, long long max, const std::string& what) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        throw std::invalid_argument(what + ": integer expected");
    long long v = j.get<long long>();
    if (v < 0 || v > max)
        throw std::invalid_argument(what + ": value " + std::to_string(v) + " outside [0, " +
                                    std::to_string(max) + "]");
    return std::size_t(v);
}

int bounded_endpoint(const json& j, const std::string& what) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        throw std::invalid_argument(what + ": integer expected");
    long long v = j.get<long long>();
    if (v < -kMaxEndpoint || v > kMaxEndpoint)
        throw std::invalid_argument(what + ": endpoint out of range");
    return int(v);
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, std::uint32_t p,
                        const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        throw std::invalid_argument(where + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols, p);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument(where + ": expected " + std::to_string(cols) + " columns");
        for (std::size_t k = 0; k < cols; ++k) {
            long long v = row[k].get<long long>();
            long long r = v % (long long)p;
            if (r < 0) r += p;
            m.at(i, k) = std::uint32_t(r);
        }
    }
    return m;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

json to_json(const Barcode& b) {
    json intervals = json::array();
    for (const auto& [iv, mult] : b.bars)
        intervals.push_back({{"b", iv.b}, {"d", iv.d}, {"mult", mult}});
    return json{{"intervals", std::move(intervals)}};
}

Barcode barcode_from_json(const json& j) {
    Barcode b;
    if (!j.contains("intervals") || !j["intervals"].is_array())
        throw std::invalid_argument("barcode: missing intervals array");
    for (const auto& e : j["intervals"]) {
        Interval iv{bounded_endpoint(e.at("b"), "barcode"), bounded_endpoint(e.at("d"), "barcode")};
        if (iv.b < 1 || iv.b > iv.d)
            throw std::invalid_argument("barcode: interval endpoints out of order");
        int mult = bounded_endpoint(e.value("mult", json(1)), "barcode multiplicity");
        if (mult < 1) throw std::invalid_argument("barcode: multiplicity must be positive");
        b.add(iv, mult);
    }
    return b;
}

json to_json(const Representation& r) {
    json maps = json::array();
    for (const auto& m : r.maps) maps.push_back(matrix_to_json(m));
    json dims = json::array();
    for (auto d : r.dims) dims.push_back(d);
    return json{{"n", r.quiver.n},
                {"orientation", r.quiver.orientation.to_string()},
                {"p", r.p},
                {"dims", std::move(dims)},
                {"maps", std::move(maps)}};
}

Representation representation_from_json(const json& j) {
    std::size_t n = bounded_size(j.at("n"), kMaxVertices, "representation n");
    if (n == 0) throw std::invalid_argument("representation: n must be >= 1");
    Orientation o = Orientation::parse(j.value("orientation", std::string(n - 1, 'f')));
    QuiverAn q(n, o);
    std::uint32_t p = j.value("p", 2u);
    if (!is_prime(p)) throw std::invalid_argument("representation: p must be prime");
    Representation r;
    r.quiver = q;
    r.p = p;
    const json& dims = j.at("dims");
    if (!dims.is_array() || dims.size() != n)
        throw std::invalid_argument("representation: dims must have length n");
    for (const auto& d : dims) r.dims.push_back(bounded_size(d, kMaxDim, "representation dim"));
    const json& maps = j.at("maps");
    if (!maps.is_array() || maps.size() != n - 1)
        throw std::invalid_argument("representation: maps must have length n-1");
    for (std::size_t x = 1; x < n; ++x)
        r.maps.push_back(matrix_from_json(maps[x - 1], r.dims[q.target(x) - 1],
                                          r.dims[q.source(x) - 1], p,
                                          "map at arrow " + std::to_string(x)));
    r.check_shapes();
    return r;
}

json to_json(const GradedBarcode& g) {
    json degrees = json::array();
    for (const auto& [i, b] : g.degrees) {
        json entry = to_json(b);
        entry["i"] = i;
        degrees.push_back(std::move(entry));
    }
    return json{{"degrees", std::move(degrees)}};
}

GradedBarcode graded_barcode_from_json(const json& j) {
    GradedBarcode g;
    if (!j.contains("degrees") || !j["degrees"].is_array())
        throw std::invalid_argument("graded barcode: missing degrees array");
    for (const auto& e : j["degrees"]) {
        Barcode b = barcode_from_json(e);
        if (b.empty()) continue;
        int i = e.at("i").get<int>();
        for (const auto& [iv, mult] : b.bars) g.add(i, iv, mult);
    }
    return g;
}

CochainComplex complex_from_json(const json& j) {
    std::size_t n = bounded_size(j.at("n"), kMaxVertices, "complex n");
    Orientation o = Orientation::parse(j.value("orientation", std::string(n - 1, 'f')));
    QuiverAn q(n, o);
    std::uint32_t p = j.value("p", 2u);
    if (!is_prime(p)) throw std::invalid_argument("complex: p must be prime");
    CochainComplex c;
    c.quiver = q;
    c.p = p;
    if (!j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("complex: missing terms array");
    struct Pending {
        int degree;
        json d;
    };
    std::vector<Pending> diffs;
    for (const auto& t : j["terms"]) {
        int degree = t.at("i").get<int>();
        json term = t;
        term["n"] = n;
        term["orientation"] = o.to_string();
        term["p"] = p;
        Representation rep = representation_from_json(term);
        if (!rep.is_zero()) c.terms[degree] = rep;
        if (t.contains("d")) diffs.push_back({degree, t["d"]});
    }
    for (const auto& pending : diffs) {
        Representation src = c.term(pending.degree), dst = c.term(pending.degree + 1);
        Morphism d = zero_morphism(src, dst);
        const json& comps = pending.d;
        if (!comps.is_array() || comps.size() != n)
            throw std::invalid_argument("complex: differential must list one matrix per vertex");
        for (std::size_t x = 1; x <= n; ++x)
            d.comps[x - 1] = matrix_from_json(comps[x - 1], dst.dims[x - 1], src.dims[x - 1], p,
                                              "differential component " + std::to_string(x));
        if (!d.is_zero()) c.differentials[pending.degree] = d;
    }
    c.validate();
    return c;
}

json to_json(const SheafObject& f) {
    json bars = json::array();
    for (const auto& b : f.bars) {
        json e{{"lo", b.lo}, {"hi", b.hi}, {"lo_closed", b.lo_closed}, {"hi_closed", b.hi_closed}};
        if (b.degree != 0) e["degree"] = b.degree;
        bars.push_back(std::move(e));
    }
    return json{{"bars", std::move(bars)}};
}

SheafObject sheaf_from_json(const json& j) {
    SheafObject f;
    if (!j.contains("bars") || !j["bars"].is_array())
        throw std::invalid_argument("sheaf object: missing bars array");
    for (const auto& e : j["bars"]) {
        SheafBar b;
        if (!e.at("lo").is_number_integer() || !e.at("hi").is_number_integer())
            throw std::invalid_argument("sheaf object: endpoints must be integers");
        b.lo = e.at("lo").get<long long>();
        b.hi = e.at("hi").get<long long>();
        b.lo_closed = e.at("lo_closed").get<bool>();
        b.hi_closed = e.at("hi_closed").get<bool>();
        b.degree = e.value("degree", 0);
        if (b.lo > b.hi || (b.lo == b.hi && !(b.lo_closed && b.hi_closed)))
            throw std::invalid_argument("sheaf object: empty or reversed bar");
        f.bars.push_back(b);
    }
    f.normalize();
    return f;
}

std::vector<ZZInterval> zz_multiset_from_json(const json& j) {
    std::vector<ZZInterval> zz;
    if (!j.contains("zz_intervals") || !j["zz_intervals"].is_array())
        throw std::invalid_argument("zigzag multiset: missing zz_intervals array");
    for (const auto& e : j["zz_intervals"])
        zz.push_back(make_zz(e.at("b").get<long long>(), e.at("d").get<long long>(),
                             zz_kind_from_string(e.at("kind").get<std::string>())));
    std::sort(zz.begin(), zz.end());
    return zz;
}

}  // namespace zigzag
