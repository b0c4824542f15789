#include "zigzag/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zigzag/blocks.hpp"
#include "zigzag/decompose.hpp"
#include "zigzag/diagram.hpp"
#include "zigzag/distances.hpp"
#include "zigzag/json_io.hpp"
#include "zigzag/randomgen.hpp"
#include "zigzag/transport.hpp"

namespace zigzag {

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    return json::parse(in);  // json::parse_error carries the byte location
}

bool looks_like_representation(const json& j) { return j.contains("dims"); }
bool looks_like_barcode(const json& j) { return j.contains("intervals"); }
bool looks_like_zz(const json& j) { return j.contains("zz_intervals"); }
bool looks_like_graded(const json& j) { return j.contains("degrees"); }

Barcode barcode_of_input(const json& j) {
    if (looks_like_representation(j)) return decompose(representation_from_json(j));
    if (looks_like_barcode(j)) return barcode_from_json(j);
    throw std::invalid_argument("expected a representation or barcode input");
}

struct DistanceArgs {
    std::string metric;
    std::string file_a, file_b;
    std::size_t m = 0;  // conv-mplus window, 0 = infer
    bool oracle_check = false;
};

int cmd_distance(const DistanceArgs& args, std::ostream& out, std::ostream& err) {
    json ja = load_json(args.file_a), jb = load_json(args.file_b);
    ExtRat value;
    if (args.metric == "interleaving") {
        if (looks_like_representation(ja) && looks_like_representation(jb)) {
            Representation a = representation_from_json(ja), b = representation_from_json(jb);
            if (!(a.quiver == b.quiver) || a.p != b.p)
                throw std::domain_error("interleaving: inputs live over different quivers");
            value = interleaving_distance(a, b);
            if (args.oracle_check) {
                int oracle = min_interleaving_delta_oracle(a, b);
                if (!(value == ExtRat::integer(oracle)))
                    throw std::logic_error("oracle disagrees with the matching route");
            }
        } else {
            value = bottleneck_distance(barcode_of_input(ja), barcode_of_input(jb));
        }
    } else if (args.metric == "bottleneck") {
        value = bottleneck_distance(barcode_of_input(ja), barcode_of_input(jb));
    } else if (args.metric == "induced") {
        if (!looks_like_representation(ja) || !looks_like_representation(jb))
            throw std::domain_error("induced: representation inputs required");
        Representation a = representation_from_json(ja), b = representation_from_json(jb);
        if (!(a.quiver == b.quiver) || a.p != b.p)
            throw std::domain_error("induced: inputs live over different quivers");
        value = induced_distance(a, b);
    } else if (args.metric == "block") {
        if (looks_like_zz(ja) != looks_like_zz(jb))
            throw std::domain_error("block: mixed zigzag-interval and module inputs");
        if (looks_like_zz(ja)) {
            value = block_distance(zz_multiset_from_json(ja), zz_multiset_from_json(jb));
        } else {
            Representation a = representation_from_json(ja), b = representation_from_json(jb);
            if (!(a.quiver == b.quiver) || a.p != b.p)
                throw std::domain_error("block: inputs live over different quivers");
            value = block_distance_a(a, b);
        }
    } else if (args.metric == "conv-nd") {
        ConvolutionValue v = convolution_nd(sheaf_from_json(ja), sheaf_from_json(jb));
        if (v.open_summand_present)
            err << "note: open summand present; the non-derived value is only a lower bound "
                   "for the derived one\n";
        value = v.value;
    } else if (args.metric == "conv-mplus") {
        // Accepts upper-fragment sheaf objects or graded barcodes (the
        // translation identifies them).
        auto as_sheaf = [](const json& j) {
            return looks_like_graded(j) ? theta_upper(graded_barcode_from_json(j))
                                        : sheaf_from_json(j);
        };
        SheafObject f = as_sheaf(ja), g = as_sheaf(jb);
        std::size_t m = args.m;
        if (m == 0) {
            long long hi = 2;
            for (const auto& b : f.bars) hi = std::max(hi, b.hi);
            for (const auto& b : g.bars) hi = std::max(hi, b.hi);
            m = std::size_t(hi - 1);
        }
        value = convolution_upper(f, g, m);
    } else {
        throw std::domain_error("unknown metric: " + args.metric);
    }
    out << value.to_string() << "\n";
    return 0;
}

int cmd_decompose(const std::string& input, bool cross_check, const std::string& format,
                  std::ostream& out) {
    json j = load_json(input);
    if (j.contains("terms")) {
        // cochain complex input: emit the graded barcode of its cohomology
        GradedBarcode g = decompose_complex(complex_from_json(j));
        out << to_json(g).dump(2) << "\n";
        return 0;
    }
    Representation r = representation_from_json(j);
    Barcode b = decompose(r);
    if (cross_check && !(b == decompose_by_rank(r)))
        throw std::logic_error("decomposition cross-check failed");
    if (format == "svg")
        out << barcode_svg(b, r.quiver.n);
    else if (format == "json")
        out << to_json(b).dump(2) << "\n";
    else
        throw std::domain_error("unknown format: " + format);
    return 0;
}

int cmd_ar_quiver(std::size_t n, const std::string& orientation, bool derived, int window,
                  const std::string& format, std::ostream& out) {
    Orientation o =
        orientation.empty() ? Orientation::equioriented(n) : Orientation::parse(orientation);
    ARQuiver g = build_ar_quiver(QuiverAn(n, o));
    if (format == "dot")
        out << (derived ? derived_ar_quiver_dot(g, window) : ar_quiver_dot(g));
    else if (format == "svg")
        out << (derived ? derived_ar_quiver_svg(g, window) : ar_quiver_svg(g));
    else
        throw std::domain_error("unknown format: " + format);
    return 0;
}

int cmd_transport(std::size_t n, const std::string& orientation, std::ostream& out) {
    Orientation o =
        orientation.empty() ? Orientation::equioriented(n) : Orientation::parse(orientation);
    const TransportTable& table = transport_table(n, o);
    out << "source_interval,target_interval,degree,torsion_tag\n";
    for (const auto& [src, e] : table.by_source) {
        std::string tag = o.is_z1() ? to_string(purely_zigzag_class(src))
                                    : to_string(e.degree == 0 ? TorsionSide::y_side
                                                              : TorsionSide::x_side);
        out << to_string(src) << "," << to_string(e.target) << "," << e.degree << "," << tag
            << "\n";
    }
    return 0;
}

int cmd_compare(std::size_t n, std::ostream& out, std::ostream& err) {
    ComparisonReport rep = comparison_report(n);
    out << "pair,class1,class2,d_zz,d_bl,relation\n";
    auto name = [](const std::optional<Interval>& iv) { return iv ? to_string(*iv) : "0"; };
    for (const auto& row : rep.rows)
        out << name(row.lhs) << "-" << name(row.rhs) << "," << row.class_lhs << ","
            << row.class_rhs << "," << row.d_induced.to_string() << ","
            << row.d_block.to_string() << "," << row.relation << "\n";
    for (const auto& v : rep.violations) err << "violation: " << v << "\n";
    if (rep.mixed_cell_greater)
        err << "block > induced at " << name(rep.mixed_cell_greater->lhs) << " vs "
            << name(rep.mixed_cell_greater->rhs) << "\n";
    if (rep.mixed_cell_less)
        err << "block < induced at " << name(rep.mixed_cell_less->lhs) << " vs "
            << name(rep.mixed_cell_less->rhs) << "\n";
    return rep.violations.empty() ? 0 : 1;
}

struct SuiteResult {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

void suite_isometry(std::size_t n_max, SuiteResult& res) {
    for (std::size_t n = 1; n <= n_max; ++n) {
        QuiverAn q(n, Orientation::equioriented(n));
        std::vector<Representation> objects{Representation::zero(q, 2)};
        for (int b = 1; b <= int(n); ++b)
            for (int d = b; d <= int(n); ++d)
                objects.push_back(Representation::interval(q, Interval{b, d}, 2));
        for (std::size_t i = 0; i < objects.size(); ++i)
            for (std::size_t j = i; j < objects.size(); ++j) {
                ExtRat viaBarcodes = interleaving_distance(objects[i], objects[j]);
                int viaOracle = min_interleaving_delta_oracle(objects[i], objects[j]);
                res.expect(viaBarcodes == ExtRat::integer(viaOracle),
                           "isometry mismatch at n=" + std::to_string(n));
            }
    }
}

void suite_imt(std::uint64_t seed, std::size_t trials, SuiteResult& res) {
    Rng rng(seed);
    std::uniform_int_distribution<std::size_t> pick_n(2, 6);
    std::size_t done = 0;
    while (done < trials) {
        std::size_t nn = pick_n(rng);
        QuiverAn q(nn, Orientation::equioriented(nn));
        Representation m = random_representation(q, 2, 3, rng);
        Representation n = random_representation(q, 2, 3, rng);
        Morphism f = random_hom_element(m, n, rng);
        int delta = 0;
        Representation ker = kernel(f).rep, cok = cokernel(f).rep;
        while (!is_delta_trivial(ker, 2 * delta) || !is_delta_trivial(cok, 2 * delta)) ++delta;
        res.expect(verify_imt(f, delta) == ImtOutcome::holds,
                   "matching certificate failed at trial " + std::to_string(done));
        ++done;
    }
}

void suite_transport(std::size_t n_max, SuiteResult& res) {
    for (std::size_t n = 3; n <= n_max; n += 2) {
        const TransportTable& table = transport_table(n, Orientation::zigzag_z1(n));
        for (const auto& [src, e] : table.by_source) {
            TransportEntry cf = purely_zigzag_target(src, n);
            res.expect(cf.target == e.target && cf.degree == e.degree,
                       "closed form mismatch at n=" + std::to_string(n) + " " + to_string(src));
        }
    }
    for (std::size_t n = 1; n <= std::min<std::size_t>(n_max, 7); ++n)
        for (std::uint64_t bits = 0; bits < (1ull << (n - 1)); ++bits) {
            Orientation a;
            for (std::size_t i = 0; i + 1 < n; ++i)
                a.arrows.push_back(bits >> i & 1 ? ArrowDir::backward : ArrowDir::forward);
            const TransportTable& table = transport_table(n, a);
            res.expect(table.by_source.size() == n * (n + 1) / 2,
                       "transport not bijective at n=" + std::to_string(n));
        }
}

void suite_blocks(std::uint64_t seed, SuiteResult& res) {
    // Translation round trip over all four kinds.
    for (long long b = 0; b <= 3; ++b)
        for (long long d = b; d <= b + 5; ++d)
            for (ZZKind kind : {ZZKind::closed, ZZKind::right_open, ZZKind::left_open, ZZKind::open}) {
                if (kind != ZZKind::closed && b == d) continue;
                ZZInterval z = make_zz(b, d, kind);
                res.expect(theta_bar_inverse(theta_bar(z)) == z, "theta round trip " + to_string(z));
            }
    for (std::size_t n : {std::size_t(5), std::size_t(7)}) {
        ComparisonReport rep = comparison_report(n);
        res.expect(rep.violations.empty(), "comparison violations at n=" + std::to_string(n));
    }
    res.expect(smallest_incomparable_n() == 7, "incomparability threshold moved");
    Rng rng(seed);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 5;
        QuiverAn q(n, Orientation::zigzag_z1(n));
        Representation x = random_representation(q, 2, 3, rng);
        Representation y = random_representation(q, 2, 3, rng);
        auto zx = zz_multiset(x), zy = zz_multiset(y);
        ConvolutionValue v = convolution_nd(theta(zx), theta(zy));
        res.expect(v.value == block_distance(zx, zy), "non-derived convolution mismatch");
        GradedBarcode gx = random_graded_barcode(6, -1, 1, 4, rng);
        GradedBarcode gy = random_graded_barcode(6, -1, 1, 4, rng);
        res.expect(convolution_upper(theta_upper(gx), theta_upper(gy), 6) ==
                       derived_interleaving_distance(gx, gy, 6),
                   "modified convolution mismatch");
    }
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::size_t n, std::ostream& out) {
    SuiteResult res;
    if (suite == "isometry")
        suite_isometry(n ? n : 5, res);
    else if (suite == "imt")
        suite_imt(seed, 200, res);
    else if (suite == "transport")
        suite_transport(n ? n : 7, res);
    else if (suite == "blocks")
        suite_blocks(seed, res);
    else
        throw std::domain_error("unknown suite: " + suite);
    for (const auto& f : res.failures) out << "FAIL " << f << "\n";
    out << "suite " << suite << (res.failures.empty() ? ": pass (" : ": FAIL (")
        << res.checks - res.failures.size() << "/" << res.checks << " checks)\n";
    return res.failures.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"distances on zigzag persistence modules"};
    app.require_subcommand(1);

    auto* dec = app.add_subcommand("decompose", "interval decomposition of a module");
    std::string dec_input;
    bool dec_check = false;
    dec->add_option("--input", dec_input, "representation JSON file")->required();
    dec->add_flag("--cross-check", dec_check, "also run the rank-based route and compare");
    std::string dec_format = "json";
    dec->add_option("--format", dec_format, "json or svg");

    auto* dist = app.add_subcommand("distance", "distance between two inputs");
    DistanceArgs dargs;
    dist->add_option("--metric", dargs.metric, "one of interleaving|bottleneck|induced|block|conv-nd|conv-mplus")
        ->required();
    dist->add_option("--a", dargs.file_a, "first input file")->required();
    dist->add_option("--b", dargs.file_b, "second input file")->required();
    dist->add_option("--m", dargs.m, "window size for conv-mplus (inferred when absent)");
    dist->add_flag("--oracle-check", dargs.oracle_check,
                   "verify interleaving values against the enumeration oracle");

    auto* arq = app.add_subcommand("ar-quiver", "emit the AR quiver");
    std::size_t arq_n = 3;
    std::string arq_orientation, arq_format = "dot";
    bool arq_derived = false;
    int arq_window = 1;
    arq->add_option("--n", arq_n, "number of vertices")->required();
    arq->add_option("--orientation", arq_orientation, "orientation string over {f,b}");
    arq->add_flag("--derived", arq_derived, "emit the translation-window quiver");
    arq->add_option("--window", arq_window, "largest stalk degree shown (default 1)");
    arq->add_option("--format", arq_format, "dot or svg");

    auto* tr = app.add_subcommand("transport", "dump the tilting transport table as CSV");
    std::size_t tr_n = 3;
    std::string tr_orientation;
    tr->add_option("--n", tr_n, "number of vertices")->required();
    tr->add_option("--orientation", tr_orientation, "orientation string over {f,b}")->required();

    auto* cmp = app.add_subcommand("compare", "induced-vs-block comparison CSV");
    std::size_t cmp_n = 7;
    cmp->add_option("--n", cmp_n, "odd number of vertices")->required();

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string ver_suite;
    std::uint64_t ver_seed = 0;
    std::size_t ver_n = 0;
    ver->add_option("--suite", ver_suite, "isometry|imt|transport|blocks")->required();
    ver->add_option("--seed", ver_seed, "random seed (default 0)");
    ver->add_option("--n", ver_n, "size bound where applicable");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (*dec) return cmd_decompose(dec_input, dec_check, dec_format, out);
        if (*dist) return cmd_distance(dargs, out, err);
        if (*arq) return cmd_ar_quiver(arq_n, arq_orientation, arq_derived, arq_window, arq_format, out);
        if (*tr) return cmd_transport(tr_n, tr_orientation, out);
        if (*cmp) return cmd_compare(cmp_n, out, err);
        if (*ver) return cmd_verify(ver_suite, ver_seed, ver_n, out);
    } catch (const json::parse_error& e) {
        err << "malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        err << "resource cap exceeded: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        err << "input mismatch: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "malformed input: " << e.what() << "\n";
        return 2;
    }
    return 1;
}

}  // namespace zigzag
