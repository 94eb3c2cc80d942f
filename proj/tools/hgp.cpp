// hgp -- hyperoctahedral Gelfand pair toolkit.
//
// Subcommands:
//   classes         conjugacy / relative-conjugacy class tables of H_n, or the
//                   (marked) type of a single element given in cycle notation
//   verify          verification suites with machine-readable verdicts
//   tables          character / spherical / generalized-character tables
//   counterexample  the wreath-product conjugacy witness search
//
// Exit codes: 0 success (all checks pass), 1 verification failure, 2 usage or
// cap error.

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "hgp/character.hpp"
#include "hgp/gelfand.hpp"
#include "hgp/hyperoctahedral.hpp"
#include "hgp/json_io.hpp"
#include "hgp/kernels.hpp"
#include "hgp/spherical.hpp"
#include "hgp/wreath.hpp"

namespace {

using hgp::Json;

struct Output {
    std::string path;     // empty = stdout
    std::string format;   // "json" or "csv"

    void write_text(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + path);
        f << text;
    }
    void write_json(const Json& j) const { write_text(j.dump(2) + "\n"); }
};

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

long long effective_cap(long long max_order_flag, long long default_cap) {
    return max_order_flag > 0 ? max_order_flag : default_cap;
}

// ---------------------------------------------------------------- classes --

int run_classes(int n, bool relative, const std::string& element, long long max_order,
                const Output& out) {
    if (!element.empty()) {
        hgp::Permutation w = hgp::parse_permutation(2 * n, element);
        if (!hgp::is_member_h(w)) {
            std::cerr << "element is not a member of H_" << n << "\n";
            return 2;
        }
        Json j{{"n", n},
               {"element", element},
               {"cycles", hgp::cycle_string(w)},
               {"one_line", Json(w.images())},
               {"type", hgp::to_json(hgp::hn_type(w))},
               {"marked_type", hgp::to_json(hgp::hn_marked_type(w))}};
        out.write_json(j);
        return 0;
    }

    long long cap = effective_cap(max_order, hgp::h_order(5));
    hgp::GroupTable hn = hgp::enumerate_h(n, cap);
    Json classes = Json::array();
    std::vector<std::array<std::string, 3>> csv_rows;
    auto add = [&](const std::string& key_name, const Json& key, const std::string& key_str,
                   size_t size, const hgp::Permutation& rep) {
        classes.push_back(Json{{key_name, key},
                               {"size", size},
                               {"representative", hgp::cycle_string(rep)}});
        csv_rows.push_back({key_str, std::to_string(size), hgp::cycle_string(rep)});
    };
    if (relative) {
        for (const auto& [mty, members] : hgp::hn_relative_classes(hn))
            add("marked_type", hgp::to_json(mty), mty.to_string(), members.size(),
                hn.element(members.front()));
    } else {
        for (const auto& [ty, members] : hgp::hn_conjugacy_classes(hn))
            add("type", hgp::to_json(ty), ty.to_string(), members.size(),
                hn.element(members.front()));
    }
    if (out.format == "csv") {
        std::ostringstream os;
        os << (relative ? "marked_type" : "type") << ",size,representative\n";
        for (const auto& r : csv_rows)
            os << csv_quote(r[0]) << ',' << r[1] << ',' << csv_quote(r[2]) << '\n';
        out.write_text(os.str());
    } else {
        out.write_json(Json{{"n", n},
                            {"relative", relative},
                            {"group_order", hn.order()},
                            {"num_classes", classes.size()},
                            {"classes", classes}});
    }
    return 0;
}

// ----------------------------------------------------------------- verify --

struct CheckList {
    Json checks = Json::array();
    bool all_pass = true;

    void add(const std::string& name, bool pass, Json details = Json::object()) {
        details["name"] = name;
        details["pass"] = pass;
        // keep name/pass first for readability
        Json ordered{{"name", details["name"]}, {"pass", details["pass"]}};
        for (auto& [k, v] : details.items())
            if (k != "name" && k != "pass") ordered[k] = v;
        checks.push_back(ordered);
        all_pass = all_pass && pass;
    }
};

Json pair_report(const std::string& pair_name, const hgp::GroupTable& g, const hgp::IndexSet& k) {
    auto gelfand = hgp::is_gelfand_via_commutativity(g, k);
    auto symmetric = hgp::is_symmetric_pair(g, k);
    Json witness;
    if (gelfand.witness)
        witness = hgp::cycle_string(g.element(*gelfand.witness));
    else if (symmetric.witness)
        witness = hgp::cycle_string(g.element(*symmetric.witness));
    return Json{{"pair", pair_name},
                {"gelfand", gelfand.commutative},
                {"symmetric", symmetric.holds},
                {"num_double_cosets", gelfand.num_double_cosets},
                {"witness", witness}};
}

void verify_gelfand(CheckList& cl, int n, long long max_order) {
    long long cap = effective_cap(max_order, hgp::h_order(5));
    hgp::GroupTable g = hgp::enumerate_h(n, cap);
    hgp::GroupTable k = hgp::enumerate_h(n - 1, cap);
    hgp::IndexSet kin = hgp::embedded_h_indices(g, k);
    Json report = pair_report("(H" + std::to_string(n) + ",H" + std::to_string(n - 1) + ")", g, kin);
    cl.add("gelfand_commutativity", report["gelfand"].get<bool>() && report["symmetric"].get<bool>(),
           Json{{"report", report}});
}

void verify_symmetric(CheckList& cl, int n, long long max_order) {
    long long cap = effective_cap(max_order, hgp::h_order(5));
    hgp::GroupTable g = hgp::enumerate_h(n, cap);
    hgp::GroupTable k = hgp::enumerate_h(n - 1, cap);
    hgp::IndexSet kin = hgp::embedded_h_indices(g, k);

    bool mty_inverse = true;
    for (uint32_t i = 0; i < g.order() && mty_inverse; ++i)
        mty_inverse = hgp::hn_marked_type(g.element(i)) ==
                      hgp::hn_marked_type(g.element(g.inverse_index(i)));
    cl.add("marked_type_inverse_invariant", mty_inverse, Json{{"n", n}});

    auto diag = hgp::is_diag_symmetric_gelfand(g, kin);
    cl.add("diag_symmetric_gelfand", diag.holds,
           Json{{"pair", "(H" + std::to_string(n) + "xH" + std::to_string(n - 1) + ",diag)"},
                {"witness", diag.witness ? Json(hgp::cycle_string(g.element(*diag.witness)))
                                         : Json()}});
    auto sym = hgp::is_symmetric_pair(g, kin);
    cl.add("symmetric_pair", sym.holds, Json{{"n", n}});
}

void verify_prop44(CheckList& cl, int n, long long max_order, uint64_t seed) {
    long long cap = effective_cap(max_order, hgp::h_order(5));
    for (int m = 2; m <= std::min(n, 4); ++m) {
        hgp::GroupTable g = hgp::enumerate_h(m, cap);
        hgp::GroupTable k = hgp::enumerate_h(m - 1, cap);
        hgp::IndexSet kin = hgp::embedded_h_indices(g, k);
        auto orbits = hgp::k_conjugacy_classes(g, kin);
        auto fibers = hgp::hn_relative_classes(g);
        bool equal = orbits.size() == fibers.size();
        if (equal) {
            std::vector<hgp::IndexSet> fiber_sets;
            for (const auto& [key, members] : fibers) fiber_sets.push_back(members);
            std::sort(fiber_sets.begin(), fiber_sets.end());
            std::sort(orbits.begin(), orbits.end());
            equal = fiber_sets == orbits;
        }
        cl.add("relative_classes_equal_marked_fibers", equal,
               Json{{"n", m}, {"num_classes", fibers.size()}});
    }
    if (n >= 5) {
        hgp::GroupTable g = hgp::enumerate_h(5, cap);
        hgp::GroupTable k = hgp::enumerate_h(4, cap);
        std::vector<hgp::Permutation> kemb;
        for (const auto& e : k.elements()) kemb.push_back(hgp::embed_h(e, 5));
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<uint32_t> pick(0, static_cast<uint32_t>(g.order()) - 1);
        size_t checked = 0, equal_mty = 0;
        bool ok = true;
        for (int trial = 0; trial < 10000 && ok; ++trial) {
            const auto& w1 = g.element(pick(rng));
            const auto& w2 = g.element(pick(rng));
            bool same = hgp::hn_marked_type(w1) == hgp::hn_marked_type(w2);
            bool found = false;
            for (const auto& a : kemb)
                if (hgp::conjugate(w1, a) == w2) {
                    found = true;
                    break;
                }
            ok = (same == found);
            ++checked;
            if (same) ++equal_mty;
        }
        cl.add("random_pairs_marked_type_iff_conjugator", ok,
               Json{{"n", 5}, {"pairs", checked}, {"equal_marked_type_pairs", equal_mty}});
    }
}

void verify_prop46(CheckList& cl, int n, long long max_order) {
    long long cap = effective_cap(max_order, hgp::h_order(4));
    hgp::HnPair pair = hgp::make_hn_pair(n, cap);
    auto pi = hgp::induced_rep_character(pair);
    auto mult = hgp::decompose_induced(pair, pi);
    bool ok = true;
    long long ones = 0;
    for (size_t r = 0; r < pair.gt.size() && ok; ++r)
        for (size_t s = 0; s < pair.kt.size() && ok; ++s) {
            bool cov = hgp::covers(pair.kt.labels[s], pair.gt.labels[r]);
            ok = mult[r][s] == (cov ? 1 : 0);
            ones += mult[r][s] == 1;
        }
    cl.add("induced_rep_multiplicity_free_on_covering_pairs", ok,
           Json{{"n", n}, {"multiplicity_one_pairs", ones}});
    if (static_cast<long long>(pair.g.order()) * static_cast<long long>(pair.k.order()) <= 400) {
        auto direct = hgp::induced_rep_character_direct(pair);
        cl.add("coset_model_matches_direct_product_action", pi == direct, Json{{"n", n}});
    }
}

void verify_eq2(CheckList& cl, int n, long long max_order, uint64_t seed) {
    long long cap = effective_cap(max_order, hgp::h_order(4));
    hgp::HnPair pair = hgp::make_hn_pair(n, cap);
    std::vector<hgp::SphericalFunction> fs;
    for (const auto& label : hgp::covering_labels(n))
        fs.push_back(hgp::zonal_spherical(pair, label.sigma, label.rho));

    auto check_pair = [&](const hgp::Permutation& x1, const hgp::Permutation& x2,
                          const hgp::Permutation& y1, const hgp::Permutation& y2) {
        for (const auto& f : fs) {
            hgp::Rat lhs = f.eval(pair, x1, x2) * f.eval(pair, y1, y2);
            hgp::Rat rhs = hgp::functional_equation_average(pair, f, x1, x2, y1, y2);
            if (lhs != rhs) return false;
        }
        return true;
    };

    bool ok = true;
    size_t checked = 0;
    if (n <= 2) {
        for (uint32_t a = 0; a < pair.g.order() && ok; ++a)
            for (uint32_t b = 0; b < pair.k.order() && ok; ++b)
                for (uint32_t c = 0; c < pair.g.order() && ok; ++c)
                    for (uint32_t d = 0; d < pair.k.order() && ok; ++d) {
                        ok = check_pair(pair.g.element(a), pair.k.element(b), pair.g.element(c),
                                        pair.k.element(d));
                        ++checked;
                    }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<uint32_t> pg(0, static_cast<uint32_t>(pair.g.order()) - 1);
        std::uniform_int_distribution<uint32_t> pk(0, static_cast<uint32_t>(pair.k.order()) - 1);
        for (int t = 0; t < 100 && ok; ++t) {
            ok = check_pair(pair.g.element(pg(rng)), pair.k.element(pk(rng)),
                            pair.g.element(pg(rng)), pair.k.element(pk(rng)));
            ++checked;
        }
    }
    cl.add("zonal_functional_equation", ok,
           Json{{"n", n}, {"labels", fs.size()}, {"argument_pairs", checked}});
}

void verify_counterexamples(CheckList& cl, long long max_order) {
    long long cap = effective_cap(max_order, 45000);
    // (S_2n x H_n, diag H_n): n <= 3 pass, n = 4 fails with the known witness
    for (int n = 1; n <= 4; ++n) {
        std::vector<hgp::Permutation> all;
        {
            std::vector<int> im(2 * n);
            std::iota(im.begin(), im.end(), 1);
            std::vector<int> v = im;
            do all.emplace_back(v);
            while (std::next_permutation(v.begin(), v.end()));
        }
        if (static_cast<long long>(all.size()) > cap)
            throw std::invalid_argument("verify counterexamples: |S_" + std::to_string(2 * n) +
                                        "| exceeds the cap");
        hgp::GroupTable s2n = hgp::GroupTable::from_elements(std::move(all));
        hgp::IndexSet hn;
        for (uint32_t i = 0; i < s2n.order(); ++i)
            if (hgp::is_member_h(s2n.element(i))) hn.push_back(i);
        auto diag = hgp::is_diag_symmetric_gelfand(s2n, hn);
        if (n <= 3) {
            cl.add("diag_pair_S" + std::to_string(2 * n) + "_H" + std::to_string(n), diag.holds,
                   Json{{"expected", true}});
        } else {
            bool paper_witness_fails = false;
            {
                hgp::Permutation omega = hgp::parse_permutation(8, "(1,6,4,5,2,3,8,7)");
                hgp::Permutation target = hgp::inverse(omega);
                paper_witness_fails = true;
                for (uint32_t i : hn)
                    if (hgp::conjugate(omega, s2n.element(i)) == target) {
                        paper_witness_fails = false;
                        break;
                    }
            }
            cl.add("diag_pair_S8_H4_fails", !diag.holds && paper_witness_fails,
                   Json{{"witness", diag.witness
                                        ? Json(hgp::cycle_string(s2n.element(*diag.witness)))
                                        : Json()},
                        {"paper_omega_has_no_conjugator", paper_witness_fails}});
        }
    }
    auto wreath = hgp::wreath_counterexample_check(3, 2);
    cl.add("wreath_S3wrS2_omega_not_conjugate_to_inverse", !wreath.conjugate_to_inverse,
           Json{{"k", 3},
                {"n", 2},
                {"omega", hgp::cycle_string(wreath.omega)},
                {"searched", wreath.searched}});
}

int run_verify(const std::string& suite, int n, long long max_order, uint64_t seed,
               const Output& out) {
    CheckList cl;
    if (suite == "gelfand") {
        verify_gelfand(cl, n > 0 ? n : 4, max_order);
    } else if (suite == "symmetric") {
        verify_symmetric(cl, n > 0 ? n : 5, max_order);
    } else if (suite == "prop44") {
        verify_prop44(cl, n > 0 ? n : 4, max_order, seed);
    } else if (suite == "prop46") {
        verify_prop46(cl, n > 0 ? n : 3, max_order);
    } else if (suite == "eq2") {
        verify_eq2(cl, n > 0 ? n : 2, max_order, seed);
    } else if (suite == "counterexamples") {
        verify_counterexamples(cl, max_order);
    } else if (suite == "all") {
        verify_prop44(cl, n > 0 ? n : 4, max_order, seed);
        verify_symmetric(cl, n > 0 ? n : 5, max_order);
        verify_gelfand(cl, std::min(n > 0 ? n : 4, 4), max_order);
        verify_prop46(cl, std::min(n > 0 ? n : 3, 4), max_order);
        verify_eq2(cl, std::min(n > 0 ? n : 2, 3), max_order, seed);
        verify_counterexamples(cl, max_order);
    } else {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }
    out.write_json(Json{{"suite", suite},
                        {"seed", seed},
                        {"all_pass", cl.all_pass},
                        {"checks", cl.checks}});
    return cl.all_pass ? 0 : 1;
}

// ----------------------------------------------------------------- tables --

int run_tables(const std::string& kind, int n, long long max_order, const Output& out) {
    if (kind == "characters") {
        long long cap = effective_cap(max_order, hgp::h_order(5));
        if (hgp::h_order(n) > cap)
            throw std::invalid_argument("tables: |H_" + std::to_string(n) +
                                        "| exceeds the cap; raise --max-order");
        hgp::HnCharacterTable t = hgp::hn_character_table(n);
        if (out.format == "csv") {
            std::ostringstream os;
            os << "character";
            for (const auto& c : t.labels) os << ',' << csv_quote(c.to_string());
            os << "\nclass_size";
            for (auto s : t.class_sizes) os << ',' << s;
            os << "\ncentralizer_order";
            for (auto s : t.centralizer_orders) os << ',' << s;
            os << '\n';
            for (size_t r = 0; r < t.size(); ++r) {
                os << csv_quote(t.labels[r].to_string());
                for (size_t c = 0; c < t.size(); ++c) os << ',' << t.entries[r][c];
                os << '\n';
            }
            out.write_text(os.str());
        } else {
            Json labels = Json::array(), sizes = Json::array(), cents = Json::array(),
                 entries = Json::array();
            for (const auto& l : t.labels) labels.push_back(hgp::to_json(l));
            for (auto s : t.class_sizes) sizes.push_back(s);
            for (auto s : t.centralizer_orders) cents.push_back(s);
            for (const auto& row : t.entries) entries.push_back(Json(row));
            out.write_json(Json{{"group", "H" + std::to_string(n)},
                                {"n", n},
                                {"labels", labels},
                                {"class_sizes", sizes},
                                {"centralizer_orders", cents},
                                {"entries", entries}});
        }
        return 0;
    }

    long long cap = effective_cap(max_order, hgp::h_order(4));
    if (hgp::h_order(n) > cap)
        throw std::invalid_argument("tables: |H_" + std::to_string(n) +
                                    "| exceeds the cap; raise --max-order");
    hgp::HnPair pair = hgp::make_hn_pair(n, cap);

    if (kind == "spherical") {
        Json functions = Json::array();
        std::ostringstream csv;
        csv << "sigma,rho,x_class,y_class,value\n";
        for (const auto& label : hgp::covering_labels(n)) {
            hgp::SphericalFunction f = hgp::zonal_spherical(pair, label.sigma, label.rho);
            Json values = Json::array();
            for (size_t xc = 0; xc < pair.g_classes.size(); ++xc) {
                for (size_t yc = 0; yc < pair.k_classes.size(); ++yc) {
                    hgp::Rat v = f.at_class_pair(pair, xc, yc);
                    values.push_back(Json{{"x_class", hgp::to_json(pair.g_classes[xc].first)},
                                          {"y_class", hgp::to_json(pair.k_classes[yc].first)},
                                          {"value", hgp::rat_string(v)}});
                    csv << csv_quote(label.sigma.to_string()) << ','
                        << csv_quote(label.rho.to_string()) << ','
                        << csv_quote(pair.g_classes[xc].first.to_string()) << ','
                        << csv_quote(pair.k_classes[yc].first.to_string()) << ','
                        << hgp::rat_string(v) << '\n';
                }
            }
            functions.push_back(Json{{"n", n},
                                     {"label",
                                      Json{{"sigma", hgp::to_json(label.sigma)},
                                           {"rho", hgp::to_json(label.rho)}}},
                                     {"values", values}});
        }
        if (out.format == "csv")
            out.write_text(csv.str());
        else
            out.write_json(Json{{"n", n}, {"kind", "spherical"}, {"functions", functions}});
        return 0;
    }

    if (kind == "generalized") {
        Json functions = Json::array();
        std::ostringstream csv;
        csv << "sigma,rho,marked_class,value\n";
        for (const auto& label : hgp::covering_labels(n)) {
            hgp::GeneralizedCharacter f =
                hgp::generalized_character(pair, label.sigma, label.rho);
            Json values = Json::array();
            for (size_t c = 0; c < pair.rel_classes.size(); ++c) {
                values.push_back(Json{{"class", hgp::to_json(pair.rel_classes[c].first)},
                                      {"value", hgp::rat_string(f.by_marked_class[c])}});
                csv << csv_quote(label.sigma.to_string()) << ','
                    << csv_quote(label.rho.to_string()) << ','
                    << csv_quote(pair.rel_classes[c].first.to_string()) << ','
                    << hgp::rat_string(f.by_marked_class[c]) << '\n';
            }
            functions.push_back(Json{{"n", n},
                                     {"label",
                                      Json{{"sigma", hgp::to_json(label.sigma)},
                                           {"rho", hgp::to_json(label.rho)}}},
                                     {"values", values}});
        }
        if (out.format == "csv")
            out.write_text(csv.str());
        else
            out.write_json(Json{{"n", n}, {"kind", "generalized"}, {"functions", functions}});
        return 0;
    }

    std::cerr << "unknown table kind: " << kind << "\n";
    return 2;
}

// --------------------------------------------------------- counterexample --

int run_counterexample(int k, int n, const Output& out) {
    auto report = hgp::wreath_counterexample_check(k, n);
    out.write_json(Json{{"k", k},
                        {"n", n},
                        {"omega", hgp::cycle_string(report.omega)},
                        {"k_conjugate_to_inverse", report.conjugate_to_inverse},
                        {"searched", report.searched}});
    return 0;
}

}   // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperoctahedral Gelfand pair toolkit"};
    app.require_subcommand(1);

    int n = 0, k = 3;
    bool relative = false;
    std::string element, suite = "all", kind = "characters";
    long long max_order = 0;
    uint64_t seed = 12345;
    Output out;
    out.format = "json";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out.path, "output file (default: stdout)");
        cmd->add_option("--format", out.format, "json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--max-order", max_order, "raise the enumeration cap to this group order");
    };

    CLI::App* classes = app.add_subcommand("classes", "conjugacy classes of H_n");
    classes->add_option("--n", n, "rank")->required();
    classes->add_flag("--relative", relative, "H_{n-1}-conjugacy classes (marked types)");
    classes->add_option("--element", element, "cycle notation; report this element's type only");
    add_common(classes);

    CLI::App* verify = app.add_subcommand("verify", "verification suites");
    verify->add_option("--suite", suite,
                       "gelfand|symmetric|prop44|prop46|eq2|counterexamples|all");
    verify->add_option("--n", n, "rank (suite-specific default when omitted)");
    verify->add_option("--seed", seed, "seed for randomized property checks");
    add_common(verify);

    CLI::App* tables = app.add_subcommand("tables", "exact tables");
    tables->add_option("--kind", kind, "characters|spherical|generalized");
    tables->add_option("--n", n, "rank")->required();
    add_common(tables);

    CLI::App* cex = app.add_subcommand("counterexample", "wreath conjugacy witness search");
    cex->add_option("--k", k, "block size (default 3)");
    cex->add_option("--n", n, "block count (default 2)");
    add_common(cex);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classes->parsed()) return run_classes(n, relative, element, max_order, out);
        if (verify->parsed()) return run_verify(suite, n, max_order, seed, out);
        if (tables->parsed()) return run_tables(kind, n, max_order, out);
        if (cex->parsed()) return run_counterexample(k, n == 0 ? 2 : n, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
