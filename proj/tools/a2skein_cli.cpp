// Command-line interface: exact sl3 skein computations for (2,2m) torus
// links with one-row colorings, twist expansions, raw web reduction, and
// the verification suites.
//
// Exit codes: 0 success, 1 computation error or failed verification,
// 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <a2skein/verify.hpp>
#include <a2skein/webio.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace a2skein;
using nlohmann::json;

json laurent_json(const QLaurent& p) {
    json terms = json::array();
    for (auto& [e, c] : p.terms()) terms.push_back({e, c});
    return terms;
}

json rational_json(const QRational& r) {
    return json{{"num", laurent_json(r.num())}, {"den", laurent_json(r.den())}};
}

LinkOrientation parse_orientation(const std::string& s) {
    if (s == "parallel") return LinkOrientation::parallel;
    return LinkOrientation::antiparallel;
}

int run(int argc, char** argv) {
    CLI::App app{"exact A2 web computations: sl3 colored invariants and tails of (2,2m) torus links"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));

    std::string orientation = "parallel";
    int m = 1, s = 1, t = 1, order = 10, n = 1;
    std::string basis = "k";
    std::string input;
    std::string suite = "all";
    int max_color = 2, max_twists = 2;

    auto orientation_check = CLI::IsMember({"parallel", "antiparallel"});

    auto* jones = app.add_subcommand("jones", "colored invariant of the (2,2m) torus link");
    jones->add_option("--orientation", orientation)->required()->check(orientation_check);
    jones->add_option("--m", m, "number of full twists (half the crossings)")->required();
    jones->add_option("--s", s, "one-row color of the first component")->required();
    jones->add_option("--t", t, "one-row color of the second component")->required();

    auto* tail = app.add_subcommand("tail", "truncated tail series of the (2,2m) torus link");
    tail->add_option("--orientation", orientation)->required()->check(orientation_check);
    tail->add_option("--m", m)->required();
    tail->add_option("--order", order, "truncation order in q")->required();

    auto* twist = app.add_subcommand("twist", "twist expansion of two clasped strands in basis webs");
    twist->add_option("--orientation", orientation)->required()->check(orientation_check);
    twist->add_option("--s", s)->required();
    twist->add_option("--t", t)->required();
    twist->add_option("--m", m, "number of full twists");
    twist->add_option("--basis", basis, "basis indexing for m=1: k or l")->check(CLI::IsMember({"k", "l"}));

    auto* normalized = app.add_subcommand("normalized", "framing-normalized invariant at s = t = n");
    normalized->add_option("--orientation", orientation)->required()->check(orientation_check);
    normalized->add_option("--m", m)->required();
    normalized->add_option("--n", n)->required();

    auto* reduce = app.add_subcommand("reduce", "reduce a web-description file to basis webs or a scalar");
    reduce->add_option("--input", input, "web description file")->required()->check(CLI::ExistingFile);

    auto* verify = app.add_subcommand("verify", "run verification suites against the engine");
    verify->add_option("--suite", suite, "qcomb, skein, clasp, twist, torus, tails, or all")
        ->check(CLI::IsMember({"qcomb", "skein", "clasp", "twist", "torus", "tails", "all"}));
    verify->add_option("--max-color", max_color, "largest one-row color in engine suites");
    verify->add_option("--max-twists", max_twists, "largest number of full twists in engine suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    const bool machine = format == "machine";
    try {
        if (*jones) {
            ColoredLinkSpec spec{parse_orientation(orientation), m, s, t};
            QRational v = jones_torus(spec);
            if (machine) {
                json out{{"command", "jones"},
                         {"orientation", orientation},
                         {"m", m},
                         {"s", s},
                         {"t", t},
                         {"terms", laurent_json(v.as_laurent())}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << v.as_laurent().to_string() << "\n";
            }
        } else if (*tail) {
            TailSeries ts = tail_series(parse_orientation(orientation), m, order);
            if (machine) {
                json out{{"command", "tail"},
                         {"orientation", orientation},
                         {"m", m},
                         {"order", order},
                         {"terms", laurent_json(ts.series)}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << ts.series.to_string() << "\n";
            }
        } else if (*twist) {
            LinkOrientation o = parse_orientation(orientation);
            TwistExpansion e;
            if (m == 1 && basis == "l")
                e = o == LinkOrientation::parallel ? parallel_full_l(s, t) : antiparallel_full_l(s, t);
            else if (basis == "l")
                throw error("the l-basis rendering applies to single full twists (m = 1)");
            else
                e = twist_expansion(o, s, t, m);
            if (machine) {
                json entries = json::array();
                for (auto& [k, c] : e.entries) entries.push_back({{"index", k}, {"terms", laurent_json(c)}});
                json out{{"command", "twist"}, {"orientation", orientation},
                         {"s", s},             {"t", t},
                         {"m", m},             {"basis", e.basis == BasisForm::k_form ? "k" : "l"},
                         {"entries", entries}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << e.to_string();
            }
        } else if (*normalized) {
            QLaurent v = normalized_jones(parse_orientation(orientation), m, n);
            if (machine) {
                json out{{"command", "normalized"},
                         {"orientation", orientation},
                         {"m", m},
                         {"n", n},
                         {"terms", laurent_json(v)}};
                std::cout << out.dump() << "\n";
            } else {
                std::cout << v.to_string() << "\n";
            }
        } else if (*reduce) {
            std::ifstream f(input);
            std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
            WebDiagram w = parse_web(text);
            if (w.boundary.empty()) {
                QRational v = evaluate_closed(w);
                if (machine) {
                    json out{{"command", "reduce"}, {"closed", true}, {"scalar", rational_json(v)}};
                    std::cout << out.dump() << "\n";
                } else {
                    std::cout << v.to_string() << "\n";
                }
            } else {
                WebSum out_sum;
                expand_all_clasps(w, QRational(1), [&](const WebDiagram& d, const QRational& c) {
                    WebSum r = reduce_to_basis(resolve_crossings(d));
                    r.scale(c);
                    out_sum.add(r);
                });
                if (machine) {
                    json terms = json::array();
                    for (auto& [k, term] : out_sum.terms())
                        terms.push_back({{"coeff", rational_json(term.coeff)}, {"web", write_web(term.diagram)}});
                    json out{{"command", "reduce"}, {"closed", false}, {"terms", terms}};
                    std::cout << out.dump() << "\n";
                } else {
                    for (auto& [k, term] : out_sum.terms()) {
                        std::cout << "coefficient: " << term.coeff.to_string() << "\n"
                                  << write_web(term.diagram) << "\n";
                    }
                    if (out_sum.empty()) std::cout << "0\n";
                }
            }
        } else if (*verify) {
            VerifyOptions opt{max_color, max_twists};
            auto reports = verify_suites(suite, opt);
            bool ok = true;
            for (auto& r : reports) {
                std::cout << "[" << r.suite << "]\n" << r.to_string();
                if (!r.all_pass()) ok = false;
            }
            std::cout << (ok ? "all suites passed" : "FAILURES PRESENT") << "\n";
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
