// k3lat: command-line front end for the lattice library.
//
// Exit codes: 0 success, 1 usage or parse error, 2 domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "k3lat/k3lat.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace k3lat;

struct Options {
    bool internal_norms = false;
    bool json = false;
    unsigned threads = 0;
};

json exact(const Integer& v) {
    if (auto small = to_int64(v)) return *small;
    return v.get_str();
}

json exact(const Rational& q) { return to_string(q); }

json exact_vector(const IntVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(exact(x));
    return a;
}

json exact_vector(const RatVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(exact(x));
    return a;
}

json envelope(json body) {
    json out = {{"schema", 1}};
    for (auto& [key, value] : body.items()) out[key] = value;
    return out;
}

// Norms are reported in the negative-definite convention unless
// --internal-norms is given.
Rational present(const Rational& internal_norm, const Options& o) {
    return o.internal_norms ? internal_norm : Rational(-internal_norm);
}

// Divisor-class norms are computed in the negative convention already.
Rational present_norm(const Rational& signed_norm, const Options& o) {
    return o.internal_norms ? Rational(-signed_norm) : signed_norm;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<OrbitClass> select_orbits(int two_n, std::optional<int> index, const Options& o) {
    std::vector<OrbitClass> orbits = orbits_of_norm(two_n, o.threads);
    if (orbits.empty()) {
        std::cerr << "warning: E8 has no vectors of odd norm " << two_n << '\n';
        return orbits;
    }
    if (!index) return orbits;
    if (*index < 0 || static_cast<std::size_t>(*index) >= orbits.size())
        throw InvalidArgument("orbit index " + std::to_string(*index) + " out of range; norm " +
                              std::to_string(two_n) + " has " + std::to_string(orbits.size()) + " orbit(s)");
    return {orbits[*index]};
}

std::string signature_text(const Signature& s) {
    return "(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")";
}

Lattice lattice_from_spec(const std::string& text) {
    const LatticeSpec spec = parse_spec(text);
    for (const auto& w : spec_warnings(spec)) std::cerr << "warning: " << w << '\n';
    return evaluate(spec);
}

// ---------------------------------------------------------------------------

void cmd_lat_info(const std::string& text, const Options& o) {
    const Lattice l = lattice_from_spec(text);
    const Integer det = determinant(l);
    const Signature sig = signature(l);
    const DiscriminantGroup dg = discriminant_group(l);
    std::optional<Integer> roots;
    if (sig.first == 0 || sig.second == 0) roots = root_count(l, o.threads);

    if (o.json) {
        json divisors = json::array();
        for (const auto& d : dg.divisors) divisors.push_back(exact(d));
        json j = {{"spec", print_spec(parse_spec(text))},
                  {"rank", l.rank()},
                  {"signature", {sig.first, sig.second}},
                  {"determinant", exact(det)},
                  {"even", l.is_even()},
                  {"discriminant_divisors", divisors},
                  {"discriminant_order", exact(dg.order)}};
        j["roots"] = roots ? exact(*roots) : json(nullptr);
        emit(envelope(j));
        return;
    }
    std::cout << "rank: " << l.rank() << '\n'
              << "signature: " << signature_text(sig) << '\n'
              << "determinant: " << det << '\n'
              << "even: " << (l.is_even() ? "true" : "false") << '\n'
              << "discriminant group: ";
    if (dg.divisors.empty()) std::cout << "trivial";
    for (std::size_t i = 0; i < dg.divisors.size(); ++i) std::cout << (i ? " x " : "") << "Z/" << dg.divisors[i];
    std::cout << " (order " << dg.order << ")\n";
    if (roots) std::cout << "roots: " << *roots << '\n';
}

void cmd_e8_orbits(int two_n, const Options& o) {
    const auto orbits = select_orbits(two_n, std::nullopt, o);
    const Rational norm = present(Rational(two_n), o);
    if (o.json) {
        json arr = json::array();
        for (std::size_t i = 0; i < orbits.size(); ++i) {
            const auto& c = orbits[i];
            arr.push_back({{"index", i},
                           {"norm", exact(norm)},
                           {"representative", exact_vector(c.representative)},
                           {"primitive", c.primitive},
                           {"orbit_size", c.orbit_size},
                           {"complement_determinant", exact(determinant(c.complement))},
                           {"roots", exact(c.root_count)}});
        }
        emit(envelope({{"two_n", two_n}, {"orbits", arr}}));
        return;
    }
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const auto& c = orbits[i];
        std::cout << "orbit " << i << ": norm " << to_string(norm) << ", representative [";
        for (std::size_t j = 0; j < c.representative.size(); ++j) std::cout << (j ? " " : "") << c.representative[j];
        std::cout << "], " << (c.primitive ? "primitive" : "non-primitive") << ", size " << c.orbit_size
                  << ", complement det " << determinant(c.complement) << ", roots " << c.root_count << '\n';
    }
}

json row_json(const CosetCountTable& row, const Options& o) {
    json cells = json::array();
    for (const auto& [k, hist] : row.counts)
        for (const auto& [norm, count] : hist)
            cells.push_back({{"k", k}, {"norm", exact(present(norm, o))}, {"count", count}});
    json totals = json::array();
    for (auto t : row.column_totals()) totals.push_back(t);
    json j = {{"two_n", row.two_n},
              {"roots", exact(row.root_count)},
              {"primitive", row.primitive},
              {"representative", exact_vector(row.representative)},
              {"totals", totals},
              {"cells", cells}};
    if (!row.primitive) j["caveat"] = "non-primitive vector: does not correspond to a primitive embedding";
    if (auto m = match_reference(row)) {
        json diff = json::array();
        for (int k : m->differing_k) diff.push_back(k);
        j["reference"] = {{"row", m->index}, {"matches", m->matches()}, {"differing_k", diff}};
    } else {
        j["reference"] = nullptr;
    }
    return j;
}

void cmd_table(int from, int to, const std::string& format, const Options& o) {
    if (from > to) throw InvalidArgument("--from must not exceed --to");
    const auto rows = coset_count_table(from, to, o.threads);
    if (format == "csv") {
        std::cout << format_table_csv(rows);
    } else if (format == "json" || o.json) {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(row_json(r, o));
        emit(envelope({{"convention", o.internal_norms ? "internal" : "negative"}, {"rows", arr}}));
    } else {
        std::cout << format_table_markdown(rows);
    }
}

void cmd_divisors(int two_n, std::optional<int> index, const Options& o) {
    const auto orbits = select_orbits(two_n, index, o);
    json out = json::array();
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const auto row = coset_count_row(orbits[i], -1, o.threads);
        const auto classes = theorem12_divisor_classes(row);
        const auto lines = divisor_lines(row);
        const std::size_t shown = index ? static_cast<std::size_t>(*index) : i;
        if (o.json) {
            json cls = json::array();
            for (const auto& c : classes)
                cls.push_back({{"k", c.k},
                               {"norm", exact(present_norm(c.signed_norm, o))},
                               {"dual_norm", exact(present_norm(c.dual_norm, o))},
                               {"count", c.count},
                               {"vanishing", c.vanishing}});
            json lns = json::array();
            for (const auto& d : lines) {
                json parts = json::array();
                for (const auto& p : d.contributions)
                    parts.push_back({{"scale", p.scale},
                                     {"norm", exact(present_norm(p.norm, o))},
                                     {"glue_label", p.glue_label},
                                     {"count", p.count}});
                lns.push_back({{"glue_label", d.glue_label},
                               {"norm", exact(present_norm(d.norm, o))},
                               {"direction", exact_vector(d.direction)},
                               {"contributions", parts},
                               {"multiplicity", d.total_multiplicity}});
            }
            json entry = {{"orbit", shown}, {"primitive", row.primitive}, {"classes", cls}, {"lines", lns}};
            out.push_back(entry);
            continue;
        }
        std::cout << "orbit " << shown << (row.primitive ? "" : " (non-primitive)") << '\n';
        for (const auto& c : classes)
            std::cout << "  class k=" << c.k << " norm " << to_string(present_norm(c.signed_norm, o)) << ": count "
                      << c.count << (c.vanishing ? ", vanishing" : ", not vanishing") << '\n';
        for (const auto& d : lines) {
            std::cout << "  line k0=" << d.glue_label << " norm " << to_string(present_norm(d.norm, o))
                      << ": multiplicity " << d.total_multiplicity << " =";
            for (std::size_t j = 0; j < d.contributions.size(); ++j)
                std::cout << (j ? " +" : "") << ' ' << d.contributions[j].count << " (c=" << d.contributions[j].scale
                          << ")";
            std::cout << '\n';
        }
    }
    if (o.json) emit(envelope({{"two_n", two_n}, {"orbits", out}}));
}

void cmd_weight(int two_n, std::optional<int> index, const Options& o) {
    const auto orbits = select_orbits(two_n, index, o);
    json out = json::array();
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const Integer w = restricted_weight(orbits[i].complement);
        const std::size_t shown = index ? static_cast<std::size_t>(*index) : i;
        if (o.json) {
            out.push_back({{"orbit", shown}, {"roots", exact(orbits[i].root_count)}, {"weight", exact(w)}});
        } else {
            std::cout << "2n=" << two_n << " orbit " << shown << ": roots " << orbits[i].root_count << ", weight "
                      << w << '\n';
        }
    }
    if (o.json) emit(envelope({{"two_n", two_n}, {"orbits", out}}));
}

void cmd_embed_check(const std::string& text, std::size_t target, const Options& o) {
    const EmbeddingReport r = nikulin_embeddable(lattice_from_spec(text), target);
    if (o.json) {
        emit(envelope({{"embeddable", r.embeddable},
                       {"rank", r.rank},
                       {"generator_count", r.generator_count},
                       {"signature", {r.signature.first, r.signature.second}},
                       {"target_rank", r.target_rank}}));
        return;
    }
    std::cout << "signature " << signature_text(r.signature) << ", rank " << r.rank << ", generators of T'/T "
              << r.generator_count << '\n'
              << r.generator_count << " + " << r.rank << (r.generator_count + r.rank < target ? " < " : " >= ")
              << target << '\n'
              << "embeddable: " << (r.embeddable ? "true" : "false") << '\n';
}

void cmd_sbad_witness(const std::string& path, const Options& o) {
    const ExtensionWitness w = read_witness_file(path);
    const SbadVerdict v = is_sbad_extension(w);
    if (o.json) {
        emit(envelope({{"det_s", exact(v.det_s)},
                       {"det_s1", exact(v.det_s1)},
                       {"s1_signature", {v.s1_signature.first, v.s1_signature.second}},
                       {"lorentzian", v.lorentzian},
                       {"sbad", v.sbad}}));
        return;
    }
    std::cout << "S1 Gram:\n";
    write_gram(std::cout, w.s1_gram());
    std::cout << "det S = " << v.det_s << ", det S1 = " << v.det_s1 << ", S1 signature "
              << signature_text(v.s1_signature) << '\n'
              << "|det S1| = " << abs(v.det_s1) << (abs(v.det_s1) <= 2 * abs(v.det_s) ? " <= " : " > ") << "2|det S| = "
              << 2 * abs(v.det_s) << '\n'
              << "S-bad: " << (v.sbad ? "true" : "false") << '\n';
}

void cmd_sbad_polarized(const Integer& n, const Integer& d, const Integer& k, const Options& o) {
    const bool bad = polarized_bad(n, d, k);
    const Rational shift = make_rational(k * k, 2 * n);
    const Rational projected = Rational(d) - shift;
    if (o.json) {
        emit(envelope({{"n", exact(n)},
                       {"dnorm", exact(d)},
                       {"k", exact(k)},
                       {"normalized_k", exact(normalize_degree(n, k))},
                       {"projected_norm", exact(projected)},
                       {"bad", bad}}));
        return;
    }
    std::cout << "(D,D) - k^2/2n = " << d << " - " << to_string(shift) << " = " << to_string(projected) << '\n'
              << "-2 " << (projected >= -2 ? "<=" : ">") << ' ' << to_string(projected) << ' '
              << (sgn(projected) < 0 ? "<" : ">=") << " 0\n"
              << "bad: " << (bad ? "true" : "false") << '\n';
}

void cmd_sbad_norms(const Integer& two_n, const Integer& k, const Options& o) {
    const auto norms = possible_extension_norms(two_n, k);
    if (o.json) {
        json arr = json::array();
        for (const auto& d : norms) arr.push_back(exact(d));
        emit(envelope({{"two_n", exact(two_n)}, {"k", exact(k)}, {"norms", arr}}));
        return;
    }
    std::cout << '{';
    for (std::size_t i = 0; i < norms.size(); ++i) std::cout << (i ? ", " : "") << norms[i];
    std::cout << "}\n";
}

void cmd_sbad_search(const std::string& path, long bound, long dmin, long dmax, const Options& o) {
    const Lattice s = read_gram_file(path);
    const auto found = search_sbad_extensions(s, bound, dmin, dmax);
    if (o.json) {
        json arr = json::array();
        for (const auto& w : found) {
            const SbadVerdict v = is_sbad_extension(w);
            arr.push_back({{"pairings", exact_vector(w.pairings)}, {"dnorm", exact(w.d_norm)}, {"det_s1", exact(v.det_s1)}});
        }
        emit(envelope({{"witnesses", arr}}));
        return;
    }
    for (const auto& w : found) {
        std::cout << "pairings [";
        for (std::size_t i = 0; i < w.pairings.size(); ++i) std::cout << (i ? " " : "") << w.pairings[i];
        std::cout << "] dnorm " << w.d_norm << " det S1 " << is_sbad_extension(w).det_s1 << '\n';
    }
    std::cout << found.size() << " S-bad extension(s)\n";
}

void cmd_minus2(const std::string& text, const Options& o) {
    const Lattice s = lattice_from_spec(text);
    const bool property = nikulin_minus2_property(s);
    if (o.json) {
        emit(envelope({{"spec", print_spec(parse_spec(text))},
                       {"determinant", exact(determinant(s))},
                       {"rank", s.rank()},
                       {"property", property}}));
        return;
    }
    std::cout << "rank " << s.rank() << ", determinant " << determinant(s) << '\n'
              << "property: " << (property ? "true" : "false") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice computations for K3 moduli: E8 orbits, coset tables, S-badness"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--internal-norms", opt.internal_norms, "Report norms in the positive-definite convention");
    app.add_flag("--json", opt.json, "Emit JSON (schema 1)");
    app.add_option("--threads", opt.threads, "Worker threads (0 = K3LAT_THREADS or hardware)");

    std::string spec;
    int two_n = 0;
    std::optional<int> orbit;

    auto* lat = app.add_subcommand("lat", "Lattice invariants");
    lat->require_subcommand(1);
    auto* lat_info = lat->add_subcommand("info", "Rank, signature, determinant, discriminant group, roots");
    lat_info->add_option("spec", spec, "Lattice expression, e.g. \"(-2) + -E8 + H\"")->required();

    auto* e8cmd = app.add_subcommand("e8", "E8 orbit classification");
    e8cmd->require_subcommand(1);
    auto* e8_orbits = e8cmd->add_subcommand("orbits", "Weyl orbits of vectors of a given norm");
    e8_orbits->add_option("--norm", two_n, "Norm 2n")->required();

    int from = 2, to = 14;
    std::string format = "md";
    auto* table = app.add_subcommand("table", "Root and dual-coset counts per orbit");
    table->add_option("--from", from, "Smallest 2n")->capture_default_str();
    table->add_option("--to", to, "Largest 2n")->capture_default_str();
    table->add_option("--format", format, "md, csv or json")
        ->check(CLI::IsMember({"md", "csv", "json"}))
        ->capture_default_str();

    auto* divisors = app.add_subcommand("divisors", "Divisor classes and hyperplane multiplicities");
    divisors->add_option("--norm", two_n, "Norm 2n")->required();
    divisors->add_option("--orbit", orbit, "Orbit index (as listed by 'e8 orbits')");

    auto* weight = app.add_subcommand("weight", "Weight of the restricted form per orbit");
    weight->add_option("--norm", two_n, "Norm 2n")->required();
    weight->add_option("--orbit", orbit, "Orbit index");

    std::size_t target = 28;
    auto* embed = app.add_subcommand("embed", "Embedding into II(2,26)");
    embed->require_subcommand(1);
    auto* embed_check = embed->add_subcommand("check", "Sufficient condition for a primitive embedding");
    embed_check->add_option("spec", spec, "Lattice expression")->required();
    embed_check->add_option("--target-rank", target, "Rank of the target lattice")->capture_default_str();

    std::string gram_path;
    std::string n_text, d_text, k_text;
    long bound = 2, dmin = -2, dmax = 0;
    auto* sbad = app.add_subcommand("sbad", "S-badness checks");
    sbad->require_subcommand(1);
    auto* sbad_witness = sbad->add_subcommand("witness", "Check a bordered Gram witness file");
    sbad_witness->add_option("--gram", gram_path, "Witness file")->required();
    auto* sbad_polarized = sbad->add_subcommand("polarized", "Polarised criterion -2 <= (D,D) - k^2/2n < 0");
    sbad_polarized->add_option("--n", n_text, "Half-degree n")->required();
    sbad_polarized->add_option("--dnorm", d_text, "(D,D)")->required();
    sbad_polarized->add_option("--k", k_text, "Degree (D,P)")->required();
    auto* sbad_norms = sbad->add_subcommand("norms", "Possible (D,D) for a degree-k extension");
    sbad_norms->add_option("--norm", two_n, "Norm 2n")->required();
    sbad_norms->add_option("--k", k_text, "Degree k")->required();
    auto* sbad_search = sbad->add_subcommand("search", "Bounded search for S-bad extensions");
    sbad_search->add_option("--gram", gram_path, "Gram file of S")->required();
    sbad_search->add_option("--pairing-bound", bound, "Max |pairing|")->capture_default_str();
    sbad_search->add_option("--dnorm-min", dmin, "Smallest (D,D)")->capture_default_str();
    sbad_search->add_option("--dnorm-max", dmax, "Largest (D,D)")->capture_default_str();

    auto* minus2 = app.add_subcommand("minus2", "Unimodular / determinant-2 Lorentzian predicate");
    minus2->require_subcommand(1);
    auto* minus2_property = minus2->add_subcommand("property", "Evaluate the predicate");
    minus2_property->add_option("spec", spec, "Lattice expression")->required();

    // Lattice expressions such as "-E8 + H" start with '-'; a leading blank
    // keeps them from being read as options (the expression parser skips it).
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) {
        std::string a = argv[i];
        if (a.size() > 1 && a[0] == '-' && a[1] != '-' && a != "-h" &&
            !std::isdigit(static_cast<unsigned char>(a[1])))
            a.insert(a.begin(), ' ');
        args.push_back(std::move(a));
    }

    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    auto parse_int = [](const std::string& s, const char* what) {
        Integer v;
        if (v.set_str(s, 10) != 0) throw InvalidArgument(std::string(what) + " must be an integer, got '" + s + "'");
        return v;
    };

    try {
        if (*lat_info) cmd_lat_info(spec, opt);
        else if (*e8_orbits) cmd_e8_orbits(two_n, opt);
        else if (*table) cmd_table(from, to, format, opt);
        else if (*divisors) cmd_divisors(two_n, orbit, opt);
        else if (*weight) cmd_weight(two_n, orbit, opt);
        else if (*embed_check) cmd_embed_check(spec, target, opt);
        else if (*sbad_witness) cmd_sbad_witness(gram_path, opt);
        else if (*sbad_polarized)
            cmd_sbad_polarized(parse_int(n_text, "--n"), parse_int(d_text, "--dnorm"), parse_int(k_text, "--k"), opt);
        else if (*sbad_norms) cmd_sbad_norms(Integer(two_n), parse_int(k_text, "--k"), opt);
        else if (*sbad_search) cmd_sbad_search(gram_path, bound, dmin, dmax, opt);
        else if (*minus2_property) cmd_minus2(spec, opt);
    } catch (const k3lat::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
