#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "z2cob/construct.hpp"
#include "z2cob/error.hpp"
#include "z2cob/momentgraph.hpp"
#include "z2cob/reference_data.hpp"

namespace z2cob::cli {

namespace {

using json = nlohmann::ordered_json;

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

bool is_builtin_name(const std::string& s) { return s == "simplex3" || s == "prism3" || s == "cube3"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::SyntaxError, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::SyntaxError, "cannot write '" + path + "'");
    out << text;
}

bool has_color_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t");
        if (pos != std::string::npos && line.compare(pos, 6, "color ") == 0) return true;
    }
    return false;
}

std::string coloring_text(const Coloring& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ' ';
        s += c[i].to_string();
    }
    return s;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

json set_json(const PrimeRepSet& s) {
    json a = json::array();
    for (const auto& m : s.entries()) a.push_back(m.to_string());
    return a;
}

}  // namespace

std::string render(const Report& r, Format f) {
    std::ostringstream out;
    switch (f) {
    case Format::Text:
        for (const auto& l : r.lines) out << l << "\n";
        break;
    case Format::Json: {
        json doc = json::object();
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = r.command;
        doc["status"] = r.status;
        for (auto it = r.data.begin(); it != r.data.end(); ++it) doc[it.key()] = it.value();
        out << doc.dump(2) << "\n";
        break;
    }
    case Format::Csv: {
        auto emit = [&](const std::vector<std::string>& row) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
            out << "\n";
        };
        emit(r.csv_header);
        for (const auto& row : r.csv) emit(row);
        break;
    }
    }
    return out.str();
}

Report cmd_verify_tables() {
    Report r;
    r.command = "verify-tables";
    r.csv_header = {"section", "item", "result", "detail"};
    const auto& cat = catalog();

    auto one = check_table_one(cat);
    r.line("Table I: " + std::to_string(one.matched) + "/7 rows match");
    for (const auto& p : one.problems) r.line("  " + p);
    if (one.matched != 7) r.fail();
    json t1 = json::array();
    for (int i = 0; i < 7; ++i) {
        bool ok = cat.rp_classes[i].cls.prime() == parse_prime_set(reference::kTableI[i], 3);
        t1.push_back({{"label", cat.rp_classes[i].label}, {"match", ok}, {"id", class_id(cat.rp_classes[i].mask)}});
        r.row({"table1", cat.rp_classes[i].label, ok ? "match" : "mismatch", class_id(cat.rp_classes[i].mask)});
    }
    r.data["table1"] = {{"matched", one.matched}, {"rows", t1}};

    // The five prism colorings.
    SimplePolytope prism = builtin(Builtin::Prism3);
    PrimeRepSet n1 = prime_set(SmallCover(prism, prism_lambda(1)));
    const auto group = enumerate_gl(3);
    json lam = json::array();
    for (int i = 1; i <= 5; ++i) {
        SmallCover c(prism, prism_lambda(i));
        PrimeRepSet s = prime_set(c);
        bool always_bounds = true;
        for (const auto& g : group) always_bounds = always_bounds && is_bounding(SmallCover(prism, compose(g, c.coloring())));
        const bool expect_bounding = i >= 4;
        const bool ok = expect_bounding ? always_bounds : !s.empty();
        if (!ok) r.fail();
        r.line("lambda" + std::to_string(i) + ": " + coloring_text(c.coloring()) + " |N|=" + std::to_string(s.size()) +
               " bounding: " + yes_no(s.empty()) + (expect_bounding ? (always_bounds ? " (every sigma)" : " (not for every sigma)") : ""));
        lam.push_back({{"lambda", i}, {"coloring", coloring_text(c.coloring())}, {"prime_set", set_json(s)},
                       {"bounding", s.empty()}, {"bounding_for_all_sigma", always_bounds}});
        r.row({"lambda", "lambda" + std::to_string(i), s.empty() ? "bounding" : "nonbounding", std::to_string(s.size())});
    }
    const bool s1 = act(reference::sigma1(), n1) == prime_set(SmallCover(prism, prism_lambda(2)));
    const bool s2 = act(reference::sigma2(), n1) == prime_set(SmallCover(prism, prism_lambda(3)));
    if (!s1 || !s2) r.fail();
    r.line(std::string("sigma1 N(lambda1) = N(lambda2): ") + yes_no(s1));
    r.line(std::string("sigma2 N(lambda1) = N(lambda3): ") + yes_no(s2));
    r.row({"lambda", "sigma1", s1 ? "match" : "mismatch", ""});
    r.row({"lambda", "sigma2", s2 ? "match" : "mismatch", ""});

    auto stab = stabilizer(n1);
    auto taus = reference::taus();
    std::set<BitMatrix> tau_set(taus.begin(), taus.end());
    const bool tau_equal = std::set<BitMatrix>(stab.begin(), stab.end()) == tau_set;
    std::string stab_text;
    for (const auto& m : stab) stab_text += (stab_text.empty() ? "" : " ") + m.to_string();
    r.line("stabilizer of N(lambda1): order " + std::to_string(stab.size()) + " [" + stab_text +
           "] equals printed tau list: " + yes_no(tau_equal));
    r.line("prism orbit: " + std::to_string(orbit(n1).size()) + " nonbounding classes");
    r.row({"lambda", "stabilizer", std::to_string(stab.size()), stab_text});
    r.data["lambdas"] = lam;
    r.data["sigma_relations"] = {{"sigma1", s1}, {"sigma2", s2}};
    json stab_json = json::array();
    for (const auto& m : stab) stab_json.push_back(m.to_string());
    r.data["stabilizer"] = {{"order", stab.size()}, {"matrices", stab_json},
                            {"equals_printed_taus", tau_equal}};

    // The six prism classes attached to T0.
    auto six = six_correspondence(0, cat);
    std::set<std::uint32_t> derived;
    for (int j : six.prism) derived.insert(cat.prism_classes[j].mask);
    int phi_ok = 0;
    for (auto s : reference::kPhi0u) phi_ok += derived.count(MonomialIndex::instance().mask(parse_prime_set(s, 3)));
    bool pairs_ok = true;
    for (auto [u, w] : reference::kPhi0Pairs) {
        auto a = MonomialIndex::instance().mask(parse_prime_set(reference::kPhi0u[u - 1], 3));
        auto b = MonomialIndex::instance().mask(parse_prime_set(reference::kPhi0u[w - 1], 3));
        pairs_ok = pairs_ok && (a ^ b) == cat.rp_classes[0].mask;
    }
    if (phi_ok != 6 || !pairs_ok || six.prism.size() != 6) r.fail();
    r.line("Phi0_u table: " + std::to_string(phi_ok) + "/6 rows match the prism classes meeting T0 in two monomials");
    r.line(std::string("Phi0_u pairs (1,6) (2,5) (3,4) sum with T0 to zero: ") + yes_no(pairs_ok));
    r.row({"phi0u", "rows", std::to_string(phi_ok) + "/6", ""});
    r.row({"phi0u", "pairs", pairs_ok ? "match" : "mismatch", ""});
    r.data["phi0u"] = {{"matched", phi_ok}, {"pairs", pairs_ok}};

    // Printed prism table against the derived catalog.
    auto d = diff_table_two(cat);
    r.line("Table II: " + std::to_string(d.in_orbit()) + "/21 rows in orbit, " + std::to_string(d.mismatches()) +
           " suspected typo(s)");
    json rows = json::array();
    for (const auto& e : d.entries) {
        std::string label = "Phi" + std::to_string(e.row);
        r.line("  " + label + ": " + e.status + (e.detail.empty() ? "" : " (" + e.detail + ")"));
        rows.push_back({{"row", label},
                        {"status", e.status},
                        {"detail", e.detail},
                        {"prism", e.prism_index ? json(cat.prism_classes[*e.prism_index].label) : json(nullptr)}});
        r.row({"table2", label, e.status, e.detail});
    }
    for (const auto& c : d.pair_conflicts) r.line("  pair conflict: " + c);
    r.line("derived half catalog: " + std::to_string(cat.selected_half.size()) + " classes");
    r.data["table2"] = {{"in_orbit", d.in_orbit()}, {"suspected_typos", d.mismatches()}, {"rows", rows},
                        {"pair_conflicts", d.pair_conflicts}};
    return r;
}

Report cmd_group_structure(const GroupOptions& opt) {
    Report r;
    r.command = "group";
    r.csv_header = {"section", "key", "value"};
    const auto& cat = catalog();
    RectBitMatrix a = relation_matrix(cat);
    const int rk = rank(a);
    auto universe = enumerate_group_masks(cat);
    auto ess = essential_set(universe);
    auto spectrum = cardinality_spectrum(universe);

    r.line("catalog: rp=" + std::to_string(cat.rp_classes.size()) + " prism=" +
           std::to_string(cat.prism_classes.size()) + " selected=" + std::to_string(cat.selected_half.size()));
    r.line("rank: " + std::to_string(rk));
    std::string basis;
    for (const auto& b : cat.basis13) basis += (basis.empty() ? "" : " ") + b.label;
    r.line("basis13: " + basis);
    r.line("classes: " + std::to_string(universe.size()));
    int min_nonzero = 0, max_card = 0;
    for (auto [card, count] : spectrum) {
        if (card && !min_nonzero) min_nonzero = card;
        max_card = std::max(max_card, card);
        r.line("  card " + std::to_string(card) + ": " + std::to_string(count));
        r.row({"spectrum", std::to_string(card), std::to_string(count)});
    }
    r.line("min nonzero card: " + std::to_string(min_nonzero) + " max card: " + std::to_string(max_card));
    r.line("essentials: " + std::to_string(ess.size()));
    if (rk != 13 || universe.size() != 8192 || ess.size() != 49 || min_nonzero != 4 || max_card != 28) r.fail();

    r.row({"count", "rp", std::to_string(cat.rp_classes.size())});
    r.row({"count", "prism", std::to_string(cat.prism_classes.size())});
    r.row({"count", "selected", std::to_string(cat.selected_half.size())});
    r.row({"count", "rank", std::to_string(rk)});
    r.row({"count", "classes", std::to_string(universe.size())});
    r.row({"count", "essentials", std::to_string(ess.size())});

    json spectrum_json = json::object();
    for (auto [card, count] : spectrum) spectrum_json[std::to_string(card)] = count;
    json basis_json = json::array();
    for (const auto& b : cat.basis13) basis_json.push_back({{"label", b.label}, {"id", class_id(b.mask)}});
    r.data["counts"] = {{"rp", cat.rp_classes.size()},
                        {"prism", cat.prism_classes.size()},
                        {"selected", cat.selected_half.size()}};
    r.data["rank"] = rk;
    r.data["basis13"] = basis_json;
    r.data["classes"] = universe.size();
    r.data["spectrum"] = spectrum_json;
    r.data["min_nonzero_card"] = min_nonzero;
    r.data["max_card"] = max_card;
    r.data["essentials"] = ess.size();

    if (opt.matrix) {
        auto rows = split_lines(matrix_text(a));
        r.line("relation matrix:");
        for (const auto& l : rows) r.line(l);
        r.data["matrix"] = rows;
        for (std::size_t i = 0; i < rows.size(); ++i) r.row({"matrix", std::to_string(i), rows[i]});
    }
    if (opt.classes) {
        json cls = json::array();
        for (auto m : universe) {
            auto c = class_from_mask(m);
            r.line(class_line(c));
            cls.push_back({{"id", class_id(m)}, {"card", c.card()}, {"essential", std::binary_search(ess.begin(), ess.end(), m)}});
            r.row({"class", class_id(m), std::to_string(c.card())});
        }
        r.data["class_list"] = cls;
    }
    return r;
}

Report cmd_enumerate(const std::string& source) {
    Report r;
    r.command = "enumerate";
    r.csv_header = {"orbit", "size", "free", "bounding", "prime_size", "representative"};
    SimplePolytope p;
    if (is_builtin_name(source)) {
        p = builtin(source);
    } else {
        std::string text = read_file(source);
        p = has_color_lines(text) ? parse_small_cover(text).polytope() : parse_polytope(text);
    }
    auto report = validate(p);
    if (!report.ok()) throw Error(ErrorCode::InvalidIncidence, report.to_string());

    auto colorings = enumerate_colorings(p, p.dim());
    auto orbits = coloring_orbits(colorings, p.dim());
    r.line("polytope: " + source + " facets=" + std::to_string(p.facet_count()) + " vertices=" +
           std::to_string(p.vertex_count()));
    r.line("colorings: " + std::to_string(colorings.size()));
    r.line("orbits: " + std::to_string(orbits.size()));
    json orbit_json = json::array();
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        const auto& o = orbits[i];
        SmallCover c(p, o.representative);
        PrimeRepSet s = prime_set(c);
        r.line("  orbit " + std::to_string(i + 1) + ": size " + std::to_string(o.size) + " free: " + yes_no(o.free) +
               " bounding: " + yes_no(s.empty()) + " |N|=" + std::to_string(s.size()) + " [" +
               coloring_text(o.representative) + "]");
        orbit_json.push_back({{"representative", coloring_text(o.representative)},
                              {"size", o.size},
                              {"free", o.free},
                              {"bounding", s.empty()},
                              {"prime_size", s.size()}});
        r.row({std::to_string(i + 1), std::to_string(o.size), yes_no(o.free), yes_no(s.empty()),
               std::to_string(s.size()), coloring_text(o.representative)});
    }
    std::set<PrimeRepSet> classes;
    for (const auto& c : colorings) {
        PrimeRepSet s = prime_set(SmallCover(p, c));
        if (!s.empty()) classes.insert(s);
    }
    r.line("distinct nonbounding prime sets: " + std::to_string(classes.size()));
    r.data["polytope"] = source;
    r.data["colorings"] = colorings.size();
    r.data["orbits"] = orbit_json;
    r.data["nonbounding_classes"] = classes.size();

    if (p == builtin(Builtin::Cube3)) {
        std::size_t distinct = 0;
        for (const auto& c : colorings) distinct += std::set<BitVec>(c.begin(), c.end()).size() == c.size();
        r.line("colorings with pairwise distinct facet values: " + std::to_string(distinct));
        r.data["distinct_value_colorings"] = distinct;
        if (distinct != 0) r.fail();
    }
    return r;
}

namespace {

CobordismClass parse_class_text(const std::string& class_text) {
    const auto& cat = catalog();
    if (class_text == "zero") return CobordismClass::zero(3);
    if (const LabeledClass* g = cat.find(class_text)) return g->cls;
    if (class_text.rfind("0x", 0) == 0) {
        auto m = parse_class_id(class_text);
        if (!m) throw Error(ErrorCode::SyntaxError, "bad class id '" + class_text + "'");
        return class_from_mask(*m);
    }
    if (!class_text.empty() && class_text.front() == '{') return CobordismClass(parse_prime_set(class_text, 3));
    throw Error(ErrorCode::SyntaxError, "class argument must be zero, a label, a hex id or a set literal: '" + class_text + "'");
}

json plan_json(const SumPlan& plan) {
    json steps = json::array();
    for (const auto& s : plan.steps)
        steps.push_back({{"left", s.left},
                         {"left_vertex", s.left_vertex + 1},
                         {"piece", s.piece},
                         {"piece_vertex", s.piece_vertex + 1},
                         {"sigma", s.sigma.to_string()},
                         {"monomial", s.monomial.to_string()},
                         {"vertices_after", s.vertices_after}});
    return {{"start", plan.start},
            {"start_vertices", plan.start_vertices},
            {"bridge_insertions", plan.bridge_insertions},
            {"steps", steps}};
}

}  // namespace

Report cmd_represent(const std::string& class_text, const RepresentOptions& opt) {
    Report r;
    r.command = "represent";
    r.csv_header = {"class", "card", "start", "steps", "vertices", "verified"};
    const auto& cat = catalog();

    std::vector<CobordismClass> targets;
    if (opt.sample > 0) {
        auto universe = enumerate_group_masks(cat);
        std::mt19937_64 rng(opt.seed);
        std::uniform_int_distribution<std::size_t> pick(0, universe.size() - 1);
        for (int i = 0; i < opt.sample; ++i) targets.push_back(class_from_mask(universe[pick(rng)]));
    } else {
        targets.push_back(parse_class_text(class_text));
        decompose(targets.back(), cat);  // NotInSpan for sets outside the group
    }

    int verified = 0;
    json results = json::array();
    for (const auto& beta : targets) {
        Representative rep = representative(beta, cat);
        const bool ok = verify_representative(rep.cover, beta);
        verified += ok;
        const int v = rep.cover.polytope().vertex_count();
        r.row({class_id(beta), std::to_string(beta.card()), rep.plan.start, std::to_string(rep.plan.steps.size()),
               std::to_string(v), yes_no(ok)});
        results.push_back({{"class", class_id(beta)},
                           {"card", beta.card()},
                           {"vertices", v},
                           {"verified", ok},
                           {"plan", plan_json(rep.plan)}});
        if (opt.sample > 0) {
            r.line(class_id(beta) + " card=" + std::to_string(beta.card()) + " start=" + rep.plan.start +
                   " steps=" + std::to_string(rep.plan.steps.size()) + " vertices=" + std::to_string(v) +
                   " verified: " + yes_no(ok));
            continue;
        }
        r.line(class_line(beta));
        for (const auto& l : split_lines(rep.plan.trace())) r.line(l);
        r.line("vertices: " + std::to_string(v) + " facets: " + std::to_string(rep.cover.polytope().facet_count()));
        r.line(std::string("verified: ") + yes_no(ok));
        if (opt.write_files) {
            write_file(opt.prefix + ".cover", "# representative of " + class_id(beta) + "\n" + serialize_small_cover(rep.cover));
            write_file(opt.prefix + ".plan", rep.plan.trace());
            r.line("wrote " + opt.prefix + ".cover and " + opt.prefix + ".plan");
            r.data["files"] = {opt.prefix + ".cover", opt.prefix + ".plan"};
        }
    }
    if (opt.sample > 0) r.line("verified " + std::to_string(verified) + "/" + std::to_string(targets.size()));
    if (verified != static_cast<int>(targets.size())) r.fail();
    r.data["seed"] = opt.sample > 0 ? json(opt.seed) : json(nullptr);
    r.data["verified"] = verified;
    r.data["results"] = results;
    return r;
}

Report cmd_moment_graph(const std::string& source, const MomentGraphOptions& opt) {
    Report r;
    r.command = "moment-graph";
    r.csv_header = {"key", "value"};
    SmallCover cover;
    if (is_builtin_name(source)) {
        SimplePolytope p = builtin(source);
        if (source == "simplex3") {
            if (opt.lambda && *opt.lambda != 0) throw Error(ErrorCode::SyntaxError, "simplex3 takes --lambda 0");
            cover = SmallCover(p, lambda0());
        } else if (source == "prism3") {
            cover = SmallCover(p, prism_lambda(opt.lambda.value_or(1)));
        } else {
            auto cs = enumerate_colorings(p, 3);
            int k = opt.lambda.value_or(1);
            if (k < 1 || k > static_cast<int>(cs.size()))
                throw Error(ErrorCode::SyntaxError, "cube3 colorings are numbered 1.." + std::to_string(cs.size()));
            cover = SmallCover(p, cs[k - 1]);
        }
    } else {
        if (opt.lambda) throw Error(ErrorCode::SyntaxError, "--lambda applies to builtin polytopes only");
        cover = parse_small_cover(read_file(source));
        auto report = validate(cover.polytope());
        if (!report.ok()) throw Error(ErrorCode::InvalidIncidence, report.to_string());
    }

    MomentGraph g = moment_graph(cover);
    AxiomReport ax = check_axial_axioms(g);
    const bool regular = 2 * g.edge_count() == g.dim() * g.vertex_count();
    r.line("cover: " + source + " coloring " + coloring_text(cover.coloring()));
    r.line("vertices: " + std::to_string(g.vertex_count()) + " edges: " + std::to_string(g.edge_count()));
    for (const auto& l : split_lines(ax.to_string())) r.line(l);
    r.line(std::string("n|V| = 2|E|: ") + yes_no(regular));
    if (!ax.ok() || !regular) r.fail();
    r.data["vertices"] = g.vertex_count();
    r.data["edges"] = g.edge_count();
    r.data["axioms"] = {{"span", ax.span_failures.empty()},
                        {"congruence", ax.congruence_failures.empty()},
                        {"structure", ax.structure_failures},
                        {"single_edges", ax.all_single_edges}};
    r.row({"vertices", std::to_string(g.vertex_count())});
    r.row({"edges", std::to_string(g.edge_count())});
    r.row({"axiom1", ax.span_failures.empty() ? "pass" : "fail"});
    r.row({"axiom2", ax.congruence_failures.empty() ? "pass" : "fail"});

    json nest_json = json::object();
    for (int k = 1; k < g.dim(); ++k) {
        const auto found = nests(g, k);
        const auto faces = nests(g, k, &cover.polytope());
        std::string l = std::to_string(k) + "-nests: " + std::to_string(found.size()) + " (faces: " +
                        std::to_string(faces.size());
        json entry = {{"nests", found.size()}, {"faces", faces.size()}};
        if (k <= 2 && g.vertex_count() <= 32) {
            auto every = all_nests(g, k);
            l += ", all subgraphs: " + std::to_string(every.size());
            entry["all_subgraphs"] = every.size();
        }
        r.line(l + ")");
        nest_json[std::to_string(k)] = entry;
        r.row({std::to_string(k) + "-nests", std::to_string(found.size())});
    }
    r.data["nests"] = nest_json;
    if (g.dim() == 3) {
        const int chi = euler_characteristic(g);
        r.line("chi: " + std::to_string(chi));
        r.data["chi"] = chi;
        r.row({"chi", std::to_string(chi)});
        if (chi != 2) r.fail();
    }
    if (opt.dot_path) {
        write_file(*opt.dot_path, to_dot(g));
        r.line("wrote " + *opt.dot_path);
    }
    return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equivariant cobordism of 2-torus 3-manifolds via small covers", "z2cob"};
    app.require_subcommand(1);
    std::string format = "text";
    std::string out_path;
    int jobs = 1;
    std::uint64_t seed = 1;
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", out_path, "Write the report to PATH instead of stdout");
    app.add_option("--jobs", jobs, "Worker threads (the computations here run on one)")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Seed for sampled runs");

    auto* verify = app.add_subcommand("verify-tables", "Recompute the printed tables");

    GroupOptions gopt;
    auto* group = app.add_subcommand("group", "Structure of the 13-dimensional group");
    group->add_flag("--matrix", gopt.matrix, "Include the relation matrix");
    group->add_flag("--classes", gopt.classes, "List every class");

    std::string source;
    auto* enumerate = app.add_subcommand("enumerate", "Characteristic functions on a polytope");
    enumerate->add_option("polytope", source, "simplex3, prism3, cube3 or a polytope file")->required();

    std::string class_text;
    RepresentOptions ropt;
    auto* represent = app.add_subcommand("represent", "Build a small cover representing a class");
    represent->add_option("class", class_text, "zero, a generator label, a hex class id or a set literal");
    represent->add_option("--prefix", ropt.prefix, "Output file prefix");
    represent->add_flag_function("--no-files", [&](std::int64_t) { ropt.write_files = false; }, "Do not write files");
    represent->add_option("--sample", ropt.sample, "Represent this many random classes")->check(CLI::NonNegativeNumber);

    MomentGraphOptions mopt;
    int lambda = -1;
    std::string dot;
    auto* moment = app.add_subcommand("moment-graph", "Moment graph, axioms and Euler characteristic");
    moment->add_option("cover", source, "simplex3, prism3, cube3 or a cover file")->required();
    moment->add_option("--lambda", lambda, "Coloring of a builtin polytope");
    moment->add_option("--dot", dot, "Write the graph in DOT format");

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    const Format fmt = format == "json" ? Format::Json : (format == "csv" ? Format::Csv : Format::Text);
    try {
        Report report;
        if (*verify) {
            report = cmd_verify_tables();
        } else if (*group) {
            report = cmd_group_structure(gopt);
        } else if (*enumerate) {
            report = cmd_enumerate(source);
        } else if (*represent) {
            if (class_text.empty() && ropt.sample == 0) {
                err << "error: represent needs a class or --sample N\n";
                return kInputError;
            }
            ropt.seed = seed;
            report = cmd_represent(class_text, ropt);
        } else {
            if (lambda >= 0) mopt.lambda = lambda;
            if (!dot.empty()) mopt.dot_path = dot;
            report = cmd_moment_graph(source, mopt);
        }
        const std::string text = render(report, fmt);
        if (out_path.empty()) {
            out << text;
        } else {
            write_file(out_path, text);
        }
        return report.status;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
        case ErrorCode::ConstructionFailed:
        case ErrorCode::CatalogInconsistent:
            return kMismatch;
        default:
            return kInputError;
        }
    }
}

}  // namespace z2cob::cli
