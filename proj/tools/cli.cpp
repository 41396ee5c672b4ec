#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "starrees/groebner.hpp"
#include "starrees/rees_height2.hpp"
#include "starrees/suites.hpp"
#include "starrees/taylor.hpp"

namespace starrees::cli {

namespace {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Loaded {
    StarConfig cfg;
    std::string source; // "U" or "forms"
    std::optional<Normalization> norm;
};

std::string read_all(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw InputError("cannot open '" + path + "'");
        buf << f.rdbuf();
    }
    return buf.str();
}

Scalar scalar_of(const json& v, const Field& field, const std::string& where) {
    try {
        if (v.is_number_integer()) return Scalar::from_int(field, v.get<long>());
        if (v.is_string()) return Scalar::parse(v.get<std::string>(), field);
    } catch (const Error& e) {
        throw InputError(where + ": " + e.what());
    }
    throw InputError(where + ": expected an integer or a string such as \"1/2\"");
}

Loaded load(const std::string& path, std::istream& in) {
    json doc;
    try {
        doc = json::parse(read_all(path, in));
    } catch (const json::parse_error& e) {
        throw InputError(std::string("input document: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("input document: expected an object");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        static const char* known[] = {"field", "c", "U", "forms", "variables", "weights"};
        if (std::find_if(std::begin(known), std::end(known), [&](const char* k) { return it.key() == k; }) ==
            std::end(known))
            throw InputError("input document: unknown field '" + it.key() + "'");
    }
    Field field = Field::rationals();
    if (doc.contains("field")) {
        if (!doc["field"].is_string()) throw InputError("field: expected a string such as \"Q\" or \"Fp:101\"");
        try {
            field = Field::parse(doc["field"].get<std::string>());
        } catch (const Error& e) {
            throw InputError(std::string("field: ") + e.what());
        }
    }
    int c = 2;
    if (doc.contains("c")) {
        if (!doc["c"].is_number_integer()) throw InputError("c: expected an integer");
        c = doc["c"].get<int>();
    }
    std::vector<std::string> names;
    if (doc.contains("variables")) {
        if (!doc["variables"].is_array()) throw InputError("variables: expected a list of names");
        for (std::size_t i = 0; i < doc["variables"].size(); ++i) {
            if (!doc["variables"][i].is_string()) throw InputError("variables[" + std::to_string(i) + "]: expected a name");
            names.push_back(doc["variables"][i].get<std::string>());
        }
    }
    std::vector<unsigned> weights;
    if (doc.contains("weights")) {
        if (!doc["weights"].is_array()) throw InputError("weights: expected a list of positive integers");
        for (std::size_t i = 0; i < doc["weights"].size(); ++i) {
            const auto& w = doc["weights"][i];
            if (!w.is_number_integer() || w.get<long>() < 1)
                throw InputError("weights[" + std::to_string(i) + "]: expected a positive integer");
            weights.push_back(w.get<unsigned>());
        }
    }
    const bool hasU = doc.contains("U"), hasF = doc.contains("forms");
    if (hasU == hasF) throw InputError("input document: give exactly one of 'U' and 'forms'");

    if (hasU) {
        const json& u = doc["U"];
        if (!u.is_array() || u.empty()) throw InputError("U: expected a non-empty list of rows");
        const std::size_t cols = u[0].is_array() ? u[0].size() : 0;
        ScalarMatrix U(static_cast<int>(u.size()), static_cast<int>(cols), field);
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (!u[i].is_array() || u[i].size() != cols)
                throw InputError("U[" + std::to_string(i) + "]: rows must be lists of equal length");
            for (std::size_t j = 0; j < cols; ++j)
                U.at(int(i), int(j)) = scalar_of(u[i][j], field, "U[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        }
        try {
            return {StarConfig(std::move(U), c, weights, names), "U", std::nullopt};
        } catch (const Error& e) {
            throw InputError(std::string("U: ") + e.what());
        }
    }

    const json& f = doc["forms"];
    if (!f.is_array() || f.empty()) throw InputError("forms: expected a non-empty list of linear forms");
    if (!weights.empty()) throw InputError("weights: only supported together with 'U'");
    std::vector<std::string> texts;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f[i].is_string()) throw InputError("forms[" + std::to_string(i) + "]: expected a string");
        texts.push_back(f[i].get<std::string>());
    }
    int d = static_cast<int>(names.size());
    if (d == 0) {
        // Default names x1..xd with d the largest index used.
        for (const auto& t : texts)
            for (std::size_t p = 0; p < t.size(); ++p)
                if (t[p] == 'x' && (p == 0 || !std::isalnum(static_cast<unsigned char>(t[p - 1])))) {
                    std::size_t q = p + 1;
                    int v = 0;
                    while (q < t.size() && std::isdigit(static_cast<unsigned char>(t[q]))) v = v * 10 + (t[q++] - '0');
                    d = std::max(d, v);
                }
        if (d == 0) throw InputError("forms: no variables x1, x2, ... found; list them under 'variables'");
    }
    RingPtr ring = make_ring(VarSpace(d, 0, false, {}, names), field);
    ScalarMatrix raw(static_cast<int>(texts.size()), d, field);
    for (std::size_t i = 0; i < texts.size(); ++i) {
        Poly p(ring);
        try {
            p = Poly::parse(ring, texts[i]);
        } catch (const Error& e) {
            throw InputError("forms[" + std::to_string(i) + "]: " + e.what());
        }
        for (const auto& t : p.terms()) {
            if (t.mono.degree() != 1) throw InputError("forms[" + std::to_string(i) + "]: not a linear form");
            for (int v = 0; v < d; ++v)
                if (t.mono[v]) raw.at(int(i), v) = t.coeff;
        }
    }
    try {
        Normalization nm = normalize_forms(raw, c, names);
        StarConfig cfg = nm.cfg;
        return {std::move(cfg), "forms", std::move(nm)};
    } catch (const Error& e) {
        throw InputError(std::string("forms: ") + e.what());
    }
}

json config_json(const Loaded& in) {
    const StarConfig& cfg = in.cfg;
    json U = json::array();
    for (int i = 0; i < cfg.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < cfg.r(); ++j) row.push_back(cfg.U().at(i, j).to_string());
        U.push_back(row);
    }
    json out{{"field", cfg.field().to_string()}, {"n", cfg.n()}, {"r", cfg.r()}, {"c", cfg.c()}, {"source", in.source}, {"U", U}};
    if (in.norm) {
        json order = json::array();
        for (int k : in.norm->order) order.push_back(k + 1);
        out["normalized"] = !in.norm->identity;
        out["form_order"] = order;
    }
    return out;
}

void header(std::ostream& out, const Loaded& in) {
    const StarConfig& cfg = in.cfg;
    out << "# field " << cfg.field().to_string() << ", n=" << cfg.n() << ", r=" << cfg.r() << ", c=" << cfg.c();
    if (in.source == "U") {
        out << ", U given\n";
    } else {
        out << ", from " << in.norm->order.size() << " forms";
        if (!in.norm->identity) {
            out << " (normalized; form order";
            for (int k : in.norm->order) out << ' ' << k + 1;
            out << ")";
        }
        out << "\n";
    }
    if (cfg.field().small_characteristic())
        out << "# warning: small characteristic, minors may vanish by accident\n";
    for (int k = cfg.n() + 1; k <= cfg.t(); ++k) out << "# L" << k - cfg.n() << " = " << cfg.form_text(k) << "\n";
}

std::string set_text(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

json set_json(const std::vector<int>& s) { return json(s); }

json polys_json(const std::vector<Poly>& ps) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(p.to_string());
    return a;
}

void emit(std::ostream& out, bool as_json, const json& doc, const std::string& text) {
    if (as_json)
        out << doc.dump(2) << "\n";
    else
        out << text;
}

// ---- commands

int star_gens(const Loaded& in, bool as_json, std::ostream& out) {
    auto gens = star_generators(in.cfg);
    auto omit = omitted_sets(in.cfg.t(), in.cfg.c());
    std::ostringstream txt;
    header(txt, in);
    json list = json::array();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        txt << "omit " << set_text(omit[i]) << ": " << gens[i].to_string() << "\n";
        list.push_back({{"omit", set_json(omit[i])}, {"generator", gens[i].to_string()}});
    }
    emit(out, as_json, {{"command", "star gens"}, {"config", config_json(in)}, {"generators", list}}, txt.str());
    return kOk;
}

int star_check(const Loaded& in, bool as_json, std::ostream& out, bool linear, bool gn, int gs, bool nlt) {
    const StarConfig& cfg = in.cfg;
    std::ostringstream txt;
    json doc{{"command", "star check"}, {"config", config_json(in)}};
    header(txt, in);
    if (linear) {
        bool v = linear_type_check(cfg);
        txt << "linear type: " << (v ? "true" : "false") << "\n";
        doc["linear_type"] = v;
    }
    auto gs_line = [&](int s, const char* key) {
        GsResult g = check_Gs(cfg, s);
        txt << "G_" << s << ": " << (g.holds ? "true" : "false");
        if (!g.holds) txt << " (witness " << set_text(g.witness) << ")";
        txt << "\n";
        doc[key] = {{"s", s}, {"holds", g.holds}, {"witness", set_json(g.witness)}};
    };
    if (gn) gs_line(cfg.n(), "G_n");
    if (gs) gs_line(gs, "G_s");
    if (nlt) {
        auto primes = nlt_minimal_primes(cfg);
        json a = json::array();
        txt << "non-linear-type minimal primes: " << primes.size() << "\n";
        for (const auto& p : primes) {
            txt << "  forms " << set_text(p) << "\n";
            a.push_back(set_json(p));
        }
        doc["nlt_minimal_primes"] = a;
    }
    emit(out, as_json, doc, txt.str());
    return kOk;
}

int rees_dual(const Loaded& in, bool as_json, std::ostream& out) {
    RingPtr R = in.cfg.rees_ring();
    PolyMatrix B = jacobian_dual(in.cfg, R);
    std::ostringstream txt;
    header(txt, in);
    json rows = json::array();
    for (int i = 0; i < B.rows(); ++i) {
        json row = json::array();
        txt << "[";
        for (int j = 0; j < B.cols(); ++j) {
            txt << (j ? ", " : "") << B.at(i, j).to_string();
            row.push_back(B.at(i, j).to_string());
        }
        txt << "]\n";
        rows.push_back(row);
    }
    emit(out, as_json, {{"command", "rees dual"}, {"config", config_json(in)}, {"B", rows}}, txt.str());
    return kOk;
}

int rees_minors(const Loaded& in, bool as_json, std::ostream& out, bool all) {
    RingPtr R = fiber_ring(in.cfg);
    std::ostringstream txt;
    header(txt, in);
    json doc{{"command", "rees minors"}, {"config", config_json(in)}};
    if (all) {
        PolyMatrix B = jacobian_dual(in.cfg, R);
        auto cols = subsets(B.cols(), B.rows());
        auto ms = all_max_minors(B);
        json a = json::array();
        for (std::size_t k = 0; k < ms.size(); ++k) {
            std::vector<int> c1 = cols[k];
            for (auto& v : c1) ++v;
            txt << "columns " << set_text(c1) << ": " << ms[k].to_string() << "\n";
            a.push_back({{"columns", set_json(c1)}, {"minor", ms[k].to_string()}});
        }
        doc["minors"] = a;
    } else {
        json a = json::array();
        for (const auto& g : minors_ideal_generators(in.cfg, R)) {
            txt << "theta " << set_text(g.theta) << ": " << g.m.to_string() << "\n";
            a.push_back({{"theta", set_json(g.theta)}, {"m", g.m.to_string()}, {"zero", g.zero}});
        }
        doc["closed_form"] = a;
    }
    emit(out, as_json, doc, txt.str());
    return kOk;
}

int rees_equations(const Loaded& in, bool as_json, std::ostream& out) {
    RingPtr R = in.cfg.rees_ring();
    auto eq = rees_defining_ideal(in.cfg, R);
    std::ostringstream txt;
    header(txt, in);
    txt << "# linear relations (" << eq.linear.size() << ")\n";
    for (const auto& p : eq.linear) txt << p.to_string() << "\n";
    txt << "# fiber equations (" << eq.fiber.size() << ")\n";
    for (const auto& p : eq.fiber) txt << p.to_string() << "\n";
    emit(out, as_json,
         {{"command", "rees equations"}, {"config", config_json(in)}, {"linear", polys_json(eq.linear)},
          {"fiber", polys_json(eq.fiber)}},
         txt.str());
    return kOk;
}

int rees_primary(const Loaded& in, bool as_json, std::ostream& out) {
    require_height_two(in.cfg);
    PrimaryReport rep = primary_decomposition_check(in.cfg);
    RingPtr R = fiber_ring(in.cfg);
    std::ostringstream txt;
    header(txt, in);
    json lam = json::array();
    txt << "Lambda:";
    for (const auto& chi : rep.lq.lambda) {
        txt << ' ' << set_text(chi);
        lam.push_back(set_json(chi));
    }
    txt << (rep.lq.lambda.empty() ? " (empty)\n" : "\n");
    auto q = rep.lq.q_polys(R);
    txt << "Q: (";
    for (std::size_t i = 0; i < q.size(); ++i) txt << (i ? ", " : "") << q[i].to_string();
    txt << ")\n";
    txt << "# P (" << rep.P.size() << ")\n";
    for (const auto& p : rep.P) txt << p.to_string() << "\n";
    txt << "hypothesis (every m_theta nonzero): " << (rep.hypothesis ? "true" : "false") << "\n";
    txt << "result: " << rep.note << "\n";
    emit(out, as_json,
         {{"command", "rees primary"}, {"config", config_json(in)}, {"lambda", lam}, {"Q", polys_json(q)},
          {"P", polys_json(rep.P)}, {"hypothesis", rep.hypothesis}, {"confirmed", rep.confirmed}, {"note", rep.note}},
         txt.str());
    return rep.hypothesis && !rep.confirmed ? kPropertyFailure : kOk;
}

int taylor_equations(int t, int c, int m, unsigned power, const std::string& field, bool as_json, std::ostream& out) {
    TaylorRing tr(t, c, m, Realization::power(t, power), Field::parse(field));
    auto eq = regular_case_equations(tr);
    std::ostringstream txt;
    txt << "# t=" << t << ", c=" << c << ", m=" << m << ", " << tr.real.to_string() << "\n";
    txt << "# generators (" << tr.gens.size() << ")\n";
    json gens = json::array();
    auto g = tr.generators();
    for (std::size_t k = 0; k < tr.gens.size(); ++k) {
        txt << "T" << k + 1 << " -> " << fexponent_text(tr.gens[k]) << " = " << g[k].to_string() << "\n";
        gens.push_back({{"T", k + 1}, {"exponents", tr.gens[k]}, {"generator", g[k].to_string()}});
    }
    txt << "# linear relations (" << eq.linear.size() << ")\n";
    for (const auto& p : eq.linear) txt << p.to_string() << "\n";
    txt << "# quadrics (" << eq.quadrics.size() << ")\n";
    for (const auto& p : eq.quadrics) txt << p.to_string() << "\n";
    emit(out, as_json,
         {{"command", "taylor equations"}, {"t", t}, {"c", c}, {"m", m}, {"power", power},
          {"field", tr.ring->field.to_string()}, {"generators", gens}, {"linear", polys_json(eq.linear)},
          {"quadrics", polys_json(eq.quadrics)}},
         txt.str());
    return kOk;
}

int verify(const std::string& suite, const std::string& field, std::uint32_t seed, bool list, bool as_json,
           std::ostream& out) {
    if (list) {
        json a = json::array();
        std::ostringstream txt;
        for (const auto& s : suite_catalog()) {
            txt << s.name << " [" << s.default_field << "]: " << s.summary << "\n";
            a.push_back({{"name", s.name}, {"default_field", s.default_field}, {"summary", s.summary}});
        }
        emit(out, as_json, {{"suites", a}}, txt.str());
        return kOk;
    }
    SuiteReport rep = run_suite(suite, {field, seed});
    std::ostringstream txt;
    txt << "suite " << rep.name << " v" << rep.version << " over " << rep.field << ": "
        << (rep.passed() ? "pass" : "FAIL") << " (" << rep.instances << " instances, " << rep.checks << " checks)\n";
    for (const auto& n : rep.notes) txt << "note: " << n << "\n";
    for (const auto& f : rep.failures) txt << "failed: " << f << "\n";
    // Timing stays out of the report so repeated runs compare byte for byte.
    emit(out, as_json,
         {{"suite", rep.name}, {"version", rep.version}, {"field", rep.field}, {"passed", rep.passed()},
          {"instances", rep.instances}, {"checks", rep.checks}, {"notes", rep.notes}, {"failures", rep.failures}},
         txt.str());
    return rep.passed() ? kOk : kPropertyFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Star configurations of linear forms and the equations of their Rees algebras"};
    app.name("starrees");
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "structured output");

    std::string input;
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "input document (JSON); '-' or omitted reads stdin");
    };

    auto* star = app.add_subcommand("star", "star configuration ideals")->require_subcommand(1);
    auto* star_gens_cmd = star->add_subcommand("gens", "products of t-c+1 forms");
    add_input(star_gens_cmd);
    auto* star_check_cmd = star->add_subcommand("check", "linear type, G_s and the non-linear-type locus");
    add_input(star_check_cmd);
    bool linear = false, gn = false, nlt = false;
    int gs = 0;
    star_check_cmd->add_flag("--linear-type", linear, "is the ideal of linear type");
    star_check_cmd->add_flag("--gn", gn, "G_n condition");
    star_check_cmd->add_option("--gs", gs, "G_s condition for this s");
    star_check_cmd->add_flag("--nlt", nlt, "minimal primes of the non-linear-type locus");

    auto* rees = app.add_subcommand("rees", "Rees algebra equations for c = 2")->require_subcommand(1);
    auto* dual_cmd = rees->add_subcommand("dual", "Jacobian dual matrix B");
    add_input(dual_cmd);
    auto* minors_cmd = rees->add_subcommand("minors", "maximal minors of B");
    add_input(minors_cmd);
    bool all = false, closed = false;
    auto* all_flag = minors_cmd->add_flag("--all", all, "every maximal minor, by column set");
    minors_cmd->add_flag("--closed-form", closed, "closed-form generators m_theta (default)")->excludes(all_flag);
    auto* eq_cmd = rees->add_subcommand("equations", "linear relations and fiber equations");
    add_input(eq_cmd);
    auto* primary_cmd = rees->add_subcommand("primary", "I_n(B) = Q ∩ P check");
    add_input(primary_cmd);

    auto* taylor = app.add_subcommand("taylor", "powers of star configurations on x_1..x_t")->require_subcommand(1);
    auto* teq = taylor->add_subcommand("equations", "Taylor relations and quadrics");
    int tt = 0, tc = 0, tm = 1;
    unsigned power = 1;
    std::string tfield = "Q";
    teq->add_option("--t", tt, "number of forms")->required();
    teq->add_option("--c", tc, "height")->required();
    teq->add_option("--m", tm, "power")->capture_default_str();
    teq->add_option("--power", power, "F_i = x_i^power")->capture_default_str();
    teq->add_option("--field", tfield, "Q or Fp:p")->capture_default_str();

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite, vfield;
    std::uint32_t seed = 101;
    bool list = false;
    auto* suite_opt = ver->add_option("--suite", suite, "suite name (see --list)");
    ver->add_option("--field", vfield, "override the suite's field: Q or Fp:p");
    ver->add_option("--seed", seed, "corpus seed")->capture_default_str();
    ver->add_flag("--list", list, "list suites")->excludes(suite_opt);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (taylor->parsed()) return taylor_equations(tt, tc, tm, power, tfield, as_json, out);
        if (ver->parsed()) {
            if (!list && suite.empty()) throw InputError("verify: give --suite <name> or --list");
            return verify(suite, vfield, seed, list, as_json, out);
        }
        Loaded cfg = load(input, in);
        if (star_gens_cmd->parsed()) return star_gens(cfg, as_json, out);
        if (star_check_cmd->parsed()) {
            if (!linear && !gn && !gs && !nlt) throw InputError("star check: choose --linear-type, --gn, --gs or --nlt");
            return star_check(cfg, as_json, out, linear, gn, gs, nlt);
        }
        if (dual_cmd->parsed()) return rees_dual(cfg, as_json, out);
        if (minors_cmd->parsed()) return rees_minors(cfg, as_json, out, all);
        if (eq_cmd->parsed()) return rees_equations(cfg, as_json, out);
        if (primary_cmd->parsed()) return rees_primary(cfg, as_json, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return e.kind() == ErrorKind::Resource ? kResource
               : e.kind() == ErrorKind::InternalConsistency ? kPropertyFailure
                                                             : kInputError;
    }
    err << "error: no command\n";
    return kInputError;
}

} // namespace starrees::cli
