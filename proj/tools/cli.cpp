#include "cli.hpp"

#include "rspin/axioms.hpp"
#include "rspin/correlators.hpp"
#include "rspin/euler_class.hpp"
#include "rspin/graph.hpp"
#include "rspin/graph_io.hpp"
#include "rspin/hierarchy.hpp"
#include "rspin/lg_frobenius.hpp"
#include "rspin/state_space.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace rspin::cli {

namespace {

using nlohmann::json;

struct Row {
    std::string suite;
    std::string check;
    bool pass = true;
    std::string detail;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + '"';
}

std::string join(const std::vector<int>& v, char sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return s;
}

Insertion parse_insertion(const std::string& text)
{
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--insert", "expected a:m, got '" + text + "'");
    try {
        std::size_t used_a = 0, used_m = 0;
        int a = std::stoi(text.substr(0, colon), &used_a);
        int m = std::stoi(text.substr(colon + 1), &used_m);
        if (used_a != colon || used_m != text.size() - colon - 1 || a < 0)
            throw std::invalid_argument(text);
        return {a, m};
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("--insert", "expected a:m, got '" + text + "'");
    }
}

void require_r(int r)
{
    if (r < 2)
        throw DomainError("--r must be at least 2");
}

int emit_rows(const std::vector<Row>& rows, const std::string& format, std::ostream& out)
{
    bool ok = true;
    if (format == "json") {
        json list = json::array();
        for (const auto& row : rows)
            list.push_back({{"check", row.check}, {"detail", row.detail}, {"result", row.pass ? "PASS" : "FAIL"},
                            {"suite", row.suite}});
        out << list.dump() << '\n';
    } else {
        out << "suite,check,result,detail\n";
        for (const auto& row : rows)
            out << csv_field(row.suite) << ',' << csv_field(row.check) << ',' << (row.pass ? "PASS" : "FAIL") << ','
                << csv_field(row.detail) << '\n';
    }
    for (const auto& row : rows)
        ok = ok && row.pass;
    return ok ? kOk : kCheckFailed;
}

Row kdv_row(int order)
{
    Polynomial residual = dkdv_residual(order);
    return {"kdv", "dkdv_residual", residual.is_zero(),
            residual.is_zero() ? "zero to order " + std::to_string(order) : residual.to_string()};
}

Row hydro_row(int r, int order)
{
    HydroReport report = hydrodynamic_consistency(r, order);
    std::string detail = std::to_string(report.checks) + " identities to order " + std::to_string(order);
    if (!report.ok)
        detail = report.failures.front() + ": " + report.first_residual.to_string();
    return {"hydro", "hydrodynamic_consistency", report.ok, detail};
}

Row fourpoint_row(int r)
{
    const Prepotential& p = prepotential(r);
    auto tuples = admissible_four_tuples(r);
    for (const auto& m : tuples) {
        Rational geometric = four_point_class_degree(r, m);
        Rational lg = p.correlator(m);
        if (geometric != lg)
            return {"fourpoint", "dual_engine_agreement", false,
                    "m=(" + join({m.begin(), m.end()}, ',') + ") euler " + to_string(geometric) + " vs lg " +
                        to_string(lg)};
    }
    return {"fourpoint", "dual_engine_agreement", true, std::to_string(tuples.size()) + " admissible tuples"};
}

std::vector<Row> axiom_rows(int r)
{
    std::vector<Row> rows;
    for (const auto& res : run_axiom_suite(r))
        rows.push_back({"axioms", res.name, res.pass, res.detail});
    return rows;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact-arithmetic r-spin / A_{r-1} cohomological field theory toolkit", "rspin"};
    app.require_subcommand(1);

    int r = 0, g = 0, n = 0, k = -1, m = 0, alpha = 1, order = 6, max_a = -1;
    std::vector<int> labels;
    std::vector<std::string> inserts;
    std::string graph_file, suite = "all", format = "csv";
    bool table = false;

    auto add_r = [&](CLI::App* sub) { sub->add_option("--r", r, "spin index r >= 2")->required(); };

    auto* sectors = app.add_subcommand("sectors", "narrow and broad sectors of the A_{r-1} state space (CSV)");
    add_r(sectors);

    auto* translate = app.add_subcommand("translate", "sector J^k <-> r-spin label m");
    add_r(translate);
    auto* k_opt = translate->add_option("--k", k, "sector exponent k in 0..r-1");
    auto* m_opt = translate->add_option("--m", m, "r-spin label in -1..r-1");
    k_opt->excludes(m_opt);
    m_opt->excludes(k_opt);

    auto* selection = app.add_subcommand("selection", "selection rule for sectors k_1..k_n");
    add_r(selection);
    selection->add_option("--g", g, "genus")->capture_default_str();
    selection->add_option("--k", labels, "comma-separated sector exponents")->delimiter(',')->required();

    auto* dimension = app.add_subcommand("dimension", "virtual dimension D and homological degree d");
    add_r(dimension);
    dimension->add_option("--g", g, "genus")->capture_default_str();
    dimension->add_option("--m", labels, "comma-separated r-spin labels")->delimiter(',')->required();
    dimension->add_option("--alpha", alpha, "number of connected components")->capture_default_str();

    auto* graphs = app.add_subcommand("graphs", "enumerate decorated stable graphs, or validate one from JSON");
    graphs->add_option("--r", r, "spin index r >= 2");
    graphs->add_option("--g", g, "genus");
    graphs->add_option("--n", n, "number of tails");
    graphs->add_option("--graph", graph_file, "JSON graph file to validate and key")->check(CLI::ExistingFile);

    auto* potential = app.add_subcommand("potential", "genus-0 prepotential F as a JSON polynomial");
    add_r(potential);

    auto* correlator = app.add_subcommand("correlator", "genus-0 descendant correlators");
    add_r(correlator);
    correlator->add_option("--insert", inserts, "insertion tau_a(x_m) written a:m (repeatable)");
    correlator->add_flag("--table", table, "dump every nonzero correlator within bounds as CSV");
    correlator->add_option("--n", n, "table bound on the number of insertions");
    correlator->add_option("--order", max_a, "table bound on the sum of descendant orders");

    auto* fourpoint = app.add_subcommand("fourpoint", "four-point Euler-class degrees (CSV)");
    add_r(fourpoint);

    auto* check = app.add_subcommand("check", "verification suites");
    check->add_option("--suite", suite, "kdv | hydro | fourpoint | axioms | all")
        ->check(CLI::IsMember({"kdv", "hydro", "fourpoint", "axioms", "all"}))
        ->capture_default_str();
    check->add_option("--r", r, "spin index (kdv always runs at r = 2)");
    check->add_option("--order", order, "series truncation order")->capture_default_str();
    check->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    std::vector<const char*> argv{"rspin"};
    for (const auto& a : args)
        argv.push_back(a.c_str());

    std::ostringstream buffer;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (*sectors) {
            require_r(r);
            buffer << "k,theta,narrow,degree,m,kind\n";
            for (int kk = 0; kk < r; ++kk) {
                Sector s = Sector::make(r, kk);
                RSpinLabel label = to_rspin(r, kk);
                buffer << kk << ',' << to_string(s.theta) << ',' << (s.narrow ? "true" : "false") << ','
                       << (s.narrow ? to_string(degree(r, kk)) : "") << ',' << label.m << ',' << kind_name(label.kind)
                       << '\n';
            }
        } else if (*translate) {
            require_r(r);
            if (*k_opt) {
                RSpinLabel label = to_rspin(r, k);
                buffer << json{{"m", label.m}, {"kind", kind_name(label.kind)}}.dump() << '\n';
            } else if (*m_opt) {
                Sector s = from_rspin(r, m);
                buffer << json{{"k", s.k}, {"narrow", s.narrow}, {"theta", to_string(s.theta)}}.dump() << '\n';
            } else {
                throw CLI::RequiredError("translate needs --k or --m");
            }
        } else if (*selection) {
            require_r(r);
            std::vector<int> translated;
            for (int kk : labels) {
                if (kk < 0 || kk >= r)
                    throw DomainError("sector index out of range");
                translated.push_back(to_rspin(r, kk).m);
            }
            buffer << json{{"bundle_degree", to_string(bundle_degree(r, g, translated, Twist::Canonical))},
                           {"m", translated},
                           {"nonempty", selection_nonempty(r, g, labels)}}
                          .dump()
                   << '\n';
        } else if (*dimension) {
            require_r(r);
            VirtualDimension d = virtual_dim(r, g, alpha, labels);
            json j{{"D", to_string(d.D)}, {"vanishes", d.vanishes}};
            j["homological_degree"] = d.homological_degree ? json(d.homological_degree->get_si()) : json(nullptr);
            buffer << j.dump() << '\n';
        } else if (*graphs) {
            if (!graph_file.empty()) {
                std::ifstream in(graph_file);
                std::stringstream text;
                text << in.rdbuf();
                DecoratedGraph graph = graph_from_json(text.str());
                auto violations = validate(graph);
                json vs = json::array();
                for (const auto& v : violations)
                    vs.push_back({{"detail", v.detail}, {"kind", v.kind}});
                json j{{"valid", violations.empty()}, {"violations", vs}};
                if (violations.empty())
                    j["key"] = canonical_key(graph).text;
                buffer << j.dump() << '\n';
                out << buffer.str();
                return violations.empty() ? kOk : kCheckFailed;
            }
            if (r == 0 || (n == 0 && g == 0))
                throw CLI::RequiredError("graphs needs --r, --g and --n, or --graph");
            require_r(r);
            for (const auto& graph : enumerate_graphs(r, g, n))
                buffer << graph_to_json(graph) << '\n';
        } else if (*potential) {
            require_r(r);
            const Prepotential& p = prepotential(r);
            json list = json::array();
            for (const auto& [e, c] : p.F.terms()) {
                json mono = json::object();
                for (std::size_t i = 0; i < e.size(); ++i)
                    if (e[i])
                        mono[std::to_string(i)] = e[i];
                list.push_back({{"coefficient", to_string(c)}, {"monomial", mono}});
            }
            buffer << list.dump() << '\n';
        } else if (*correlator) {
            require_r(r);
            if (table) {
                if (n < 3 || max_a < 0)
                    throw CLI::RequiredError("--table needs --n N (>= 3) and --order A (>= 0)");
                buffer << "n,insertions,value\n";
                for (const auto& key : admissible_keys(r, n, max_a)) {
                    Rational v = descendant(key);
                    if (v == 0)
                        continue;
                    std::string ins;
                    for (const auto& x : key.insertions())
                        ins += (ins.empty() ? "" : " ") + std::to_string(x.a) + ":" + std::to_string(x.m);
                    buffer << key.size() << ',' << ins << ',' << to_string(v) << '\n';
                }
            } else {
                if (inserts.empty())
                    throw CLI::RequiredError("correlator needs --insert a:m (repeatable) or --table");
                std::vector<Insertion> list;
                for (const auto& s : inserts) {
                    Insertion x = parse_insertion(s);
                    x.m = normalize_label(r, x.m);
                    list.push_back(x);
                }
                buffer << to_string(descendant(CorrelatorKey(r, list))) << '\n';
            }
        } else if (*fourpoint) {
            require_r(r);
            buffer << "m1,m2,m3,m4,value\n";
            for (const auto& row : four_point_table(r))
                buffer << join({row.m.begin(), row.m.end()}, ',') << ',' << to_string(row.value) << '\n';
        } else if (*check) {
            std::vector<Row> rows;
            if (suite == "kdv" || suite == "all")
                rows.push_back(kdv_row(order));
            if (suite != "kdv" && r == 0)
                throw CLI::RequiredError("--suite " + suite + " needs --r");
            if (suite != "kdv")
                require_r(r);
            if (suite == "hydro" || suite == "all")
                rows.push_back(hydro_row(r, order));
            if (suite == "fourpoint" || suite == "all")
                rows.push_back(fourpoint_row(r));
            if (suite == "axioms" || suite == "all")
                for (auto& row : axiom_rows(r))
                    rows.push_back(std::move(row));
            int code = emit_rows(rows, format, buffer);
            out << buffer.str();
            return code;
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    } catch (const ScaleLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kScaleLimit;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    out << buffer.str();
    return kOk;
}

} // namespace rspin::cli
