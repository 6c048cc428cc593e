#include "cli.hpp"

#include "kohnert/crystal.hpp"
#include "kohnert/error.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/serialize.hpp"
#include "kohnert/tableau.hpp"
#include "kohnert/unlock.hpp"
#include "kohnert/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace kohnert::cli {

namespace {

struct Options {
    std::string kind;
    std::string comp;
    std::string format;
    std::string seed = "key";
    std::string dot_path;
    std::string json_path;
    std::string input_path;
    bool all = false;
    bool trace = false;
    std::string check = "all";
    int max_len = 4;
    int max_part = 3;
    int max_size = -1;
    bool no_spots = false;
    unsigned threads = 0;
};

void write_file(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw InvalidInput("cannot write '" + path + "'");
    file << text;
}

std::string read_file(const std::string& path)
{
    std::ifstream file(path);
    if (!file)
        throw InvalidInput("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

int cmd_enum(const Options& o, std::ostream& out)
{
    const Composition a = parse_composition(o.comp);
    const bool ascii = o.format == "ascii";
    if (o.kind == "kd") {
        const Diagram seed = o.seed == "lock" ? lock_diagram(a) : key_diagram(a);
        const std::vector<Diagram> closure = kohnert_closure(seed);
        if (ascii) {
            for (std::size_t k = 0; k < closure.size(); ++k)
                out << (k ? "\n" : "") << render_ascii(closure[k]);
        } else {
            Json j = Json::array();
            for (const Diagram& d : closure)
                j.push_back(to_json(d));
            out << j.dump() << '\n';
        }
        return ok;
    }
    const std::vector<LabeledDiagram> set =
        parse_crystal_kind(o.kind) == CrystalKind::key ? enumerate_kkt(a) : enumerate_lkt(a);
    if (ascii) {
        for (std::size_t k = 0; k < set.size(); ++k)
            out << (k ? "\n" : "") << render_ascii(set[k]);
    } else {
        Json j = Json::array();
        for (const LabeledDiagram& t : set)
            j.push_back(to_json(t));
        out << j.dump() << '\n';
    }
    return ok;
}

int cmd_poly(const Options& o, std::ostream& out)
{
    const Composition a = parse_composition(o.comp);
    const Polynomial p = parse_crystal_kind(o.kind) == CrystalKind::key ? key_polynomial(a) : lock_polynomial(a);
    if (o.format == "json")
        out << to_json(p).dump() << '\n';
    else
        out << p.to_string() << '\n';
    return ok;
}

int cmd_crystal(const Options& o, std::ostream& out)
{
    const Composition a = parse_composition(o.comp);
    const CrystalGraph g = crystal_graph(a, parse_crystal_kind(o.kind));
    if (!o.dot_path.empty())
        write_file(o.dot_path, to_dot(g), out);
    if (!o.json_path.empty())
        write_file(o.json_path, to_json(g).dump(2) + "\n", out);
    if (o.dot_path.empty() && o.json_path.empty())
        out << to_json(g).dump() << '\n';
    else if (o.dot_path != "-" && o.json_path != "-")
        out << g.vertices.size() << " vertices, " << g.edges.size() << " edges, "
            << (is_connected(g) ? "connected" : "disconnected") << '\n';
    return ok;
}

Json map_entry(const UnlockTrace& trace, bool with_trace)
{
    if (with_trace)
        return to_json(trace);
    return {{"input", to_json(trace.input)}, {"output", to_json(trace.output)}};
}

void map_ascii(const UnlockTrace& trace, bool with_trace, std::ostream& out)
{
    out << render_ascii(trace.input);
    if (with_trace) {
        LabeledDiagram cur = trace.input;
        for (const UnlockStep& s : trace.steps) {
            cur = unlock_op(cur, s.op)->first;
            out << "u_" << s.op << ": label " << s.chosen.label << " (" << s.push_from.row << ',' << s.push_from.col
                << ") -> (" << s.push_to.row << ',' << s.push_to.col << ')';
            for (const Swap& w : s.swaps)
                out << ", swap " << w.x_label << '@' << w.x_from.row << " with " << w.y_label << '@' << w.y_from.row;
            out << '\n' << render_ascii(cur);
        }
    } else {
        out << "=>\n" << render_ascii(trace.output);
    }
}

int cmd_map(const Options& o, std::ostream& out)
{
    const Composition a = parse_composition(o.comp);
    const bool ascii = o.format == "ascii";
    if (!o.input_path.empty()) {
        const LabeledDiagram t = parse_labeled_diagram(read_file(o.input_path));
        const UnlockTrace trace = apply_unlock(t, a);
        if (ascii)
            map_ascii(trace, o.trace, out);
        else
            out << map_entry(trace, o.trace).dump() << '\n';
        return ok;
    }
    const std::vector<LabeledDiagram> locks = enumerate_lkt(a);
    Json j = Json::array();
    for (std::size_t k = 0; k < locks.size(); ++k) {
        const UnlockTrace trace = apply_unlock(locks[k], a);
        if (ascii) {
            out << (k ? "\n" : "");
            map_ascii(trace, o.trace, out);
        } else {
            j.push_back(map_entry(trace, o.trace));
        }
    }
    if (!ascii)
        out << j.dump() << '\n';
    return ok;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    SweepRange range;
    range.max_length = o.max_len;
    range.max_part = o.max_part;
    if (o.max_size >= 0)
        range.max_size = o.max_size;
    range.include_spots = !o.no_spots;
    const std::vector<VerificationReport> reports = run_check(o.check, range, o.threads);
    out << format_summary(reports);
    if (!o.json_path.empty()) {
        Json j = Json::array();
        for (const VerificationReport& r : reports)
            j.push_back(to_json(r));
        write_file(o.json_path, j.dump(2) + "\n", out);
    }
    for (const VerificationReport& r : reports)
        if (!r.passed())
            return verification_failed;
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Kohnert diagrams, key and lock tableaux, crystals and the unlock map", "kohnert"};
    app.require_subcommand(1);
    Options o;

    auto comp_option = [&](CLI::App* sub) {
        sub->add_option("--comp", o.comp, "weak composition, e.g. 1,0,2,1 (trailing zeros count)")->required();
    };

    CLI::App* en = app.add_subcommand("enum", "enumerate KKT, LKT or Kohnert diagrams");
    en->add_option("--kind", o.kind, "kkt | lkt | kd")->required()->check(CLI::IsMember({"kkt", "lkt", "kd"}));
    comp_option(en);
    en->add_option("--format", o.format, "json | ascii")->check(CLI::IsMember({"json", "ascii"}));
    en->add_option("--seed", o.seed, "kd only: close the key or lock diagram")->check(CLI::IsMember({"key", "lock"}));

    CLI::App* po = app.add_subcommand("poly", "key or lock polynomial");
    po->add_option("--kind", o.kind, "key | lock")->required()->check(CLI::IsMember({"key", "lock"}));
    comp_option(po);
    po->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));

    CLI::App* cr = app.add_subcommand("crystal", "key or lock crystal graph");
    cr->add_option("--kind", o.kind, "key | lock")->required()->check(CLI::IsMember({"key", "lock"}));
    comp_option(cr);
    cr->add_option("--dot", o.dot_path, "write Graphviz to PATH ('-' for stdout)");
    cr->add_option("--json", o.json_path, "write JSON to PATH ('-' for stdout)");

    CLI::App* ma = app.add_subcommand("map", "unlock lock tableaux to key tableaux");
    comp_option(ma);
    auto* all = ma->add_flag("--all", o.all, "every tableau of LKT(comp) (default)");
    ma->add_option("--input", o.input_path, "JSON file holding one tableau")->excludes(all);
    ma->add_flag("--trace", o.trace, "include the step trace");
    ma->add_option("--format", o.format, "json | ascii")->check(CLI::IsMember({"json", "ascii"}));

    CLI::App* ve = app.add_subcommand("verify", "exhaustive theorem checks");
    std::vector<std::string> names = check_names();
    names.push_back("all");
    ve->add_option("--check", o.check, "check name or all")->check(CLI::IsMember(names));
    ve->add_option("--max-len", o.max_len, "longest composition")->check(CLI::Range(0, 8));
    ve->add_option("--max-part", o.max_part, "largest part")->check(CLI::Range(0, 8));
    ve->add_option("--max-size", o.max_size, "largest sum of parts")->check(CLI::NonNegativeNumber);
    ve->add_flag("--no-spots", o.no_spots, "skip the figure compositions");
    ve->add_option("--threads", o.threads, "worker threads, 0 for all cores");
    ve->add_option("--json", o.json_path, "write the report JSON to PATH ('-' for stdout)");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (en->parsed())
            return cmd_enum(o, out);
        if (po->parsed())
            return cmd_poly(o, out);
        if (cr->parsed())
            return cmd_crystal(o, out);
        if (ma->parsed())
            return cmd_map(o, out);
        return cmd_verify(o, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const TheoremViolation& e) {
        err << "fault: " << e.what() << '\n';
        return theorem_fault;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return theorem_fault;
    }
}

} // namespace kohnert::cli
