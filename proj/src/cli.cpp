#include "torus/cli.hpp"

#include "torus/catalog.hpp"
#include "torus/errors.hpp"
#include "torus/io.hpp"
#include "torus/isogeny.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <sstream>

namespace torus {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

InputDocument load_document(const std::string& path) {
    try {
        return parse_document(read_file(path));
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

void cmd_local(const std::string& path, bool as_json, std::ostream& out) {
    LocalTorusData data = local_data(load_document(path));
    LocalReport report = local_report(data);
    out << (as_json ? render_local_report_json(report)
                    : render_local_report_text(report));
}

void cmd_global(const std::string& path, bool as_json, std::ostream& out) {
    InputDocument doc = load_document(path);
    if (!doc.global)
        throw ValidationError(path + ": global mode needs a global block");
    GlobalReport report = global_report(*doc.global);
    out << (as_json ? render_global_report_json(*doc.global, report)
                    : render_global_report_text(*doc.global, report));
}

void cmd_h1(const std::string& path, bool as_json, std::ostream& out) {
    InputDocument doc = load_document(path);
    // defaults to the whole group when the document carries no inertia
    Subgroup h = doc.inertia ? Subgroup(doc.lattice.group, *doc.inertia)
                             : Subgroup::whole(doc.lattice.group);
    FinAbGroup result = h1(doc.lattice, h);
    out << (as_json ? render_h1_json(result) : render_h1_text(result));
}

void cmd_isogeny(const std::string& path1, const std::string& path2,
                 bool as_json, std::ostream& out) {
    InputDocument a = load_document(path1);
    InputDocument b = load_document(path2);
    bool flag = isogenous(a.lattice, b.lattice);
    out << (as_json ? render_isogeny_json(flag) : render_isogeny_text(flag));
}

void cmd_catalog(const std::string& name, const std::string& param,
                 const std::string& group_order, const std::string& q,
                 bool unramified, const std::string& output,
                 std::ostream& out) {
    auto parse_count = [](const std::string& s,
                          const std::string& what) -> std::size_t {
        try {
            std::size_t pos = 0;
            unsigned long v = std::stoul(s, &pos);
            if (pos != s.size() || v > 4096)
                throw std::invalid_argument(s);
            return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            throw ValidationError(what + ": expected a small non-negative "
                                         "integer, got '" +
                                  s + "'");
        }
    };

    GaloisLattice lattice;
    if (name == "split") {
        std::size_t d = parse_count(param, "split rank");
        std::size_t n = parse_count(group_order, "--group-order");
        if (n == 0)
            throw ValidationError("--group-order: must be >= 1");
        lattice = split_torus(FiniteGroup::cyclic(n), d);
    } else if (name == "weil") {
        std::size_t n = parse_count(param, "group order");
        if (n == 0)
            throw ValidationError("group order: must be >= 1");
        lattice = weil_restriction(FiniteGroup::cyclic(n));
    } else if (name == "norm_one") {
        std::size_t n = parse_count(param, "group order");
        if (n == 0)
            throw ValidationError("group order: must be >= 1");
        lattice = norm_one_torus(FiniteGroup::cyclic(n), n > 1 ? 1 : 0);
    } else {
        throw ValidationError("unknown catalog entry '" + name +
                              "' (expected split, weil or norm_one)");
    }

    Int residue_q;
    {
        // reuse the document integer syntax for --q
        std::string qs = q;
        if (qs.empty() ||
            qs.find_first_not_of("0123456789") != std::string::npos)
            throw ValidationError("--q: expected a positive decimal integer");
        residue_q = Int(qs);
        if (residue_q < 2)
            throw ValidationError("--q: must be >= 2");
    }

    std::vector<std::size_t> inertia;
    std::size_t frobenius = 0;
    if (unramified) {
        inertia = {0};
        frobenius = lattice.group.order() > 1 ? 1 : 0;
    } else {
        for (std::size_t g = 0; g < lattice.group.order(); ++g)
            inertia.push_back(g);
        frobenius = 0;
    }

    std::string text = local_document_json(lattice, inertia, frobenius,
                                           residue_q);
    std::ofstream file(output, std::ios::binary);
    if (!file)
        throw ValidationError("cannot write file '" + output + "'");
    file << text;
    out << "wrote " << output << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact invariants of algebraic tori from Galois lattice data",
                 "torus"};
    app.require_subcommand(1);

    std::string file, file2, output;
    std::string catalog_name, catalog_param;
    std::string group_order = "1";
    std::string q = "2";
    bool as_json = false;
    bool unramified = false;

    CLI::App* local =
        app.add_subcommand("local", "local invariants at one prime");
    local->add_option("file", file, "input document")->required();
    local->add_flag("--json", as_json, "machine-readable output");

    CLI::App* global =
        app.add_subcommand("global", "global invariant from a place list");
    global->add_option("file", file, "input document")->required();
    global->add_flag("--json", as_json, "machine-readable output");

    CLI::App* h1cmd =
        app.add_subcommand("h1", "first cohomology of the inertia action");
    h1cmd->add_option("file", file, "input document")->required();
    h1cmd->add_flag("--json", as_json, "machine-readable output");

    CLI::App* iso =
        app.add_subcommand("isogeny", "test two lattices for isogeny");
    iso->add_option("file1", file, "first document")->required();
    iso->add_option("file2", file2, "second document")->required();
    iso->add_flag("--json", as_json, "machine-readable output");

    CLI::App* catalog = app.add_subcommand(
        "catalog", "write a standard torus as an input document");
    catalog->add_option("name", catalog_name, "split, weil or norm_one")
        ->required();
    catalog->add_option("param", catalog_param,
                        "rank (split) or cyclic group order")
        ->required();
    catalog->add_option("-o,--output", output, "output file")->required();
    catalog->add_option("--q", q, "residue cardinality (default 2)");
    catalog->add_option("--group-order", group_order,
                        "cyclic group order for split (default 1)");
    catalog->add_flag("--unramified", unramified,
                      "trivial inertia with a generating Frobenius");

    try {
        // CLI11's vector overload consumes the arguments in reverse
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (local->parsed())
            cmd_local(file, as_json, out);
        else if (global->parsed())
            cmd_global(file, as_json, out);
        else if (h1cmd->parsed())
            cmd_h1(file, as_json, out);
        else if (iso->parsed())
            cmd_isogeny(file, file2, as_json, out);
        else if (catalog->parsed())
            cmd_catalog(catalog_name, catalog_param, group_order, q,
                        unramified, output, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CrossCheckFailure& e) {
        err << "cross-check failure: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace torus
