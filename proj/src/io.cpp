#include "torus/io.hpp"

#include "torus/errors.hpp"

#include "json.hpp"

#include <sstream>
#include <utility>

namespace torus {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key, const std::string& path) {
    if (!j.is_object())
        throw ValidationError(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw ValidationError(path + "." + key + ": missing field");
    return *it;
}

const json* optional_field(const json& j, const char* key) {
    if (!j.is_object())
        return nullptr;
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

// every integer in the format is a decimal string
Int parse_int(const json& j, const std::string& path) {
    if (!j.is_string())
        throw ValidationError(path + ": expected a decimal string");
    const std::string s = j.get<std::string>();
    if (s.empty())
        throw ValidationError(path + ": empty integer");
    std::size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size())
        throw ValidationError(path + ": malformed integer '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw ValidationError(path + ": malformed integer '" + s + "'");
    return Int(s);
}

std::size_t parse_index(const json& j, const std::string& path,
                        std::size_t bound) {
    Int x = parse_int(j, path);
    if (x < 0 || x >= bound)
        throw ValidationError(path + ": index " + to_decimal(x) +
                              " out of range (bound " + std::to_string(bound) +
                              ")");
    return static_cast<std::size_t>(x);
}

std::vector<std::size_t> parse_index_list(const json& j,
                                          const std::string& path,
                                          std::size_t bound) {
    if (!j.is_array())
        throw ValidationError(path + ": expected an array");
    std::vector<std::size_t> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(
            parse_index(j[i], path + "[" + std::to_string(i) + "]", bound));
    return out;
}

IntMatrix parse_matrix(const json& j, const std::string& path,
                       std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows)
        throw ValidationError(path + ": expected " + std::to_string(rows) +
                              " rows");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        std::string row_path = path + "[" + std::to_string(i) + "]";
        if (!row.is_array() || row.size() != cols)
            throw ValidationError(row_path + ": expected " +
                                  std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) =
                parse_int(row[k], row_path + "[" + std::to_string(k) + "]");
    }
    return m;
}

FiniteGroup parse_group(const json& j) {
    std::size_t order = 0;
    {
        Int n = parse_int(field(j, "order", "group"), "group.order");
        if (n < 1 || n > 4096)
            throw ValidationError("group.order: must be between 1 and 4096");
        order = static_cast<std::size_t>(n);
    }
    const json& table = field(j, "mult_table", "group");
    if (!table.is_array() || table.size() != order)
        throw ValidationError("group.mult_table: expected " +
                              std::to_string(order) + " rows");
    std::vector<std::vector<std::size_t>> rows(order);
    for (std::size_t i = 0; i < order; ++i)
        rows[i] = parse_index_list(
            table[i], "group.mult_table[" + std::to_string(i) + "]", order);
    try {
        return FiniteGroup(std::move(rows));
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("group.mult_table: ") + e.what());
    }
}

GaloisLattice parse_lattice(const json& doc, FiniteGroup group) {
    const json& j = field(doc, "lattice", "document");
    std::size_t rank = 0;
    {
        Int d = parse_int(field(j, "rank", "lattice"), "lattice.rank");
        if (d < 0 || d > 4096)
            throw ValidationError("lattice.rank: must be between 0 and 4096");
        rank = static_cast<std::size_t>(d);
    }
    const json& action = field(j, "action", "lattice");
    if (!action.is_array() || action.size() != group.order())
        throw ValidationError(
            "lattice.action: expected one matrix per group element");
    GaloisLattice lattice{std::move(group), rank, {}};
    lattice.action.clear();
    for (std::size_t g = 0; g < lattice.group.order(); ++g)
        lattice.action.push_back(parse_matrix(
            action[g], "lattice.action[" + std::to_string(g) + "]", rank,
            rank));
    ValidationReport report = validate(lattice);
    if (!report.ok)
        throw ValidationError("lattice.action: " + report.message);
    return lattice;
}

Subgroup parse_subgroup(const json& j, const std::string& path,
                        const FiniteGroup& group) {
    try {
        return Subgroup(group, parse_index_list(j, path, group.order()));
    } catch (const ValidationError& e) {
        std::string msg = e.what();
        if (msg.find(path) == std::string::npos)
            msg = path + ": " + msg;
        throw ValidationError(msg);
    }
}

GlobalTorusSpec parse_global(const json& j, const GaloisLattice& lattice) {
    GlobalTorusSpec spec;
    spec.lattice = lattice;
    const json& kase_field = field(j, "case", "global");
    if (!kase_field.is_string())
        throw ValidationError("global.case: must be \"F\" or \"N\"");
    const std::string kase = kase_field.get<std::string>();
    if (kase == "F") {
        spec.field_case = GlobalCase::function_field;
        spec.constants_q = parse_int(field(j, "q", "global"), "global.q");
        spec.genus = parse_int(field(j, "genus", "global"), "global.genus");
    } else if (kase == "N") {
        spec.field_case = GlobalCase::number_field;
        spec.discriminant = parse_int(field(j, "discriminant", "global"),
                                      "global.discriminant");
    } else {
        throw ValidationError("global.case: must be \"F\" or \"N\"");
    }
    if (const json* places = optional_field(j, "places")) {
        if (!places->is_array())
            throw ValidationError("global.places: expected an array");
        for (std::size_t i = 0; i < places->size(); ++i) {
            const json& p = (*places)[i];
            std::string path = "global.places[" + std::to_string(i) + "]";
            const json& label_field = field(p, "label", path);
            if (!label_field.is_string())
                throw ValidationError(path + ".label: expected a string");
            Subgroup decomposition =
                parse_subgroup(field(p, "decomposition", path),
                               path + ".decomposition", lattice.group);
            Subgroup inertia = parse_subgroup(
                field(p, "inertia", path), path + ".inertia", lattice.group);
            std::size_t frobenius =
                parse_index(field(p, "frobenius", path), path + ".frobenius",
                            lattice.group.order());
            Int residue_q =
                parse_int(field(p, "residue_q", path), path + ".residue_q");
            spec.places.push_back(PlaceData{label_field.get<std::string>(),
                                            std::move(decomposition),
                                            std::move(inertia), frobenius,
                                            std::move(residue_q)});
        }
    }
    return spec;
}

json group_to_json(const FiniteGroup& group) {
    json table = json::array();
    for (std::size_t i = 0; i < group.order(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < group.order(); ++j)
            row.push_back(std::to_string(group.mult(i, j)));
        table.push_back(std::move(row));
    }
    return json{{"order", std::to_string(group.order())},
                {"mult_table", std::move(table)}};
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_decimal(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json lattice_to_json(const GaloisLattice& lattice) {
    json action = json::array();
    for (std::size_t g = 0; g < lattice.group.order(); ++g)
        action.push_back(matrix_to_json(lattice.act(g)));
    return json{{"rank", std::to_string(lattice.rank)},
                {"action", std::move(action)}};
}

json fin_ab_group_to_json(const FinAbGroup& g) {
    json factors = json::array();
    for (const Int& d : g.invariant_factors())
        factors.push_back(to_decimal(d));
    return json{{"free_rank", std::to_string(g.free_rank())},
                {"invariant_factors", std::move(factors)}};
}

json symbolic_value_to_json(const SymbolicValue& v) {
    return json{{"coefficient", to_decimal(v.coefficient)},
                {"lnq_exponent", std::to_string(v.lnq_exponent)},
                {"sqrt_disc_exponent", std::to_string(v.sqrt_disc_exponent)},
                {"archimedean_unevaluated", v.archimedean_unevaluated}};
}

std::string render_symbolic_value(const SymbolicValue& v) {
    std::ostringstream os;
    os << to_decimal(v.coefficient);
    if (v.lnq_exponent != 0)
        os << " · (ln q)^" << v.lnq_exponent;
    if (v.sqrt_disc_exponent != 0)
        os << " · |Δ_K|^(" << v.sqrt_disc_exponent << "/2)";
    if (v.archimedean_unevaluated)
        os << " · C_∞";
    return os.str();
}

} // namespace

InputDocument parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("document is not valid JSON: ") +
                              e.what());
    }
    if (!doc.is_object())
        throw ValidationError("document: expected a JSON object");

    FiniteGroup group = parse_group(field(doc, "group", "document"));
    GaloisLattice lattice = parse_lattice(doc, std::move(group));

    InputDocument out{std::move(lattice), {}, {}, {}, {}};
    if (const json* j = optional_field(doc, "inertia"))
        out.inertia =
            parse_index_list(*j, "inertia", out.lattice.group.order());
    if (const json* j = optional_field(doc, "frobenius"))
        out.frobenius = parse_index(*j, "frobenius", out.lattice.group.order());
    if (const json* j = optional_field(doc, "residue_q"))
        out.residue_q = parse_int(*j, "residue_q");
    if (const json* j = optional_field(doc, "global"))
        out.global = parse_global(*j, out.lattice);
    return out;
}

LocalTorusData local_data(const InputDocument& doc) {
    if (!doc.has_local_fields())
        throw ValidationError(
            "local mode needs the inertia, frobenius and residue_q fields");
    Subgroup inertia(doc.lattice.group, *doc.inertia);
    return LocalTorusData(doc.lattice, std::move(inertia), *doc.frobenius,
                          *doc.residue_q);
}

std::string local_document_json(const GaloisLattice& lattice,
                                const std::vector<std::size_t>& inertia,
                                std::size_t frobenius, const Int& residue_q) {
    json inertia_json = json::array();
    for (std::size_t h : inertia)
        inertia_json.push_back(std::to_string(h));
    json doc{{"group", group_to_json(lattice.group)},
             {"lattice", lattice_to_json(lattice)},
             {"inertia", std::move(inertia_json)},
             {"frobenius", std::to_string(frobenius)},
             {"residue_q", to_decimal(residue_q)}};
    return doc.dump(2) + "\n";
}

std::string to_decimal(const Int& x) { return x.str(); }

std::string to_decimal(const Rational& x) {
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::string render_local_report_text(const LocalReport& report) {
    std::ostringstream os;
    os << "good_reduction: " << (report.good_reduction ? "true" : "false")
       << "\n";
    os << "l_factor_at_1: " << to_decimal(report.l_factor_at_1) << "\n";
    os << "component_group: " << report.component_group.to_string() << "\n";
    os << "shyr_factor: " << to_decimal(report.shyr_factor) << "\n";
    os << "h1_inertia: " << report.h1_inertia.to_string() << "\n";
    if (!report.q_is_prime_power)
        os << "warning: residue_q is not a prime power\n";
    return os.str();
}

std::string render_local_report_json(const LocalReport& report) {
    json out{{"good_reduction", report.good_reduction},
             {"l_factor_at_1", to_decimal(report.l_factor_at_1)},
             {"component_group", fin_ab_group_to_json(report.component_group)},
             {"shyr_factor", to_decimal(report.shyr_factor)},
             {"h1_inertia", fin_ab_group_to_json(report.h1_inertia)},
             {"residue_q_prime_power", report.q_is_prime_power}};
    return out.dump(2) + "\n";
}

std::string render_global_report_text(const GlobalTorusSpec& spec,
                                      const GlobalReport& report) {
    std::ostringstream os;
    os << "case: "
       << (spec.field_case == GlobalCase::function_field ? "F" : "N") << "\n";
    os << "finite_part: " << to_decimal(report.finite_part) << "\n";
    os << "pole_order: " << report.pole_order << "\n";
    os << "shyr_invariant: " << render_symbolic_value(report.value) << "\n";
    if (spec.field_case == GlobalCase::number_field)
        os << "C_infinity: unevaluated\n";
    return os.str();
}

std::string render_global_report_json(const GlobalTorusSpec& spec,
                                      const GlobalReport& report) {
    json out{
        {"case", spec.field_case == GlobalCase::function_field ? "F" : "N"},
        {"finite_part", to_decimal(report.finite_part)},
        {"pole_order", std::to_string(report.pole_order)},
        {"shyr_invariant", symbolic_value_to_json(report.value)}};
    if (spec.field_case == GlobalCase::number_field)
        out["C_infinity"] = "unevaluated";
    return out.dump(2) + "\n";
}

std::string render_h1_text(const FinAbGroup& group) {
    return "h1: " + group.to_string() + "\n";
}

std::string render_h1_json(const FinAbGroup& group) {
    json out{{"h1", fin_ab_group_to_json(group)}};
    return out.dump(2) + "\n";
}

std::string render_isogeny_text(bool flag) {
    return std::string("isogenous: ") + (flag ? "true" : "false") + "\n";
}

std::string render_isogeny_json(bool flag) {
    json out{{"isogenous", flag}};
    return out.dump(2) + "\n";
}

} // namespace torus
