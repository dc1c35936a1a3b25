#pragma once

#include "torus/global.hpp"
#include "torus/local.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torus {

// A parsed input document: group + lattice, plus the optional local fields
// (inertia, frobenius, residue_q) and the optional global block.  The wire
// format is JSON with every integer written as a decimal string; see
// docs/format.md for the field reference.
struct InputDocument {
    GaloisLattice lattice;
    std::optional<std::vector<std::size_t>> inertia;
    std::optional<std::size_t> frobenius;
    std::optional<Int> residue_q;
    std::optional<GlobalTorusSpec> global;

    bool has_local_fields() const {
        return inertia && frobenius && residue_q;
    }
};

// Throws ValidationError naming the offending field on malformed input.
InputDocument parse_document(const std::string& text);

// Local-mode view; requires inertia, frobenius and residue_q.
LocalTorusData local_data(const InputDocument& doc);

// Canonical document text for local-mode data (what `torus catalog` writes).
std::string local_document_json(const GaloisLattice& lattice,
                                const std::vector<std::size_t>& inertia,
                                std::size_t frobenius, const Int& residue_q);

std::string to_decimal(const Int& x);
std::string to_decimal(const Rational& x); // "p" when integral, else "p/q"

std::string render_local_report_text(const LocalReport& report);
std::string render_local_report_json(const LocalReport& report);

std::string render_global_report_text(const GlobalTorusSpec& spec,
                                      const GlobalReport& report);
std::string render_global_report_json(const GlobalTorusSpec& spec,
                                      const GlobalReport& report);

std::string render_h1_text(const FinAbGroup& group);
std::string render_h1_json(const FinAbGroup& group);

std::string render_isogeny_text(bool flag);
std::string render_isogeny_json(bool flag);

} // namespace torus
