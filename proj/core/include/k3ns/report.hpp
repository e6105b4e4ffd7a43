#pragma once

#include <nlohmann/json.hpp>

#include "k3ns/classify.hpp"
#include "k3ns/isometry.hpp"
#include "k3ns/lattice.hpp"
#include "k3ns/lefschetz.hpp"
#include "k3ns/weierstrass.hpp"

namespace k3ns {

// nlohmann::json keeps object keys sorted, which together with
// string-encoded rationals makes every emitted document byte-stable.
using json = nlohmann::json;

enum class OutputFormat { kMarkdown, kJson, kCsv };
OutputFormat output_format_from_string(const std::string& s);

// {gram, label, rank} with gram as a row-major integer array.
json lattice_json(const Lattice& l);
json lattice_invariants_json(const LatticeInvariants& inv);
// {p, coeffs: ["num/den", ...]}
json cyclotomic_json(const Cyclotomic& x);

json linear_in_alpha_json(const LinearInAlpha& v);
std::string linear_in_alpha_str(const LinearInAlpha& v);
// "(r+2)/12", "r-10", ...
std::string alpha_of_r_str(const AffineInR& v);

json table1_json(const LefschetzSolution& sol);
std::string table1_markdown(const std::vector<LefschetzSolution>& rows);
std::string table1_csv(const std::vector<LefschetzSolution>& rows);

json classification_row_json(const ClassificationRow& row);
json classification_table_json(const std::vector<ClassificationRow>& rows);
std::string classification_markdown(const std::vector<ClassificationRow>& rows);
std::string classification_csv(const std::vector<ClassificationRow>& rows);

json moduli_json(const std::vector<ModuliComponent>& components);
std::string moduli_markdown(const std::vector<ModuliComponent>& components);
std::string moduli_csv(const std::vector<ModuliComponent>& components);

json fibers_json(const WeierstrassModel& model, const FiberSummary& summary);
std::string fibers_markdown(const WeierstrassModel& model, const FiberSummary& summary);
std::string fibers_csv(const FiberSummary& summary);

// Renders rows of equal length as a column-aligned markdown table.
std::string markdown_table(const std::vector<std::vector<std::string>>& rows);
std::string csv_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace k3ns
