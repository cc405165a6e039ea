#pragma once

#include "lambda/coverage.hpp"
#include "lambda/homology.hpp"
#include "lambda/hopf.hpp"
#include "lambda/rewrite.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace lambda {

using json = nlohmann::json;

/// "- m1 l1 + 2 m2 l1"; "0" for the zero element. Coefficients use the
/// symmetric representative and are omitted when +-1.
std::string format_element(const Element& x, const PrimeContext& ctx);

/// Parses "[c] tok ... [+|- [c] tok ...]". Integer coefficients are reduced
/// mod p; "1" alone is the unit. Terms are returned as written (not normalized).
std::vector<Term> parse_terms(std::string_view text, const PrimeContext& ctx);

std::string_view to_string(Ideal ideal);
Ideal parse_ideal(std::string_view s);

json to_json(const Element& x);
Element element_from_json(const json& j, const PrimeContext& ctx);

json to_json(const E2Cell& cell);
E2Cell e2_cell_from_json(const json& j);

json to_json(const LemmaVerdict& v, const PrimeContext& ctx);
json to_json(const Certificate& c);
json to_json(const FinalRemarkInstance& r);
json to_json(const PropositionResult& r);

std::string csv_header();
std::string to_csv_row(const E2Cell& cell);

/// Grid with length l running down (largest at the top) and pi_index across;
/// each entry is dim E^2, '.' for zero.
std::string render_chart(const std::vector<E2Cell>& cells);

}  // namespace lambda
