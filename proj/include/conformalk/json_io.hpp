#pragma once

#include <string>
#include <vector>

#include "conformalk/contact_forms.hpp"
#include "conformalk/induced.hpp"
#include "conformalk/kn_algebra.hpp"
#include "conformalk/linalg.hpp"
#include "conformalk/singular.hpp"
#include "conformalk/so_rep.hpp"
#include "json.hpp"

namespace conformalk {

// All reports use ordered_json so field order is fixed by construction and
// identical configs serialize byte-identically.
using Json = nlohmann::ordered_json;

std::string tool_version();

// ["p/q", "r/s"]; integral entries drop the "/1".
Json scalar_json(const GaussScalar& c);

// ["mu0", "mu1", ..., "mu_m"].
Json weight_json(const SoWeight& w);

// Parses "m0;m1,...,m_m" with rational entries ("1/2" allowed); the list must
// have exactly floor(n/2) entries. Throws ParseError on malformed input.
SoWeight parse_weight(int n, const std::string& spec);

// Grid slot: a single rational, or "lo..hi" (step 1), or "lo..hi:step".
std::vector<mpq_class> parse_grid_slot(const std::string& slot);

// Cartesian product of per-coordinate slots from "slot;slot,...,slot",
// filtered to dominant integral weights.
std::vector<SoWeight> parse_weight_grid(int n, const std::string& spec);

// {"n":..., "mu":[...], "basis":"natural"|"dual",
//  "terms":[{"dpow":k,"xi":[i...],"vecIndex":b,"coeff":["re","im"]}...]}
Json vector_json(const SoWeight& mu, const InducedVector& v);

// {"degree":d, "coeffs":{"0": terms, "1": terms, ...}} with the same term
// encoding as vector_json.
Json lambda_json(const SoWeight& mu, const LambdaInd& p);

// Sparse triplet list [[row, col, ["re","im"]], ...] in row-major order.
Json matrix_json(const Matrix& m);

// Dimension, highest weight, per-vector weights; generator matrices optional.
Json rep_json(const SoModule& m, bool matrices);

Json axiom_report_json(const AxiomReport& r);
Json singular_report_json(const SingularReport& r);
Json scan_json(const std::vector<ScanRow>& rows);
Json exactness_json(const ExactnessReport& r);
Json gamma_json(const GammaInfo& g);
Json character_json(const CharacterReport& r);

// 2-space indented dump with a trailing newline.
std::string dump_stable(const Json& j);

}  // namespace conformalk
