#pragma once

// Engine selection and node polynomials built on top of the engines.

#include "refsev/interpolate.hpp"
#include "refsev/laurent.hpp"
#include "refsev/surfaces.hpp"

#include <optional>
#include <string>

namespace refsev {

enum class Engine { CH, Template, Floor, GF };

/// Accepts "ch", "template", "floor", "gf"; throws std::invalid_argument otherwise.
Engine parse_engine(const std::string& name);
std::string engine_name(Engine e);

/// Empty when the generating-function engine is known to give the refined
/// Severi degree; otherwise the violated condition.
std::optional<std::string> gf_region_violation(const Surface& s, long delta);

/// Refined Severi degree by one engine. The template and floor engines throw
/// DomainError outside their validity region; GF throws DomainError for
/// delta beyond the embedded series or outside gf_region_violation.
LaurentPoly severi_by(Engine e, const Surface& s, long delta);

/// P2 node polynomial in d, sampled at d = delta..3delta and checked at 3delta+1.
DPoly node_polynomial_p2(int delta, Engine engine = Engine::Template);
/// Hirzebruch node polynomial; exponent vectors are (c, m, d).
MultiPoly node_polynomial_hirzebruch(int delta, Engine engine = Engine::Template);
/// P(1,1,m) node polynomial; exponent vectors are (m, d).
MultiPoly node_polynomial_wps(int delta, Engine engine = Engine::Template);

}  // namespace refsev
