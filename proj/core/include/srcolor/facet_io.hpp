#pragma once

#include <string>
#include <string_view>

#include "srcolor/complex.hpp"

namespace srcolor {

/// Facet file format: one facet per line as whitespace-separated labels.
/// `#` starts a comment and blank lines are ignored. A comment of the form
///
///   # vertices: a b c
///
/// fixes the canonical vertex order; without it labels are interned in
/// order of first appearance. render_facets always writes that header so
/// vertex order survives a round trip.
///
/// Throws MalformedInputError (with a line number where one applies) for a
/// file without facets, a label repeated within a line, or a label missing
/// from the vertex header.
SimplicialComplex parse_facets(std::string_view text);

std::string render_facets(const SimplicialComplex& k);

/// "-" reads standard input.
SimplicialComplex read_facet_file(const std::string& path);
/// "-" writes standard output.
void write_facet_file(const SimplicialComplex& k, const std::string& path);

}  // namespace srcolor
