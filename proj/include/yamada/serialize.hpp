#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "yamada/cube.hpp"
#include "yamada/homology.hpp"
#include "yamada/laurent.hpp"
#include "yamada/multigraph.hpp"
#include "yamada/verify.hpp"

namespace yamada {

using Json = nlohmann::ordered_json;

/// Parses `{"vertices": n, "edges": [[u, v], ...]}`; the edge array order is
/// the edge order. Throws std::invalid_argument on malformed input.
Multigraph parse_graph_json(std::string_view text);
Multigraph read_graph_file(const std::string& path);
Json graph_to_json(const Multigraph& g);

/// `{"terms": [{"x": a, "y": b, "c": "<decimal>"}, ...]}`, terms ascending by (a, b).
Json polynomial_to_json(const Laurent& p);
Laurent polynomial_from_json(const Json& j);

/// `{"variant": ..., "groups": [{"i": 0, "summands": [...]}, ...], "euler": {...}}`.
Json cohomology_to_json(const CohomologyTable& table);

/// One object per (i, bidegree) differential block, ordered by (i, j, k).
/// Row and column indices are positions inside the block's bases.
Json dump_to_json(const BigradedComplex& cx, std::optional<std::size_t> height = std::nullopt);

Json reports_to_json(const std::vector<CheckReport>& reports);

/// Plain-text table: one line per nonzero (i, bidegree) plus the Euler
/// characteristic.
std::string format_cohomology(const CohomologyTable& table);

}  // namespace yamada
