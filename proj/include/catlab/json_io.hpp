#ifndef CATLAB_JSON_IO_HPP
#define CATLAB_JSON_IO_HPP

#include "catlab/coefficients.hpp"
#include "catlab/gw.hpp"
#include "catlab/series.hpp"
#include "catlab/tree.hpp"

#include <json.hpp>

#include <string>

namespace catlab {

/// Insertion-ordered documents keep byte-identical output for identical runs.
using Json = nlohmann::ordered_json;

/// Exact rationals travel as {"num": "...", "den": "..."} strings; decimals
/// appear only in fields explicitly named *_approx.
Json rat_json(const Rat& q);
Rat rat_from_json(const Json& j);

Json multi_index_json(const MultiIndex& m);
MultiIndex multi_index_from_json(const Json& j);

/// {"n", "d", "entries": [{"i", "alpha", "num", "den"}]}; i is 1-based.
Json table_json(const CoefficientTable& table);
CoefficientTable table_from_json(const Json& j);

/// {"n", "D", "components": [{"i", "terms": [{"alpha", "num", "den"}]}]}.
Json series_json(const TruncatedSeriesMap& f);
TruncatedSeriesMap series_from_json(const Json& j);

/// {"n", "entries": [{"i", "alpha", "num", "den"}]}; rows may omit alpha = 0,
/// in which case the leaf mass is derived.
Json offspring_json(const OffspringDistribution& offspring);
OffspringDistribution offspring_from_json(const Json& j);

/// {"d", "k", "enc"} with the preorder 1/0 string.
Json tree_json(const CatalanTree& tree);
CatalanTree tree_from_json(const Json& j);

Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

} // namespace catlab

#endif
