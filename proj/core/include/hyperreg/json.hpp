#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "hyperreg/bouquets.hpp"
#include "hyperreg/complex.hpp"
#include "hyperreg/decomposition.hpp"
#include "hyperreg/generators.hpp"
#include "hyperreg/homological.hpp"
#include "hyperreg/hypergraph.hpp"
#include "hyperreg/matchings.hpp"

namespace hyperreg {

/// Insertion-ordered so that reports are byte-stable.
using Json = nlohmann::ordered_json;

/// {"vertices": [...], "edges": [[...], ...]}; other keys are ignored.
/// Throws MalformedInput plus the Hypergraph::build errors.
Hypergraph hypergraph_from_json(const Json& j);
Hypergraph parse_hypergraph(const std::string& text);
/// Throws MalformedInput when the file cannot be read or parsed.
Hypergraph load_hypergraph(const std::string& path);

Json to_json(const Hypergraph& h);
Json labels_json(const Hypergraph& h, VertexSet s);
/// Complexes built over the vertex ids of h.
Json to_json(const Hypergraph& h, const SimplicialComplex& d);
/// Witness edges in canonical order, each as a label list.
Json to_json(const Hypergraph& h, const EdgeFamily& family);
Json to_json(const Hypergraph& h, const BouquetSet& b);
/// Reads {"bouquets": [{"stems": [...], "roots": [...]}]} and classifies it.
BouquetSet bouquet_set_from_json(const Hypergraph& h, const Json& j);
Json to_json(const BettiTable& t);
Json to_json(const Hypergraph& h, const VDCertificate& cert);

Json to_json(const FamilySpec& spec);
/// Throws MalformedInput or UnknownFilter.
FamilySpec family_from_json(const Json& j);
FamilySpec parse_family(const std::string& text);

}  // namespace hyperreg
