#pragma once

#include <string>

#include <json.hpp>

#include "badcycle/goodness.hpp"
#include "badcycle/hypergraph.hpp"
#include "badcycle/machine.hpp"
#include "badcycle/order_theory.hpp"
#include "badcycle/reductions.hpp"
#include "badcycle/relations.hpp"

namespace badcycle {

using Json = nlohmann::ordered_json;

// All readers throw InputError on malformed documents, unknown fields and
// unknown names. See docs/formats.md for the grammar.

Machine machine_from_json(const Json& j);
Json machine_to_json(const Machine& m);

DirectedHypergraph hypergraph_from_json(const Json& j);
Json hypergraph_to_json(const DirectedHypergraph& h);

// [["s", 1], ["t", 2], ...] from lowest to highest.
CompatibleOrder order_from_json(const Json& j, const Machine& m);
Json order_to_json(const CompatibleOrder& order, const Machine& m);

// {"classes": [[["s",1], ...], ...], "partial": [[a,b], ...],
//  "linear": [c, ...]} over the carrier S x [k] of m.
OrderSystem order_system_from_json(const Json& j, const Machine& m);
Json order_system_to_json(const OrderSystem& os, const Machine& m);

// {"vertices": [...], "edges": [...], "states": [...]} by name and edge index.
Json witness_to_json(const BadCycleWitness& w, const DirectedHypergraph& h,
                     const Machine& m);
BadCycleWitness witness_from_json(const Json& j, const DirectedHypergraph& h,
                                  const Machine& m);

// {"n": 3, "pairs": [[1,2], ...]} with 1-based elements.
Relation relation_from_json(const Json& j);
Json relation_to_json(const Relation& r);

// {"variables": ["x", ...], "clauses": [["x", "-y", "z"], ...]}
CnfInstance cnf_from_json(const Json& j);
Json cnf_to_json(const CnfInstance& phi);
// A structured document when the first non-blank character is '{',
// DIMACS otherwise.
CnfInstance parse_cnf(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
Json parse_json(const std::string& text, const std::string& origin = "input");
Json read_json_file(const std::string& path);

// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace badcycle
