#pragma once

#include <string>

#include "trihex/map.hpp"
#include "trihex/signature.hpp"

namespace trihex {

// A parsed structured-text document: the map plus the metadata carried
// alongside it.
struct GraphDocument {
  Signature signature;
  std::string method;
  CombinatorialMap map;
};

// Structured text format.  Emits the full embedding: vertices, edges in
// first-encounter order, faces with their vertex cycles, and the per-vertex
// counterclockwise rotation over edge indices.  Export of an imported
// document is byte-identical.
std::string to_json(const CombinatorialMap& m, const Signature& sig,
                    const std::string& method);

// Parses and fully checks a document produced by to_json (or equivalent).
// Any malformed field, or any derived field inconsistent with the rotation
// system, raises std::invalid_argument.
GraphDocument from_json(const std::string& text);

// Undirected dot graph; faces are listed as comments.
std::string to_dot(const CombinatorialMap& m, const Signature& sig);

// graph6 line for the underlying simple graph (the embedding is dropped).
std::string to_graph6(const CombinatorialMap& m);

}  // namespace trihex
