#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "trihex/formats.hpp"

namespace trihex {

namespace {

using ordered_json = nlohmann::ordered_json;

struct EdgeTable {
  std::vector<std::array<int, 2>> endpoints;  // edge -> first-encounter (u, v)
  std::vector<int> edge_of_dart;
};

// Number edges in first-encounter order: vertices ascending, each rotation
// read counterclockwise from the vertex's smallest dart.
EdgeTable edge_table(const CombinatorialMap& m) {
  EdgeTable t;
  t.edge_of_dart.assign(static_cast<size_t>(m.dart_count), -1);
  for (int v = 0; v < m.vertex_count; ++v) {
    const int first = m.vertex_dart[static_cast<size_t>(v)];
    int d = first;
    do {
      if (t.edge_of_dart[static_cast<size_t>(d)] < 0) {
        const int id = static_cast<int>(t.endpoints.size());
        const int e = m.opposite[static_cast<size_t>(d)];
        t.edge_of_dart[static_cast<size_t>(d)] = id;
        t.edge_of_dart[static_cast<size_t>(e)] = id;
        t.endpoints.push_back({m.vertex_of[static_cast<size_t>(d)],
                               m.vertex_of[static_cast<size_t>(e)]});
      }
      d = m.next_ccw[static_cast<size_t>(d)];
    } while (d != first);
  }
  return t;
}

std::vector<int> face_cycle(const CombinatorialMap& m, int f) {
  std::vector<int> cycle;
  const int first = m.face_dart[static_cast<size_t>(f)];
  int d = first;
  do {
    cycle.push_back(m.vertex_of[static_cast<size_t>(d)]);
    d = m.face_next(d);
  } while (d != first);
  return cycle;
}

const char* face_kind(const CombinatorialMap& m, int f) {
  switch (m.face_size[static_cast<size_t>(f)]) {
    case 3:
      return "triangle";
    case 6:
      return "hexagon";
    default:
      throw internal_error("face is not a triangle or hexagon");
  }
}

// Relabel so the darts of vertex v are 3v, 3v+1, 3v+2, counterclockwise
// from the vertex's smallest dart.  Face and edge numbering then depend
// only on the abstract map, not on which constructor numbered the darts,
// so an exported document is byte-identical after re-import and re-export.
CombinatorialMap renumber_row_major(const CombinatorialMap& m) {
  std::vector<int> perm(static_cast<size_t>(m.dart_count), -1);
  for (int v = 0; v < m.vertex_count; ++v) {
    int d = m.vertex_dart[static_cast<size_t>(v)];
    for (int i = 0; i < 3; ++i) {
      perm[static_cast<size_t>(d)] = 3 * v + i;
      d = m.next_ccw[static_cast<size_t>(d)];
    }
    if (d != m.vertex_dart[static_cast<size_t>(v)]) {
      throw internal_error("rotation orbit is not three darts");
    }
  }
  CombinatorialMap out;
  out.dart_count = m.dart_count;
  out.opposite.resize(static_cast<size_t>(m.dart_count));
  out.next_ccw.resize(static_cast<size_t>(m.dart_count));
  for (int d = 0; d < m.dart_count; ++d) {
    const int p = perm[static_cast<size_t>(d)];
    out.opposite[static_cast<size_t>(p)] =
        perm[static_cast<size_t>(m.opposite[static_cast<size_t>(d)])];
    out.next_ccw[static_cast<size_t>(p)] =
        perm[static_cast<size_t>(m.next_ccw[static_cast<size_t>(d)])];
  }
  out.finalize();
  return out;
}

}  // namespace

std::string to_json(const CombinatorialMap& m_in, const Signature& sig,
                    const std::string& method) {
  const CombinatorialMap m = renumber_row_major(m_in);
  const EdgeTable t = edge_table(m);
  const SignatureClass cls = equivalent_signatures(sig);

  ordered_json j;
  j["format"] = "trihex-graph";
  j["version"] = 1;
  j["signature"] = to_string(sig);
  j["method"] = method;

  ordered_json jclass;
  jclass["canonical"] = to_string(cls.canonical);
  ordered_json members = ordered_json::array();
  for (const Signature& member : cls.members) members.push_back(to_string(member));
  jclass["members"] = members;
  jclass["chiral"] = cls.chiral;
  j["class"] = jclass;

  Int triangles = 0;
  Int hexagons = 0;
  for (int f = 0; f < m.face_count; ++f) {
    (m.face_size[static_cast<size_t>(f)] == 3 ? triangles : hexagons) += 1;
  }
  ordered_json jcounts;
  jcounts["vertices"] = m.vertex_count;
  jcounts["edges"] = m.edge_count;
  jcounts["faces"] = m.face_count;
  jcounts["triangles"] = triangles;
  jcounts["hexagons"] = hexagons;
  j["counts"] = jcounts;

  ordered_json vertices = ordered_json::array();
  for (int v = 0; v < m.vertex_count; ++v) vertices.push_back(v);
  j["vertices"] = vertices;

  ordered_json edges = ordered_json::array();
  for (const std::array<int, 2>& e : t.endpoints) {
    edges.push_back(ordered_json::array({e[0], e[1]}));
  }
  j["edges"] = edges;

  ordered_json faces = ordered_json::array();
  for (int f = 0; f < m.face_count; ++f) {
    ordered_json jf;
    jf["kind"] = face_kind(m, f);
    jf["vertices"] = face_cycle(m, f);
    faces.push_back(jf);
  }
  j["faces"] = faces;

  ordered_json rotation = ordered_json::array();
  for (int v = 0; v < m.vertex_count; ++v) {
    ordered_json row = ordered_json::array();
    const int first = m.vertex_dart[static_cast<size_t>(v)];
    int d = first;
    do {
      row.push_back(t.edge_of_dart[static_cast<size_t>(d)]);
      d = m.next_ccw[static_cast<size_t>(d)];
    } while (d != first);
    rotation.push_back(row);
  }
  j["rotation"] = rotation;

  return j.dump(2) + "\n";
}

GraphDocument from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("document is not valid JSON: ") +
                                e.what());
  }
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };

  require(j.is_object(), "document must be a JSON object");
  require(j.contains("format") && j["format"].is_string() &&
              j["format"].get<std::string>() == "trihex-graph",
          "missing or unknown format tag");
  require(j.contains("version") && j["version"].is_number_integer() &&
              j["version"].get<int>() == 1,
          "unsupported document version");
  require(j.contains("signature") && j["signature"].is_string(),
          "missing signature");
  const Signature sig = parse_signature(j["signature"].get<std::string>());
  require(j.contains("method") && j["method"].is_string(), "missing method");
  const std::string method = j["method"].get<std::string>();

  require(j.contains("vertices") && j["vertices"].is_array(),
          "missing vertex list");
  const ordered_json& jv = j["vertices"];
  const int n = static_cast<int>(jv.size());
  require(n > 0, "vertex list is empty");
  for (int v = 0; v < n; ++v) {
    require(jv[static_cast<size_t>(v)].is_number_integer() &&
                jv[static_cast<size_t>(v)].get<int>() == v,
            "vertices must be 0..n-1 in order");
  }

  require(j.contains("edges") && j["edges"].is_array(), "missing edge list");
  const ordered_json& je = j["edges"];
  const int edge_count = static_cast<int>(je.size());
  for (const ordered_json& e : je) {
    require(e.is_array() && e.size() == 2 && e[0].is_number_integer() &&
                e[1].is_number_integer(),
            "edges must be vertex-index pairs");
    const int u = e[0].get<int>();
    const int v = e[1].get<int>();
    require(u >= 0 && u < n && v >= 0 && v < n,
            "edge endpoint out of range");
  }

  require(j.contains("rotation") && j["rotation"].is_array() &&
              static_cast<int>(j["rotation"].size()) == n,
          "rotation must list every vertex");
  CombinatorialMap m;
  m.dart_count = 3 * n;
  m.next_ccw.resize(static_cast<size_t>(m.dart_count));
  m.opposite.assign(static_cast<size_t>(m.dart_count), -1);
  std::vector<std::vector<int>> occurrences(static_cast<size_t>(edge_count));
  for (int v = 0; v < n; ++v) {
    const ordered_json& row = j["rotation"][static_cast<size_t>(v)];
    require(row.is_array() && row.size() == 3,
            "every vertex rotation must list exactly three edges");
    for (int i = 0; i < 3; ++i) {
      require(row[static_cast<size_t>(i)].is_number_integer(),
              "rotation entries must be edge indices");
      const int e = row[static_cast<size_t>(i)].get<int>();
      require(e >= 0 && e < edge_count, "rotation edge index out of range");
      occurrences[static_cast<size_t>(e)].push_back(3 * v + i);
      m.next_ccw[static_cast<size_t>(3 * v + i)] = 3 * v + (i + 1) % 3;
    }
  }
  for (int e = 0; e < edge_count; ++e) {
    const std::vector<int>& occ = occurrences[static_cast<size_t>(e)];
    require(occ.size() == 2, "each edge must appear in exactly two rotations");
    require(occ[0] / 3 == je[static_cast<size_t>(e)][0].get<int>() &&
                occ[1] / 3 == je[static_cast<size_t>(e)][1].get<int>(),
            "edge endpoints disagree with the rotation system");
    m.opposite[static_cast<size_t>(occ[0])] = occ[1];
    m.opposite[static_cast<size_t>(occ[1])] = occ[0];
  }
  require(3 * n == 2 * edge_count, "dart and edge counts disagree");
  try {
    m.finalize();
  } catch (const internal_error&) {
    throw std::invalid_argument("rotation system is not a valid map");
  }

  const ValidationReport report = validate(m);
  if (!report.pass) {
    throw std::invalid_argument("document map fails validation: " +
                                report.first_failure);
  }
  const Counts expect = counts(sig);
  require(m.vertex_count == expect.vertices,
          "signature disagrees with the vertex count");

  const std::string canonical = to_json(m, sig, method);
  if (canonical != j.dump(2) + "\n") {
    throw std::invalid_argument(
        "document fields are inconsistent with its rotation system");
  }
  return GraphDocument{sig, method, std::move(m)};
}

std::string to_dot(const CombinatorialMap& m, const Signature& sig) {
  const EdgeTable t = edge_table(m);
  std::ostringstream out;
  out << "graph trihex {\n";
  out << "  // signature " << to_string(sig) << "\n";
  Int triangles = 0;
  Int hexagons = 0;
  for (int f = 0; f < m.face_count; ++f) {
    (m.face_size[static_cast<size_t>(f)] == 3 ? triangles : hexagons) += 1;
  }
  out << "  // " << m.vertex_count << " vertices, " << m.edge_count
      << " edges, " << m.face_count << " faces (" << triangles
      << " triangles, " << hexagons << " hexagons)\n";
  for (int f = 0; f < m.face_count; ++f) {
    out << "  // face " << f << " (" << face_kind(m, f) << "):";
    for (const int v : face_cycle(m, f)) out << " " << v;
    out << "\n";
  }
  out << "  node [shape=point];\n";
  for (const std::array<int, 2>& e : t.endpoints) {
    out << "  " << e[0] << " -- " << e[1] << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_graph6(const CombinatorialMap& m) {
  const int n = m.vertex_count;
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw std::invalid_argument("graph too large for graph6");
  }
  std::vector<char> adjacent(static_cast<size_t>(n) * static_cast<size_t>(n),
                             0);
  for (const std::array<int, 2>& e : edge_table(m).endpoints) {
    adjacent[static_cast<size_t>(e[0]) * static_cast<size_t>(n) +
             static_cast<size_t>(e[1])] = 1;
    adjacent[static_cast<size_t>(e[1]) * static_cast<size_t>(n) +
             static_cast<size_t>(e[0])] = 1;
  }
  int bit = 5;
  int sextet = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (adjacent[static_cast<size_t>(u) * static_cast<size_t>(n) +
                   static_cast<size_t>(v)]) {
        sextet |= 1 << bit;
      }
      if (bit == 0) {
        out.push_back(static_cast<char>(63 + sextet));
        sextet = 0;
        bit = 5;
      } else {
        --bit;
      }
    }
  }
  if (bit != 5) out.push_back(static_cast<char>(63 + sextet));
  out.push_back('\n');
  return out;
}

}  // namespace trihex
