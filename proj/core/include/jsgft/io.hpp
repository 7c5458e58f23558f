#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jsgft/graph.hpp"

namespace jsgft {

enum class GraphFileFormat { auto_detect, matrix_market, edge_list_csv };

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

[[noreturn]] inline void parse_fail(const std::string& path, std::size_t line,
                                    const std::string& what) {
  raise(Errc::parse_error, path + ":" + std::to_string(line) + ": " + what);
}

inline std::size_t parse_node_id(const std::string& tok, const std::string& path,
                                 std::size_t line) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    parse_fail(path, line, "bad node id '" + tok + "'");
  unsigned long v = 0;
  try {
    v = std::stoul(tok);
  } catch (const std::exception&) {
    parse_fail(path, line, "bad node id '" + tok + "'");
  }
  if (v == 0) parse_fail(path, line, "node ids are 1-based; got 0");
  return static_cast<std::size_t>(v);
}

inline std::ifstream open_or_raise(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::io_error, "cannot open '" + path + "'");
  return in;
}

struct WeightedEdge {
  std::size_t src, dst;  // 1-based
  std::string weight_re, weight_im;
};

// Edge-list CSV: optional `# nodes=N` comment, optional `src,dst,weight`
// header, then one edge per row. A row src,dst,w sets [A]_{dst,src} = w;
// parallel edges sum.
inline void read_edge_list_csv(const std::string& path, std::vector<WeightedEdge>& edges,
                               std::optional<std::size_t>& declared_nodes) {
  std::ifstream in = open_or_raise(path);
  std::string raw;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string body = lower(trim(line.substr(1)));
      body.erase(std::remove(body.begin(), body.end(), ' '), body.end());
      if (body.rfind("nodes=", 0) == 0)
        declared_nodes = parse_node_id(body.substr(6), path, line_no);
      continue;
    }
    std::vector<std::string> fields = split(line, ',');
    if (!saw_header && !fields.empty() &&
        !std::isdigit(static_cast<unsigned char>(fields[0].empty() ? 'x' : fields[0][0]))) {
      if (lower(fields[0]) == "src")
        saw_header = true;
      else
        parse_fail(path, line_no, "expected 'src,dst,weight' header or an edge row");
      continue;
    }
    if (fields.size() != 3)
      parse_fail(path, line_no, "expected 3 fields src,dst,weight; got " +
                                    std::to_string(fields.size()));
    WeightedEdge e;
    e.src = parse_node_id(fields[0], path, line_no);
    e.dst = parse_node_id(fields[1], path, line_no);
    if (fields[2].empty()) parse_fail(path, line_no, "empty weight");
    e.weight_re = fields[2];
    e.weight_im = "0";
    try {
      (void)rational_from_string(e.weight_re);
    } catch (const Error&) {
      parse_fail(path, line_no, "bad weight '" + fields[2] + "'");
    }
    edges.push_back(std::move(e));
  }
}

// Matrix Market coordinate file. The banner must declare
// `matrix coordinate <real|integer|complex|pattern> general`. Each data line
// `src dst value` sets [A]_{dst,src} = value (the in-edge orientation used
// throughout).
inline void read_matrix_market(const std::string& path, std::vector<WeightedEdge>& edges,
                               std::size_t& nodes) {
  std::ifstream in = open_or_raise(path);
  std::string raw;
  std::size_t line_no = 0;

  if (!std::getline(in, raw)) raise(Errc::parse_error, path + ": empty file");
  ++line_no;
  std::vector<std::string> banner;
  {
    std::istringstream bs(lower(trim(raw)));
    std::string tok;
    while (bs >> tok) banner.push_back(tok);
  }
  if (banner.size() < 5 || banner[0] != "%%matrixmarket" || banner[1] != "matrix" ||
      banner[2] != "coordinate")
    parse_fail(path, 1, "expected '%%MatrixMarket matrix coordinate <field> general' banner");
  const std::string field = banner[3];
  if (field != "real" && field != "integer" && field != "complex" && field != "pattern")
    parse_fail(path, 1, "unsupported field '" + field + "'");
  if (banner[4] != "general")
    parse_fail(path, 1, "only 'general' symmetry is supported; got '" + banner[4] + "'");

  std::size_t rows = 0, cols = 0, nnz = 0;
  bool have_size = false;
  std::size_t data_seen = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '%') continue;
    std::istringstream ls(line);
    if (!have_size) {
      long r = -1, c = -1, z = -1;
      if (!(ls >> r >> c >> z) || r < 0 || c < 0 || z < 0)
        parse_fail(path, line_no, "bad size line '" + line + "'");
      rows = static_cast<std::size_t>(r);
      cols = static_cast<std::size_t>(c);
      nnz = static_cast<std::size_t>(z);
      if (rows != cols)
        raise(Errc::inconsistent_dimensions,
              path + ": adjacency must be square; size line says " + std::to_string(rows) + "x" +
                  std::to_string(cols));
      have_size = true;
      continue;
    }
    std::vector<std::string> toks;
    {
      std::string tok;
      while (ls >> tok) toks.push_back(tok);
    }
    std::size_t expected = field == "pattern" ? 2 : (field == "complex" ? 4 : 3);
    if (toks.size() != expected)
      parse_fail(path, line_no, "expected " + std::to_string(expected) + " tokens, got " +
                                    std::to_string(toks.size()));
    WeightedEdge e;
    e.src = parse_node_id(toks[0], path, line_no);
    e.dst = parse_node_id(toks[1], path, line_no);
    e.weight_re = field == "pattern" ? "1" : toks[2];
    e.weight_im = field == "complex" ? toks[3] : "0";
    try {
      (void)rational_from_string(e.weight_re);
      (void)rational_from_string(e.weight_im);
    } catch (const Error&) {
      parse_fail(path, line_no, "bad value on line '" + line + "'");
    }
    if (e.src > rows || e.dst > rows)
      raise(Errc::inconsistent_dimensions,
            path + ":" + std::to_string(line_no) + ": node id exceeds declared size " +
                std::to_string(rows));
    edges.push_back(std::move(e));
    ++data_seen;
  }
  if (!have_size) raise(Errc::parse_error, path + ": missing size line");
  if (data_seen != nnz)
    raise(Errc::inconsistent_dimensions, path + ": size line promises " + std::to_string(nnz) +
                                             " entries but file has " + std::to_string(data_seen));
  nodes = rows;
}

inline GraphFileFormat detect_format(const std::string& path) {
  std::string p = lower(path);
  if (p.size() >= 4 && (p.rfind(".mtx") == p.size() - 4 || p.rfind(".mm") == p.size() - 3))
    return GraphFileFormat::matrix_market;
  if (p.size() >= 4 && p.rfind(".csv") == p.size() - 4) return GraphFileFormat::edge_list_csv;
  // Peek at the first byte: Matrix Market files start with '%'.
  std::ifstream in = open_or_raise(path);
  int c = in.peek();
  return c == '%' ? GraphFileFormat::matrix_market : GraphFileFormat::edge_list_csv;
}

}  // namespace detail

// Loads a directed graph. Edge rows are src,dst,weight meaning
// [A]_{dst,src} = weight. For edge-list CSV the node count comes from
// `nodes_override`, a `# nodes=N` comment, or the maximum node id, in that
// precedence order.
template <class S>
Graph<S> load_adjacency(const std::string& path,
                        GraphFileFormat format = GraphFileFormat::auto_detect,
                        std::optional<std::size_t> nodes_override = std::nullopt) {
  if (format == GraphFileFormat::auto_detect) format = detail::detect_format(path);

  std::vector<detail::WeightedEdge> edges;
  std::size_t nodes = 0;
  if (format == GraphFileFormat::matrix_market) {
    detail::read_matrix_market(path, edges, nodes);
    if (nodes_override && *nodes_override != nodes)
      raise(Errc::inconsistent_dimensions,
            path + ": --nodes disagrees with the Matrix Market size line");
  } else {
    std::optional<std::size_t> declared;
    detail::read_edge_list_csv(path, edges, declared);
    std::size_t max_id = 0;
    for (const auto& e : edges) max_id = std::max({max_id, e.src, e.dst});
    nodes = nodes_override.value_or(declared.value_or(max_id));
    if (nodes == 0) raise(Errc::inconsistent_dimensions, path + ": cannot determine node count");
    for (const auto& e : edges)
      if (e.src > nodes || e.dst > nodes)
        raise(Errc::inconsistent_dimensions,
              path + ": edge references node beyond the declared count " + std::to_string(nodes));
  }

  Matrix<S> a(nodes, nodes);
  for (const auto& e : edges) {
    S w = ScalarOps<S>::from_strings(e.weight_re, e.weight_im);
    a.at(e.dst - 1, e.src - 1) = a(e.dst - 1, e.src - 1) + w;  // parallel edges sum
  }
  return {std::move(a), {}};
}

// Signal CSV with header `node,value`; missing nodes default to 0 with a
// warning, out-of-range ids raise UnknownNode.
template <class S>
GraphSignal<S> load_signal(const std::string& path, std::size_t node_count,
                           std::vector<std::string>* warnings = nullptr) {
  std::ifstream in = detail::open_or_raise(path);
  std::vector<S> values(node_count, ScalarOps<S>::zero());
  std::vector<bool> seen(node_count, false);
  std::string raw;
  std::size_t line_no = 0;
  bool saw_header = false, any_row = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = detail::split(line, ',');
    if (!saw_header && !fields.empty() && !fields[0].empty() &&
        !std::isdigit(static_cast<unsigned char>(fields[0][0]))) {
      if (detail::lower(fields[0]) == "node")
        saw_header = true;
      else
        detail::parse_fail(path, line_no, "expected 'node,value' header or a data row");
      continue;
    }
    if (fields.size() != 2)
      detail::parse_fail(path, line_no,
                         "expected 2 fields node,value; got " + std::to_string(fields.size()));
    std::size_t id = detail::parse_node_id(fields[0], path, line_no);
    if (id > node_count)
      raise(Errc::unknown_node, path + ":" + std::to_string(line_no) + ": node " +
                                    std::to_string(id) + " exceeds node count " +
                                    std::to_string(node_count));
    S v;
    try {
      v = ScalarOps<S>::from_real_string(fields[1]);
    } catch (const Error&) {
      detail::parse_fail(path, line_no, "bad value '" + fields[1] + "'");
    }
    if (seen[id - 1] && warnings)
      warnings->push_back(path + ":" + std::to_string(line_no) + ": node " + std::to_string(id) +
                          " listed twice; keeping the last value");
    values[id - 1] = v;
    seen[id - 1] = true;
    any_row = true;
  }
  std::size_t missing = 0;
  for (bool s : seen)
    if (!s) ++missing;
  if (warnings && missing > 0)
    warnings->push_back(path + ": " + std::to_string(missing) + " of " +
                        std::to_string(node_count) + " nodes have no value; defaulting to 0" +
                        (any_row ? "" : " (file has no data rows)"));
  return {std::move(values)};
}

// Supplied-spectrum file: one eigenvalue per line as `re` or `re im`
// (whitespace separated), '#' comments allowed.
template <class S>
std::vector<S> load_spectrum(const std::string& path) {
  std::ifstream in = detail::open_or_raise(path);
  std::vector<S> out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string re, im;
    ls >> re;
    if (!(ls >> im)) im = "0";
    std::string extra;
    if (ls >> extra) detail::parse_fail(path, line_no, "too many tokens");
    try {
      out.push_back(ScalarOps<S>::from_strings(re, im));
    } catch (const Error&) {
      detail::parse_fail(path, line_no, "bad eigenvalue '" + line + "'");
    }
  }
  if (out.empty()) raise(Errc::bad_supplied_spectrum, path + ": no eigenvalues in file");
  return out;
}

}  // namespace jsgft
