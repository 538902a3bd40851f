#pragma once

#include <string>
#include <vector>

#include "sforge/field.hpp"

namespace sforge {

struct Arrow {
  std::string id;
  int source = 0;  // vertices are 0-based internally; io shifts the 1-based wire format
  int target = 0;
};

struct Quiver {
  int n = 0;
  std::vector<Arrow> arrows;
  std::vector<std::vector<int>> out;  // arrow indices per source, in lex-id order
  std::vector<int> lex_rank;          // lex_rank[arrow] = position of its id among all ids

  // Validates and builds the derived tables. Throws ParseError on duplicate
  // or empty ids and out-of-range endpoints.
  void finalize();
  int arrow_by_id(const std::string& id) const;  // -1 when absent
};

// A path is a composable arrow word read left to right: {a, b} means a then b.
// The empty word is the lazy path at `source`.
struct Path {
  int source = 0;
  std::vector<int> arrows;

  int length() const { return (int)arrows.size(); }
  int target(const Quiver& q) const {
    return arrows.empty() ? source : q.arrows[arrows.back()].target;
  }
  bool operator==(const Path& o) const {
    return source == o.source && arrows == o.arrows;
  }
};

bool path_valid(const Quiver& q, const Path& p);

// Total order used for normal forms everywhere: length first, then pointwise
// lex on arrow id strings. Returns <0, 0, >0.
int path_cmp(const Quiver& q, const Path& x, const Path& y);

Path path_concat(const Quiver& q, const Path& x, const Path& y);

std::string path_str(const Quiver& q, const Path& p);

}  // namespace sforge
