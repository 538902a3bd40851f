#include "sforge/quiver.hpp"

#include <algorithm>
#include <set>

namespace sforge {

void Quiver::finalize() {
  if (n < 1) fail("ParseError", "quiver needs at least one vertex");
  std::set<std::string> seen;
  for (const auto& a : arrows) {
    if (a.id.empty()) fail("ParseError", "arrow with empty id");
    if (!seen.insert(a.id).second) fail("ParseError", "duplicate arrow id '" + a.id + "'");
    if (a.source < 0 || a.source >= n || a.target < 0 || a.target >= n)
      fail("ParseError", "arrow '" + a.id + "' has an endpoint outside 1.." + std::to_string(n));
  }
  std::vector<int> by_id((std::size_t)arrows.size());
  for (std::size_t i = 0; i < arrows.size(); ++i) by_id[i] = (int)i;
  std::sort(by_id.begin(), by_id.end(),
            [&](int x, int y) { return arrows[x].id < arrows[y].id; });
  lex_rank.assign(arrows.size(), 0);
  for (std::size_t r = 0; r < by_id.size(); ++r) lex_rank[by_id[r]] = (int)r;
  out.assign(n, {});
  for (int a : by_id) out[arrows[a].source].push_back(a);
}

int Quiver::arrow_by_id(const std::string& id) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].id == id) return (int)i;
  return -1;
}

bool path_valid(const Quiver& q, const Path& p) {
  if (p.source < 0 || p.source >= q.n) return false;
  int at = p.source;
  for (int a : p.arrows) {
    if (a < 0 || a >= (int)q.arrows.size()) return false;
    if (q.arrows[a].source != at) return false;
    at = q.arrows[a].target;
  }
  return true;
}

int path_cmp(const Quiver& q, const Path& x, const Path& y) {
  if (x.length() != y.length()) return x.length() < y.length() ? -1 : 1;
  for (int k = 0; k < x.length(); ++k) {
    int rx = q.lex_rank[x.arrows[k]], ry = q.lex_rank[y.arrows[k]];
    if (rx != ry) return rx < ry ? -1 : 1;
  }
  if (x.source != y.source) return x.source < y.source ? -1 : 1;  // lazy paths
  return 0;
}

Path path_concat(const Quiver& q, const Path& x, const Path& y) {
  if (x.target(q) != y.source) fail("Internal", "concatenating non-composable paths");
  Path r;
  r.source = x.source;
  r.arrows = x.arrows;
  r.arrows.insert(r.arrows.end(), y.arrows.begin(), y.arrows.end());
  return r;
}

std::string path_str(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + std::to_string(p.source + 1);
  std::string s;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) s += "*";
    s += q.arrows[p.arrows[k]].id;
  }
  return s;
}

}  // namespace sforge
