#include "sforge/generators.hpp"

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sforge {

namespace {

using Word = std::vector<std::string>;

// f cycles each triangle of the triangulation, g = f-bar runs along the
// boundary cycles. Orbits of f: (alpha xi delta) (mu beta nu)
// (eps sigma eta) (rho). Orbits of g: (sigma) (xi mu)
// (alpha beta eps eta nu delta rho).
std::string f_of(const std::string& w) {
  if (w == "alpha") return "xi";
  if (w == "xi") return "delta";
  if (w == "delta") return "alpha";
  if (w == "mu") return "beta";
  if (w == "beta") return "nu";
  if (w == "nu") return "mu";
  if (w == "eps") return "sigma";
  if (w == "sigma") return "eta";
  if (w == "eta") return "eps";
  return "rho";
}

std::string g_of(const std::string& w) {
  if (w == "sigma") return "sigma";
  if (w == "xi") return "mu";
  if (w == "mu") return "xi";
  if (w == "alpha") return "beta";
  if (w == "beta") return "eps";
  if (w == "eps") return "eta";
  if (w == "eta") return "nu";
  if (w == "nu") return "delta";
  if (w == "delta") return "rho";
  return "alpha";
}

// walk of `len` arrows along the g-cycle starting at `s`
Word gwalk(std::string s, int len) {
  Word w;
  for (int i = 0; i < len; i++) {
    w.push_back(s);
    s = g_of(s);
  }
  return w;
}

struct WsaBuilder {
  const Field& F;
  const WSAParams& P;
  bool folded;
  AlgebraPresentation pres;

  WsaBuilder(const Field& F_, const WSAParams& P_)
      : F(F_), P(P_), folded(P_.n == 1) {}

  // When folding, every occurrence of xi or mu expands to the path that
  // defined it (beta nu, delta alpha) and the coefficient picks up 1/c.
  RelTerm term(Scalar coeff, const Word& w) const {
    Path p;
    bool first = true;
    auto push = [&](const std::string& id) {
      int a = pres.quiver.arrow_by_id(id);
      if (a < 0) fail("Internal", "generator uses unknown arrow " + id);
      if (first) {
        p.source = pres.quiver.arrows[a].source;
        first = false;
      }
      p.arrows.push_back(a);
    };
    for (const std::string& id : w) {
      if (folded && id == "xi") {
        coeff = F.div(coeff, P.c);
        push("beta");
        push("nu");
      } else if (folded && id == "mu") {
        coeff = F.div(coeff, P.c);
        push("delta");
        push("alpha");
      } else {
        push(id);
      }
    }
    return {coeff, p};
  }

  void relation(const std::vector<std::pair<Scalar, Word>>& terms) {
    Relation r;
    for (const auto& [coeff, w] : terms) r.push_back(term(coeff, w));
    Scalar lead = r.front().coeff;
    if (!F.is_one(lead))
      for (RelTerm& t : r) t.coeff = F.div(t.coeff, lead);
    pres.relations.push_back(std::move(r));
  }
};

}  // namespace

AlgebraPresentation weighted_surface_example(const Field& F, const WSAParams& params) {
  if (params.m < 1) fail("InvalidWeights", "weight m must be at least 1");
  if (params.n < 1) fail("InvalidWeights", "weight n must be at least 1");
  if (params.p < 3)
    fail("InvalidWeights",
         "weight p must be at least 3, otherwise the loop sigma leaves the quiver");
  if (params.n == 1 && !params.fold_virtual)
    fail("InvalidWeights",
         "n = 1 makes xi and mu virtual; set fold_virtual to build the folded presentation");
  if (params.fold_virtual && params.n != 1)
    fail("InvalidWeights", "fold_virtual only applies to n = 1");
  if (F.is_zero(params.a) || F.is_zero(params.c) || F.is_zero(params.d))
    fail("InvalidWeights", "parameters a, c, d must be nonzero");

  WsaBuilder B(F, params);
  B.pres.field = F;
  B.pres.quiver.n = 5;
  if (B.folded)
    B.pres.quiver.arrows = {{"rho", 0, 0},   {"alpha", 0, 2}, {"beta", 2, 1},
                            {"eps", 1, 4},   {"eta", 4, 1},   {"nu", 1, 3},
                            {"delta", 3, 0}, {"sigma", 4, 4}};
  else
    B.pres.quiver.arrows = {{"rho", 0, 0},   {"alpha", 0, 2}, {"beta", 2, 1},
                            {"xi", 2, 3},    {"eps", 1, 4},   {"eta", 4, 1},
                            {"nu", 1, 3},    {"delta", 3, 0}, {"mu", 3, 2},
                            {"sigma", 4, 4}};
  B.pres.quiver.finalize();

  const int m = params.m, n = params.n, p = params.p;
  const Scalar one = F.one();
  const Scalar na = F.neg(params.a), nc = F.neg(params.c), nd = F.neg(params.d);

  // one commutativity relation per arrow: the two-arrow path through its
  // triangle equals the weighted cycle of the parallel arrow
  B.relation({{one, {"alpha", "xi"}}, {na, gwalk("rho", 7 * m - 1)}});
  B.relation({{one, {"xi", "delta"}}, {na, gwalk("beta", 7 * m - 1)}});
  if (!B.folded) B.relation({{one, {"delta", "alpha"}}, {nc, gwalk("mu", 2 * n - 1)}});
  B.relation({{one, {"nu", "mu"}}, {na, gwalk("eps", 7 * m - 1)}});
  B.relation({{one, {"mu", "beta"}}, {na, gwalk("delta", 7 * m - 1)}});
  if (!B.folded) B.relation({{one, {"beta", "nu"}}, {nc, gwalk("xi", 2 * n - 1)}});
  B.relation({{one, {"eps", "sigma"}}, {na, gwalk("nu", 7 * m - 1)}});
  B.relation({{one, {"sigma", "eta"}}, {na, gwalk("eta", 7 * m - 1)}});
  B.relation({{one, {"eta", "eps"}}, {nd, gwalk("sigma", p - 1)}});
  {
    std::vector<std::pair<Scalar, Word>> rr = {{one, {"rho", "rho"}},
                                               {na, gwalk("alpha", 7 * m - 1)}};
    if (!F.is_zero(params.b)) rr.push_back({F.neg(params.b), gwalk("rho", 7 * m)});
    B.relation(rr);
  }

  // zero relations along triangle-then-cycle and cycle-then-triangle turns;
  // the skipped ones stop being zero once the virtual arrows fold away
  const Word omegas = {"alpha", "beta", "xi",    "eps", "eta",
                       "nu",    "delta", "mu",   "rho", "sigma"};
  for (const std::string& w : omegas) {
    if (B.folded && (w == "xi" || w == "mu" || w == "beta" || w == "delta")) continue;
    B.relation({{one, {w, f_of(w), g_of(f_of(w))}}});
  }
  for (const std::string& w : omegas) {
    if (B.folded && (w == "xi" || w == "mu" || w == "alpha" || w == "nu")) continue;
    B.relation({{one, {w, g_of(w), f_of(g_of(w))}}});
  }

  std::ostringstream weights;
  weights << "m=" << m << " n=" << n << " p=" << p;
  B.pres.meta["generator"] = "weighted-surface";
  B.pres.meta["weights"] = weights.str();
  B.pres.meta["parameters"] = "a=" + F.to_string(params.a) + " c=" + F.to_string(params.c) +
                              " d=" + F.to_string(params.d) + " b=" + F.to_string(params.b);
  B.pres.meta["f-orbits"] = "(alpha xi delta) (mu beta nu) (eps sigma eta) (rho)";
  B.pres.meta["g-orbits"] = "(sigma) (xi mu) (alpha beta eps eta nu delta rho)";
  B.pres.meta["loops"] = "1:border:rho 5:self-folded:sigma";
  return B.pres;
}

AlgebraPresentation symmetric_nakayama(const Field& F, const NakayamaParams& params) {
  if (params.vertices < 1) fail("InvalidWeights", "need at least one vertex");
  if (params.loewy < 2)
    fail("InvalidWeights", "zero relations must sit in the square of the arrow ideal");

  AlgebraPresentation P;
  P.field = F;
  P.quiver.n = params.vertices;
  for (int i = 0; i < params.vertices; i++)
    P.quiver.arrows.push_back(
        {"a" + std::to_string(i + 1), i, (i + 1) % params.vertices});
  P.quiver.finalize();
  for (int i = 0; i < params.vertices; i++) {
    Path p;
    p.source = i;
    for (int k = 0; k < params.loewy; k++)
      p.arrows.push_back((i + k) % params.vertices);
    P.relations.push_back({{F.one(), p}});
  }
  std::ostringstream weights;
  weights << "n=" << params.vertices << " ell=" << params.loewy;
  P.meta["generator"] = "nakayama";
  P.meta["weights"] = weights.str();
  return P;
}

const char* loop_kind_name(LoopKind k) {
  switch (k) {
    case LoopKind::Border:
      return "border";
    case LoopKind::SelfFolded:
      return "self-folded";
    default:
      return "none";
  }
}

std::vector<LoopKind> classify_loops(const AlgebraPresentation& pres) {
  auto it = pres.meta.find("loops");
  if (it == pres.meta.end())
    fail("MetadataMissing",
         "the presentation carries no loop classification; only generator output does");
  std::vector<LoopKind> out(pres.quiver.n, LoopKind::None);
  std::istringstream in(it->second);
  std::string entry;
  while (in >> entry) {
    // vertex:kind:arrow with file-style 1-based vertices
    size_t c1 = entry.find(':'), c2 = entry.rfind(':');
    if (c1 == std::string::npos || c2 == c1)
      fail("MetadataMissing", "malformed loop entry " + entry);
    int v = 0;
    try {
      v = std::stoi(entry.substr(0, c1));
    } catch (...) {
      fail("MetadataMissing", "malformed loop entry " + entry);
    }
    if (v < 1 || v > pres.quiver.n)
      fail("MetadataMissing", "loop entry at a vertex out of range: " + entry);
    std::string kind = entry.substr(c1 + 1, c2 - c1 - 1);
    if (kind == "border")
      out[v - 1] = LoopKind::Border;
    else if (kind == "self-folded")
      out[v - 1] = LoopKind::SelfFolded;
    else
      fail("MetadataMissing", "unrecognized loop kind in entry " + entry);
  }
  return out;
}

}  // namespace sforge
