#include "sforge/complex.hpp"

#include <algorithm>

namespace sforge {

namespace {

const Field& fld(const Algebra& A) { return A.pres.field; }

std::vector<Scalar> flat_hom(const ModuleHom& f) {
  std::vector<Scalar> out;
  for (const Mat& m : f.h) out.insert(out.end(), m.d.begin(), m.d.end());
  return out;
}

int block_size(const Algebra& A, int i, int j) { return (int)A.block[i][j].size(); }

void trim(ProjComplex& C) {
  while (C.terms.size() > 1 && C.terms.back().rep.total() == 0) {
    C.terms.pop_back();
    C.d.pop_back();
  }
  while (C.terms.size() > 1 && C.terms.front().rep.total() == 0) {
    C.terms.erase(C.terms.begin());
    C.d.erase(C.d.begin());
    C.lo++;
  }
}

}  // namespace

AlgMat am_zero(const Algebra& A, const std::vector<int>& src, const std::vector<int>& dst) {
  (void)A;
  AlgMat X;
  X.src = src;
  X.dst = dst;
  X.ent.assign(src.size(), std::vector<AlgebraElement>(dst.size()));
  return X;
}

AlgMat almul(const Algebra& A, const AlgMat& X, const AlgMat& Y) {
  if (X.dst != Y.src) fail("Internal", "algebra matrix shapes do not compose");
  AlgMat Z = am_zero(A, X.src, Y.dst);
  for (size_t r = 0; r < X.src.size(); r++)
    for (size_t e = 0; e < Y.dst.size(); e++) {
      AlgebraElement acc = element_zero();
      for (size_t c = 0; c < X.dst.size(); c++)
        acc = element_add(A, acc, multiply(A, Y.ent[c][e], X.ent[r][c]));
      Z.ent[r][e] = acc;
    }
  return Z;
}

AlgMat am_add(const Algebra& A, const AlgMat& X, const AlgMat& Y) {
  if (X.src != Y.src || X.dst != Y.dst) fail("Internal", "algebra matrix shapes do not match");
  AlgMat Z = am_zero(A, X.src, X.dst);
  for (size_t r = 0; r < X.src.size(); r++)
    for (size_t c = 0; c < X.dst.size(); c++)
      Z.ent[r][c] = element_add(A, X.ent[r][c], Y.ent[r][c]);
  return Z;
}

AlgMat am_scale(const Algebra& A, const Scalar& c, const AlgMat& X) {
  AlgMat Z = X;
  for (auto& row : Z.ent)
    for (auto& x : row) x = element_scale(A, c, x);
  return Z;
}

bool am_is_zero(const AlgMat& X) {
  for (const auto& row : X.ent)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

bool am_eq(const Algebra& A, const AlgMat& X, const AlgMat& Y) {
  if (X.src != Y.src || X.dst != Y.dst) return false;
  for (size_t r = 0; r < X.src.size(); r++)
    for (size_t c = 0; c < X.dst.size(); c++)
      if (!element_eq(A, X.ent[r][c], Y.ent[r][c])) return false;
  return true;
}

std::string am_str(const Algebra& A, const AlgMat& X) {
  std::string out = "[";
  for (size_t r = 0; r < X.src.size(); r++) {
    if (r) out += "; ";
    for (size_t c = 0; c < X.dst.size(); c++) {
      if (c) out += ", ";
      out += X.ent[r][c].is_zero() ? "0" : element_str(A, X.ent[r][c]);
    }
  }
  return out + "]";
}

ModuleHom am_to_hom(const Algebra& A, const AlgMat& X) {
  ProjSum S = proj_sum(A, X.src);
  ProjSum T = proj_sum(A, X.dst);
  ModuleHom f = hom_zero(S.rep, T.rep);
  for (size_t r = 0; r < X.src.size(); r++)
    for (size_t c = 0; c < X.dst.size(); c++) {
      const AlgebraElement& x = X.ent[r][c];
      if (x.is_zero()) continue;
      if (x.src != X.dst[c] || x.tgt != X.src[r])
        fail("Internal", "algebra matrix entry lies in the wrong block");
      ModuleHom part = left_mult_hom(A, x);  // P_{src[r]} -> P_{dst[c]}
      for (int v = 0; v < A.n(); v++) {
        int nr = block_size(A, X.src[r], v), nc = block_size(A, X.dst[c], v);
        for (int i = 0; i < nr; i++)
          for (int j = 0; j < nc; j++)
            f.h[v].at(S.chunk[r][v] + i, T.chunk[c][v] + j) =
                fld(A).add(f.h[v].at(S.chunk[r][v] + i, T.chunk[c][v] + j), part.h[v].at(i, j));
      }
    }
  return f;
}

AlgMat hom_to_am(const Algebra& A, const ProjSum& S, const ProjSum& T, const ModuleHom& f) {
  AlgMat X = am_zero(A, S.verts, T.verts);
  for (size_t r = 0; r < S.verts.size(); r++) {
    int v = S.verts[r];
    std::vector<Scalar> row = f.h[v].row(S.gen_coord((int)r));
    for (size_t c = 0; c < T.verts.size(); c++) {
      int w = T.verts[c];
      std::vector<Scalar> coords(row.begin() + T.chunk[c][v],
                                 row.begin() + T.chunk[c][v] + block_size(A, w, v));
      X.ent[r][c] = element_from_coords(A, coords, w, v);
    }
  }
  return X;
}

ProjComplex stalk_complex(const Algebra& A, const std::vector<int>& verts, int degree) {
  ProjComplex C;
  C.A = &A;
  C.lo = degree;
  C.terms.push_back(proj_sum(A, verts));
  return C;
}

ProjSum term_at(const ProjComplex& C, int i) {
  if (i < C.lo || i > C.hi()) return proj_sum(*C.A, {});
  return C.terms[i - C.lo];
}

ModuleHom d_at(const ProjComplex& C, int i) {
  if (i >= C.lo && i < C.hi()) return C.d[i - C.lo];
  return hom_zero(term_at(C, i).rep, term_at(C, i + 1).rep);
}

void complex_validate(const ProjComplex& C) {
  if (!C.A || C.terms.empty() || C.d.size() + 1 != C.terms.size())
    fail("Internal", "malformed complex");
  for (size_t k = 0; k < C.d.size(); k++)
    hom_check(C.terms[k].rep, C.terms[k + 1].rep, C.d[k]);
  for (size_t k = 0; k + 1 < C.d.size(); k++) {
    ModuleHom dd = hom_compose(C.terms[k].rep, C.d[k], C.d[k + 1]);
    if (!hom_is_zero(C.terms[k].rep, dd))
      fail("Internal", "differential does not square to zero");
  }
}

bool complex_eq(const ProjComplex& C, const ProjComplex& D) {
  if (C.A != D.A || C.lo != D.lo || C.terms.size() != D.terms.size()) return false;
  for (size_t k = 0; k < C.terms.size(); k++)
    if (C.terms[k].verts != D.terms[k].verts) return false;
  for (size_t k = 0; k < C.d.size(); k++)
    if (!hom_eq(C.terms[k].rep, C.d[k], D.d[k])) return false;
  return true;
}

ProjComplex shift_complex(const ProjComplex& C, int s) {
  ProjComplex out = C;
  out.lo -= s;
  if (s % 2 != 0) {
    const Field& F = fld(*C.A);
    for (size_t k = 0; k < out.d.size(); k++)
      out.d[k] = hom_scale(out.terms[k].rep, F.from_int(-1), out.d[k]);
  }
  return out;
}

ProjComplex complex_direct_sum(const ProjComplex& X, const ProjComplex& Y) {
  if (X.A != Y.A) fail("Internal", "complexes over different algebras");
  const Algebra& A = *X.A;
  ProjComplex C;
  C.A = X.A;
  C.lo = std::min(X.lo, Y.lo);
  int hi = std::max(X.hi(), Y.hi());
  std::vector<AlgMat> ds;
  for (int i = C.lo; i <= hi; i++) {
    ProjSum xi = term_at(X, i), yi = term_at(Y, i);
    std::vector<int> verts = xi.verts;
    verts.insert(verts.end(), yi.verts.begin(), yi.verts.end());
    C.terms.push_back(proj_sum(A, verts));
    if (i == hi) break;
    ProjSum xj = term_at(X, i + 1), yj = term_at(Y, i + 1);
    AlgMat DX = hom_to_am(A, xi, xj, d_at(X, i));
    AlgMat DY = hom_to_am(A, yi, yj, d_at(Y, i));
    std::vector<int> dverts = xj.verts;
    dverts.insert(dverts.end(), yj.verts.begin(), yj.verts.end());
    AlgMat D = am_zero(A, verts, dverts);
    for (size_t r = 0; r < xi.verts.size(); r++)
      for (size_t c = 0; c < xj.verts.size(); c++) D.ent[r][c] = DX.ent[r][c];
    for (size_t r = 0; r < yi.verts.size(); r++)
      for (size_t c = 0; c < yj.verts.size(); c++)
        D.ent[xi.verts.size() + r][xj.verts.size() + c] = DY.ent[r][c];
    ds.push_back(D);
  }
  for (const AlgMat& D : ds) C.d.push_back(am_to_hom(A, D));
  complex_validate(C);
  return C;
}

ModuleHom chain_comp_at(const ProjComplex& X, const ProjComplex& Y, const ChainMap& u, int i) {
  int k = i - u.lo;
  if (k >= 0 && k < (int)u.comps.size()) return u.comps[k];
  return hom_zero(term_at(X, i).rep, term_at(Y, i).rep);
}

void chain_map_validate(const ProjComplex& X, const ProjComplex& Y, const ChainMap& u) {
  if (X.A != Y.A) fail("Internal", "complexes over different algebras");
  int lo = std::min({X.lo, Y.lo, u.lo});
  int hi = std::max({X.hi(), Y.hi(), u.lo + (int)u.comps.size() - 1});
  for (int i = lo; i <= hi; i++) {
    Representation xi = term_at(X, i).rep, yi = term_at(Y, i).rep;
    ModuleHom ui = chain_comp_at(X, Y, u, i);
    hom_check(xi, yi, ui);
    ModuleHom lhs = hom_compose(xi, ui, d_at(Y, i));
    ModuleHom rhs = hom_compose(xi, d_at(X, i), chain_comp_at(X, Y, u, i + 1));
    if (!hom_eq(xi, lhs, rhs)) fail("Internal", "chain map does not commute with d");
  }
}

ChainMap chain_identity(const ProjComplex& X) {
  ChainMap u;
  u.lo = X.lo;
  for (int i = X.lo; i <= X.hi(); i++) u.comps.push_back(hom_identity(term_at(X, i).rep));
  return u;
}

ChainMap chain_compose(const ProjComplex& X, const ProjComplex& Y, const ProjComplex& Z,
                       const ChainMap& u, const ChainMap& w) {
  ChainMap r;
  r.lo = std::min(X.lo, Z.lo);
  int hi = std::max(X.hi(), Z.hi());
  for (int i = r.lo; i <= hi; i++) {
    ModuleHom ui = chain_comp_at(X, Y, u, i);
    ModuleHom wi = chain_comp_at(Y, Z, w, i);
    r.comps.push_back(hom_compose(term_at(X, i).rep, ui, wi));
  }
  return r;
}

ProjComplex cone_of(const ProjComplex& X, const ProjComplex& Y, const ChainMap& f) {
  if (X.A != Y.A) fail("Internal", "complexes over different algebras");
  chain_map_validate(X, Y, f);
  const Algebra& A = *X.A;
  const Field& F = fld(A);
  ProjComplex C;
  C.A = X.A;
  C.lo = std::min(X.lo - 1, Y.lo);
  int hi = std::max(X.hi() - 1, Y.hi());
  std::vector<AlgMat> ds;
  for (int i = C.lo; i <= hi; i++) {
    ProjSum xs = term_at(X, i + 1), ys = term_at(Y, i);
    std::vector<int> verts = xs.verts;
    verts.insert(verts.end(), ys.verts.begin(), ys.verts.end());
    C.terms.push_back(proj_sum(A, verts));
    if (i == hi) break;
    ProjSum xt = term_at(X, i + 2), yt = term_at(Y, i + 1);
    AlgMat DX = hom_to_am(A, xs, xt, d_at(X, i + 1));
    AlgMat FX = hom_to_am(A, xs, yt, chain_comp_at(X, Y, f, i + 1));
    AlgMat DY = hom_to_am(A, ys, yt, d_at(Y, i));
    std::vector<int> dverts = xt.verts;
    dverts.insert(dverts.end(), yt.verts.begin(), yt.verts.end());
    AlgMat D = am_zero(A, verts, dverts);
    for (size_t r = 0; r < xs.verts.size(); r++) {
      for (size_t c = 0; c < xt.verts.size(); c++)
        D.ent[r][c] = element_scale(A, F.from_int(-1), DX.ent[r][c]);
      for (size_t c = 0; c < yt.verts.size(); c++)
        D.ent[r][xt.verts.size() + c] = FX.ent[r][c];
    }
    for (size_t r = 0; r < ys.verts.size(); r++)
      for (size_t c = 0; c < yt.verts.size(); c++)
        D.ent[xs.verts.size() + r][xt.verts.size() + c] = DY.ent[r][c];
    ds.push_back(D);
  }
  for (const AlgMat& D : ds) C.d.push_back(am_to_hom(A, D));
  trim(C);
  complex_validate(C);
  return C;
}

KbHomSpace hom_complex(const ProjComplex& X, const ProjComplex& Y) {
  if (X.A != Y.A) fail("Internal", "complexes over different algebras");
  const Algebra& A = *X.A;
  const Field& F = fld(A);
  int lo = std::min(X.lo, Y.lo), hi = std::max(X.hi(), Y.hi());
  int span_len = hi - lo + 1;

  std::vector<Representation> XT(span_len), YT(span_len);
  for (int i = lo; i <= hi; i++) {
    XT[i - lo] = term_at(X, i).rep;
    YT[i - lo] = term_at(Y, i).rep;
  }

  // unknowns: coefficients over the hom space bases at each degree
  std::vector<std::vector<ModuleHom>> H(span_len);
  std::vector<int> uoff(span_len + 1, 0);
  for (int k = 0; k < span_len; k++) {
    H[k] = hom_space(XT[k], YT[k]);
    uoff[k + 1] = uoff[k] + (int)H[k].size();
  }
  int nunk = uoff[span_len];

  // constraint slots: maps X_i -> Y_{i+1} for lo <= i < hi
  auto pair_width = [&](const Representation& M, const Representation& N) {
    int w = 0;
    for (int v = 0; v < A.n(); v++) w += M.dims[v] * N.dims[v];
    return w;
  };
  int nslots = span_len - 1;
  std::vector<int> coff(nslots + 1, 0);
  for (int k = 0; k < nslots; k++) coff[k + 1] = coff[k] + pair_width(XT[k], YT[k + 1]);
  int ncon = coff[nslots];

  Mat E(nunk, ncon);
  for (int k = 0; k < span_len; k++) {
    for (size_t b = 0; b < H[k].size(); b++) {
      int row = uoff[k] + (int)b;
      if (k + 1 < span_len) {  // slot k: + u_i d^Y_i
        std::vector<Scalar> v = flat_hom(hom_compose(XT[k], H[k][b], d_at(Y, lo + k)));
        for (size_t j = 0; j < v.size(); j++)
          E.at(row, coff[k] + (int)j) = F.add(E.at(row, coff[k] + (int)j), v[j]);
      }
      if (k - 1 >= 0) {  // slot k-1: - d^X_{i-1} u_i
        std::vector<Scalar> v = flat_hom(hom_compose(XT[k - 1], d_at(X, lo + k - 1), H[k][b]));
        for (size_t j = 0; j < v.size(); j++)
          E.at(row, coff[k - 1] + (int)j) =
              F.sub(E.at(row, coff[k - 1] + (int)j), v[j]);
      }
    }
  }
  Mat Z = left_kernel(F, E);

  // flattened chain map layout over [lo, hi]
  std::vector<int> moff(span_len + 1, 0);
  for (int k = 0; k < span_len; k++) moff[k + 1] = moff[k] + pair_width(XT[k], YT[k]);
  int cw = moff[span_len];
  auto flatten_cm = [&](const ChainMap& u) {
    std::vector<Scalar> out(cw, F.zero());
    for (int k = 0; k < span_len; k++) {
      std::vector<Scalar> part = flat_hom(chain_comp_at(X, Y, u, lo + k));
      for (size_t j = 0; j < part.size(); j++) out[moff[k] + j] = part[j];
    }
    return out;
  };

  KbHomSpace out(F, cw);
  out.lo = lo;
  out.hi = hi;

  // homotopy boundaries: h at degree i is a map X_i -> Y_{i-1}
  for (int k = 1; k < span_len; k++) {
    std::vector<ModuleHom> G = hom_space(XT[k], YT[k - 1]);
    for (const ModuleHom& g : G) {
      ChainMap u;
      u.lo = lo + k - 1;
      u.comps.push_back(hom_compose(XT[k - 1], d_at(X, lo + k - 1), g));
      u.comps.push_back(hom_compose(XT[k], g, d_at(Y, lo + k - 1)));
      out.span.add_row(flatten_cm(u));
    }
  }

  // chain map solutions on top of the boundaries
  for (int zr = 0; zr < Z.r; zr++) {
    ChainMap u;
    u.lo = lo;
    for (int k = 0; k < span_len; k++) {
      ModuleHom c = hom_zero(XT[k], YT[k]);
      for (size_t b = 0; b < H[k].size(); b++) {
        const Scalar& coef = Z.at(zr, uoff[k] + (int)b);
        if (!F.is_zero(coef)) c = hom_add(XT[k], c, hom_scale(XT[k], coef, H[k][b]));
      }
      u.comps.push_back(c);
    }
    if (out.span.add_row(flatten_cm(u))) {
      out.reps.push_back(u);
      out.rep_inputs.push_back(out.span.added() - 1);
    }
  }
  out.dim = (int)out.reps.size();
  return out;
}

std::vector<Scalar> kb_coords(const ProjComplex& X, const ProjComplex& Y,
                              const KbHomSpace& H, const ChainMap& u) {
  chain_map_validate(X, Y, u);
  const Field& F = fld(*X.A);
  std::vector<Scalar> flat(H.span.width(), F.zero());
  int pos = 0;
  for (int i = H.lo; i <= H.hi; i++) {
    std::vector<Scalar> part = flat_hom(chain_comp_at(X, Y, u, i));
    for (const Scalar& s : part) flat[pos++] = s;
  }
  if (pos != H.span.width()) fail("Internal", "chain map layout mismatch");
  std::vector<Scalar> combo;
  if (!H.span.contains(flat, &combo))
    fail("Internal", "chain map outside the computed hom space");
  std::vector<Scalar> coords;
  for (int idx : H.rep_inputs) coords.push_back(combo[idx]);
  return coords;
}

ChainMap chain_linear(const ProjComplex& X, const ProjComplex& Y, const KbHomSpace& H,
                      const std::vector<Scalar>& c) {
  const Field& F = fld(*X.A);
  if ((int)c.size() != H.dim) fail("Internal", "coefficient count does not match the hom space");
  ChainMap r;
  r.lo = H.lo;
  for (int i = H.lo; i <= H.hi; i++) {
    Representation xi = term_at(X, i).rep;
    ModuleHom acc = hom_zero(xi, term_at(Y, i).rep);
    for (int t = 0; t < H.dim; t++) {
      if (F.is_zero(c[t])) continue;
      acc = hom_add(xi, acc, hom_scale(xi, c[t], chain_comp_at(X, Y, H.reps[t], i)));
    }
    r.comps.push_back(acc);
  }
  return r;
}

bool is_tilting(const ProjComplex& T) {
  int n = T.hi() - T.lo;
  for (int s = -n - 1; s <= n + 1; s++) {
    if (s == 0) continue;
    if (hom_complex(T, shift_complex(T, s)).dim != 0) return false;
  }
  return true;
}

}  // namespace sforge
