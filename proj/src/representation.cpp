#include "sforge/representation.hpp"

#include <algorithm>

namespace sforge {

namespace {

const Field& fld(const Representation& M) { return M.A->pres.field; }

Mat act_along(const Representation& M, const Path& p) {
  const Field& F = fld(M);
  Mat cur = mat_identity(F, M.dims[p.source]);
  int v = p.source;
  for (int a : p.arrows) {
    cur = mul(F, cur, M.act[a]);
    v = M.A->pres.quiver.arrows[a].target;
  }
  (void)v;
  return cur;
}

std::vector<Scalar> flatten_hom(const Representation& M, const Representation& N,
                                const ModuleHom& f) {
  std::vector<Scalar> out;
  for (size_t v = 0; v < f.h.size(); v++)
    for (int r = 0; r < f.h[v].r; r++)
      for (int c = 0; c < f.h[v].c; c++) out.push_back(f.h[v].at(r, c));
  (void)M;
  (void)N;
  return out;
}

ModuleHom unflatten_hom(const Representation& M, const Representation& N,
                        const std::vector<Scalar>& v) {
  ModuleHom f = hom_zero(M, N);
  size_t k = 0;
  for (size_t u = 0; u < f.h.size(); u++)
    for (int r = 0; r < f.h[u].r; r++)
      for (int c = 0; c < f.h[u].c; c++) f.h[u].at(r, c) = v[k++];
  return f;
}

}  // namespace

Representation rep_zero(const Algebra& A) {
  Representation M;
  M.A = &A;
  M.dims.assign(A.n(), 0);
  for (size_t a = 0; a < A.pres.quiver.arrows.size(); a++) M.act.push_back(Mat(0, 0));
  return M;
}

Representation rep_simple(const Algebra& A, int v) {
  Representation M = rep_zero(A);
  M.dims[v] = 1;
  for (size_t a = 0; a < A.pres.quiver.arrows.size(); a++) {
    const Arrow& ar = A.pres.quiver.arrows[a];
    M.act[a] = Mat(M.dims[ar.source], M.dims[ar.target]);
  }
  return M;
}

Representation rep_projective(const Algebra& A, int v) {
  Representation M;
  M.A = &A;
  M.dims.resize(A.n());
  for (int u = 0; u < A.n(); u++) M.dims[u] = int(A.block[v][u].size());
  for (size_t a = 0; a < A.pres.quiver.arrows.size(); a++) M.act.push_back(A.arrow_action(v, int(a)));
  return M;
}

int ProjSum::gen_coord(int c) const {
  int v = verts[c];
  return chunk[c][v] + A->pos_in_block[A->idem[v]];
}

ProjSum proj_sum(const Algebra& A, const std::vector<int>& verts) {
  ProjSum S;
  S.A = &A;
  S.verts = verts;
  S.rep.A = &A;
  S.rep.dims.assign(A.n(), 0);
  S.chunk.assign(verts.size(), std::vector<int>(A.n(), 0));
  for (int u = 0; u < A.n(); u++) {
    int off = 0;
    for (size_t c = 0; c < verts.size(); c++) {
      S.chunk[c][u] = off;
      off += int(A.block[verts[c]][u].size());
    }
    S.rep.dims[u] = off;
  }
  const Field& F = A.pres.field;
  for (size_t a = 0; a < A.pres.quiver.arrows.size(); a++) {
    const Arrow& ar = A.pres.quiver.arrows[a];
    Mat M(S.rep.dims[ar.source], S.rep.dims[ar.target]);
    for (size_t c = 0; c < verts.size(); c++) {
      Mat B = A.arrow_action(verts[c], int(a));
      for (int r = 0; r < B.r; r++)
        for (int k = 0; k < B.c; k++)
          M.at(S.chunk[c][ar.source] + r, S.chunk[c][ar.target] + k) = B.at(r, k);
    }
    (void)F;
    S.rep.act.push_back(M);
  }
  return S;
}

void rep_validate(const Representation& M) {
  const Algebra& A = *M.A;
  const Field& F = fld(M);
  if ((int)M.dims.size() != A.n()) fail("Internal", "representation has wrong vertex count");
  for (size_t a = 0; a < A.pres.quiver.arrows.size(); a++) {
    const Arrow& ar = A.pres.quiver.arrows[a];
    if (M.act[a].r != M.dims[ar.source] || M.act[a].c != M.dims[ar.target])
      fail("Internal", "arrow action matrix has wrong shape");
  }
  for (const Relation& rel : A.pres.relations) {
    if (rel.empty()) continue;
    int s = rel.front().path.source, t = rel.front().path.target(A.pres.quiver);
    Mat acc(M.dims[s], M.dims[t]);
    for (const RelTerm& tm : rel)
      acc = add(F, acc, smul(F, tm.coeff, act_along(M, tm.path)));
    if (!is_zero(F, acc)) fail("Internal", "relation does not act as zero on the representation");
  }
}

ModuleHom hom_zero(const Representation& M, const Representation& N) {
  ModuleHom f;
  for (size_t v = 0; v < M.dims.size(); v++) f.h.push_back(Mat(M.dims[v], N.dims[v]));
  return f;
}

ModuleHom hom_identity(const Representation& M) {
  ModuleHom f;
  for (size_t v = 0; v < M.dims.size(); v++) f.h.push_back(mat_identity(fld(M), M.dims[v]));
  return f;
}

ModuleHom hom_compose(const Representation& M, const ModuleHom& f, const ModuleHom& g) {
  ModuleHom out;
  for (size_t v = 0; v < f.h.size(); v++) out.h.push_back(mul(fld(M), f.h[v], g.h[v]));
  return out;
}

ModuleHom hom_add(const Representation& M, const ModuleHom& f, const ModuleHom& g) {
  ModuleHom out;
  for (size_t v = 0; v < f.h.size(); v++) out.h.push_back(add(fld(M), f.h[v], g.h[v]));
  return out;
}

ModuleHom hom_scale(const Representation& M, const Scalar& c, const ModuleHom& f) {
  ModuleHom out;
  for (size_t v = 0; v < f.h.size(); v++) out.h.push_back(smul(fld(M), c, f.h[v]));
  return out;
}

bool hom_is_zero(const Representation& M, const ModuleHom& f) {
  for (size_t v = 0; v < f.h.size(); v++)
    if (!is_zero(fld(M), f.h[v])) return false;
  return true;
}

bool hom_eq(const Representation& M, const ModuleHom& f, const ModuleHom& g) {
  (void)M;
  for (size_t v = 0; v < f.h.size(); v++)
    if (!equal(f.h[v], g.h[v])) return false;
  return true;
}

bool hom_invertible(const Representation& M, const Representation& N, const ModuleHom& f) {
  const Field& F = fld(M);
  for (size_t v = 0; v < f.h.size(); v++) {
    if (M.dims[v] != N.dims[v]) return false;
    if (rank(F, f.h[v]) != M.dims[v]) return false;
  }
  return true;
}

void hom_check(const Representation& M, const Representation& N, const ModuleHom& f) {
  const Field& F = fld(M);
  for (size_t a = 0; a < M.A->pres.quiver.arrows.size(); a++) {
    const Arrow& ar = M.A->pres.quiver.arrows[a];
    Mat lhs = mul(F, M.act[a], f.h[ar.target]);
    Mat rhs = mul(F, f.h[ar.source], N.act[a]);
    if (!equal(lhs, rhs)) fail("Internal", "module map does not intertwine the arrow actions");
  }
}

std::vector<ModuleHom> hom_space(const Representation& M, const Representation& N) {
  const Field& F = fld(M);
  const Quiver& q = M.A->pres.quiver;
  // unknown layout: (vertex v, row r, col c) in order
  std::vector<int> uoff(M.dims.size() + 1, 0);
  for (size_t v = 0; v < M.dims.size(); v++) uoff[v + 1] = uoff[v] + M.dims[v] * N.dims[v];
  int U = uoff.back();
  if (U == 0) return {};
  int neq = 0;
  for (size_t a = 0; a < q.arrows.size(); a++)
    neq += M.dims[q.arrows[a].source] * N.dims[q.arrows[a].target];
  Mat E(neq, U);
  int row = 0;
  for (size_t a = 0; a < q.arrows.size(); a++) {
    const Arrow& ar = q.arrows[a];
    int du = M.dims[ar.source], dv = N.dims[ar.target];
    for (int r = 0; r < du; r++) {
      for (int c = 0; c < dv; c++) {
        // (A^M_a H_v)[r][c] - (H_u A^N_a)[r][c] = 0
        for (int k = 0; k < M.dims[ar.target]; k++) {
          Scalar s = M.act[a].at(r, k);
          if (!F.is_zero(s)) {
            int idx = uoff[ar.target] + k * N.dims[ar.target] + c;
            E.at(row, idx) = F.add(E.at(row, idx), s);
          }
        }
        for (int k = 0; k < N.dims[ar.source]; k++) {
          Scalar s = N.act[a].at(k, c);
          if (!F.is_zero(s)) {
            int idx = uoff[ar.source] + r * N.dims[ar.source] + k;
            E.at(row, idx) = F.sub(E.at(row, idx), s);
          }
        }
        row++;
      }
    }
  }
  Mat K = neq == 0 ? mat_identity(F, U) : left_kernel(F, transpose(E));
  std::vector<ModuleHom> out;
  for (int r = 0; r < K.r; r++) out.push_back(unflatten_hom(M, N, K.row(r)));
  return out;
}

ModuleHom hom_from_generator(const Representation& M, int v, const std::vector<Scalar>& m) {
  const Algebra& A = *M.A;
  ModuleHom f;
  for (int u = 0; u < A.n(); u++) {
    const auto& blk = A.block[v][u];
    Mat H(int(blk.size()), M.dims[u]);
    for (size_t r = 0; r < blk.size(); r++) {
      Mat along = act_along(M, A.basis[blk[r]]);
      for (int c = 0; c < M.dims[u]; c++) {
        Scalar s = A.pres.field.zero();
        for (size_t k = 0; k < m.size(); k++)
          s = A.pres.field.add(s, A.pres.field.mul(m[k], along.at(int(k), c)));
        H.at(int(r), c) = s;
      }
    }
    f.h.push_back(H);
  }
  return f;
}

ModuleHom left_mult_hom(const Algebra& A, const AlgebraElement& x) {
  if (x.is_zero()) fail("Internal", "left_mult_hom of the zero element is ambiguous");
  int j = x.src, l = x.tgt;
  ModuleHom f;
  for (int u = 0; u < A.n(); u++) {
    const auto& rows = A.block[l][u];
    const auto& cols = A.block[j][u];
    Mat H(int(rows.size()), int(cols.size()));
    for (size_t r = 0; r < rows.size(); r++) {
      AlgebraElement p = multiply(A, x, element_basis(A, rows[r]));
      for (auto& [idx, c] : p.terms) H.at(int(r), A.pos_in_block[idx]) = c;
    }
    f.h.push_back(H);
  }
  return f;
}

SubRep kernel_of(const Representation& M, const Representation& N, const ModuleHom& f) {
  (void)N;
  const Field& F = fld(M);
  SubRep S;
  S.rep.A = M.A;
  std::vector<Mat> K(M.dims.size());
  for (size_t v = 0; v < M.dims.size(); v++) {
    K[v] = left_kernel(F, f.h[v]);
    S.rep.dims.push_back(K[v].r);
  }
  for (size_t a = 0; a < M.A->pres.quiver.arrows.size(); a++) {
    const Arrow& ar = M.A->pres.quiver.arrows[a];
    Mat B = mul(F, K[ar.source], M.act[a]);
    Mat X(0, 0);
    if (!solve_left(F, K[ar.target], B, X))
      fail("Internal", "kernel rows are not closed under the arrow action");
    S.rep.act.push_back(X);
  }
  for (size_t v = 0; v < M.dims.size(); v++) S.incl.h.push_back(K[v]);
  return S;
}

namespace {

SubRep sub_from_rows(const Representation& N, const std::vector<Mat>& rows) {
  const Field& F = fld(N);
  SubRep S;
  S.rep.A = N.A;
  for (size_t v = 0; v < N.dims.size(); v++) S.rep.dims.push_back(rows[v].r);
  for (size_t a = 0; a < N.A->pres.quiver.arrows.size(); a++) {
    const Arrow& ar = N.A->pres.quiver.arrows[a];
    Mat B = mul(F, rows[ar.source], N.act[a]);
    Mat X(0, 0);
    if (!solve_left(F, rows[ar.target], B, X))
      fail("Internal", "subspace rows are not closed under the arrow action");
    S.rep.act.push_back(X);
  }
  for (size_t v = 0; v < N.dims.size(); v++) S.incl.h.push_back(rows[v]);
  return S;
}

}  // namespace

SubRep image_of(const Representation& M, const Representation& N, const ModuleHom& f) {
  const Field& F = fld(M);
  std::vector<Mat> rows;
  for (size_t v = 0; v < N.dims.size(); v++) {
    Echelon e(F, N.dims[v]);
    for (int r = 0; r < f.h[v].r; r++) e.add_row(f.h[v].row(r));
    rows.push_back(e.basis());
  }
  return sub_from_rows(N, rows);
}

QuotRep cokernel_of(const Representation& M, const Representation& N, const ModuleHom& f) {
  const Field& F = fld(M);
  QuotRep Q;
  Q.rep.A = N.A;
  std::vector<Mat> R(N.dims.size());           // RREF of the image
  std::vector<std::vector<int>> piv(N.dims.size());
  std::vector<std::vector<int>> np(N.dims.size());
  for (size_t v = 0; v < N.dims.size(); v++) {
    Mat img = f.h[v];
    piv[v] = rref(F, img);
    // drop zero rows
    Mat compact(int(piv[v].size()), N.dims[v]);
    for (size_t r = 0; r < piv[v].size(); r++) compact.set_row(int(r), img.row(int(r)));
    R[v] = compact;
    std::vector<char> isp(N.dims[v], 0);
    for (int p : piv[v]) isp[p] = 1;
    for (int c = 0; c < N.dims[v]; c++)
      if (!isp[c]) np[v].push_back(c);
    Q.rep.dims.push_back(int(np[v].size()));
  }
  auto reduce_vec = [&](size_t v, std::vector<Scalar> x) {
    for (size_t r = 0; r < piv[v].size(); r++) {
      Scalar c = x[piv[v][r]];
      if (F.is_zero(c)) continue;
      for (int k = 0; k < N.dims[v]; k++) x[k] = F.sub(x[k], F.mul(c, R[v].at(int(r), k)));
    }
    std::vector<Scalar> out;
    for (int c : np[v]) out.push_back(x[c]);
    return out;
  };
  for (size_t v = 0; v < N.dims.size(); v++) {
    Mat P(N.dims[v], int(np[v].size()));
    for (int k = 0; k < N.dims[v]; k++) {
      std::vector<Scalar> unit(N.dims[v], F.zero());
      unit[k] = F.one();
      std::vector<Scalar> red = reduce_vec(v, unit);
      for (size_t c = 0; c < red.size(); c++) P.at(k, int(c)) = red[c];
    }
    Q.proj.h.push_back(P);
  }
  for (size_t a = 0; a < N.A->pres.quiver.arrows.size(); a++) {
    const Arrow& ar = N.A->pres.quiver.arrows[a];
    Mat X(int(np[ar.source].size()), int(np[ar.target].size()));
    for (size_t r = 0; r < np[ar.source].size(); r++) {
      std::vector<Scalar> lift(N.dims[ar.source], F.zero());
      lift[np[ar.source][r]] = F.one();
      std::vector<Scalar> img(N.dims[ar.target], F.zero());
      for (int k = 0; k < N.dims[ar.target]; k++) {
        Scalar s = F.zero();
        for (int m = 0; m < N.dims[ar.source]; m++)
          s = F.add(s, F.mul(lift[m], N.act[a].at(m, k)));
        img[k] = s;
      }
      std::vector<Scalar> red = reduce_vec(ar.target, img);
      for (size_t c = 0; c < red.size(); c++) X.at(int(r), int(c)) = red[c];
    }
    Q.rep.act.push_back(X);
  }
  return Q;
}

SubRep radical_of(const Representation& M) {
  const Field& F = fld(M);
  std::vector<Mat> rows;
  for (size_t v = 0; v < M.dims.size(); v++) {
    Echelon e(F, M.dims[v]);
    for (size_t a = 0; a < M.A->pres.quiver.arrows.size(); a++) {
      if (M.A->pres.quiver.arrows[a].target != (int)v) continue;
      for (int r = 0; r < M.act[a].r; r++) e.add_row(M.act[a].row(r));
    }
    rows.push_back(e.basis());
  }
  return sub_from_rows(M, rows);
}

SubRep socle_of(const Representation& M) {
  const Field& F = fld(M);
  std::vector<Mat> rows;
  for (size_t v = 0; v < M.dims.size(); v++) {
    Mat stacked(M.dims[v], 0);
    for (size_t a = 0; a < M.A->pres.quiver.arrows.size(); a++)
      if (M.A->pres.quiver.arrows[a].source == (int)v) stacked = hstack(stacked, M.act[a]);
    rows.push_back(stacked.c == 0 ? mat_identity(F, M.dims[v]) : left_kernel(F, stacked));
  }
  return sub_from_rows(M, rows);
}

Cover projective_cover(const Representation& M) {
  const Field& F = fld(M);
  const Algebra& A = *M.A;
  SubRep rad = radical_of(M);
  std::vector<int> verts;
  std::vector<std::vector<Scalar>> gens;
  for (int v = 0; v < A.n(); v++) {
    Echelon e(F, M.dims[v]);
    for (int r = 0; r < rad.incl.h[v].r; r++) e.add_row(rad.incl.h[v].row(r));
    for (int k = 0; k < M.dims[v]; k++) {
      std::vector<Scalar> unit(M.dims[v], F.zero());
      unit[k] = F.one();
      if (e.add_row(unit)) {
        verts.push_back(v);
        gens.push_back(unit);
      }
    }
  }
  Cover C;
  C.P = proj_sum(A, verts);
  C.p = hom_zero(C.P.rep, M);
  for (size_t c = 0; c < verts.size(); c++) {
    ModuleHom part = hom_from_generator(M, verts[c], gens[c]);
    for (int u = 0; u < A.n(); u++)
      for (int r = 0; r < part.h[u].r; r++)
        for (int k = 0; k < part.h[u].c; k++)
          C.p.h[u].at(C.P.chunk[c][u] + r, k) = part.h[u].at(r, k);
  }
  for (int u = 0; u < A.n(); u++)
    if (rank(F, C.p.h[u]) != M.dims[u])
      fail("Internal", "projective cover map is not surjective");
  return C;
}

Syzygy syzygy(const Representation& M) {
  if (M.total() == 0) fail("ZeroModule", "syzygy of the zero module is undefined");
  Syzygy S;
  S.cover = projective_cover(M);
  SubRep K = kernel_of(S.cover.P.rep, M, S.cover.p);
  S.omega = K.rep;
  S.incl = K.incl;
  // the kernel of a projective cover lies in the radical
  const Field& F = fld(M);
  SubRep rad = radical_of(S.cover.P.rep);
  for (size_t v = 0; v < M.dims.size(); v++) {
    Echelon e(F, S.cover.P.rep.dims[v]);
    for (int r = 0; r < rad.incl.h[v].r; r++) e.add_row(rad.incl.h[v].row(r));
    for (int r = 0; r < S.incl.h[v].r; r++)
      if (!e.contains(S.incl.h[v].row(r)))
        fail("Internal", "syzygy is not contained in the radical of its cover");
  }
  return S;
}

Envelope injective_envelope(const Representation& M) {
  const Field& F = fld(M);
  const Algebra& A = *M.A;
  std::vector<int> nu = nakayama_permutation(A);
  std::vector<int> nu_inv(A.n());
  for (int v = 0; v < A.n(); v++) nu_inv[nu[v]] = v;
  SubRep soc = socle_of(M);
  std::vector<int> verts;
  std::vector<std::pair<int, std::vector<Scalar>>> lines;  // (vertex, socle row in M coords)
  for (int t = 0; t < A.n(); t++)
    for (int r = 0; r < soc.incl.h[t].r; r++) {
      verts.push_back(nu_inv[t]);
      lines.push_back({t, soc.incl.h[t].row(r)});
    }
  Envelope E;
  E.E = proj_sum(A, verts);
  std::vector<ModuleHom> basis = hom_space(M, E.E.rep);
  if (basis.empty() && M.total() > 0) fail("Internal", "no homomorphisms into the injective envelope");
  // prescribe h on the socle: line k maps to the socle line of summand k
  int width = 0;
  std::vector<int> loff(lines.size() + 1, 0);
  for (size_t k = 0; k < lines.size(); k++) {
    loff[k] = width;
    width += E.E.rep.dims[lines[k].first];
  }
  loff[lines.size()] = width;
  Mat V(int(basis.size()), width);
  for (size_t b = 0; b < basis.size(); b++) {
    for (size_t k = 0; k < lines.size(); k++) {
      int t = lines[k].first;
      for (int c = 0; c < E.E.rep.dims[t]; c++) {
        Scalar s = F.zero();
        for (size_t m = 0; m < lines[k].second.size(); m++)
          s = F.add(s, F.mul(lines[k].second[m], basis[b].h[t].at(int(m), c)));
        V.at(int(b), loff[k] + c) = s;
      }
    }
  }
  Mat target(1, width);
  for (size_t k = 0; k < lines.size(); k++) {
    int t = lines[k].first;
    int w = verts[k];  // summand vertex; its socle sits at vertex nu(w) = t
    const Mat& srow = A.socle_rows[w][t];
    if (srow.r != 1) fail("Internal", "projective summand does not have a simple socle");
    for (int c = 0; c < srow.c; c++)
      target.at(0, loff[k] + E.E.chunk[int(k)][t] + c) = srow.at(0, c);
  }
  Mat X(0, 0);
  if (!solve_left(F, V, target, X))
    fail("Internal", "cannot extend the socle identification to an envelope embedding");
  E.emb = hom_zero(M, E.E.rep);
  for (size_t b = 0; b < basis.size(); b++) {
    Scalar c = X.at(0, int(b));
    if (F.is_zero(c)) continue;
    E.emb = hom_add(M, E.emb, hom_scale(M, c, basis[b]));
  }
  int rk = 0;
  for (size_t v = 0; v < M.dims.size(); v++) rk += rank(F, E.emb.h[v]);
  if (rk != M.total()) fail("Internal", "envelope embedding is not injective");
  return E;
}

IsoOutcome module_iso(const Representation& M, const Representation& N) {
  const Field& F = fld(M);
  IsoOutcome out;
  if (M.dims != N.dims) {
    out.kind = IsoKind::Distinct;
    std::string w = "dimension vectors differ:";
    for (size_t v = 0; v < M.dims.size(); v++)
      w += " " + std::to_string(M.dims[v]) + "/" + std::to_string(N.dims[v]);
    out.witness = w;
    return out;
  }
  if (M.total() == 0) {
    out.kind = IsoKind::Iso;
    out.iso = hom_identity(M);
    return out;
  }
  std::vector<ModuleHom> basis = hom_space(M, N);
  if (basis.empty()) {
    out.kind = IsoKind::Distinct;
    out.witness = "Hom(M, N) = 0 although dimension vectors agree";
    return out;
  }
  for (const ModuleHom& f : basis) {
    if (hom_invertible(M, N, f)) {
      out.kind = IsoKind::Iso;
      out.iso = f;
      return out;
    }
  }
  SplitMix64 rng{0x9e3779b97f4a7c15ull};
  for (int trial = 0; trial < 200; trial++) {
    ModuleHom f = hom_zero(M, N);
    for (const ModuleHom& b : basis) {
      Scalar c = F.is_prime_field() ? F.from_int((long long)rng.below((uint64_t)F.characteristic()))
                                    : F.from_int((long long)rng.below(9) - 4);
      if (!F.is_zero(c)) f = hom_add(M, f, hom_scale(M, c, b));
    }
    if (hom_invertible(M, N, f)) {
      out.kind = IsoKind::Iso;
      out.iso = f;
      return out;
    }
  }
  if (F.is_prime_field()) {
    long long p = F.characteristic();
    double space = 1;
    for (size_t b = 0; b < basis.size() && space <= 1e6; b++) space *= double(p);
    if (space <= 1e6) {
      std::vector<long long> digits(basis.size(), 0);
      while (true) {
        int pos = 0;
        while (pos < (int)basis.size() && ++digits[pos] == p) digits[pos++] = 0;
        if (pos == (int)basis.size()) break;
        ModuleHom f = hom_zero(M, N);
        for (size_t b = 0; b < basis.size(); b++) {
          if (digits[b] == 0) continue;
          f = hom_add(M, f, hom_scale(M, F.from_int(digits[b]), basis[b]));
        }
        if (hom_invertible(M, N, f)) {
          out.kind = IsoKind::Iso;
          out.iso = f;
          return out;
        }
      }
      out.kind = IsoKind::Distinct;
      out.witness = "no invertible homomorphism exists (exhaustive search over the hom space)";
      return out;
    }
  }
  out.kind = IsoKind::Inconclusive;
  out.witness = "bounded search found no isomorphism";
  return out;
}

std::optional<int> period_of_simple(const Algebra& A, int i, int max_d) {
  Representation S = rep_simple(A, i);
  Representation M = S;
  for (int d = 1; d <= max_d; d++) {
    M = syzygy(M).omega;
    if (M.total() == 0) return std::nullopt;
    if (M.dims == S.dims) {
      IsoOutcome o = module_iso(M, S);
      if (o.kind == IsoKind::Iso) return d;
    }
  }
  return std::nullopt;
}

namespace {

void check_minimal(const Algebra& A, const ProjSum& Q, const std::vector<ModuleHom>& endo_basis,
                   const Mat& ann_combos) {
  const Field& F = A.pres.field;
  for (int r = 0; r < ann_combos.r; r++) {
    ModuleHom H = hom_zero(Q.rep, Q.rep);
    for (int b = 0; b < ann_combos.c; b++) {
      Scalar c = ann_combos.at(r, b);
      if (!F.is_zero(c)) H = hom_add(Q.rep, H, hom_scale(Q.rep, c, endo_basis[b]));
    }
    for (size_t s = 0; s < Q.verts.size(); s++) {
      for (size_t t = 0; t < Q.verts.size(); t++) {
        if (Q.verts[s] != Q.verts[t]) continue;
        int w = Q.verts[s];
        Scalar eps = H.h[w].at(Q.gen_coord(int(s)), Q.gen_coord(int(t)));
        if (!F.is_zero(eps))
          fail("ApproximationVerificationFailed",
               "annihilator endomorphism is not radical; the approximation is not minimal");
      }
    }
  }
}

}  // namespace

Approximation minimal_left_approximation(const Representation& X, int avoid_vertex) {
  const Field& F = fld(X);
  const Algebra& A = *X.A;
  std::vector<std::vector<ModuleHom>> homs(A.n());
  std::vector<Representation> projs;
  for (int j = 0; j < A.n(); j++) projs.push_back(rep_projective(A, j));
  for (int j = 0; j < A.n(); j++)
    if (j != avoid_vertex) homs[j] = hom_space(X, projs[j]);

  std::vector<int> verts;
  std::vector<ModuleHom> reps;
  for (int j = 0; j < A.n(); j++) {
    if (j == avoid_vertex) continue;
    int width = 0;
    for (size_t v = 0; v < X.dims.size(); v++) width += X.dims[v] * projs[j].dims[v];
    Echelon e(F, width);
    for (int l = 0; l < A.n(); l++) {
      if (l == avoid_vertex) continue;
      for (const ModuleHom& psi : homs[l]) {
        for (int xidx : A.rad_block(j, l)) {
          ModuleHom phi = left_mult_hom(A, element_basis(A, xidx));
          ModuleHom comp = hom_compose(X, psi, phi);
          e.add_row(flatten_hom(X, projs[j], comp));
        }
      }
    }
    for (const ModuleHom& h : homs[j]) {
      if (e.add_row(flatten_hom(X, projs[j], h))) {
        verts.push_back(j);
        reps.push_back(h);
      }
    }
  }

  Approximation out;
  out.verts = verts;
  out.Q = proj_sum(A, verts);
  out.f = hom_zero(X, out.Q.rep);
  for (size_t c = 0; c < verts.size(); c++) {
    for (size_t v = 0; v < X.dims.size(); v++) {
      for (int r = 0; r < X.dims[v]; r++)
        for (int k = 0; k < reps[c].h[v].c; k++)
          out.f.h[v].at(r, out.Q.chunk[c][v] + k) = reps[c].h[v].at(r, k);
    }
  }

  // defining property: Hom(f, P_j) is surjective for every j != avoid
  for (int j = 0; j < A.n(); j++) {
    if (j == avoid_vertex) continue;
    int width = 0;
    for (size_t v = 0; v < X.dims.size(); v++) width += X.dims[v] * projs[j].dims[v];
    Echelon span(F, width);
    for (const ModuleHom& g : hom_space(out.Q.rep, projs[j]))
      span.add_row(flatten_hom(X, projs[j], hom_compose(X, out.f, g)));
    for (const ModuleHom& h : homs[j])
      if (!span.contains(flatten_hom(X, projs[j], h)))
        fail("ApproximationVerificationFailed",
             "a map to P_" + std::to_string(j + 1) + " does not factor through the approximation");
  }

  // minimality: annihilator endomorphisms must be radical
  std::vector<ModuleHom> endo = hom_space(out.Q.rep, out.Q.rep);
  if (!endo.empty()) {
    int width = 0;
    for (size_t v = 0; v < X.dims.size(); v++) width += X.dims[v] * out.Q.rep.dims[v];
    Mat Mrows(int(endo.size()), width);
    for (size_t b = 0; b < endo.size(); b++)
      Mrows.set_row(int(b), flatten_hom(X, out.Q.rep, hom_compose(X, out.f, endo[b])));
    Mat ann = left_kernel(F, Mrows);
    check_minimal(A, out.Q, endo, ann);
  }
  return out;
}

Approximation minimal_right_approximation(const Representation& X, int avoid_vertex) {
  const Field& F = fld(X);
  const Algebra& A = *X.A;
  std::vector<Representation> projs;
  for (int j = 0; j < A.n(); j++) projs.push_back(rep_projective(A, j));
  std::vector<std::vector<ModuleHom>> homs(A.n());
  for (int j = 0; j < A.n(); j++)
    if (j != avoid_vertex) homs[j] = hom_space(projs[j], X);

  std::vector<int> verts;
  std::vector<ModuleHom> reps;
  for (int j = 0; j < A.n(); j++) {
    if (j == avoid_vertex) continue;
    int width = 0;
    for (size_t v = 0; v < X.dims.size(); v++) width += projs[j].dims[v] * X.dims[v];
    Echelon e(F, width);
    for (int l = 0; l < A.n(); l++) {
      if (l == avoid_vertex) continue;
      for (const ModuleHom& psi : homs[l]) {
        for (int xidx : A.rad_block(l, j)) {
          ModuleHom lam = left_mult_hom(A, element_basis(A, xidx));  // P_j -> P_l
          ModuleHom comp = hom_compose(projs[j], lam, psi);
          e.add_row(flatten_hom(projs[j], X, comp));
        }
      }
    }
    for (const ModuleHom& h : homs[j]) {
      if (e.add_row(flatten_hom(projs[j], X, h))) {
        verts.push_back(j);
        reps.push_back(h);
      }
    }
  }

  Approximation out;
  out.verts = verts;
  out.Q = proj_sum(A, verts);
  out.f = hom_zero(out.Q.rep, X);
  for (size_t c = 0; c < verts.size(); c++) {
    for (size_t v = 0; v < X.dims.size(); v++) {
      for (int r = 0; r < reps[c].h[v].r; r++)
        for (int k = 0; k < X.dims[v]; k++)
          out.f.h[v].at(out.Q.chunk[c][v] + r, k) = reps[c].h[v].at(r, k);
    }
  }

  for (int j = 0; j < A.n(); j++) {
    if (j == avoid_vertex) continue;
    int width = 0;
    for (size_t v = 0; v < X.dims.size(); v++) width += projs[j].dims[v] * X.dims[v];
    Echelon span(F, width);
    for (const ModuleHom& phi : hom_space(projs[j], out.Q.rep))
      span.add_row(flatten_hom(projs[j], X, hom_compose(projs[j], phi, out.f)));
    for (const ModuleHom& h : homs[j])
      if (!span.contains(flatten_hom(projs[j], X, h)))
        fail("ApproximationVerificationFailed",
             "a map from P_" + std::to_string(j + 1) + " does not factor through the approximation");
  }

  std::vector<ModuleHom> endo = hom_space(out.Q.rep, out.Q.rep);
  if (!endo.empty()) {
    int width = 0;
    for (size_t v = 0; v < X.dims.size(); v++) width += out.Q.rep.dims[v] * X.dims[v];
    Mat Mrows(int(endo.size()), width);
    for (size_t b = 0; b < endo.size(); b++)
      Mrows.set_row(int(b), flatten_hom(out.Q.rep, X, hom_compose(out.Q.rep, endo[b], out.f)));
    Mat ann = left_kernel(F, Mrows);
    check_minimal(A, out.Q, endo, ann);
  }
  return out;
}

}  // namespace sforge
