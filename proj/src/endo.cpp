#include "sforge/endo.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace sforge {

namespace {

std::vector<Scalar> dense_of(const TableAlgebra& T,
                             const std::vector<std::pair<int, Scalar>>& sp) {
  std::vector<Scalar> v(T.dim(), T.F.zero());
  for (const auto& [i, c] : sp) v[i] = c;
  return v;
}

std::vector<std::pair<int, Scalar>> sparse_of(const Field& F, const std::vector<Scalar>& v) {
  std::vector<std::pair<int, Scalar>> sp;
  for (int i = 0; i < (int)v.size(); i++)
    if (!F.is_zero(v[i])) sp.push_back({i, v[i]});
  return sp;
}

bool vec_eq(const Field& F, const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); i++)
    if (!F.eq(a[i], b[i])) return false;
  return true;
}

// block of a nonzero row under the basis block labels; rows mixing blocks
// come back {-1, -1}
std::pair<int, int> row_block(const Field& F, const TableAlgebra& T,
                              const std::vector<Scalar>& v) {
  int bs = -2, bt = -2;
  for (int j = 0; j < (int)v.size(); j++) {
    if (F.is_zero(v[j])) continue;
    if (bs == -2) {
      bs = T.src[j];
      bt = T.tgt[j];
    } else if (T.src[j] != bs || T.tgt[j] != bt) {
      return {-1, -1};
    }
  }
  return {bs, bt};
}

// (L - lam)^m == 0 for the left multiplication matrix L on a diagonal block
bool nilpotent_shift(const Field& F, Mat L, const Scalar& lam, int m) {
  for (int i = 0; i < L.r; i++) L.at(i, i) = F.sub(L.at(i, i), lam);
  Mat P = mat_identity(F, L.r);
  for (int t = 0; t < m; t++) P = mul(F, P, L);
  return is_zero(F, P);
}

}  // namespace

std::vector<Scalar> t_unit_vec(const TableAlgebra& T, int k) {
  std::vector<Scalar> v(T.dim(), T.F.zero());
  v[k] = T.F.one();
  return v;
}

std::vector<Scalar> t_one(const TableAlgebra& T) {
  std::vector<Scalar> v(T.dim(), T.F.zero());
  for (int e : T.idem) v[e] = T.F.one();
  return v;
}

std::vector<Scalar> t_add(const TableAlgebra& T, const std::vector<Scalar>& a,
                          const std::vector<Scalar>& b) {
  std::vector<Scalar> v(T.dim());
  for (int i = 0; i < T.dim(); i++) v[i] = T.F.add(a[i], b[i]);
  return v;
}

std::vector<Scalar> t_scale(const TableAlgebra& T, const Scalar& c,
                            const std::vector<Scalar>& a) {
  std::vector<Scalar> v(T.dim());
  for (int i = 0; i < T.dim(); i++) v[i] = T.F.mul(c, a[i]);
  return v;
}

std::vector<Scalar> t_mul(const TableAlgebra& T, const std::vector<Scalar>& a,
                          const std::vector<Scalar>& b) {
  const Field& F = T.F;
  std::vector<Scalar> out(T.dim(), F.zero());
  for (int x = 0; x < T.dim(); x++) {
    if (F.is_zero(a[x])) continue;
    for (int y = 0; y < T.dim(); y++) {
      if (F.is_zero(b[y])) continue;
      Scalar cd = F.mul(a[x], b[y]);
      for (const auto& [k, s] : T.table[x][y]) out[k] = F.add(out[k], F.mul(cd, s));
    }
  }
  return out;
}

TableAlgebra table_from_algebra(const Algebra& A) {
  TableAlgebra T;
  T.F = A.pres.field;
  T.nidem = A.n();
  int D = A.dim();
  T.src.resize(D);
  T.tgt.resize(D);
  for (int k = 0; k < D; k++) {
    T.src[k] = A.basis[k].source;
    T.tgt[k] = A.basis[k].target(A.pres.quiver);
  }
  T.idem = A.idem;
  T.table.assign(D, std::vector<std::vector<std::pair<int, Scalar>>>(D));
  for (int x = 0; x < D; x++)
    for (int y = 0; y < D; y++) T.table[x][y] = A.mult_table[x][y].terms;
  return T;
}

TableAlgebra table_quotient(const TableAlgebra& T, const Mat& ideal_rows) {
  const Field& F = T.F;
  int D = T.dim();
  if (ideal_rows.c != D) fail("Internal", "ideal rows have the wrong width");
  Echelon e(F, D);
  for (int r = 0; r < ideal_rows.r; r++) e.add_row(ideal_rows.row(r));
  Mat R = e.basis();
  std::vector<int> pivcol(R.r, -1);
  for (int r = 0; r < R.r; r++) {
    auto blk = row_block(F, T, R.row(r));
    if (blk.first < 0) fail("Internal", "quotient ideal is not block homogeneous");
    for (int j = 0; j < D; j++)
      if (!F.is_zero(R.at(r, j))) {
        pivcol[r] = j;
        break;
      }
  }
  for (int x = 0; x < D; x++) {
    std::vector<Scalar> ux = t_unit_vec(T, x);
    for (int r = 0; r < R.r; r++) {
      if (!e.contains(t_mul(T, ux, R.row(r))) || !e.contains(t_mul(T, R.row(r), ux)))
        fail("Internal", "quotient ideal is not two sided");
    }
  }

  std::vector<bool> ispiv(D, false);
  for (int p : pivcol) ispiv[p] = true;
  std::vector<int> keep, place(D, -1);
  for (int j = 0; j < D; j++)
    if (!ispiv[j]) {
      place[j] = (int)keep.size();
      keep.push_back(j);
    }

  auto reduce = [&](std::vector<Scalar> v) {
    for (int r = 0; r < R.r; r++) {
      Scalar c = v[pivcol[r]];
      if (F.is_zero(c)) continue;
      for (int j = 0; j < D; j++) v[j] = F.sub(v[j], F.mul(c, R.at(r, j)));
    }
    std::vector<Scalar> w(keep.size());
    for (size_t t = 0; t < keep.size(); t++) w[t] = v[keep[t]];
    return w;
  };

  TableAlgebra Q;
  Q.F = F;
  Q.nidem = T.nidem;
  for (int j : keep) {
    Q.src.push_back(T.src[j]);
    Q.tgt.push_back(T.tgt[j]);
  }
  Q.idem.resize(T.nidem);
  for (int k = 0; k < T.nidem; k++) {
    if (ispiv[T.idem[k]]) fail("Internal", "quotient ideal meets an idempotent");
    Q.idem[k] = place[T.idem[k]];
  }
  int QD = (int)keep.size();
  Q.table.assign(QD, std::vector<std::vector<std::pair<int, Scalar>>>(QD));
  for (int x = 0; x < QD; x++)
    for (int y = 0; y < QD; y++) {
      if (T.tgt[keep[x]] != T.src[keep[y]]) continue;
      Q.table[x][y] = sparse_of(F, reduce(dense_of(T, T.table[keep[x]][keep[y]])));
    }
  return Q;
}

std::vector<Scalar> endo_coords(const EndoData& E, int k, int l, const ChainMap& u) {
  const Field& F = E.T.F;
  std::vector<Scalar> c0 = kb_coords(E.summands[l], E.summands[k], E.kb[k][l], u);
  if (k != l || c0.empty()) return c0;
  Mat B(1, (int)c0.size());
  B.set_row(0, c0);
  Mat X;
  if (!solve_left(F, E.change[k], B, X)) fail("Internal", "identity change of basis is singular");
  return X.row(0);
}

namespace {

// two sided inverse search for one candidate class u: T_l -> T_k; linear in w
bool iso_with(const EndoData& E, int k, int l, const ChainMap& u,
              const std::vector<Scalar>& id_l, const std::vector<Scalar>& id_k) {
  const Field& F = E.T.F;
  const KbHomSpace& Hw = E.kb[l][k];
  int wl = (int)id_l.size(), wk = (int)id_k.size();
  Mat M(Hw.dim, wl + wk);
  for (int t = 0; t < Hw.dim; t++) {
    ChainMap lw = chain_compose(E.summands[l], E.summands[k], E.summands[l], u, Hw.reps[t]);
    ChainMap wu = chain_compose(E.summands[k], E.summands[l], E.summands[k], Hw.reps[t], u);
    std::vector<Scalar> a = kb_coords(E.summands[l], E.summands[l], E.kb[l][l], lw);
    std::vector<Scalar> b = kb_coords(E.summands[k], E.summands[k], E.kb[k][k], wu);
    for (int j = 0; j < wl; j++) M.at(t, j) = a[j];
    for (int j = 0; j < wk; j++) M.at(t, wl + j) = b[j];
  }
  Mat tgtm(1, wl + wk);
  for (int j = 0; j < wl; j++) tgtm.at(0, j) = id_l[j];
  for (int j = 0; j < wk; j++) tgtm.at(0, wl + j) = id_k[j];
  Mat X;
  return solve_left(F, M, tgtm, X);
}

}  // namespace

EndoData endo_algebra(const Algebra& A, const std::vector<ProjComplex>& summands) {
  const Field& F = A.pres.field;
  if (summands.empty()) fail("Internal", "no summands");
  EndoData E;
  E.T.F = F;
  E.summands = summands;
  int r = (int)summands.size();
  for (const auto& S : summands) complex_validate(S);

  for (int k = 0; k < r; k++) {
    E.kb.emplace_back();
    for (int l = 0; l < r; l++) E.kb[k].push_back(hom_complex(summands[l], summands[k]));
  }

  // put the identity class first in each diagonal block
  std::vector<std::vector<std::vector<ChainMap>>> bas(r, std::vector<std::vector<ChainMap>>(r));
  E.change.resize(r);
  for (int k = 0; k < r; k++) {
    const KbHomSpace& H = E.kb[k][k];
    ChainMap idm = chain_identity(summands[k]);
    std::vector<Scalar> c0 = kb_coords(summands[k], summands[k], H, idm);
    int s = -1;
    for (int t = 0; t < (int)c0.size(); t++)
      if (!F.is_zero(c0[t])) {
        s = t;
        break;
      }
    if (s < 0) fail("Internal", "a summand is contractible");
    Mat P(H.dim, H.dim);
    P.set_row(0, c0);
    bas[k][k].push_back(idm);
    int rr = 1;
    for (int t = 0; t < H.dim; t++) {
      if (t == s) continue;
      P.at(rr, t) = F.one();
      bas[k][k].push_back(H.reps[t]);
      rr++;
    }
    E.change[k] = P;
  }
  for (int k = 0; k < r; k++)
    for (int l = 0; l < r; l++)
      if (k != l) bas[k][l] = E.kb[k][l].reps;

  // global basis, blocks in (k, l) order
  E.members.assign(r, std::vector<std::vector<int>>(r));
  E.T.idem.assign(r, -1);
  for (int k = 0; k < r; k++)
    for (int l = 0; l < r; l++)
      for (size_t t = 0; t < bas[k][l].size(); t++) {
        int idx = (int)E.chains.size();
        E.members[k][l].push_back(idx);
        E.chains.push_back(bas[k][l][t]);
        E.T.src.push_back(k);
        E.T.tgt.push_back(l);
        if (k == l && t == 0) E.T.idem[k] = idx;
      }
  E.T.nidem = r;

  // isomorphic summands would make the endomorphism algebra non basic
  for (int k = 0; k < r; k++)
    for (int l = k + 1; l < r; l++) {
      const KbHomSpace& Hul = E.kb[k][l];
      if (Hul.dim == 0 || E.kb[l][k].dim == 0) continue;
      std::vector<Scalar> id_l = kb_coords(summands[l], summands[l], E.kb[l][l],
                                           chain_identity(summands[l]));
      std::vector<Scalar> id_k = kb_coords(summands[k], summands[k], E.kb[k][k],
                                           chain_identity(summands[k]));
      bool hit = false;
      for (int t = 0; t < Hul.dim && !hit; t++)
        hit = iso_with(E, k, l, Hul.reps[t], id_l, id_k);
      SplitMix64 rng(0xc6a4a7935bd1e995ULL);
      for (int t = 0; t < 32 && !hit; t++) {
        std::vector<Scalar> c(Hul.dim);
        for (int s = 0; s < Hul.dim; s++)
          c[s] = F.is_prime_field()
                     ? F.from_int((long long)rng.below((std::uint64_t)F.characteristic()))
                     : F.from_int((long long)rng.below(9) - 4);
        hit = iso_with(E, k, l, chain_linear(summands[l], summands[k], Hul, c), id_l, id_k);
      }
      if (hit)
        fail("NotBasic", "summands " + std::to_string(k + 1) + " and " +
                             std::to_string(l + 1) + " are isomorphic in the homotopy category");
    }

  int D = (int)E.chains.size();
  E.T.table.assign(D, std::vector<std::vector<std::pair<int, Scalar>>>(D));
  for (int k = 0; k < r; k++)
    for (int l = 0; l < r; l++)
      for (int m = 0; m < r; m++)
        for (int xi : E.members[k][l])
          for (int yi : E.members[l][m]) {
            ChainMap z = chain_compose(summands[m], summands[l], summands[k],
                                       E.chains[yi], E.chains[xi]);
            std::vector<Scalar> c = endo_coords(E, k, m, z);
            std::vector<std::pair<int, Scalar>> sp;
            for (int t = 0; t < (int)c.size(); t++)
              if (!F.is_zero(c[t])) sp.push_back({E.members[k][m][t], c[t]});
            E.T.table[xi][yi] = sp;
          }
  return E;
}

PresentedAlgebra present_table(const TableAlgebra& T, int degree_cap) {
  const Field& F = T.F;
  int D = T.dim(), n = T.nidem;
  if (D == 0 || n == 0) fail("Internal", "empty table algebra");
  for (int k = 0; k < n; k++) {
    int e = T.idem[k];
    if (e < 0 || e >= D || T.src[e] != k || T.tgt[e] != k)
      fail("Internal", "idempotent outside its block");
    if (!vec_eq(F, t_mul(T, t_unit_vec(T, e), t_unit_vec(T, e)), t_unit_vec(T, e)))
      fail("Internal", "marked basis element is not idempotent");
  }

  std::vector<std::vector<std::vector<int>>> mem(n, std::vector<std::vector<int>>(n));
  for (int x = 0; x < D; x++) mem[T.src[x]][T.tgt[x]].push_back(x);

  // scalar residues on the diagonal blocks
  std::vector<std::vector<Scalar>> jr;
  for (int k = 0; k < n; k++) {
    const std::vector<int>& B = mem[k][k];
    int m = (int)B.size();
    for (int x : B) {
      Mat L(m, m);
      for (int rw = 0; rw < m; rw++) {
        std::vector<Scalar> prod = dense_of(T, T.table[x][B[rw]]);
        for (int cw = 0; cw < m; cw++) L.at(rw, cw) = prod[B[cw]];
      }
      Scalar tr = F.zero();
      for (int i = 0; i < m; i++) tr = F.add(tr, L.at(i, i));
      Scalar ms = F.from_int(m);
      bool have = false;
      Scalar lam = F.zero();
      if (!F.is_zero(ms)) {
        lam = F.div(tr, ms);
        have = true;
      } else {
        long long p = F.characteristic();
        if (p > 10000)
          fail("NonSplitEndomorphism", "residue search over F_p is capped at p <= 10000");
        for (long long t = 0; t < p; t++) {
          Scalar cand = F.from_int(t);
          if (nilpotent_shift(F, L, cand, m)) {
            lam = cand;
            have = true;
            break;
          }
        }
      }
      if (!have || !nilpotent_shift(F, L, lam, m))
        fail("NonSplitEndomorphism", "a diagonal block has no scalar residue");
      if (x == T.idem[k]) {
        if (!F.is_one(lam)) fail("Internal", "identity residue is not 1");
        continue;
      }
      std::vector<Scalar> row = t_unit_vec(T, x);
      row[T.idem[k]] = F.neg(lam);
      jr.push_back(row);
    }
  }
  for (int x = 0; x < D; x++)
    if (T.src[x] != T.tgt[x]) jr.push_back(t_unit_vec(T, x));

  Echelon J1(F, D);
  for (const auto& row : jr) J1.add_row(row);
  if (J1.rank() != D - n) fail("Internal", "radical complement has the wrong dimension");
  Mat JB = J1.basis();

  for (int x = 0; x < D; x++) {
    std::vector<Scalar> ux = t_unit_vec(T, x);
    for (int rr = 0; rr < JB.r; rr++) {
      if (!J1.contains(t_mul(T, ux, JB.row(rr))) || !J1.contains(t_mul(T, JB.row(rr), ux)))
        fail("NonSplitEndomorphism", "the residue complement is not an ideal");
    }
  }

  // radical powers, nilpotency and the Loewy length
  std::vector<Mat> pow = {JB};
  while (pow.back().r > 0) {
    if ((int)pow.size() > D + 1)
      fail("NonSplitEndomorphism", "the residue complement is not nilpotent");
    const Mat& prev = pow.back();
    Echelon nx(F, D);
    for (int a = 0; a < prev.r; a++)
      for (int b = 0; b < JB.r; b++) nx.add_row(t_mul(T, prev.row(a), JB.row(b)));
    pow.push_back(nx.basis());
  }
  int loewy = (int)pow.size();
  Mat J2 = pow.size() >= 2 ? pow[1] : Mat(0, D);

  auto blocks_of = [&](const Mat& M) {
    std::vector<std::pair<int, int>> b(M.r);
    for (int rr = 0; rr < M.r; rr++) {
      b[rr] = row_block(F, T, M.row(rr));
      if (b[rr].first < 0) fail("Internal", "radical row mixes blocks");
    }
    return b;
  };
  std::vector<std::pair<int, int>> jblk = blocks_of(JB), j2blk = blocks_of(J2);

  // arrows: block by block lifts of J modulo J^2
  struct ArrowLift {
    int u, v;
    std::vector<Scalar> lift;
  };
  std::vector<ArrowLift> alifts;
  for (int u = 0; u < n; u++)
    for (int v = 0; v < n; v++) {
      Echelon e(F, D);
      for (int rr = 0; rr < J2.r; rr++)
        if (j2blk[rr] == std::make_pair(u, v)) e.add_row(J2.row(rr));
      for (int rr = 0; rr < JB.r; rr++)
        if (jblk[rr] == std::make_pair(u, v) && e.add_row(JB.row(rr)))
          alifts.push_back({u, v, JB.row(rr)});
    }

  int width = (int)std::to_string(std::max<std::size_t>(alifts.size(), 1)).size();
  Quiver q;
  q.n = n;
  for (size_t i = 0; i < alifts.size(); i++) {
    std::string num = std::to_string(i + 1);
    while ((int)num.size() < width) num = "0" + num;
    q.arrows.push_back({"x" + num, alifts[i].u, alifts[i].v});
  }
  q.finalize();

  if (degree_cap < loewy)
    fail("DegreeBoundTooSmall", "degree cap " + std::to_string(degree_cap) +
                                    " is below the Loewy length " + std::to_string(loewy));

  // Relations are kernel vectors of path evaluation. The ideal is not
  // homogeneous in path length (a short path can equal a long one), so the
  // elimination runs over all lengths 2..loewy of a block at once. Columns
  // beyond the window stay exact to drop: every longer path is itself a
  // relation, and arrow extensions that overflow the window land in the
  // consequence span regardless.
  struct PathInfo {
    Path p;
    std::vector<Scalar> val;
  };
  using BlockKey = std::pair<int, int>;
  using Word = std::pair<int, std::vector<int>>;
  struct BlockPaths {
    std::vector<Path> paths;  // deg-lex ascending
    std::map<Word, int> pos;
    std::vector<std::vector<Scalar>> vals;
  };
  std::map<BlockKey, BlockPaths> bp;
  std::vector<PathInfo> cur;
  for (size_t i = 0; i < alifts.size(); i++)
    cur.push_back({Path{alifts[i].u, {(int)i}}, alifts[i].lift});
  for (int d = 2; d <= loewy; d++) {
    std::vector<PathInfo> nxt;
    for (const PathInfo& pi : cur)
      for (int a : q.out[pi.p.target(q)]) {
        Path p = pi.p;
        p.arrows.push_back(a);
        nxt.push_back({p, t_mul(T, pi.val, alifts[a].lift)});
      }
    for (const PathInfo& pi : nxt) {
      BlockPaths& B = bp[{pi.p.source, pi.p.target(q)}];
      B.pos[{pi.p.source, pi.p.arrows}] = (int)B.paths.size();
      B.paths.push_back(pi.p);
      B.vals.push_back(pi.val);
    }
    cur = std::move(nxt);
  }

  std::map<BlockKey, Mat> ker;
  for (const auto& [blk, B] : bp) {
    Mat Ev((int)B.paths.size(), D);
    for (int t = 0; t < Ev.r; t++) Ev.set_row(t, B.vals[t]);
    ker[blk] = left_kernel(F, Ev);
  }

  std::vector<Relation> rels;
  for (const auto& [blk, B] : bp) {
    int w = (int)B.paths.size();
    Echelon cons(F, w);
    for (const auto& [pblk, K] : ker) {
      const BlockPaths& PB = bp.at(pblk);
      for (int rr = 0; rr < K.r; rr++) {
        for (int a = 0; a < (int)q.arrows.size(); a++) {
          // arrow in front: a then p
          if (q.arrows[a].target == pblk.first &&
              BlockKey{q.arrows[a].source, pblk.second} == blk) {
            std::vector<Scalar> ext(w, F.zero());
            for (int j = 0; j < (int)PB.paths.size(); j++) {
              if (F.is_zero(K.at(rr, j))) continue;
              if (PB.paths[j].length() + 1 > loewy) continue;
              std::vector<int> word = {a};
              word.insert(word.end(), PB.paths[j].arrows.begin(), PB.paths[j].arrows.end());
              ext[B.pos.at({q.arrows[a].source, word})] = K.at(rr, j);
            }
            cons.add_row(ext);
          }
          // arrow behind: p then a
          if (q.arrows[a].source == pblk.second &&
              BlockKey{pblk.first, q.arrows[a].target} == blk) {
            std::vector<Scalar> ext(w, F.zero());
            for (int j = 0; j < (int)PB.paths.size(); j++) {
              if (F.is_zero(K.at(rr, j))) continue;
              if (PB.paths[j].length() + 1 > loewy) continue;
              std::vector<int> word = PB.paths[j].arrows;
              word.push_back(a);
              ext[B.pos.at({pblk.first, word})] = K.at(rr, j);
            }
            cons.add_row(ext);
          }
        }
      }
    }
    const Mat& K = ker.at(blk);
    for (int rr = 0; rr < K.r; rr++) {
      std::vector<Scalar> row = K.row(rr);
      if (cons.add_row(row)) {
        Relation rel;
        for (int j = 0; j < w; j++)
          if (!F.is_zero(row[j])) rel.push_back({row[j], B.paths[j]});
        rels.push_back(rel);
      }
    }
  }

  PresentedAlgebra out;
  out.pres.field = F;
  out.pres.quiver = q;
  out.pres.relations = rels;
  out.jbasis = JB;
  out.loewy = loewy;
  for (const auto& a : alifts) out.arrow_lift.push_back(a.lift);
  out.alg = build_algebra(out.pres, std::max(degree_cap, loewy + 2));
  if (out.alg.dim() != D) fail("Internal", "presented algebra does not match the table");
  for (int u = 0; u < n; u++)
    for (int v = 0; v < n; v++)
      if ((int)out.alg.block[u][v].size() != (int)mem[u][v].size())
        fail("Internal", "presented algebra does not match the table");
  if (out.alg.loewy_length != loewy)
    fail("Internal", "presented algebra does not match the table");
  return out;
}

PresentedAlgebra socle_quotient(const Algebra& A, int degree_cap) {
  if (!A.weakly_symmetric)
    fail("NotWeaklySymmetric", "the socle is a two sided ideal only in the weakly symmetric case");
  const Field& F = A.pres.field;
  TableAlgebra T = table_from_algebra(A);
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < A.n(); i++)
    for (int v = 0; v < A.n(); v++) {
      const Mat& S = A.socle_rows[i][v];
      for (int r = 0; r < S.r; r++) {
        std::vector<Scalar> g(T.dim(), F.zero());
        for (int c = 0; c < S.c; c++) g[A.block[i][v][c]] = S.at(r, c);
        rows.push_back(g);
      }
    }
  Mat M((int)rows.size(), T.dim());
  for (int r = 0; r < M.r; r++) M.set_row(r, rows[r]);
  return present_table(table_quotient(T, M), degree_cap);
}

PresentedAlgebra socle_quotient_at(const Algebra& A, int i, int degree_cap) {
  AlgebraElement w = socle_generator(A, i);
  Mat M(1, A.dim());
  for (const auto& [idx, c] : w.terms) M.at(0, idx) = c;
  return present_table(table_quotient(table_from_algebra(A), M), degree_cap);
}

}  // namespace sforge
