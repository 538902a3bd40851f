#pragma once

// Independent reference implementations the unit and acceptance suites compare
// the engine against. Everything here favors obviousness over speed: full
// unfiltered path enumeration and a fresh elimination per truncation window.

#include <map>
#include <string>
#include <vector>

#include "sforge/algebra.hpp"

namespace sforge::oracle {

struct OracleAlgebra {
  AlgebraPresentation pres;  // with finalized quiver
  int loewy = 0;
  int dim = 0;
  std::vector<std::vector<int>> block_dim;                        // [i][j]
  std::vector<std::vector<std::vector<std::string>>> basis_strs;  // [i][j], deg-lex ascending

  struct Block {
    std::vector<Path> cols;  // all paths of the block up to the final window, deg-lex descending
    std::map<std::pair<int, std::vector<int>>, int> colpos;
    std::vector<std::vector<Scalar>> rows;  // reduced echelon rows over cols
    std::vector<int> pivcol;                // pivot column of each row
    std::vector<char> ispiv;                // per column
  };
  std::vector<std::vector<Block>> blocks;  // [i][j]
};

OracleAlgebra oracle_build(const AlgebraPresentation& pres, int cap = 30);

// Coordinates of a path over the oracle basis of its block (ascending order).
std::vector<Scalar> oracle_reduce(const OracleAlgebra& O, const Path& p);

// Path from arrow id strings; source deduced from the first arrow.
Path opath(const Quiver& q, const std::vector<std::string>& ids);

// structural equality, term by term; meta is ignored
bool same_relation(const Relation& a, const Relation& b);
bool same_presentation(const AlgebraPresentation& x, const AlgebraPresentation& y);

// Shared fixtures.
AlgebraPresentation pres_dual_numbers(const Field& F);       // K[rho]/(rho^2)
AlgebraPresentation pres_nakayama(const Field& F, int n, int ell);
AlgebraPresentation pres_square(const Field& F);             // commutative square
AlgebraPresentation pres_wsa123_f5();                        // weights (1,2,3), a=c=d=1, b=0, F_5

}  // namespace sforge::oracle
