// Normalized chain complexes of truncated simplicial sets and integral
// homology through the Smith normal form.

#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

#include "simpfib/simplicial.hpp"

namespace simpfib {

class HomologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  std::int64_t& operator()(std::size_t r, std::size_t c) {
    return data[r * cols + c];
  }
  std::int64_t operator()(std::size_t r, std::size_t c) const {
    return data[r * cols + c];
  }
};

struct ChainComplex {
  int top = 0;                              // highest dimension with a basis
  std::vector<std::vector<Index>> basis;    // nondegenerate simplex ranks
  std::vector<IntMatrix> boundary;          // boundary[n]: C_n -> C_{n-1}

  std::size_t rank(int n) const { return basis.at(n).size(); }
};

/// Chains on nondegenerate simplices of dimension <= max_dim (the cutoff
/// when negative), boundary Σ(-1)^i ∂_i with degenerate faces dropped.
/// Throws HomologyError if some ∂∂ is nonzero.
ChainComplex normalized_chains(SimplicialSet const& space, int max_dim = -1);

/// Nonzero diagonal entries of the Smith normal form, positive and in
/// divisibility order d_1 | d_2 | ... . Their count is the rank.
std::vector<mpz_class> smith_invariants(IntMatrix const& matrix);

struct HomologyGroup {
  int degree = 0;
  std::size_t betti = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1

  /// "0", "Z", "Z^2", "Z/4", "(Z/2)^2", "Z + Z/2", ...
  std::string format() const;
  bool operator==(HomologyGroup const&) const = default;
};

/// H_i for 0 <= i <= C.top - 1, each reduction done once.
std::vector<HomologyGroup> homology(ChainComplex const& chains);

/// H_i alone; needs i + 1 <= C.top.
HomologyGroup homology_group(ChainComplex const& chains, int i);

}  // namespace simpfib
