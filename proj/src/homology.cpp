#include "simpfib/homology.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <map>
#include <numeric>

namespace simpfib {

ChainComplex normalized_chains(SimplicialSet const& space, int max_dim) {
  int const top = max_dim < 0 ? space.cutoff() : max_dim;
  if (top > space.cutoff()) {
    throw HomologyError(fmt::format("chains up to {} beyond the cutoff {}", top,
                                    space.cutoff()));
  }
  ChainComplex c;
  c.top = top;
  // position[n][x] is the basis index of x, or -1 for degenerate simplices.
  std::vector<std::vector<std::int64_t>> position(top + 1);
  for (int n = 0; n <= top; ++n) {
    auto const count = space.count(n);
    position[n].assign(count, -1);
    std::vector<Index> basis;
    for (Index x = 0; x < count; ++x) {
      if (n == 0 || !is_degenerate(space, n, x)) {
        position[n][x] = static_cast<std::int64_t>(basis.size());
        basis.push_back(x);
      }
    }
    c.basis.push_back(std::move(basis));
  }
  c.boundary.emplace_back(0, c.rank(0));
  for (int n = 1; n <= top; ++n) {
    IntMatrix d(c.rank(n - 1), c.rank(n));
    for (std::size_t col = 0; col < c.rank(n); ++col) {
      for (int i = 0; i <= n; ++i) {
        auto row = position[n - 1][space.face(i, n, c.basis[n][col])];
        if (row >= 0) {
          d(row, col) += i % 2 == 0 ? 1 : -1;
        }
      }
    }
    c.boundary.push_back(std::move(d));
  }
  for (int n = 2; n <= top; ++n) {
    auto const& outer = c.boundary[n - 1];
    auto const& inner = c.boundary[n];
    for (std::size_t col = 0; col < inner.cols; ++col) {
      for (std::size_t row = 0; row < outer.rows; ++row) {
        std::int64_t sum = 0;
        for (std::size_t mid = 0; mid < inner.rows; ++mid) {
          sum += outer(row, mid) * inner(mid, col);
        }
        if (sum != 0) {
          throw HomologyError(fmt::format(
              "boundary of boundary of {} is nonzero",
              space.format(n, c.basis[n][col])));
        }
      }
    }
  }
  return c;
}

std::vector<mpz_class> smith_invariants(IntMatrix const& matrix) {
  std::size_t const rows = matrix.rows, cols = matrix.cols;
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = static_cast<long>(matrix.data[i]);
  }
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& {
    return a[r * cols + c];
  };

  std::vector<mpz_class> diagonal;
  std::size_t const steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Pivot on the entry of least absolute value in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (sgn(at(r, c)) != 0 &&
              (pr == rows || mpz_cmpabs(at(r, c).get_mpz_t(),
                                        at(pr, pc).get_mpz_t()) < 0)) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == rows) {
        break;
      }
      if (pr != t) {
        for (std::size_t c = t; c < cols; ++c) {
          swap(at(pr, c), at(t, c));
        }
      }
      if (pc != t) {
        for (std::size_t r = t; r < rows; ++r) {
          swap(at(r, pc), at(r, t));
        }
      }
      mpz_class const pivot = at(t, t);
      bool clean = true;
      mpz_class q;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (sgn(at(r, t)) == 0) {
          continue;
        }
        mpz_fdiv_q(q.get_mpz_t(), at(r, t).get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) {
          at(r, c) -= q * at(t, c);
        }
        clean = clean && sgn(at(r, t)) == 0;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (sgn(at(t, c)) == 0) {
          continue;
        }
        mpz_fdiv_q(q.get_mpz_t(), at(t, c).get_mpz_t(), pivot.get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) {
          at(r, c) -= q * at(r, t);
        }
        clean = clean && sgn(at(t, c)) == 0;
      }
      if (clean) {
        diagonal.push_back(abs(pivot));
        break;
      }
    }
    if (diagonal.size() <= t) {
      break;  // the trailing block is zero
    }
  }

  // A diagonal matrix diag(d_i) is equivalent to one whose entries form a
  // divisibility chain; replacing (a, b) by (gcd, lcm) converges to it.
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      mpz_class g = gcd(diagonal[i], diagonal[j]);
      mpz_class l = lcm(diagonal[i], diagonal[j]);
      diagonal[i] = g;
      diagonal[j] = l;
    }
  }
  return diagonal;
}

std::string HomologyGroup::format() const {
  std::vector<std::string> terms;
  if (betti == 1) {
    terms.emplace_back("Z");
  } else if (betti > 1) {
    terms.push_back(fmt::format("Z^{}", betti));
  }
  std::map<mpz_class, std::size_t> multiplicity;
  std::vector<mpz_class> order;
  for (auto const& t : torsion) {
    if (multiplicity[t]++ == 0) {
      order.push_back(t);
    }
  }
  for (auto const& t : order) {
    auto m = multiplicity[t];
    if (m == 1) {
      terms.push_back("Z/" + t.get_str());
    } else {
      terms.push_back(fmt::format("(Z/{})^{}", t.get_str(), m));
    }
  }
  if (terms.empty()) {
    return "0";
  }
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    out += " + " + terms[i];
  }
  return out;
}

namespace {

HomologyGroup assemble(ChainComplex const& c, int i,
                       std::vector<mpz_class> const& in,
                       std::vector<mpz_class> const& out) {
  HomologyGroup h;
  h.degree = i;
  h.betti = c.rank(i) - in.size() - out.size();
  for (auto const& d : out) {
    if (d > 1) {
      h.torsion.push_back(d);
    }
  }
  return h;
}

}  // namespace

std::vector<HomologyGroup> homology(ChainComplex const& c) {
  std::vector<std::vector<mpz_class>> invariants;
  for (int n = 0; n <= c.top; ++n) {
    invariants.push_back(smith_invariants(c.boundary[n]));
  }
  std::vector<HomologyGroup> groups;
  for (int i = 0; i < c.top; ++i) {
    groups.push_back(assemble(c, i, invariants[i], invariants[i + 1]));
  }
  return groups;
}

HomologyGroup homology_group(ChainComplex const& c, int i) {
  if (i < 0 || i + 1 > c.top) {
    throw HomologyError(fmt::format(
        "H_{} needs chains up to dimension {}, have {}", i, i + 1, c.top));
  }
  return assemble(c, i, smith_invariants(c.boundary[i]),
                  smith_invariants(c.boundary[i + 1]));
}

}  // namespace simpfib
