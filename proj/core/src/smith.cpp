#include "obstruct/smith.hpp"

#include <optional>

namespace obstruct {
namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| in the trailing block starting at (t, t).
std::optional<Position> min_entry(const IntMatrix& a, std::size_t t) {
  std::optional<Position> best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (!best || abs(a(i, j)) < abs(a(best->row, best->col))) best = Position{i, j};
    }
  return best;
}

}  // namespace

std::vector<Int> SmithForm::invariant_factors() const {
  std::vector<Int> out;
  const std::size_t n = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (D(i, i) != 0) out.push_back(D(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < n; ++t) {
    auto pos = min_entry(a, t);
    if (!pos) break;
    for (;;) {
      a.swap_rows(t, pos->row);
      u.swap_rows(t, pos->row);
      a.swap_cols(t, pos->col);
      v.swap_cols(t, pos->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        a.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; restart with it.
        pos = min_entry(a, t);
        continue;
      }
      // Pivot must divide the rest of the block; otherwise fold the offending
      // row into row t and go again.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < a.rows() && !bad_row; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      a.add_row(t, *bad_row, Int(1));
      u.add_row(t, *bad_row, Int(1));
      pos = Position{t, t};
    }
    if (a(t, t) < 0) {
      for (std::size_t j = 0; j < a.cols(); ++j) a(t, j) = -a(t, j);
      for (std::size_t j = 0; j < u.cols(); ++j) u(t, j) = -u(t, j);
    }
  }
  return SmithForm{std::move(u), std::move(a), std::move(v)};
}

IntMatrix row_hermite_form(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    // Euclid down the column until a single nonzero entry remains at `row`.
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = row; i < a.rows(); ++i)
        if (a(i, col) != 0 && (!best || abs(a(i, col)) < abs(a(*best, col)))) best = i;
      if (!best) break;
      a.swap_rows(row, *best);
      bool done = true;
      for (std::size_t i = row + 1; i < a.rows(); ++i) {
        if (a(i, col) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(row, col).get_mpz_t());
        a.add_row(i, row, -q);
        if (a(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0)
      for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) = -a(row, j);
    for (std::size_t i = 0; i < row; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(row, col).get_mpz_t());
      a.add_row(i, row, -q);
    }
    ++row;
  }
  IntMatrix out(row, a.cols());
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

}  // namespace obstruct
