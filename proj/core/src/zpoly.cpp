#include "obstruct/zpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace obstruct {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::monomial(const Int& c, std::size_t degree) {
  std::vector<Int> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPoly::evaluate(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Int g = content();
  if (leading() < 0) g = -g;
  return divide_exact(*this, g);
}

IntPoly IntPoly::derivative() const {
  std::vector<Int> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(d));
}

IntPoly IntPoly::reciprocal() const {
  std::vector<Int> r(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::with_positive_leading() const { return (!is_zero() && leading() < 0) ? -*this : *this; }

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a) {
  IntPoly r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly operator*(const Int& s, const IntPoly& a) {
  std::vector<Int> r = a.coeffs_;
  for (auto& c : r) c *= s;
  return IntPoly(std::move(r));
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    Int mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

IntPoly divide_exact(const IntPoly& a, const Int& d) {
  std::vector<Int> r = a.coefficients();
  for (auto& c : r) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) throw Error("inexact polynomial content division");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return IntPoly(std::move(r));
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Int> rem = a.coefficients();
  std::vector<Int> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto db = static_cast<std::size_t>(b.degree());
  for (std::size_t k = quot.size(); k-- > 0;) {
    Int& top = rem[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;
    Int q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= q * b[i];
    quot[k] = q;
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

namespace {

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> rem = a.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  const Int& lb = b.leading();
  while (rem.size() > db && !rem.empty()) {
    const Int top = rem.back();
    const std::size_t shift = rem.size() - 1 - db;
    for (auto& c : rem) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) rem[shift + i] -= top * b[i];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return IntPoly(std::move(rem));
}

}  // namespace

IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : r.primitive_part();
  }
  return x.primitive_part();
}

IntPoly Factorization::expand() const {
  IntPoly r = IntPoly::constant(unit);
  for (const auto& [f, m] : factors)
    for (unsigned k = 0; k < m; ++k) r = r * f;
  return r;
}

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p < 2^31. Polynomials are coefficient vectors from the
// constant term up, always trimmed.

namespace {

using ModPoly = std::vector<std::int64_t>;

struct Fp {
  std::int64_t p;

  std::int64_t norm(std::int64_t v) const {
    v %= p;
    return v < 0 ? v + p : v;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % p; }
  std::int64_t pow(std::int64_t a, std::int64_t e) const {
    std::int64_t r = 1;
    a = norm(a);
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::int64_t inv(std::int64_t a) const {
    if (norm(a) == 0) throw Error("inverse of zero mod p");
    return pow(a, p - 2);
  }

  static void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  ModPoly reduce(const IntPoly& f) const {
    ModPoly r(f.coefficients().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      Int c;
      mpz_fdiv_r_ui(c.get_mpz_t(), f[i].get_mpz_t(), static_cast<unsigned long>(p));
      r[i] = c.get_si();
    }
    trim(r);
    return r;
  }

  ModPoly add(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = norm((i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0));
    trim(r);
    return r;
  }
  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = norm((i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0));
    trim(r);
    return r;
  }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }
  ModPoly scale(const ModPoly& a, std::int64_t s) const {
    ModPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], norm(s));
    trim(r);
    return r;
  }
  // a = q b + r
  std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) const {
    if (b.empty()) throw Error("division by zero polynomial mod p");
    ModPoly rem = a;
    if (rem.size() < b.size()) return {{}, rem};
    ModPoly q(rem.size() - b.size() + 1, 0);
    const std::int64_t li = inv(b.back());
    for (std::size_t k = q.size(); k-- > 0;) {
      const std::int64_t c = mul(rem[k + b.size() - 1], li);
      q[k] = c;
      if (c == 0) continue;
      for (std::size_t i = 0; i < b.size(); ++i) rem[k + i] = norm(rem[k + i] - mul(c, b[i]));
    }
    trim(q);
    trim(rem);
    return {q, rem};
  }
  ModPoly rem(const ModPoly& a, const ModPoly& b) const { return divmod(a, b).second; }
  ModPoly monic(const ModPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s a + t b = 1 for coprime a, b.
  std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b) const {
    ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      ModPoly s2 = sub(s0, mul(q, s1));
      ModPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.size() != 1) throw Error("Hensel lifting needs coprime factors mod p");
    const std::int64_t li = inv(r0[0]);
    return {scale(s0, li), scale(t0, li)};
  }
  ModPoly derivative(const ModPoly& a) const {
    ModPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mul(a[i], norm(static_cast<std::int64_t>(i))));
    trim(d);
    return d;
  }
  ModPoly powmod(ModPoly base, std::int64_t e, const ModPoly& m) const {
    ModPoly r{1};
    base = rem(base, m);
    while (e > 0) {
      if (e & 1) r = rem(mul(r, base), m);
      base = rem(mul(base, base), m);
      e >>= 1;
    }
    return r;
  }
};

// Irreducible factors of a monic squarefree u over F_p.
std::vector<ModPoly> berlekamp(const Fp& fp, const ModPoly& u) {
  const std::size_t n = u.size() - 1;
  if (n <= 1) return {u};
  // Rows: x^(i p) mod u.
  std::vector<ModPoly> q_rows(n);
  const ModPoly xp = fp.powmod(ModPoly{0, 1}, fp.p, u);
  q_rows[0] = ModPoly{1};
  for (std::size_t i = 1; i < n; ++i) q_rows[i] = fp.rem(fp.mul(q_rows[i - 1], xp), u);

  // Kernel of (Q - I)^T: column j of the system is row j of Q - I.
  std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < q_rows[i].size(); ++j) a[j][i] = q_rows[i][j];
    a[i][i] = fp.norm(a[i][i] - 1);
  }
  std::vector<long> pivot_of_col(n, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    const std::int64_t li = fp.inv(a[row][col]);
    for (auto& v : a[row]) v = fp.mul(v, li);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const std::int64_t f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] = fp.norm(a[r][c] - fp.mul(f, a[row][c]));
    }
    pivot_of_col[col] = static_cast<long>(row);
    ++row;
  }
  std::vector<ModPoly> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    ModPoly v(n, 0);
    v[free] = 1;
    for (std::size_t col = 0; col < n; ++col)
      if (pivot_of_col[col] >= 0) v[col] = fp.norm(-a[static_cast<std::size_t>(pivot_of_col[col])][free]);
    Fp::trim(v);
    basis.push_back(std::move(v));
  }
  const std::size_t r = basis.size();
  std::vector<ModPoly> factors{u};
  if (r == 1) return factors;
  for (const auto& v : basis) {
    if (v.size() <= 1) continue;  // the constant solution
    for (std::int64_t s = 0; s < fp.p && factors.size() < r; ++s) {
      std::vector<ModPoly> next;
      for (const auto& w : factors) {
        if (w.size() <= 2) {
          next.push_back(w);
          continue;
        }
        ModPoly g = fp.gcd(w, fp.sub(v, ModPoly{s}));
        if (g.size() > 1 && g.size() < w.size()) {
          next.push_back(g);
          next.push_back(fp.monic(fp.divmod(w, g).first));
        } else {
          next.push_back(w);
        }
      }
      factors = std::move(next);
    }
    if (factors.size() == r) break;
  }
  return factors;
}

IntPoly lift_to_int(const ModPoly& a) {
  std::vector<Int> c;
  for (auto v : a) c.emplace_back(static_cast<long>(v));
  return IntPoly(std::move(c));
}

IntPoly reduce_mod(const IntPoly& f, const Int& m, bool symmetric) {
  std::vector<Int> c = f.coefficients();
  const Int half = m / 2;
  for (auto& v : c) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (symmetric && v > half) v -= m;
  }
  return IntPoly(std::move(c));
}

// Lift target == g h (mod p) with g monic to target == G H (mod modulus).
std::pair<IntPoly, IntPoly> hensel_pair(const Fp& fp, const IntPoly& target, IntPoly g, IntPoly h, const Int& modulus) {
  const ModPoly gp = fp.reduce(g), hp = fp.reduce(h);
  const auto [s, t] = fp.bezout(gp, hp);
  Int m = fp.p;
  while (m < modulus) {
    IntPoly diff = reduce_mod(target - g * h, modulus, false);
    IntPoly e_int = divide_exact(diff, m);
    const ModPoly e = fp.reduce(e_int);
    auto [q, r] = fp.divmod(fp.mul(t, e), gp);
    const ModPoly dg = r;
    const ModPoly dh = fp.add(fp.mul(s, e), fp.mul(q, hp));
    g = reduce_mod(g + m * lift_to_int(dg), modulus, false);
    h = reduce_mod(h + m * lift_to_int(dh), modulus, false);
    m *= fp.p;
  }
  return {g, h};
}

std::vector<std::int64_t> small_primes() {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 3; out.size() < 60; n += 2) {
    bool prime = true;
    for (std::int64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(n);
  }
  return out;
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coefficients().size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// Irreducible factors of a primitive squarefree f with positive leading
// coefficient.
std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  if (f.degree() <= 1) return {f};

  // Pick the prime (among a few admissible ones) giving the fewest modular
  // factors.
  std::optional<Fp> best;
  std::vector<ModPoly> best_factors;
  int admissible = 0;
  const IntPoly df = f.derivative();
  for (std::int64_t p : small_primes()) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), static_cast<unsigned long>(p))) continue;
    Fp fp{p};
    const ModPoly fm = fp.reduce(f);
    if (fp.gcd(fm, fp.reduce(df)).size() != 1) continue;
    auto facs = berlekamp(fp, fp.monic(fm));
    if (!best || facs.size() < best_factors.size()) {
      best = fp;
      best_factors = std::move(facs);
    }
    if (best_factors.size() == 1 || ++admissible == 5) break;
  }
  if (!best) throw Error("no admissible prime for factorization");
  if (best_factors.size() == 1) return {f};
  const Fp fp = *best;

  // Coefficient bound for lc(f) * (any factor made monic and rescaled).
  Int norm2 = 0;
  for (const auto& c : f.coefficients()) norm2 += c * c;
  Int bound = sqrt(norm2) + 1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
  bound *= abs(f.leading());
  Int modulus = fp.p;
  while (modulus <= 2 * bound) modulus *= fp.p;

  // Multifactor lift, peeling one factor at a time.
  std::vector<IntPoly> lifted;
  IntPoly target = f;
  const Int lc = f.leading();
  for (std::size_t i = 0; i + 1 < best_factors.size(); ++i) {
    ModPoly rest{1};
    for (std::size_t j = i + 1; j < best_factors.size(); ++j) rest = fp.mul(rest, best_factors[j]);
    rest = fp.scale(rest, fp.reduce(IntPoly::constant(lc)).at(0));
    auto [g, h] = hensel_pair(fp, target, lift_to_int(best_factors[i]), lift_to_int(rest), modulus);
    lifted.push_back(std::move(g));
    target = std::move(h);
  }
  // The last factor is target / lc, monic mod the modulus.
  {
    Int inv_lc;
    mpz_invert(inv_lc.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    lifted.push_back(reduce_mod(inv_lc * target, modulus, false));
  }

  // Recombination.
  std::vector<IntPoly> result;
  IntPoly rest = f;
  std::vector<IntPoly> pool = std::move(lifted);
  for (std::size_t size = 1; 2 * size <= pool.size();) {
    bool found = false;
    std::vector<std::size_t> idx(size);
    for (std::size_t k = 0; k < size; ++k) idx[k] = k;
    for (;;) {
      IntPoly g = IntPoly::constant(rest.leading());
      for (auto k : idx) g = reduce_mod(g * pool[k], modulus, true);
      g = g.primitive_part();
      if (auto q = divide_exact(rest, g)) {
        result.push_back(g);
        rest = *q;
        std::vector<IntPoly> remaining;
        for (std::size_t k = 0; k < pool.size(); ++k)
          if (std::find(idx.begin(), idx.end(), k) == idx.end()) remaining.push_back(pool[k]);
        pool = std::move(remaining);
        found = true;
        break;
      }
      // next combination
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == pool.size() - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t m = k; m < size; ++m) idx[m] = idx[m - 1] + 1;
    }
    if (!found) ++size;
  }
  if (rest.degree() > 0) result.push_back(rest.with_positive_leading());
  return result;
}

}  // namespace

Factorization factor(const IntPoly& f) {
  if (f.is_zero()) throw Error("cannot factor the zero polynomial");
  Factorization out;
  out.unit = f.content();
  if (f.leading() < 0) out.unit = -out.unit;
  IntPoly g = f.primitive_part();
  if (g.degree() == 0) return out;

  // Squarefree decomposition (Musser).
  IntPoly c = primitive_gcd(g, g.derivative());
  IntPoly w = *divide_exact(g, c);
  unsigned mult = 1;
  while (w.degree() > 0) {
    IntPoly y = primitive_gcd(w, c);
    IntPoly z = *divide_exact(w, y);
    if (z.degree() > 0)
      for (auto& irr : zassenhaus(z.with_positive_leading())) out.factors.emplace_back(irr, mult);
    w = y;
    c = *divide_exact(c, y);
    ++mult;
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  // Fix the sign so that expand() reproduces f exactly.
  if (out.expand().leading() != f.leading()) out.unit = -out.unit;
  return out;
}

IntPoly determinant(const Matrix<IntPoly>& m) {
  if (!m.is_square()) throw Error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return IntPoly{1};
  Matrix<IntPoly> a = m;
  bool negate = false;
  IntPoly prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return {};
      a.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto q = divide_exact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
        if (!q) throw Error("Bareiss step was not exact");
        a(i, j) = std::move(*q);
      }
      a(i, k) = IntPoly{};
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

}  // namespace obstruct
