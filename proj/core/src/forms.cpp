#include "obstruct/forms.hpp"

#include <numeric>
#include <set>

namespace obstruct {

SymUnimodularForm::SymUnimodularForm(IntMatrix q) : q_(std::move(q)) {
  if (!q_.is_symmetric()) throw Error("intersection form must be symmetric");
  if (abs(determinant(q_)) != 1) throw Error("intersection form must be unimodular, det = " + determinant(q_).get_str());
}

SymUnimodularForm SymUnimodularForm::e8() {
  // Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
  IntMatrix m(8, 8);
  for (std::size_t i = 0; i < 8; ++i) m(i, i) = 2;
  const std::size_t edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (const auto& e : edges) m(e[0], e[1]) = m(e[1], e[0]) = -1;
  return SymUnimodularForm(std::move(m));
}

SymUnimodularForm SymUnimodularForm::hyperbolic() { return SymUnimodularForm(IntMatrix{{0, 1}, {1, 0}}); }

SymUnimodularForm SymUnimodularForm::negated() const { return SymUnimodularForm(-q_); }

SymUnimodularForm operator+(const SymUnimodularForm& a, const SymUnimodularForm& b) {
  return SymUnimodularForm(block_diagonal(a.q_, b.q_));
}

Parity parity(const SymUnimodularForm& q) {
  for (std::size_t i = 0; i < q.rank(); ++i)
    if (!mpz_even_p(q.matrix()(i, i).get_mpz_t())) return Parity::Odd;
  return Parity::Even;
}

int exact_signature(const SymUnimodularForm& q) { return congruence_inertia(q.matrix()).signature(); }

bool is_definite(const SymUnimodularForm& q) {
  if (q.rank() == 0) return false;
  const auto in = congruence_inertia(q.matrix());
  return in.positive == 0 || in.negative == 0;
}

std::string EvenFormClass::to_string() const {
  if (e8_count == 0 && h_count == 0) return "0";
  std::string out;
  auto append = [&](const std::string& term, long count) {
    if (count == 0) return;
    if (!out.empty()) out += " + ";
    out += (count == 1 ? "" : std::to_string(count)) + term;
  };
  if (e8_count > 0) append("E8", e8_count);
  if (e8_count < 0) append("(-E8)", -e8_count);
  append("H", h_count);
  return out;
}

SymUnimodularForm EvenFormClass::realize() const {
  if (h_count < 0) throw Error("negative hyperbolic count");
  SymUnimodularForm out;
  const auto e8 = e8_count >= 0 ? SymUnimodularForm::e8() : SymUnimodularForm::e8().negated();
  for (long k = 0; k < (e8_count < 0 ? -e8_count : e8_count); ++k) out = out + e8;
  for (long k = 0; k < h_count; ++k) out = out + SymUnimodularForm::hyperbolic();
  return out;
}

EvenFormClass classify_indefinite_even(const SymUnimodularForm& q) {
  if (parity(q) == Parity::Odd) throw Error("form is odd; the even classification does not apply");
  if (is_definite(q))
    throw Error("form is definite; the indefinite classification does not apply");
  const long sigma = exact_signature(q);
  const long rank = static_cast<long>(q.rank());
  // Even unimodular forms have sigma == 0 (mod 8).
  if (sigma % 8 != 0) throw Error("even unimodular form with signature not divisible by 8");
  EvenFormClass c;
  c.e8_count = sigma / 8;
  c.h_count = (rank - 8 * (c.e8_count < 0 ? -c.e8_count : c.e8_count)) / 2;
  return c;
}

bool SignatureCongruence::admits(long signature) const {
  long r = (signature - residue) % 16;
  return r == 0;
}

std::string SignatureCongruence::to_string() const {
  return "sigma == " + std::to_string(((residue % 16) + 16) % 16) + " (mod 16)";
}

SignatureCongruence rohlin_constraint(int rho) {
  if (rho != 0 && rho != 1) throw Error("Rohlin invariant must be 0 or 1");
  return SignatureCongruence{8L * rho};
}

std::vector<Splitting> enumerate_even_splittings(const EvenFormClass& total,
                                                 const std::optional<SignatureCongruence>& first,
                                                 const std::optional<SignatureCongruence>& second) {
  std::vector<Splitting> out;
  if (total.h_count < 0) throw Error("negative hyperbolic count");
  const long rank = total.rank();
  const long max_e8 = rank / 8;
  for (long a1 = -max_e8; a1 <= max_e8; ++a1) {
    const long a2 = total.e8_count - a1;
    const long used = 8 * (std::labs(a1) + std::labs(a2));
    if (used > rank || (rank - used) % 2 != 0) continue;
    const long h_total = (rank - used) / 2;
    for (long h1 = 0; h1 <= h_total; ++h1) {
      Splitting s{{a1, h1}, {a2, h_total - h1}};
      if (first && !first->admits(s.first.signature())) continue;
      if (second && !second->admits(s.second.signature())) continue;
      out.push_back(s);
    }
  }
  return out;
}

std::vector<long> quadratic_residues(long p) {
  if (p < 1) throw Error("modulus must be positive");
  std::set<long> r;
  for (long k = 0; k < p; ++k) r.insert((k * k) % p);
  return {r.begin(), r.end()};
}

bool lens_qr_bounding(long p, long q) {
  if (p < 2 || q <= 0 || q >= p || std::gcd(p, q) != 1)
    throw Error("lens space L(p,q) needs p >= 2, 0 < q < p and gcd(p,q) = 1");
  // Euler's criterion would need p prime; the residue set handles any p.
  const auto residues = quadratic_residues(p);
  const std::set<long> r(residues.begin(), residues.end());
  return r.count(q % p) > 0 || r.count((p - q) % p) > 0;
}

}  // namespace obstruct
