#include "obstruct/linking.hpp"

#include <algorithm>
#include <sstream>

#include "obstruct/smith.hpp"

namespace obstruct {

std::string HomologyReport::describe() const {
  if (is_homology_sphere) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion_coefficients) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

HomologyReport first_homology(const IntMatrix& linking_matrix) {
  if (!linking_matrix.is_symmetric()) throw Error("linking matrix must be symmetric");
  const auto snf = smith_normal_form(linking_matrix);
  HomologyReport r;
  const auto factors = snf.invariant_factors();
  for (const auto& d : factors)
    if (d > 1) r.torsion_coefficients.push_back(d);
  r.free_rank = linking_matrix.rows() - factors.size();
  r.is_homology_sphere = r.free_rank == 0 && r.torsion_coefficients.empty();
  return r;
}

Rational hoste_linking(const IntMatrix& linking_matrix, const std::vector<Int>& sigma_linkings,
                       const std::vector<Int>& eta_linkings, const Int& s3_linking) {
  const std::size_t n = linking_matrix.rows();
  if (sigma_linkings.size() != n || eta_linkings.size() != n)
    throw Error("component-linking vector length does not match the linking matrix");
  RatMatrix inv;
  try {
    inv = inverse(linking_matrix);
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("linking matrix is singular: the curves need not be homologically trivial");
  }
  Rational correction = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma_linkings[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) correction += sigma_linkings[i] * inv(i, j) * eta_linkings[j];
  }
  Rational r = Rational(s3_linking) - correction;
  r.canonicalize();
  return r;
}

Rational hoste_linking(const IntMatrix& linking_matrix, const CurveSpec& sigma, const CurveSpec& eta) {
  Int s3;
  if (sigma.id == eta.id) {
    s3 = sigma.pushoff_self_linking;
  } else if (auto it = sigma.cross_pushoff_linkings.find(eta.id); it != sigma.cross_pushoff_linkings.end()) {
    s3 = it->second.this_with_other_pushoff;
  } else if (auto jt = eta.cross_pushoff_linkings.find(sigma.id); jt != eta.cross_pushoff_linkings.end()) {
    s3 = jt->second.other_with_this_pushoff;
  } else {
    throw Error("no S^3 linking data between '" + sigma.id + "' and '" + eta.id + "'");
  }
  return hoste_linking(linking_matrix, sigma.component_linkings, eta.component_linkings, s3);
}

bool SelfLinkingForm::is_integral() const {
  return a.get_den() == 1 && b.get_den() == 1 && c.get_den() == 1;
}

SelfLinkingForm self_linking_form(const IntMatrix& linking_matrix, const TorusCurveBasis& basis) {
  const auto& al = basis.alpha.component_linkings;
  const auto& be = basis.beta.component_linkings;
  // Q(x, y) = lk_Y(x al + y be, (x al + y be)+) expands bilinearly; the cross
  // term collects lk(alpha, beta+) + lk(beta, alpha+) on the S^3 side and
  // twice the symmetric correction a B^-1 b^T.
  SelfLinkingForm q;
  q.a = hoste_linking(linking_matrix, al, al, basis.alpha.pushoff_self_linking);
  q.c = hoste_linking(linking_matrix, be, be, basis.beta.pushoff_self_linking);
  const Rational ab = hoste_linking(linking_matrix, al, be, basis.alpha_with_beta_pushoff);
  const Rational ba = hoste_linking(linking_matrix, be, al, basis.beta_with_alpha_pushoff);
  q.b = ab + ba;
  q.b.canonicalize();
  return q;
}

TorusClass canonical_sign(TorusClass c) {
  if (c.y < 0 || (c.y == 0 && c.x < 0)) {
    c.x = -c.x;
    c.y = -c.y;
  }
  return c;
}

namespace {

TorusClass primitive(const Int& x, const Int& y) {
  Int g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  if (g == 0) throw Error("zero vector has no primitive direction");
  return canonical_sign({x / g, y / g});
}

}  // namespace

ZeroClasses zero_classes(const SelfLinkingForm& form) {
  ZeroClasses out;
  if (form.is_zero()) {
    out.all_classes = true;
    return out;
  }
  // Clear denominators; the zero set is unchanged.
  Int l;
  mpz_lcm(l.get_mpz_t(), form.a.get_den_mpz_t(), form.b.get_den_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), form.c.get_den_mpz_t());
  const Rational lr(l);
  const Int a = Rational(form.a * lr).get_num();
  const Int b = Rational(form.b * lr).get_num();
  const Int c = Rational(form.c * lr).get_num();

  const Int disc = b * b - 4 * a * c;
  if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) return out;
  const Int s = sqrt(disc);

  std::vector<TorusClass> found;
  if (a == 0) {
    // Q = y (b x + c y)
    found.push_back(primitive(1, 0));
    if (b != 0) found.push_back(primitive(-c, b));
  } else {
    // Q = a (x - r1 y)(x - r2 y), r = (-b +- s) / 2a; the class is (num, den).
    for (const Int& root_num : {Int(-b + s), Int(-b - s)}) {
      const Int den = 2 * a;
      if (root_num == 0)
        found.push_back(primitive(0, 1));
      else
        found.push_back(primitive(root_num, den));
    }
  }
  std::sort(found.begin(), found.end(), [](const TorusClass& p, const TorusClass& q) {
    return p.y != q.y ? p.y < q.y : p.x < q.x;
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  out.classes = std::move(found);
  return out;
}

}  // namespace obstruct
