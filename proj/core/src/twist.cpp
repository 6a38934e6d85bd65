#include "obstruct/twist.hpp"

#include <cstdlib>
#include <numeric>

#include "obstruct/smith.hpp"

namespace obstruct {

std::string to_string(TorusBasis b) { return b == TorusBasis::AlphaBeta ? "alpha,beta" : "mu,lambda"; }

std::string TwistClass::to_string() const {
  const bool ab = basis == TorusBasis::AlphaBeta;
  return x.get_str() + (ab ? "[alpha] + " : "[mu] + ") + y.get_str() + (ab ? "[beta]" : "[lambda]");
}

TwistClass compose(const TwistClass& a, const TwistClass& b) {
  if (a.basis != b.basis) throw Error("cannot compose twist classes in different bases");
  return TwistClass{a.x + b.x, a.y + b.y, a.basis};
}

TwistClass inverse(const TwistClass& a) { return TwistClass{-a.x, -a.y, a.basis}; }

std::string Subgroup2::to_string() const {
  if (rank == 0) return "0";
  std::string out = "<";
  for (std::size_t i = 0; i < generators.rows(); ++i)
    out += (i ? ", (" : "(") + generators(i, 0).get_str() + "," + generators(i, 1).get_str() + ")";
  out += ">";
  out += index ? ", index " + index->get_str() : ", infinite index";
  return out;
}

Subgroup2 extension_subgroup(const std::vector<TwistClass>& extending, TorusBasis basis) {
  IntMatrix m(extending.size(), 2);
  for (std::size_t i = 0; i < extending.size(); ++i) {
    if (extending[i].basis != basis) throw Error("extension subgroup generators must share one basis");
    m(i, 0) = extending[i].x;
    m(i, 1) = extending[i].y;
  }
  Subgroup2 s;
  s.basis = basis;
  s.generators = row_hermite_form(m);
  s.rank = s.generators.rows();
  if (s.rank == 2) s.index = s.generators(0, 0) * s.generators(1, 1);
  return s;
}

TwistClass seifert_orbit_class(long p, long q) {
  if (std::labs(p) < 2 || std::labs(q) < 2 || std::gcd(std::labs(p), std::labs(q)) != 1)
    throw Error("the orbit class needs a nontrivial torus knot: coprime p, q with |p|, |q| >= 2");
  return TwistClass{Int(p) * q, 1, TorusBasis::MuLambda};
}

TwistClass to_alpha_beta(const TwistClass& c) {
  if (c.basis != TorusBasis::MuLambda) throw Error("expected a (mu, lambda) class");
  // mu = alpha, lambda = beta - alpha
  return TwistClass{c.x - c.y, c.y, TorusBasis::AlphaBeta};
}

TwistClass to_mu_lambda(const TwistClass& c) {
  if (c.basis != TorusBasis::AlphaBeta) throw Error("expected an (alpha, beta) class");
  return TwistClass{c.x + c.y, c.y, TorusBasis::MuLambda};
}

}  // namespace obstruct
