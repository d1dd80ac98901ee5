#include "sqfrob/progression.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sqfrob/error.hpp"

namespace sqfrob {

ApSemigroup::ApSemigroup(Integer a, Integer d, Integer k) : a_(a), d_(d), k_(k) {
  if (a < 2) throw Error(ErrorKind::InvalidArgument, "first term a must be >= 2");
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "difference d must be >= 1");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "length k must be >= 1");
  if (std::gcd(a, d) != 1) {
    throw Error(ErrorKind::NonCoprime,
                "gcd(" + std::to_string(a) + ", " + std::to_string(d) + ") != 1");
  }
  // Largest generator must be representable.
  checked_add(a, checked_mul(k, d));
  d_inverse_mod_a_ = mod_inverse(d, a);
  a_inverse_mod_d_ = mod_inverse(a, d);
}

Decomposition ApSemigroup::decompose(Integer value) const {
  const Integer y = narrow(static_cast<Wide>(mod_floor(value, a_)) * d_inverse_mod_a_ % a_);
  const Wide x = (static_cast<Wide>(value) - static_cast<Wide>(d_) * y) / a_;
  return {narrow(x), y};
}

bool ApSemigroup::contains(Integer value) const {
  if (value < 0) throw Error(ErrorKind::NegativeInput, "membership of a negative value");
  const Decomposition dec = decompose(value);
  return dec.x >= 0 && static_cast<Wide>(dec.y) <= static_cast<Wide>(k_) * dec.x;
}

Integer ApSemigroup::frobenius() const {
  const Integer head = checked_mul((a_ - 2) / k_ + 1, a_);
  return checked_sub(checked_add(head, checked_mul(d_ - 1, a_ - 1)), 1);
}

std::vector<Integer> ApSemigroup::generators() const {
  std::vector<Integer> out;
  out.reserve(static_cast<std::size_t>(k_ + 1));
  for (Integer t = 0; t <= k_; ++t) out.push_back(a_ + t * d_);
  return out;
}

NumericalSemigroup ApSemigroup::expand() const {
  const auto gens = generators();
  return NumericalSemigroup(gens);
}

Integer ApSemigroup::lambda(Integer i) const {
  const Integer r = mod_floor(i, d_);
  const Wide sq = static_cast<Wide>(r) * r % d_;
  return mod_floor(narrow(-(sq * a_inverse_mod_d_ % d_)), d_);
}

LambdaProfile lambda_profile(Integer a, Integer d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "d must be >= 1");
  const Integer inverse = mod_inverse(a, d);
  LambdaProfile p;
  p.d = d;
  p.lambdas.resize(static_cast<std::size_t>(d));
  for (Integer i = 0; i < d; ++i) {
    const Wide sq = static_cast<Wide>(i) * i % d;
    p.lambdas[i] = mod_floor(narrow(-(sq * inverse % d)), d);
  }
  p.lambda_star = *std::max_element(p.lambdas.begin(), p.lambdas.end());
  for (Integer i = 0; i < d; ++i) {
    if (p.lambdas[i] == p.lambda_star) p.alphas.push_back(i);
  }
  p.alpha_next = d + p.alphas.front();
  return p;
}

bool square_in_ap(const ApSemigroup& s, Integer i) {
  const Wide a = s.a(), d = s.d(), k = s.k();
  const Wide lambda = s.lambda(i);
  const Wide numerator = static_cast<Wide>(i) * i + lambda * a;
  const Wide quotient = numerator / (a * d);
  const Wide lhs = (static_cast<Wide>(i) + k * d) * (static_cast<Wide>(i) + k * d);
  const Wide rhs = ((quotient + k) * d - lambda) * (a + k * d);
  return lhs <= rhs;
}

MuJ mu_j(const ApSemigroup& s) { return mu_j(s, lambda_profile(s.a(), s.d())); }

MuJ mu_j(const ApSemigroup& s, const LambdaProfile& profile) {
  const Integer d = s.d();
  if (d < 3) throw Error(ErrorKind::DTooSmall, "the bracket needs d >= 3");
  const Integer kd = checked_mul(s.k(), d);
  const Integer target = checked_mul(kd - profile.lambda_star, checked_add(s.a(), kd));
  const Integer root = isqrt(target);
  const Integer cell = root / d;
  const Integer within = root % d;

  MuJ out;
  out.target = target;
  // Largest alpha_j <= within; none means the cell below.
  auto it = std::upper_bound(profile.alphas.begin(), profile.alphas.end(), within);
  if (it == profile.alphas.begin()) {
    out.mu = cell - 1;
    out.j = profile.n();
  } else {
    out.mu = cell;
    out.j = static_cast<std::size_t>(it - profile.alphas.begin());
  }
  return out;
}

SquareBound bound_b(const ApSemigroup& s) { return bound_b(s, lambda_profile(s.a(), s.d())); }

SquareBound bound_b(const ApSemigroup& s, const LambdaProfile& profile) {
  SquareBound out;
  out.bracket = mu_j(s, profile);
  out.offset = checked_add(checked_mul(out.bracket.mu - s.k(), s.d()),
                           profile.alpha(out.bracket.j + 1));
  const Integer diff = checked_sub(s.a(), out.offset);
  out.root = diff < 0 ? -diff : diff;
  out.value = checked_mul(out.root, out.root);
  return out;
}

bool bound_hypothesis(const ApSemigroup& s) {
  const Wide d = s.d(), k = s.k();
  return static_cast<Wide>(s.a()) + k * d >= 4 * k * d * d * d;
}

bool weak_bound_hypothesis(const ApSemigroup& s, const LambdaProfile& profile) {
  const Wide d = s.d(), k = s.k();
  return static_cast<Wide>(s.a()) + k * d > 4 * (k * d - profile.lambda_star) * d * d + d * d;
}

}  // namespace sqfrob
