#include "gridtrail/bounds.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "gridtrail/errors.hpp"

namespace gridtrail::bounds {

namespace {

Integer ipow(long base, long exp) {
  Integer r;
  Integer b(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

// base^exp for any integer exp, as an exact rational.
Rational rpow(long base, long exp) {
  if (exp >= 0) return Rational(ipow(base, exp));
  Rational r(Integer(1), ipow(base, -exp));
  r.canonicalize();
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

Integer lower_trivial_long_form(long n, long k) {
  require(n >= 3 && k >= 3, "lower_trivial: requires n >= 3 and k >= 3");
  const Integer nn(n);
  const Integer kk(k);
  const Integer numerator =
      ipow(n, k) - (kk - 2) * nn * nn + (kk - 2) * nn - nn + nn * ((kk - 2) * nn - kk + 2);
  return ceil_div(numerator, nn - 1) + 1;
}

Integer lower_trivial(long n, long k) {
  require(n >= 3 && k >= 3, "lower_trivial: requires n >= 3 and k >= 3");
  const Integer simplified = (ipow(n, k) - 1) / (n - 1);
  if (simplified != lower_trivial_long_form(n, k)) {
    throw std::logic_error("lower_trivial: long and simplified forms disagree");
  }
  return simplified;
}

Integer lower_general(const Grid& g) {
  const auto& d = g.dims();
  const std::size_t k = d.size();
  require(k >= 2, "lower_general: requires at least two axes");
  require(d.front() >= 3, "lower_general: requires n1 >= 3");
  Integer product(1);
  for (Coord n : d) product *= Integer(static_cast<long>(n));
  Integer head_sum(0);
  for (std::size_t i = 0; i + 2 < k; ++i) head_sum += Integer(static_cast<long>(d[i]));
  const Integer kk(static_cast<long>(k));
  const Integer numerator = 3 * (product - head_sum + kk - 3);
  const Integer denominator = 2 * Integer(static_cast<long>(d[k - 1])) + Integer(static_cast<long>(d[k - 2])) - 3;
  return ceil_div(numerator, denominator) + kk - 2;
}

Integer upper_3d(long n) {
  require(n >= 3, "upper_3d: requires n >= 3");
  const Integer nn(n);
  return floor_div(3 * nn * nn, 2) - floor_div(nn - 1, 4) + floor_div(nn + 1, 4) -
         floor_div(nn + 2, 4) + floor_div(nn, 4) + nn - 2;
}

Integer upper_k(long n, long k) {
  require(n >= 3 && k >= 3, "upper_k: requires n >= 3 and k >= 3");
  return (upper_3d(n) + 1) * ipow(n, k - 3) - 1;
}

Rational kranakis_rhs(long n, long k, const Rational& c) {
  require(k >= 2, "kranakis_rhs: requires k >= 2");
  require(n >= 1, "kranakis_rhs: requires n >= 1");
  require(sgn(c) >= 0, "kranakis_rhs: requires c >= 0");
  Rational lead(Integer(k), Integer(k - 1));
  lead.canonicalize();
  Rational r = lead * Rational(ipow(n, k - 1)) + c * Rational(ipow(n, k - 2));
  r.canonicalize();
  return r;
}

int SurdValue::compare(const Rational& x) const {
  const Rational d = rational - x;
  const int sd = sgn(d);
  const int ss = sgn(coeff);
  if (ss == 0) return sd;
  if (sd == 0 || sd == ss) return ss;
  const int c = cmp(Rational(d * d), Rational(coeff * coeff * radicand));
  if (c > 0) return sd;
  if (c < 0) return ss;
  return 0;
}

std::string SurdValue::to_string() const {
  std::ostringstream os;
  os << rational.get_str();
  if (sgn(coeff) != 0) {
    os << (sgn(coeff) < 0 ? " - " : " + ") << Rational(abs(coeff)).get_str() << "*sqrt" << radicand;
  }
  return os.str();
}

std::string SurdValue::to_decimal(int digits) const {
  const mp_bitcnt_t bits = static_cast<mp_bitcnt_t>(digits) * 4 + 64;
  mpf_class v(rational, bits);
  if (sgn(coeff) != 0) v += mpf_class(coeff, bits) * sqrt(mpf_class(radicand, bits));
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

SurdValue bereg_rhs(long n, long k) {
  require(k >= 2, "bereg_rhs: requires k >= 2");
  require(n >= 1, "bereg_rhs: requires n >= 1");
  SurdValue v;
  v.rational = kranakis_rhs(n, k, 0);
  v.coeff = Rational(ipow(n, k - 2));
  v.radicand = n;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), Integer(n).get_mpz_t());
  if (root * root == n) {
    v.rational += v.coeff * Rational(root);
    v.coeff = 0;
    v.radicand = 1;
  }
  return v;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::eq9: return "eq9";
    case Provenance::keszegh_k2: return "keszegh_k2";
    case Provenance::trivial_small: return "trivial_small";
  }
  return "unknown";
}

std::optional<ExactValue> exact_known(long n, long k) {
  if (n < 1 || k < 1) return std::nullopt;
  if (n == 1) return ExactValue{0, Provenance::trivial_small};
  if (n == 3) return ExactValue{(ipow(3, k) - 1) / 2, Provenance::eq9};
  if (k == 1) return ExactValue{1, Provenance::trivial_small};
  if (k == 2 && n >= 3) return ExactValue{Integer(2 * n - 2), Provenance::keszegh_k2};
  return std::nullopt;
}

std::optional<LiteratureBound> literature_upper(long n, long k) {
  if (n == 4 && k == 3) return LiteratureBound{23, "literature: h(4,3) <= 23"};
  if (n == 5 && k == 3) return LiteratureBound{36, "literature: h(5,3) <= 36"};
  return std::nullopt;
}

Sandwich sandwich_check(long k) {
  require(k >= 2, "sandwich_check: requires k >= 2");
  const Rational h((ipow(3, k) - 1) / 2);
  Sandwich s;
  s.kranakis_below = kranakis_rhs(3, k, 1) < h;
  s.bereg_above = bereg_rhs(3, k).compare(h) >= 0;
  return s;
}

Rational efficiency_loss_bound(long n) {
  require(n >= 2, "efficiency_loss_bound: requires n >= 2");
  Rational r(Integer(n * n - n - 2), Integer(3 * n + 2));
  r.canonicalize();
  return r;
}

StrictInequality eq10(long k) {
  require(k >= 1, "eq10: requires k >= 1");
  StrictInequality s;
  s.lhs = Rational((ipow(3, k) - 1) / 2);
  s.rhs = rpow(3, k - 1) + Rational(3, 2) * rpow(3, k - 2);
  s.rhs.canonicalize();
  return s;
}

bool eq10_check(long k) { return eq10(k).holds(); }

std::optional<long> first_kranakis_violation(const Rational& c, long k_max) {
  for (long k = 2; k <= k_max; ++k) {
    if (Rational((ipow(3, k) - 1) / 2) > kranakis_rhs(3, k, c)) return k;
  }
  return std::nullopt;
}

std::string to_string(Basis b) {
  switch (b) {
    case Basis::exact: return "exact";
    case Basis::upper_bound: return "upper_bound";
    case Basis::lower_bound: return "lower_bound";
  }
  return "unknown";
}

RatioReport ratio_report(long n, long k, const LinkEstimate& estimate) {
  require(n >= 2 && k >= 1, "ratio_report: requires n >= 2 and k >= 1");
  require(estimate.value > 0, "ratio_report: link-length must be positive");
  RatioReport r;
  r.n = n;
  r.k = k;
  r.h = estimate.value;
  r.basis = estimate.basis;
  r.source = estimate.source;
  r.points_per_link = Rational(ipow(n, k), estimate.value);
  r.points_per_link.canonicalize();
  r.ratio = r.points_per_link / Rational(n - 1);
  r.ratio.canonicalize();
  r.loss_bound = efficiency_loss_bound(n);
  return r;
}

bool k2_identity(long n) {
  require(n >= 2, "k2_identity: requires n >= 2");
  const Rational m(n - 1);
  Rational lhs = Rational(n * n) / (m * Rational(2 * n - 2));
  Rational rhs = Rational(1) / (2 * m * m) + Rational(1) / m + Rational(1, 2);
  lhs.canonicalize();
  rhs.canonicalize();
  return lhs == rhs;
}

RatioChain ratio_chain(long n, long k, const std::optional<LinkEstimate>& h_n,
                       const std::optional<LinkEstimate>& h_next) {
  RatioChain chain;
  if (h_n) chain.left = ratio_report(n, k, *h_n);
  if (h_next) chain.right = ratio_report(n + 1, k, *h_next);
  if (k == 2) chain.k2_identity = k2_identity(n);
  if (!h_n || !h_next) {
    std::ostringstream os;
    os << "no link-length available for";
    if (!h_n) os << " h(" << n << "," << k << ")";
    if (!h_next) os << " h(" << n + 1 << "," << k << ")";
    chain.unavailable = os.str();
    return chain;
  }
  chain.verdict = chain.left->ratio > chain.right->ratio;
  return chain;
}

std::optional<LinkEstimate> default_estimate(long n, long k, Basis preference) {
  if (auto exact = exact_known(n, k)) {
    return LinkEstimate{exact->value, Basis::exact, to_string(exact->provenance)};
  }
  std::optional<LinkEstimate> best;
  if (preference == Basis::upper_bound) {
    if (n >= 3 && k >= 3) best = LinkEstimate{upper_k(n, k), Basis::upper_bound, "upper_k"};
    if (auto lit = literature_upper(n, k); lit && (!best || lit->value < best->value)) {
      best = LinkEstimate{lit->value, Basis::upper_bound, lit->source};
    }
  } else if (preference == Basis::lower_bound) {
    if (n >= 3 && k >= 3) best = LinkEstimate{lower_trivial(n, k), Basis::lower_bound, "lower_trivial"};
    if (n >= 3 && k >= 2) {
      const Integer g = lower_general(Grid::hypercube(n, static_cast<std::size_t>(k)));
      if (!best || g > best->value) best = LinkEstimate{g, Basis::lower_bound, "lower_general"};
    }
  }
  return best;
}

std::optional<Integer> BoundsReport::max_lower() const {
  std::optional<Integer> best;
  for (const auto* v : {&lower_trivial.value, &lower_general.value, &line_cover_lb}) {
    if (*v && (!best || **v > *best)) best = **v;
  }
  return best;
}

std::optional<Integer> BoundsReport::min_upper() const {
  std::optional<Integer> best;
  for (const auto* v : {&upper_3d.value, &upper_k.value}) {
    if (*v && (!best || **v < *best)) best = **v;
  }
  if (literature && (!best || literature->value < *best)) best = literature->value;
  return best;
}

std::vector<std::string> BoundsReport::consistency_errors() const {
  std::vector<std::string> errors;
  const auto lo = max_lower();
  const auto hi = min_upper();
  if (lo && hi && *lo > *hi) {
    errors.push_back("lower bound " + lo->get_str() + " exceeds upper bound " + hi->get_str());
  }
  if (exact) {
    if (lo && exact->value < *lo) errors.push_back("exact value below lower bound " + lo->get_str());
    if (hi && exact->value > *hi) errors.push_back("exact value above upper bound " + hi->get_str());
  }
  return errors;
}

BoundsReport make_report(const Grid& g, const std::vector<Rational>& constants) {
  BoundsReport r{g, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  const bool hyper = g.is_hypercubic();
  const long n = static_cast<long>(g.dims().front());
  const long k = static_cast<long>(g.dimension());

  auto fill = [](Labeled& slot, bool applies, const std::string& why, auto&& compute) {
    if (applies) {
      slot.value = compute();
    } else {
      slot.note = "n/a: " + why;
    }
  };
  fill(r.lower_trivial, hyper && n >= 3 && k >= 3, hyper ? "requires n >= 3 and k >= 3" : "hypercubic grids only",
       [&] { return lower_trivial(n, k); });
  fill(r.lower_general, n >= 3 && k >= 2, k < 2 ? "requires k >= 2" : "requires n1 >= 3",
       [&] { return lower_general(g); });
  fill(r.upper_3d, hyper && n >= 3 && k == 3, hyper ? "requires n >= 3 and k = 3" : "hypercubic grids only",
       [&] { return upper_3d(n); });
  fill(r.upper_k, hyper && n >= 3 && k >= 3, hyper ? "requires n >= 3 and k >= 3" : "hypercubic grids only",
       [&] { return upper_k(n, k); });

  if (hyper) {
    r.literature = literature_upper(n, k);
    r.exact = exact_known(n, k);
    if (k >= 2) {
      for (const Rational& c : constants) r.kranakis.emplace_back(c, kranakis_rhs(n, k, c));
      r.bereg = bereg_rhs(n, k);
    }
    if (n == 3) {
      if (k >= 2) r.sandwich = sandwich_check(k);
      r.eq10 = eq10(k);
    }
    if (n >= 2) r.loss_bound = efficiency_loss_bound(n);
  }
  return r;
}

std::optional<Integer> best_known_upper(const Grid& g) {
  if (!g.is_hypercubic()) return std::nullopt;
  const long n = static_cast<long>(g.dims().front());
  const long k = static_cast<long>(g.dimension());
  std::optional<Integer> best;
  if (auto e = exact_known(n, k)) best = e->value;
  if (n >= 3 && k >= 3) {
    const Integer u = upper_k(n, k);
    if (!best || u < *best) best = u;
  }
  if (auto lit = literature_upper(n, k); lit && (!best || lit->value < *best)) best = lit->value;
  return best;
}

}  // namespace gridtrail::bounds
