#include "cb/ordinal.hpp"

#include <cassert>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "cb/ordinal_text.hpp"

namespace cb {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw std::overflow_error("ordinal coefficient overflow");
  }
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) {
    throw std::overflow_error("ordinal coefficient overflow");
  }
  return a + b;
}

std::strong_ordering compare_terms(const Ordinal::Term& a, const Ordinal::Term& b) {
  auto c = a.exponent <=> b.exponent;
  if (c != 0) return c;
  return a.coefficient <=> b.coefficient;
}

}  // namespace

Ordinal::Ordinal(std::uint64_t n) {
  if (n > 0) terms_.push_back(Term{Ordinal(), n});
}

Ordinal Ordinal::omega() { return omega_pow(Ordinal(1)); }

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::uint64_t Ordinal::finite_value() const {
  if (!is_finite()) throw OutOfRange("ordinal is infinite");
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

bool Ordinal::is_limit() const {
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}

const Ordinal& Ordinal::head_exponent() const {
  if (terms_.empty()) throw OutOfRange("zero has no leading exponent");
  return terms_[0].exponent;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
#ifndef NDEBUG
  for (std::size_t i = 0; i < terms.size(); ++i) {
    assert(terms[i].coefficient >= 1);
    if (i + 1 < terms.size()) assert(terms[i + 1].exponent < terms[i].exponent);
  }
#endif
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
    if (!(a.terms_[i].exponent == b.terms_[i].exponent)) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = compare_terms(a.terms_[i], b.terms_[i]);
    if (c != 0) return c;
  }
  // A proper CNF prefix is strictly smaller: the longer list adds more mass.
  return a.terms_.size() <=> b.terms_.size();
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.terms_[0].exponent;
  std::vector<Ordinal::Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  // Keep the part of a that survives absorption by b's leading term.
  for (const auto& t : a.terms_) {
    if (t.exponent > lead) {
      out.push_back(t);
    } else {
      break;
    }
  }
  std::size_t kept = out.size();
  bool merged = kept < a.terms_.size() && a.terms_[kept].exponent == lead;
  out.push_back(b.terms_[0]);
  if (merged) out.back().coefficient = checked_add(out.back().coefficient, a.terms_[kept].coefficient);
  out.insert(out.end(), b.terms_.begin() + 1, b.terms_.end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal operator*(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  std::vector<Ordinal::Term> out;
  out.reserve(b.terms_.size() + a.terms_.size());
  const Ordinal& ahead = a.terms_[0].exponent;
  for (const auto& t : b.terms_) {
    if (!t.exponent.is_zero()) {
      // a * w^e * c = w^{head(a)+e} * c for e > 0.
      out.push_back(Ordinal::Term{ahead + t.exponent, t.coefficient});
    } else {
      // Finite factor scales the leading coefficient and keeps a's tail.
      out.push_back(Ordinal::Term{ahead, checked_mul(a.terms_[0].coefficient, t.coefficient)});
      out.insert(out.end(), a.terms_.begin() + 1, a.terms_.end());
    }
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal omega_pow(const Ordinal& e) {
  return Ordinal::from_terms({Ordinal::Term{e, 1}});
}

Ordinal pred(const Ordinal& a) {
  if (!a.is_successor()) throw NotSuccessor();
  std::vector<Ordinal::Term> terms = a.terms();
  if (terms.back().coefficient > 1) {
    terms.back().coefficient -= 1;
  } else {
    terms.pop_back();
  }
  return Ordinal::from_terms(std::move(terms));
}

Ordinal left_subtract(const Ordinal& b, const Ordinal& a) {
  if (b > a) throw Underflow();
  const auto& bt = b.terms();
  const auto& at = a.terms();
  std::size_t i = 0;
  while (i < bt.size() && i < at.size() && compare_terms(bt[i], at[i]) == 0) ++i;
  if (i == bt.size()) {
    // b is a CNF prefix of a; the remainder restarts below the prefix.
    return Ordinal::from_terms({at.begin() + i, at.end()});
  }
  // First divergence: same exponent with a larger coefficient on a's side,
  // or a jumps to a smaller exponent block; b's tail is absorbed either way.
  std::vector<Ordinal::Term> out;
  if (bt[i].exponent == at[i].exponent) {
    out.push_back(Ordinal::Term{at[i].exponent, at[i].coefficient - bt[i].coefficient});
    out.insert(out.end(), at.begin() + i + 1, at.end());
  } else {
    out.insert(out.end(), at.begin() + i, at.end());
  }
  return Ordinal::from_terms(std::move(out));
}

bool divides_omega_pow(const Ordinal& beta, const Ordinal& delta) {
  if (delta.is_zero()) return false;
  return delta.terms().back().exponent >= beta;
}

Ordinal fundamental_sequence(const Ordinal& lambda, std::uint64_t n) {
  if (!lambda.is_limit()) throw NotLimit();
  std::vector<Ordinal::Term> prefix = lambda.terms();
  Ordinal::Term last = prefix.back();
  prefix.pop_back();
  if (last.coefficient > 1) {
    last.coefficient -= 1;
    prefix.push_back(last);
  }
  Ordinal base = Ordinal::from_terms(std::move(prefix));
  const Ordinal& g = last.exponent;
  if (g.is_successor()) {
    return base + omega_pow(pred(g)) * Ordinal(n);
  }
  return base + omega_pow(fundamental_sequence(g, n));
}

Ordinal scheme_child_rank(const RankScheme& scheme, std::uint64_t n) {
  if (const auto* c = std::get_if<ConstRank>(&scheme)) return c->rho;
  return fundamental_sequence(std::get<FundamentalRank>(scheme).lambda, n);
}

Ordinal scheme_rank(const RankScheme& scheme) {
  if (const auto* c = std::get_if<ConstRank>(&scheme)) return c->rho + Ordinal(1);
  return std::get<FundamentalRank>(scheme).lambda;
}

void check_scheme(const RankScheme& scheme) {
  if (const auto* f = std::get_if<FundamentalRank>(&scheme)) {
    if (!f->lambda.is_limit()) throw NotLimit();
  }
}

bool operator==(const RankScheme& a, const RankScheme& b) {
  if (a.index() != b.index()) return false;
  if (const auto* c = std::get_if<ConstRank>(&a)) {
    return c->rho == std::get<ConstRank>(b).rho;
  }
  return std::get<FundamentalRank>(a).lambda == std::get<FundamentalRank>(b).lambda;
}

Ordinal tau_closed_form(const RankScheme& scheme, const AffineCoeffs& coeffs) {
  check_scheme(scheme);
  if (coeffs.intercept < 1) throw InvalidTerm("coefficient sequence must stay positive");
  return omega_pow(scheme_rank(scheme));
}

Ordinal tau_partial_sum(const RankScheme& scheme, const AffineCoeffs& coeffs, std::uint64_t n) {
  Ordinal sum;
  for (std::uint64_t k = 0; k <= n; ++k) {
    sum = sum + omega_pow(scheme_child_rank(scheme, k)) * Ordinal(coeffs.at(k));
  }
  return sum;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) {
  return os << print_ordinal(a);
}

}  // namespace cb
