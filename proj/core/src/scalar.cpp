#include "coxlat/scalar.hpp"

#include <mpfr.h>

#include <cctype>
#include <cstdio>
#include <cstdlib>

#include "coxlat/errors.hpp"

namespace coxlat {
namespace {

/*
  Basis bookkeeping.  A basis element is a squarefree product of the
  primes 2, 3, 5, encoded as a 3-bit mask (bit0 ~ 2, bit1 ~ 3, bit2 ~ 5).
  The public basis order (1, r2, r3, r5, r6, r10, r15, r30) differs from
  mask order only by swapping r5 and r6; the permutation is an involution.
*/
constexpr int kMaskToIdx[8] = {0, 1, 2, 4, 3, 5, 6, 7};
constexpr int kIdxToMask[8] = {0, 1, 2, 4, 3, 5, 6, 7};

// Integer pulled out of sqrt(d)*sqrt(e): the primes both masks share.
long common_factor(int mask) {
  long f = 1;
  if (mask & 1) f *= 2;
  if (mask & 2) f *= 3;
  if (mask & 4) f *= 5;
  return f;
}

int radicand_index(int d) {
  for (int i = 0; i < Scalar::kBasis; ++i)
    if (Scalar::kRadicand[i] == d) return i;
  throw input_error("not a basis radicand: " + std::to_string(d));
}

}  // namespace

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::radical(int d) {
  Scalar s;
  s.c_[radicand_index(d)] = 1;
  return s;
}

Scalar Scalar::cos_pi_over(int m) {
  switch (m) {
    case 1:
      return Scalar(-1);
    case 2:
      return Scalar(0);
    case 3:
      return rational(1, 2);
    case 4:
      return rational(1, 2) * radical(2);
    case 5:
      return rational(1, 4) + rational(1, 4) * radical(5);
    case 6:
      return rational(1, 2) * radical(3);
    default:
      throw unsupported_error("cos(pi/m) outside the field for m = " +
                              std::to_string(m));
  }
}

bool Scalar::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (int i = 1; i < kBasis; ++i)
    if (c_[i] != 0) return false;
  return true;
}

Scalar Scalar::operator-() const {
  Scalar r;
  for (int i = 0; i < kBasis; ++i) r.c_[i] = -c_[i];
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (int i = 0; i < kBasis; ++i) c_[i] += o.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (int i = 0; i < kBasis; ++i) c_[i] -= o.c_[i];
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r;
  for (int ma = 0; ma < 8; ++ma) {
    const Rational& x = a.c_[kMaskToIdx[ma]];
    if (x == 0) continue;
    for (int mb = 0; mb < 8; ++mb) {
      const Rational& y = b.c_[kMaskToIdx[mb]];
      if (y == 0) continue;
      r.c_[kMaskToIdx[ma ^ mb]] += x * y * common_factor(ma & mb);
    }
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw input_error("division by zero scalar");
  // Multiply the seven nontrivial Galois conjugates (sign flips of the
  // radicals); the product with *this is then rational.
  Scalar num = Scalar(1);
  for (int sigma = 1; sigma < 8; ++sigma) {
    Scalar conj;
    for (int i = 0; i < kBasis; ++i) {
      int flips = __builtin_popcount(kIdxToMask[i] & sigma);
      conj.c_[i] = (flips & 1) ? Rational(-c_[i]) : c_[i];
    }
    num *= conj;
  }
  Scalar norm = *this * num;
  if (!norm.is_rational() || norm.c_[0] == 0) {
    std::fprintf(stderr, "coxlat: field norm not rational/nonzero\n");
    std::abort();
  }
  Scalar r;
  for (int i = 0; i < kBasis; ++i) r.c_[i] = num.c_[i] / norm.c_[0];
  return r;
}

int Scalar::sign() const {
  if (is_zero()) return 0;
  // Fast path: a single nonzero term has the sign of its coefficient.
  int nonzero = -1;
  for (int i = 0; i < kBasis; ++i) {
    if (c_[i] != 0) {
      if (nonzero >= 0) {
        nonzero = -2;
        break;
      }
      nonzero = i;
    }
  }
  if (nonzero >= 0) return sgn(c_[nonzero]);

  for (mpfr_prec_t prec = 64; prec <= 1024; prec *= 2) {
    mpfr_t lo, hi, slo, shi, t;
    mpfr_inits2(prec, lo, hi, slo, shi, t, (mpfr_ptr) nullptr);
    mpfr_set_zero(lo, 0);
    mpfr_set_zero(hi, 0);
    for (int i = 0; i < kBasis; ++i) {
      if (c_[i] == 0) continue;
      mpfr_sqrt_ui(slo, kRadicand[i], MPFR_RNDD);
      mpfr_sqrt_ui(shi, kRadicand[i], MPFR_RNDU);
      if (sgn(c_[i]) > 0) {
        mpfr_mul_q(t, slo, c_[i].get_mpq_t(), MPFR_RNDD);
        mpfr_add(lo, lo, t, MPFR_RNDD);
        mpfr_mul_q(t, shi, c_[i].get_mpq_t(), MPFR_RNDU);
        mpfr_add(hi, hi, t, MPFR_RNDU);
      } else {
        mpfr_mul_q(t, shi, c_[i].get_mpq_t(), MPFR_RNDD);
        mpfr_add(lo, lo, t, MPFR_RNDD);
        mpfr_mul_q(t, slo, c_[i].get_mpq_t(), MPFR_RNDU);
        mpfr_add(hi, hi, t, MPFR_RNDU);
      }
    }
    int slo_sign = mpfr_sgn(lo);
    int shi_sign = mpfr_sgn(hi);
    mpfr_clears(lo, hi, slo, shi, t, (mpfr_ptr) nullptr);
    if (slo_sign > 0) return 1;
    if (shi_sign < 0) return -1;
  }
  std::fprintf(stderr,
               "coxlat: sign of nonzero scalar unresolved at 1024 bits\n");
  std::abort();
}

double Scalar::approx() const {
  double v = 0;
  static const double roots[8] = {1.0,
                                  1.4142135623730951,
                                  1.7320508075688772,
                                  2.2360679774997896,
                                  2.449489742783178,
                                  3.1622776601683795,
                                  3.872983346207417,
                                  5.477225575051661};
  for (int i = 0; i < kBasis; ++i) v += c_[i].get_d() * roots[i];
  return v;
}

std::string Scalar::str() const {
  std::string out;
  for (int i = 0; i < kBasis; ++i) {
    if (c_[i] == 0) continue;
    Rational q = c_[i];
    if (out.empty()) {
      out = q.get_str();
    } else {
      if (q < 0) {
        out += " - ";
        q = -q;
      } else {
        out += " + ";
      }
      out += q.get_str();
    }
    if (i > 0) out += "*r" + std::to_string(kRadicand[i]);
  }
  return out.empty() ? "0" : out;
}

Scalar Scalar::parse(const std::string& text) {
  Scalar result;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw input_error("empty scalar literal");
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    skip_ws();
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw input_error("expected '+' or '-' in scalar: " + text);
    }
    first = false;
    // Coefficient (optional if the term is a bare radical).
    Rational coeff(1);
    bool saw_coeff = false;
    size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit((unsigned char)text[pos]) || text[pos] == '/'))
      ++pos;
    if (pos > start) {
      std::string digits = text.substr(start, pos - start);
      if (digits.front() == '/' || digits.back() == '/' ||
          digits.find("//") != std::string::npos)
        throw input_error("bad rational literal: " + digits);
      if (mpq_set_str(coeff.get_mpq_t(), digits.c_str(), 10) != 0)
        throw input_error("bad rational literal: " + digits);
      if (coeff.get_den() == 0)
        throw input_error("zero denominator in: " + digits);
      coeff.canonicalize();
      saw_coeff = true;
    }
    skip_ws();
    int radicand = 1;
    bool star = pos < text.size() && text[pos] == '*';
    if (star) {
      ++pos;
      skip_ws();
    }
    if (pos < text.size() && text[pos] == 'r') {
      ++pos;
      size_t dstart = pos;
      while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
      if (pos == dstart) throw input_error("bad radical in scalar: " + text);
      radicand = std::stoi(text.substr(dstart, pos - dstart));
      radicand_index(radicand);  // validation
    } else if (star || !saw_coeff) {
      throw input_error("bad term in scalar: " + text);
    }
    Scalar term = Scalar(coeff) * radical(radicand);
    result += (sign < 0) ? -term : term;
    skip_ws();
  }
  return result;
}

}  // namespace coxlat
