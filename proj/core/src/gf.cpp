#include "shlin/gf.hpp"

#include <algorithm>
#include <sstream>

#include "shlin/error.hpp"

namespace shlin {

namespace {

using Poly = std::vector<int>;  // coefficients over F_p, lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor.
Poly poly_mod(Poly a, const Poly& monic, int p) {
  trim(a);
  const std::size_t dm = monic.size() - 1;
  while (a.size() > dm) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = ((a[shift + i] - lead * monic[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly decode_poly(int code, int p, int m) {
  Poly out(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

int encode_poly(const Poly& a, int p) {
  int code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

int ipow(int base, int e) {
  int r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

bool is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(int p, const std::vector<int>& coeffs) {
  Poly f = coeffs;
  trim(f);
  if (f.size() < 2) return false;
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg == 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    // every monic divisor candidate of degree d
    const int count = ipow(p, d);
    for (int low = 0; low < count; ++low) {
      Poly g = decode_poly(low, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<int> default_modulus(int p, int m) {
  if (m == 1) return {};
  if (p == 2 && m == 2) return {1, 1, 1};
  if (p == 2 && m == 3) return {1, 1, 0, 1};
  if (p == 3 && m == 2) return {1, 0, 1};
  const int count = ipow(p, m);
  for (int low = 0; low < count; ++low) {
    Poly f = decode_poly(low, p, m);
    f.push_back(1);
    if (is_irreducible(p, f)) return f;
  }
  throw Error(ErrorCode::ReduciblePolynomial, "no irreducible polynomial found");
}

Field::Field(int p, int m, std::vector<int> modulus, bool is_default)
    : p_(p), m_(m), q_(ipow(p, m)), modulus_(std::move(modulus)), default_modulus_(is_default) {
  const std::size_t qq = static_cast<std::size_t>(q_);
  add_.resize(qq * qq);
  mul_.resize(qq * qq);
  neg_.resize(qq);
  inv_.assign(qq, 0);
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      add_[index(static_cast<Elem>(a), static_cast<Elem>(b))] =
          add_direct(static_cast<Elem>(a), static_cast<Elem>(b));
      mul_[index(static_cast<Elem>(a), static_cast<Elem>(b))] =
          mul_direct(static_cast<Elem>(a), static_cast<Elem>(b));
    }
  }
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      if (add(static_cast<Elem>(a), static_cast<Elem>(b)) == 0) neg_[a] = static_cast<Elem>(b);
      if (a != 0 && mul(static_cast<Elem>(a), static_cast<Elem>(b)) == 1) inv_[a] = static_cast<Elem>(b);
    }
  }
}

Elem Field::add_direct(Elem a, Elem b) const noexcept {
  int out = 0;
  int scale = 1;
  int x = a;
  int y = b;
  for (int i = 0; i < m_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<Elem>(out);
}

Elem Field::mul_direct(Elem a, Elem b) const noexcept {
  if (m_ == 1) return static_cast<Elem>((static_cast<int>(a) * b) % p_);
  const Poly x = decode_poly(a, p_, m_);
  const Poly y = decode_poly(b, p_, m_);
  Poly prod(static_cast<std::size_t>(2 * m_ - 1), 0);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  }
  return static_cast<Elem>(encode_poly(poly_mod(prod, modulus_, p_), p_));
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::vector<Elem> Field::nonzero_elems() const {
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(q_ - 1));
  for (int a = 1; a < q_; ++a) out.push_back(static_cast<Elem>(a));
  return out;
}

std::string Field::header() const {
  std::ostringstream os;
  os << "q=" << q_;
  if (!default_modulus_) {
    os << " poly=";
    for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  }
  return os.str();
}

FieldPtr make_field(int p, int m, std::optional<std::vector<int>> modulus_override) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw Error(ErrorCode::UnsupportedOrder, "field order exceeds " + std::to_string(kMaxFieldOrder));
    }
  }

  if (m == 1) {
    if (modulus_override && !modulus_override->empty()) {
      const auto& f = *modulus_override;
      if (f.size() != 2 || f[1] != 1) {
        throw Error(ErrorCode::InvalidArgument, "prime-field modulus must be monic of degree 1");
      }
    }
    return FieldPtr(new Field(p, 1, {}, true));
  }

  std::vector<int> def = default_modulus(p, m);
  if (!modulus_override) return FieldPtr(new Field(p, m, std::move(def), true));

  std::vector<int> f = *modulus_override;
  if (f.size() != static_cast<std::size_t>(m) + 1 || f.back() != 1) {
    throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree " + std::to_string(m));
  }
  for (int c : f) {
    if (c < 0 || c >= p) throw Error(ErrorCode::InvalidArgument, "modulus coefficient out of range");
  }
  if (!is_irreducible(p, f)) throw Error(ErrorCode::ReduciblePolynomial, "modulus is reducible");
  const bool is_default = (f == def);
  return FieldPtr(new Field(p, m, std::move(f), is_default));
}

FieldPtr make_field_of_order(int q, std::optional<std::vector<int>> modulus_override) {
  if (q < 2) throw Error(ErrorCode::NotPrime, "field order must be a prime power >= 2");
  int p = 2;
  while (q % p != 0) ++p;
  int m = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  return make_field(p, m, std::move(modulus_override));
}

}  // namespace shlin
