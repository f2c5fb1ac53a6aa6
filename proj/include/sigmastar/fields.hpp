// Coefficient fields: exact rationals and prime fields F_p.
// The prime modulus is a per-session global, set once before any F_p work.
#pragma once

#include <cstdint>
#include <string>

#include "sigmastar/rational.hpp"

namespace sigmastar {

class Fp {
 public:
  Fp() : v_(0) {}
  explicit Fp(std::int64_t x) {
    std::int64_t m = static_cast<std::int64_t>(modulus());
    v_ = static_cast<std::uint64_t>(((x % m) + m) % m);
  }

  static void set_modulus(std::uint64_t p);
  static std::uint64_t modulus();

  std::uint64_t value() const { return v_; }

  friend Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + b.v_) % modulus()); }
  friend Fp operator-(Fp a, Fp b) {
    return from_raw((a.v_ + modulus() - b.v_) % modulus());
  }
  friend Fp operator*(Fp a, Fp b) {
    return from_raw(static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a.v_) * b.v_) % modulus()));
  }
  Fp operator-() const { return from_raw(v_ ? modulus() - v_ : 0); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inverse() const {  // Fermat; modulus is prime
    std::uint64_t e = modulus() - 2, b = v_, r = 1;
    while (e) {
      if (e & 1)
        r = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(r) * b) % modulus());
      b = static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(b) * b) % modulus());
      e >>= 1;
    }
    return from_raw(r);
  }

 private:
  static Fp from_raw(std::uint64_t v) {
    Fp x;
    x.v_ = v;
    return x;
  }
  static std::uint64_t& modulus_ref() {
    static std::uint64_t p = 2;
    return p;
  }
  std::uint64_t v_;
};

inline void Fp::set_modulus(std::uint64_t p) { modulus_ref() = p; }
inline std::uint64_t Fp::modulus() { return modulus_ref(); }

template <typename F>
struct field_traits;

template <>
struct field_traits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long x) { return Rational(x); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational inverse(const Rational& x) { return Rational(1) / x; }
  static std::string str(const Rational& x) { return to_string(x); }
  static const char* name() { return "Q"; }
};

template <>
struct field_traits<Fp> {
  static Fp zero() { return Fp(0); }
  static Fp one() { return Fp(1); }
  static Fp from_int(long x) { return Fp(x); }
  static bool is_zero(Fp x) { return x == Fp(0); }
  static Fp inverse(Fp x) { return x.inverse(); }
  static std::string str(Fp x) { return std::to_string(x.value()); }
  static const char* name() { return "Fp"; }
};

}  // namespace sigmastar
